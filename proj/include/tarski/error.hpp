#ifndef TARSKI_ERROR_HPP
#define TARSKI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tarski {

// Every failure mode the library reports is one of these codes. The CLI maps
// any thrown Error to exit code 2 and prints the code name.
enum class Errc {
  invalid_letter,
  arity_mismatch,
  zero_clopen,
  incompatible_counts,
  comparable_words,
  point_outside_domain,
  germs_not_composable,
  incompatible_parts,
  not_infinitesimal,
  not_two_infinitesimal,
  not_a_unit,
  zero_idempotent,
  atom_obstruction,
  not_an_involution,
  not_below_support,
  search_exhausted,
  zero_element,
  infinite_group,
  skeleton_not_ultrafilter,
  equivariance_failure,
  order_transfer_failure,
  not_an_isomorphism,
  precondition_violated,
  parse_error,
  invalid_fixture,
  internal_inconsistency,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace tarski

#endif  // TARSKI_ERROR_HPP
