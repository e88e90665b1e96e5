#ifndef TARSKI_FINITE_SET_HPP
#define TARSKI_FINITE_SET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tarski/error.hpp"

namespace tarski {

// Subset of {0..n-1} as a bitset: the idempotent algebra of the finite
// symmetric inverse monoid. Shares the Boolean-algebra member interface with
// Clopen so downstream code is model-generic.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(int n, uint32_t bits) : n_(n), bits_(bits & mask(n)) {}

  static FiniteSet empty(int n) { return FiniteSet(n, 0); }
  static FiniteSet full(int n) { return FiniteSet(n, mask(n)); }
  static FiniteSet singleton(int n, int i) { return FiniteSet(n, 1u << i); }

  int universe() const { return n_; }
  uint32_t bits() const { return bits_; }

  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == mask(n_); }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  int count() const { return __builtin_popcount(bits_); }

  FiniteSet join(const FiniteSet& o) const { check(o); return FiniteSet(n_, bits_ | o.bits_); }
  FiniteSet meet(const FiniteSet& o) const { check(o); return FiniteSet(n_, bits_ & o.bits_); }
  FiniteSet complement() const { return FiniteSet(n_, ~bits_ & mask(n_)); }
  FiniteSet minus(const FiniteSet& o) const { check(o); return FiniteSet(n_, bits_ & ~o.bits_); }
  bool leq(const FiniteSet& o) const { check(o); return (bits_ & ~o.bits_) == 0; }

  std::vector<int> atoms() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (int i : atoms()) {
      if (!first) out += ", ";
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

  bool operator==(const FiniteSet&) const = default;

 private:
  static uint32_t mask(int n) { return n >= 32 ? ~0u : (1u << n) - 1u; }
  void check(const FiniteSet& o) const {
    if (n_ != o.n_) fail(Errc::arity_mismatch, "finite sets over different universes");
  }

  int n_ = 0;
  uint32_t bits_ = 0;
};

}  // namespace tarski

#endif  // TARSKI_FINITE_SET_HPP
