#include "tarski/error.hpp"

namespace tarski {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_letter: return "InvalidLetter";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::zero_clopen: return "ZeroClopen";
    case Errc::incompatible_counts: return "IncompatibleCounts";
    case Errc::comparable_words: return "ComparableWords";
    case Errc::point_outside_domain: return "PointOutsideDomain";
    case Errc::germs_not_composable: return "GermsNotComposable";
    case Errc::incompatible_parts: return "IncompatibleParts";
    case Errc::not_infinitesimal: return "NotInfinitesimal";
    case Errc::not_two_infinitesimal: return "NotTwoInfinitesimal";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::zero_idempotent: return "ZeroIdempotent";
    case Errc::atom_obstruction: return "AtomObstruction";
    case Errc::not_an_involution: return "NotAnInvolution";
    case Errc::not_below_support: return "NotBelowSupport";
    case Errc::search_exhausted: return "SearchExhausted";
    case Errc::zero_element: return "ZeroElement";
    case Errc::infinite_group: return "InfiniteGroup";
    case Errc::skeleton_not_ultrafilter: return "SkeletonNotUltrafilter";
    case Errc::equivariance_failure: return "EquivarianceFailure";
    case Errc::order_transfer_failure: return "OrderTransferFailure";
    case Errc::not_an_isomorphism: return "NotAnIsomorphism";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_fixture: return "InvalidFixture";
    case Errc::internal_inconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

}  // namespace tarski
