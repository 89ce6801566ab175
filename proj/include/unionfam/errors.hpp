#ifndef UNIONFAM_ERRORS_HPP
#define UNIONFAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unionfam {

// Domain error taxonomy. Every precondition failure throws one of these;
// TheoremViolation is reserved for proved statements failing at runtime,
// which indicates a bug in the input pipeline or in this library, never a
// legitimate domain outcome.

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define UNIONFAM_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                               \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

UNIONFAM_DEFINE_ERROR(ElementOutOfRange);
UNIONFAM_DEFINE_ERROR(WrongSetSize);
UNIONFAM_DEFINE_ERROR(DuplicateSet);
UNIONFAM_DEFINE_ERROR(NotAPermutation);
UNIONFAM_DEFINE_ERROR(ParameterMismatch);
UNIONFAM_DEFINE_ERROR(BadParameters);
UNIONFAM_DEFINE_ERROR(EmptyFamily);
UNIONFAM_DEFINE_ERROR(NotUnionIntersecting);
UNIONFAM_DEFINE_ERROR(SizeMismatch);
UNIONFAM_DEFINE_ERROR(TheoremViolation);
UNIONFAM_DEFINE_ERROR(AnchorViolation);
UNIONFAM_DEFINE_ERROR(Infeasible);
UNIONFAM_DEFINE_ERROR(TooLarge);
UNIONFAM_DEFINE_ERROR(LimitExceeded);
UNIONFAM_DEFINE_ERROR(BudgetExceeded);

#undef UNIONFAM_DEFINE_ERROR

}  // namespace unionfam

#endif
