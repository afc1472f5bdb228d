#pragma once

#include <stdexcept>
#include <string>

namespace grouplab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define GROUPLAB_ERROR(Name)                                                   \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}       \
  }

GROUPLAB_ERROR(ClosureExceeded);
GROUPLAB_ERROR(NotBijective);
GROUPLAB_ERROR(NotNormal);
GROUPLAB_ERROR(ParseError);
GROUPLAB_ERROR(AutCapExceeded);
GROUPLAB_ERROR(BudgetExceeded);
GROUPLAB_ERROR(NoSplittingPrime);
GROUPLAB_ERROR(DegenerateEigenspace);
GROUPLAB_ERROR(LiftAmbiguous);
GROUPLAB_ERROR(LiftOutOfRange);
GROUPLAB_ERROR(PreconditionViolated);
GROUPLAB_ERROR(ZeroResult);
GROUPLAB_ERROR(FieldTooLarge);
GROUPLAB_ERROR(NotPrimePower);
GROUPLAB_ERROR(ScanTooLarge);
GROUPLAB_ERROR(SizeExceeded);
GROUPLAB_ERROR(PermNotTrivial);
GROUPLAB_ERROR(IoError);

#undef GROUPLAB_ERROR

} // namespace grouplab
