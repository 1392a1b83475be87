#pragma once

#include <stdexcept>
#include <string>

namespace padic_euler {

// Every failure raised by the library derives from Error. MathPrecondition
// groups the errors the CLI reports with exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MathPrecondition : public Error {
 public:
  using Error::Error;
};

#define PADIC_EULER_ERROR(Name, Base)  \
  class Name : public Base {           \
   public:                             \
    using Base::Base;                  \
  };

PADIC_EULER_ERROR(InvalidPrime, Error)
PADIC_EULER_ERROR(PrimeMismatch, Error)
PADIC_EULER_ERROR(RequestedPrecisionUnavailable, Error)
PADIC_EULER_ERROR(DivisionByZeroAtPrecision, MathPrecondition)
PADIC_EULER_ERROR(NotAUnit, MathPrecondition)
PADIC_EULER_ERROR(ZeroInput, MathPrecondition)
PADIC_EULER_ERROR(ExponentNotIntegral, MathPrecondition)
PADIC_EULER_ERROR(ZeroParameter, MathPrecondition)
PADIC_EULER_ERROR(DegreeOutOfRange, MathPrecondition)
PADIC_EULER_ERROR(KmaxExceeded, MathPrecondition)
PADIC_EULER_ERROR(SeriesNotApplicable, MathPrecondition)
PADIC_EULER_ERROR(ReductionFailed, MathPrecondition)
PADIC_EULER_ERROR(BudgetExceeded, MathPrecondition)
PADIC_EULER_ERROR(NotInLambda, MathPrecondition)
PADIC_EULER_ERROR(DomainError, MathPrecondition)
PADIC_EULER_ERROR(PrecisionLoss, MathPrecondition)

#undef PADIC_EULER_ERROR

}  // namespace padic_euler
