#pragma once

#include <stdexcept>
#include <string>

namespace borel {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BOREL_DEFINE_ERROR(Name)       \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  };

BOREL_DEFINE_ERROR(InvalidType)
BOREL_DEFINE_ERROR(NotARoot)
BOREL_DEFINE_ERROR(DimensionMismatch)
BOREL_DEFINE_ERROR(IndexOutOfRange)
BOREL_DEFINE_ERROR(NodeOutOfRange)
BOREL_DEFINE_ERROR(TooLarge)
BOREL_DEFINE_ERROR(InvalidIdeal)
BOREL_DEFINE_ERROR(WrongType)
BOREL_DEFINE_ERROR(NotInMaximalIdeal)
BOREL_DEFINE_ERROR(SymmetryViolation)
BOREL_DEFINE_ERROR(IntegralityViolation)
BOREL_DEFINE_ERROR(NotFound)
BOREL_DEFINE_ERROR(Overflow)

#undef BOREL_DEFINE_ERROR

}  // namespace borel
