#pragma once

#include <stdexcept>
#include <string>

namespace flagorbit {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FLAGORBIT_DEFINE_ERROR(Name)     \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

FLAGORBIT_DEFINE_ERROR(ParseError);
FLAGORBIT_DEFINE_ERROR(MalformedCartanMatrix);
FLAGORBIT_DEFINE_ERROR(NonFiniteType);
FLAGORBIT_DEFINE_ERROR(IndexOutOfRange);
FLAGORBIT_DEFINE_ERROR(ArityMismatch);
FLAGORBIT_DEFINE_ERROR(GroupTooLarge);
FLAGORBIT_DEFINE_ERROR(NotTypeA);
FLAGORBIT_DEFINE_ERROR(MixedSystems);
FLAGORBIT_DEFINE_ERROR(PatternLongerThanPermutation);
FLAGORBIT_DEFINE_ERROR(NonPositivePartition);
FLAGORBIT_DEFINE_ERROR(DegreeOutOfRange);

#undef FLAGORBIT_DEFINE_ERROR

}  // namespace flagorbit
