#pragma once

#include <stdexcept>
#include <string>

namespace padyn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PADYN_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

PADYN_DEFINE_ERROR(InvalidInput);
PADYN_DEFINE_ERROR(NotCoprime);
PADYN_DEFINE_ERROR(PrecisionExhausted);
PADYN_DEFINE_ERROR(SingularInput);
PADYN_DEFINE_ERROR(NotExpansive);
PADYN_DEFINE_ERROR(CapExceeded);
PADYN_DEFINE_ERROR(NotNilpotent);
PADYN_DEFINE_ERROR(NoWitness);
PADYN_DEFINE_ERROR(IncompatibleTails);
PADYN_DEFINE_ERROR(NotProductType);
PADYN_DEFINE_ERROR(ExponentOverflow);
PADYN_DEFINE_ERROR(InvariantFailure);
PADYN_DEFINE_ERROR(Cancelled);

#undef PADYN_DEFINE_ERROR

}  // namespace padyn
