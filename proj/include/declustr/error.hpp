#pragma once

#include <stdexcept>
#include <string>

namespace declustr {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DECLUSTR_DEFINE_ERROR(Name)       \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

DECLUSTR_DEFINE_ERROR(ParamError);
DECLUSTR_DEFINE_ERROR(BlockSizeError);
DECLUSTR_DEFINE_ERROR(CoverageError);
DECLUSTR_DEFINE_ERROR(MismatchError);
DECLUSTR_DEFINE_ERROR(TooManyErasures);
DECLUSTR_DEFINE_ERROR(TooManyFailures);
DECLUSTR_DEFINE_ERROR(UnbalancedGroup);
DECLUSTR_DEFINE_ERROR(FormatError);
DECLUSTR_DEFINE_ERROR(InvariantError);

#undef DECLUSTR_DEFINE_ERROR

}  // namespace declustr
