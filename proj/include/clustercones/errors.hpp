#pragma once

#include <stdexcept>
#include <string>

namespace cc {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CC_DEFINE_ERROR(Name)                                         \
  struct Name : Error {                                               \
    explicit Name(const std::string& what = #Name) : Error(what) {}   \
  }

CC_DEFINE_ERROR(DivisionByZero);
CC_DEFINE_ERROR(UnboundVariable);
CC_DEFINE_ERROR(FrozenVertex);
CC_DEFINE_ERROR(UnknownVertex);
CC_DEFINE_ERROR(NotReduced);
CC_DEFINE_ERROR(InvalidIndexSet);
CC_DEFINE_ERROR(SizeMismatch);
CC_DEFINE_ERROR(InvalidIndices);
CC_DEFINE_ERROR(OutOfRange);
CC_DEFINE_ERROR(CentralFiberAmbiguous);
CC_DEFINE_ERROR(NonLaurentPullback);
CC_DEFINE_ERROR(NoOptimizedSeedFound);
CC_DEFINE_ERROR(DimensionTooLarge);
CC_DEFINE_ERROR(DimensionMismatch);
CC_DEFINE_ERROR(InfeasibleSlice);
CC_DEFINE_ERROR(UnboundedSlice);

#undef CC_DEFINE_ERROR

}  // namespace cc
