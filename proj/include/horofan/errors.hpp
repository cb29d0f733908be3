#pragma once

#include <stdexcept>
#include <string>

namespace horofan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HOROFAN_ERROR(Name)              \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

HOROFAN_ERROR(NotPointed);
HOROFAN_ERROR(InvalidDatum);
HOROFAN_ERROR(NotSaturated);
HOROFAN_ERROR(ColourOutsideSublattice);
HOROFAN_ERROR(NotASubdatum);
HOROFAN_ERROR(GroupMismatch);
HOROFAN_ERROR(LatticeMismatch);
HOROFAN_ERROR(ConeNotInFan);
HOROFAN_ERROR(NotStronglyConvex);
HOROFAN_ERROR(NotComplete);
HOROFAN_ERROR(Cancelled);

#undef HOROFAN_ERROR

}  // namespace horofan
