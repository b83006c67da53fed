#pragma once

#include <stdexcept>

namespace minmax {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAPermutation : Error { using Error::Error; };
struct Empty : Error { using Error::Error; };
struct DuplicateValues : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct PositionOutOfRange : Error { using Error::Error; };
struct NTooSmall : Error { using Error::Error; };
struct NTooLarge : Error { using Error::Error; };
struct WrongVariant : Error { using Error::Error; };
struct OrbitTooLarge : Error { using Error::Error; };

}  // namespace minmax
