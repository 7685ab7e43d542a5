#pragma once

#include <stdexcept>
#include <string>

namespace axial {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownGenerator : Error { using Error::Error; };
struct GroupMismatch : Error { using Error::Error; };
struct CapacityExceeded : Error { using Error::Error; };
struct EquivarianceViolation : Error { using Error::Error; };
struct NotWild : Error { using Error::Error; };
struct SameCoset : Error { using Error::Error; };
struct InsufficientCosets : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct PointMissing : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace axial
