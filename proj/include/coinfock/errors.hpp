#pragma once

#include <stdexcept>
#include <string>

namespace coinfock {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CardinalityTooLarge : Error { using Error::Error; };
struct GroundMismatch : Error { using Error::Error; };
struct NotASubset : Error { using Error::Error; };
struct NotABijection : Error { using Error::Error; };
struct EmptyDomain : Error { using Error::Error; };
struct SpaceMismatch : Error { using Error::Error; };
struct SectorTooLarge : Error { using Error::Error; };
struct TruncationExceeded : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };
struct NumericalFailure : Error { using Error::Error; };

}  // namespace coinfock
