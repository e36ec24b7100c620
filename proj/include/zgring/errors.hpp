#pragma once

#include <stdexcept>
#include <string>

namespace zgring {

// Preconditions violated by the caller surface as std::invalid_argument or
// std::domain_error; the two types below carry the remaining failure modes.

/// A configured size or degree bound was exceeded.
class bound_exceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An identity that must hold exactly was found to fail.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zgring
