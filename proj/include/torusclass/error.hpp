#pragma once

#include <stdexcept>
#include <string>

namespace torus {

/// Malformed input: bad group spec text, inconsistent degrees, invalid tuple data.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A request outside what the engine supports (catalog range, unsupported factor shape).
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Group enumeration exceeded its size cap.
class CapExceededError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace torus
