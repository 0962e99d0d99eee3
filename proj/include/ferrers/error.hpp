#pragma once

#include <stdexcept>
#include <string>

namespace ferrers {

/// Raised for malformed inputs: bad text formats, invalid family parameters,
/// out-of-range indices, or violated preconditions of an operation.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the exact solver when an instance exceeds the configured edge cap.
class SizeCapExceeded : public std::runtime_error {
 public:
  explicit SizeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ferrers
