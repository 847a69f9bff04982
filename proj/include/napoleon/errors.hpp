#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace napoleon {

enum class ErrorKind {
  InvalidInput,
  InvalidParameter,
  UnsupportedInput,
  DegenerateInput,
  AmbiguousOrientation,
  InvalidTriangle,
  Precondition,
  NumericConditioning,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Base class for every error raised by the library. The kind is what callers
/// (and the CLI exit-status mapping) dispatch on; the message is for humans.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace napoleon
