#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slacqm {

/// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text; `position()` is the 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Evaluation failed (missing binding, fractional power of a negative base).
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration or arguments; `key()` names the offending setting when known.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what, std::string key = {})
      : Error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Shapes or axes that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Requested dense storage exceeds the configured memory cap.
class MemoryCapError : public Error {
 public:
  using Error::Error;
};

/// Non-finite input, mass pole on the grid, eigensolver non-convergence.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace slacqm
