#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarfreq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (negative Bessel order, non-finite coordinate, ...).
class InputDomainError : public Error {
public:
  using Error::Error;
};

/// Inconsistent or invalid configuration: bad resolutions, undersized
/// root tables, mixed feature layouts, single-class training sets.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Malformed input file. Carries the byte offset (graymaps) or line
/// number (text formats) where parsing stopped.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class GeometryError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace polarfreq
