#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace preftriads {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidSizeError : Error {
  using Error::Error;
};

struct IncompatibleSizeError : Error {
  using Error::Error;
};

struct InvalidArgumentError : Error {
  using Error::Error;
};

// Raised when ordering text cannot be parsed; `label` names the offender.
struct ParseError : Error {
  ParseError(const std::string& message, std::string offending_label)
      : Error(message), label(std::move(offending_label)) {}
  std::string label;
};

struct InvalidSubsetError : Error {
  using Error::Error;
};

struct UnsupportedSizeError : Error {
  using Error::Error;
};

struct ResourceLimitError : Error {
  ResourceLimitError(const std::string& message, std::uint64_t done)
      : Error(message), processed(done) {}
  std::uint64_t processed;
};

struct SchemaError : Error {
  using Error::Error;
};

struct EmptyInputError : Error {
  using Error::Error;
};

struct DataIntegrityError : Error {
  using Error::Error;
};

struct UndefinedComparisonError : Error {
  using Error::Error;
};

}  // namespace preftriads
