#pragma once

#include <stdexcept>
#include <string>

namespace gre {

// Every error raised by the library derives from gre::Error. The CLI maps
// the concrete kind onto a process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid numeric parameter or configuration value.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input text or binary payload.
class FormatError : public Error {
 public:
  using Error::Error;
};

class ParseError : public FormatError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : FormatError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Structural precondition of a graph or partition violated while building it.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

// Program/topology combination that cannot run (e.g. SSSP without weights).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class InitError : public Error {
 public:
  using Error::Error;
};

// Message addressed to a global id that the receiving partition does not hold.
class RoutingError : public Error {
 public:
  using Error::Error;
};

// Snapshot does not match the partition layout it is restored against.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

class MetricsError : public Error {
 public:
  using Error::Error;
};

// A runtime consistency rule was broken (only raised when checks are enabled
// or message accounting fails).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace gre
