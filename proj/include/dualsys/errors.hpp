#pragma once

#include <stdexcept>
#include <string>

namespace dualsys {

// Parse failure in an input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input violates a structural contract (unknown slot, bad goal, ...).
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad run configuration detected before any work starts.
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Remote/built-in policy backend failed; carries the raw payload when known.
class BackendError : public std::runtime_error {
 public:
  explicit BackendError(std::string msg, std::string payload = {})
      : std::runtime_error(std::move(msg)), payload_(std::move(payload)) {}
  const std::string& payload() const { return payload_; }

 private:
  std::string payload_;
};

// Operation called in a state that forbids it (e.g. stepping a finished episode).
class StateError : public std::logic_error {
  using std::logic_error::logic_error;
};

// Analysis input is unusable (missing snapshots, empty window, ...).
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dualsys
