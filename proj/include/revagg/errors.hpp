#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revagg {

// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad argument values (fractions out of range, word counts < 1, ...).
class ArgumentError : public Error {
public:
  using Error::Error;
};

// Malformed input data; carries the absolute byte offset of the problem.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t byte_offset)
      : Error(msg + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

private:
  std::size_t byte_offset_ = 0;
};

// A resource needed before use was never loaded or is invalid.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Operation requires non-empty input.
class EmptyInputError : public Error {
public:
  using Error::Error;
};

// Embedding store has no vector for the queried text.
class StoreLookupError : public Error {
public:
  using Error::Error;
};

// A paper lacks a field the requested feature subset needs.
class MissingFeatureError : public Error {
public:
  using Error::Error;
};

// Training data cannot support the requested model (e.g. single class).
class DegenerateTrainingError : public Error {
public:
  using Error::Error;
};

// Statistic undefined on this sample (e.g. all paired differences zero).
class DegenerateSampleError : public Error {
public:
  using Error::Error;
};

// Iteration failed to reach tolerance; carries the last observed delta.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& msg, double last_delta)
      : Error(msg + " (last delta " + std::to_string(last_delta) + ")"),
        last_delta_(last_delta) {}
  double last_delta() const { return last_delta_; }

private:
  double last_delta_ = 0.0;
};

}  // namespace revagg
