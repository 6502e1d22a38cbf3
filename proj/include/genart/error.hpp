#pragma once

#include <stdexcept>
#include <string>

namespace genart {

// Base for all library errors. Subclasses map to CLI exit codes:
// ConfigError and ParseError are usage problems (exit 1), the rest are
// runtime failures (exit 2).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments, bad config values, unusable registry.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem / codec failures.
class IoError : public Error {
 public:
  using Error::Error;
};

// Image metric preconditions (dimension mismatch).
class MetricError : public Error {
 public:
  using Error::Error;
};

// Centroid model problems (untrained, extractor mismatch).
class ModelError : public Error {
 public:
  using Error::Error;
};

// Corpus problems during centroid training.
class TrainingError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  EmptyInput,
  UnknownTechnique,
  ArityMismatch,
  ValueOutOfDomain,
  MalformedValue,
};

// Genome text that does not conform to the grammar. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& message)
      : Error("parse error (line " + std::to_string(line) + "): " + message),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

}  // namespace genart
