#pragma once

#include <stdexcept>
#include <string>

namespace nephro {

/// Bad input data or a violated contract (CSV parse failures, template
/// binding errors, invalid configs). Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Remote backend failure after the retry policy is exhausted, or a
/// non-retryable HTTP error. Maps to CLI exit code 2.
class TransportError : public std::runtime_error {
 public:
  explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

/// A scripted fixture backend saw a request whose fingerprint is not in
/// its table.
class FixtureMissError : public TransportError {
 public:
  explicit FixtureMissError(const std::string& what) : TransportError(what) {}
};

/// The deterministic trend-oracle backend could not parse the prompt's
/// machine-readable data block. Distinguishable from transport errors.
class OracleError : public std::runtime_error {
 public:
  explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public ValidationError {
 public:
  explicit ConfigError(const std::string& what) : ValidationError(what) {}
};

}  // namespace nephro
