#pragma once

#include <stdexcept>
#include <string>

namespace wonderk {

/// Base class for every error raised by the library.  `code()` is a stable
/// machine-readable name (e.g. "RankBoundExceeded") used by the CLI.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Bad input: inadmissible labels, malformed subsets, non-smooth fans, ...
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A mathematical invariant that must always hold was found broken
/// (singular Steinberg matrix, inexact final division, support violation).
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// Cooperative cancellation after a deadline expired.
class TimeoutError : public Error {
public:
  TimeoutError(const std::string &message, std::string progress)
      : Error("Timeout", message), progress_(std::move(progress)) {}

  const std::string &progress() const noexcept { return progress_; }

private:
  std::string progress_;
};

} // namespace wonderk
