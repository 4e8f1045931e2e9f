#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "wonderk/error.hpp"

namespace wonderk {

/// Cooperative cancellation.  Long-running loops call check_deadline() with
/// a short description of where they are; when a DeadlineScope is active and
/// its time is up, TimeoutError is thrown carrying that description.
class DeadlineScope {
public:
  explicit DeadlineScope(std::optional<double> seconds) : saved_(current()) {
    if (seconds)
      current() = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(*seconds));
  }
  ~DeadlineScope() { current() = saved_; }
  DeadlineScope(const DeadlineScope &) = delete;
  DeadlineScope &operator=(const DeadlineScope &) = delete;

  static std::optional<std::chrono::steady_clock::time_point> &current() {
    thread_local std::optional<std::chrono::steady_clock::time_point> deadline;
    return deadline;
  }

private:
  std::optional<std::chrono::steady_clock::time_point> saved_;
};

inline void check_deadline(const std::string &progress) {
  const auto &d = DeadlineScope::current();
  if (d && std::chrono::steady_clock::now() > *d)
    throw TimeoutError("deadline exceeded", progress);
}

} // namespace wonderk
