#pragma once

#include <chrono>
#include <optional>

namespace tangentia {

/// Installs a per-thread deadline for the lifetime of the object.  Long
/// running loops call check_deadline(), which throws TimeoutError once the
/// deadline has passed.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::steady_clock::duration budget);
  ~ScopedDeadline();

  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_deadline();

}  // namespace tangentia
