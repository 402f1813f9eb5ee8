#include "tangentia/deadline.hpp"

#include "tangentia/error.hpp"

namespace tangentia {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> current_deadline;
}

ScopedDeadline::ScopedDeadline(std::chrono::steady_clock::duration budget)
    : previous_(current_deadline) {
  auto candidate = std::chrono::steady_clock::now() + budget;
  if (!current_deadline || candidate < *current_deadline) current_deadline = candidate;
}

ScopedDeadline::~ScopedDeadline() { current_deadline = previous_; }

void check_deadline() {
  if (current_deadline && std::chrono::steady_clock::now() > *current_deadline)
    throw TimeoutError("computation exceeded its time budget");
}

}  // namespace tangentia
