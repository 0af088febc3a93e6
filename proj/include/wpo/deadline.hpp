#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace wpo {

// Thrown by the engines when a comparison exceeds its wall-clock budget.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cooperative wall-clock deadline. A default-constructed deadline is
// inactive and never expires; engines only read the clock when active.
class Deadline {
 public:
  Deadline() = default;

  static Deadline after(std::chrono::nanoseconds budget) {
    Deadline d;
    d.due_ = std::chrono::steady_clock::now() + budget;
    return d;
  }

  static Deadline after_ms(std::uint64_t ms) {
    return after(std::chrono::milliseconds(ms));
  }

  bool active() const { return due_.has_value(); }

  bool expired() const {
    return due_.has_value() && std::chrono::steady_clock::now() >= *due_;
  }

  void check() const {
    if (expired()) throw TimeoutError("comparison exceeded its time budget");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> due_;
};

}  // namespace wpo
