// Error hierarchy. Every error carries a stable machine-readable code that
// the command-line frontend prints on stderr.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mh/numeric.hpp"

namespace mh {

class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message);

  const std::string& code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  std::optional<std::size_t> step() const noexcept { return step_; }

  /// Records the 1-based chain step at which the error surfaced.
  void set_step(std::size_t step);

  const char* what() const noexcept override { return rendered_.c_str(); }

 private:
  void render();

  std::string code_;
  std::string message_;
  std::optional<std::size_t> step_;
  std::string rendered_;
};

/// Exit-code class 2 in the CLI; everything else is a domain error.
class UsageError : public Error {
 public:
  explicit UsageError(std::string message) : Error("UsageError", std::move(message)) {}
};

#define MH_DEFINE_ERROR(Name)                                                    \
  class Name : public Error {                                                    \
   public:                                                                       \
    explicit Name(std::string message) : Error(#Name, std::move(message)) {}     \
  };

MH_DEFINE_ERROR(DimensionError)
MH_DEFINE_ERROR(NotASolution)
MH_DEFINE_ERROR(NonIntegralRoot)
MH_DEFINE_ERROR(DeadEnd)
MH_DEFINE_ERROR(ResourceLimit)
MH_DEFINE_ERROR(InvalidWord)
MH_DEFINE_ERROR(InvalidEquation)
MH_DEFINE_ERROR(UnsupportedEquation)
MH_DEFINE_ERROR(ScheduleError)
MH_DEFINE_ERROR(DivisionByZero)
MH_DEFINE_ERROR(ConsistencyError)

#undef MH_DEFINE_ERROR

/// Descent stopped at a tuple whose argmax mutation does not strictly lower
/// the maximum. The stuck tuple is kept for the caller.
class NonDecreasingStep : public Error {
 public:
  NonDecreasingStep(std::string message, std::vector<BigInt> stuck)
      : Error("NonDecreasingStep", std::move(message)), stuck_(std::move(stuck)) {}

  const std::vector<BigInt>& stuck() const noexcept { return stuck_; }

 private:
  std::vector<BigInt> stuck_;
};

}  // namespace mh
