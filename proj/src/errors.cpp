#include "mh/errors.hpp"

namespace mh {

Error::Error(std::string code, std::string message)
    : std::runtime_error(code), code_(std::move(code)), message_(std::move(message)) {
  render();
}

void Error::set_step(std::size_t step) {
  step_ = step;
  render();
}

void Error::render() {
  rendered_ = code_ + ": " + message_;
  if (step_) rendered_ += " (at step " + std::to_string(*step_) + ")";
}

}  // namespace mh
