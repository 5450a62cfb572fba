#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace tii {

// Base of every error the library throws. The message can be extended after
// construction so that series-level routines can tag the failing timestep and
// rethrow the original exception type.
class Error : public std::exception {
 public:
  explicit Error(std::string message) : message_(std::move(message)) {}

  const char* what() const noexcept override { return message_.c_str(); }

  std::optional<std::size_t> step() const noexcept { return step_; }

  void attach_step(std::size_t step) {
    if (step_) return;
    step_ = step;
    message_ = "step " + std::to_string(step) + ": " + message_;
  }

 private:
  std::string message_;
  std::optional<std::size_t> step_;
};

#define TII_DEFINE_ERROR(Name, Base)              \
  class Name : public Base {                      \
   public:                                        \
    explicit Name(std::string message)            \
        : Base(std::move(message)) {}             \
  };

TII_DEFINE_ERROR(ParameterError, Error)
TII_DEFINE_ERROR(DimensionError, Error)
TII_DEFINE_ERROR(InputError, Error)
TII_DEFINE_ERROR(NumericalError, Error)
TII_DEFINE_ERROR(DegenerateSpectrumError, NumericalError)
TII_DEFINE_ERROR(FormatError, Error)
TII_DEFINE_ERROR(IoError, Error)
TII_DEFINE_ERROR(ConfigError, Error)

#undef TII_DEFINE_ERROR

// Runs fn(); any tii::Error escaping it gets the timestep attached.
template <typename Fn>
decltype(auto) at_step(std::size_t step, Fn&& fn) {
  try {
    return fn();
  } catch (Error& e) {
    e.attach_step(step);
    throw;
  }
}

}  // namespace tii
