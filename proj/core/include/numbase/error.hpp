#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace numbase {

enum class Errc {
  InvalidParameter,
  NotStartingAtOne,
  NotStrictlyIncreasing,
  IndexBeyondCapacity,
  SyntaxError,
  DigitOutOfRange,
  LeadingZero,
  CompactOverflow,
  NotCanonical,
  Underflow,
  DivisionByZero,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. `position()` carries the digit
/// position (DigitOutOfRange) or line number (base files) when one applies.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> position = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace numbase
