#include "numbase/error.hpp"

namespace numbase {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::NotStartingAtOne: return "NotStartingAtOne";
    case Errc::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case Errc::IndexBeyondCapacity: return "IndexBeyondCapacity";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DigitOutOfRange: return "DigitOutOfRange";
    case Errc::LeadingZero: return "LeadingZero";
    case Errc::CompactOverflow: return "CompactOverflow";
    case Errc::NotCanonical: return "NotCanonical";
    case Errc::Underflow: return "Underflow";
    case Errc::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what, std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      position_(position) {}

}  // namespace numbase
