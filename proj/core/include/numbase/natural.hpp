#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace numbase {

/// Arbitrary-precision nonnegative integer.
///
/// Thin value wrapper over boost::multiprecision::cpp_int that keeps the
/// value >= 0: subtraction below zero throws Errc::Underflow and division by
/// zero throws Errc::DivisionByZero. Nothing wraps or saturates.
class Natural {
 public:
  using Int = boost::multiprecision::cpp_int;

  Natural() = default;
  Natural(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Natural(unsigned v) : v_(v) {}       // NOLINT(google-explicit-constructor)
  Natural(int v);                      // NOLINT(google-explicit-constructor)
  explicit Natural(Int v);

  /// Parses `0 | [1-9][0-9]*`. Anything else is Errc::SyntaxError.
  static Natural from_decimal(std::string_view text);

  std::string to_string() const;
  bool is_zero() const noexcept { return v_.is_zero(); }
  std::optional<std::uint64_t> to_u64() const noexcept;
  const Int& raw() const noexcept { return v_; }

  Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
  Natural& operator-=(const Natural& o);
  Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
  Natural& operator/=(const Natural& o);
  Natural& operator%=(const Natural& o);
  Natural& operator++() { ++v_; return *this; }
  Natural& operator--();

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n);

 private:
  Int v_;
};

/// Quotient and remainder in one step.
std::pair<Natural, Natural> divmod(const Natural& a, const Natural& b);

Natural pow(const Natural& base, unsigned exponent);

}  // namespace numbase

template <>
struct std::hash<numbase::Natural> {
  std::size_t operator()(const numbase::Natural& n) const noexcept {
    return boost::multiprecision::hash_value(n.raw());
  }
};
