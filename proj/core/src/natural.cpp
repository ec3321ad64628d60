#include "numbase/natural.hpp"

#include <limits>
#include <ostream>

#include "numbase/error.hpp"

namespace numbase {

Natural::Natural(int v) : v_(v) {
  if (v < 0) throw Error(Errc::Underflow, "negative value " + std::to_string(v));
}

Natural::Natural(Int v) : v_(std::move(v)) {
  if (v_.sign() < 0) throw Error(Errc::Underflow, "negative value " + v_.str());
}

Natural Natural::from_decimal(std::string_view text) {
  if (text.empty()) throw Error(Errc::SyntaxError, "empty number");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(Errc::SyntaxError, "not a decimal natural: '" + std::string(text) + "'");
    }
  }
  if (text.size() > 1 && text.front() == '0') {
    throw Error(Errc::SyntaxError, "leading zero in '" + std::string(text) + "'");
  }
  Natural n;
  for (char c : text) {
    n.v_ *= 10;
    n.v_ += static_cast<unsigned>(c - '0');
  }
  return n;
}

std::string Natural::to_string() const { return v_.str(); }

std::optional<std::uint64_t> Natural::to_u64() const noexcept {
  if (v_ > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return v_.convert_to<std::uint64_t>();
}

Natural& Natural::operator-=(const Natural& o) {
  if (v_ < o.v_) throw Error(Errc::Underflow, v_.str() + " - " + o.v_.str() + " is negative");
  v_ -= o.v_;
  return *this;
}

Natural& Natural::operator/=(const Natural& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Natural& Natural::operator%=(const Natural& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  v_ %= o.v_;
  return *this;
}

Natural& Natural::operator--() {
  if (v_.is_zero()) throw Error(Errc::Underflow, "decrement of zero");
  --v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.v_; }

std::pair<Natural, Natural> divmod(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  Natural::Int q;
  Natural::Int r;
  boost::multiprecision::divide_qr(a.raw(), b.raw(), q, r);
  return {Natural(std::move(q)), Natural(std::move(r))};
}

Natural pow(const Natural& base, unsigned exponent) {
  return Natural(boost::multiprecision::pow(base.raw(), exponent));
}

}  // namespace numbase
