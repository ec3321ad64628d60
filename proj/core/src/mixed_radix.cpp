#include "numbase/mixed_radix.hpp"

#include <algorithm>

#include "numbase/digit_text.hpp"
#include "numbase/error.hpp"

namespace numbase {

namespace {

void check_operand(const BaseSequence& base, const Representation& r, const char* which) {
  if (!(r.base() == base)) {
    throw Error(Errc::InvalidParameter, std::string(which) + " operand is written in " +
                                            r.base().describe() + ", not " + base.describe());
  }
  if (!is_canonical(r)) {
    throw Error(Errc::NotCanonical,
                std::string(which) + " operand " + render_raw(r.digits()) + " is not canonical in " +
                    base.describe());
  }
}

// Purity through `upto`, treating an exhausted finite base as impure.
bool pure_through(const BaseSequence& base, std::size_t upto) {
  try {
    return is_pure_mixed_radix(base, upto);
  } catch (const Error& e) {
    if (e.code() == Errc::IndexBeyondCapacity) return false;
    throw;
  }
}

Natural radix(const BaseSequence& base, std::size_t i) {
  return base.digit_bound(i) + Natural(1u);
}

}  // namespace

bool is_pure_mixed_radix(const BaseSequence& base, std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i) {
    if (base.term(i + 1) != radix(base, i) * base.term(i)) return false;
  }
  return true;
}

Representation add_via_decode(const BaseSequence& base, const Representation& x,
                              const Representation& y) {
  return encode_greedy(base, decode(x) + decode(y));
}

Representation sub_via_decode(const BaseSequence& base, const Representation& x,
                              const Representation& y) {
  const Natural a = decode(x);
  const Natural b = decode(y);
  if (a < b) {
    throw Error(Errc::Underflow, a.to_string() + " - " + b.to_string() + " is negative");
  }
  return encode_greedy(base, a - b);
}

Representation add(const BaseSequence& base, const Representation& x, const Representation& y,
                   ArithTrace* trace) {
  check_operand(base, x, "first");
  check_operand(base, y, "second");
  const std::size_t n = std::max(x.size(), y.size());
  if (!pure_through(base, n)) {
    if (trace) trace->path = ArithPath::DecodeFallback;
    return add_via_decode(base, x, y);
  }
  if (trace) trace->path = ArithPath::DigitWise;

  std::vector<Natural> out;
  out.reserve(n + 1);
  Natural carry;
  for (std::size_t i = 0; i < n; ++i) {
    const Natural r = radix(base, i);
    const Natural a = x.digit(i);
    const Natural b = y.digit(i);
    auto [c, d] = divmod(a + b + carry, r);
    if (trace) {
      trace->steps.push_back(a.to_string() + " + " + b.to_string() + " + " + carry.to_string() +
                             " = " + (a + b + carry).to_string() + " (radix " + r.to_string() +
                             "): write " + d.to_string() + ", carry " + c.to_string());
    }
    out.push_back(std::move(d));
    carry = std::move(c);
  }
  if (!carry.is_zero()) {
    // A new leading position: it must exist and admit the carry.
    if (carry > position_limit(base, n)) {
      throw Error(Errc::IndexBeyondCapacity,
                  "carry out of position " + std::to_string(n - 1) + " exceeds " + base.describe());
    }
    out.push_back(std::move(carry));
  }
  return Representation(base, std::move(out));
}

Representation sub(const BaseSequence& base, const Representation& x, const Representation& y,
                   ArithTrace* trace) {
  check_operand(base, x, "first");
  check_operand(base, y, "second");
  // Canonical forms compare by value exactly as (length, digits MSD first),
  // but only decode is base-independent; use it for the sign test.
  if (decode(x) < decode(y)) {
    throw Error(Errc::Underflow,
                render(x) + " - " + render(y) + " is negative in " + base.describe());
  }
  const std::size_t n = x.size();
  if (n == 0 || !pure_through(base, n - 1)) {
    if (trace) trace->path = ArithPath::DecodeFallback;
    return sub_via_decode(base, x, y);
  }
  if (trace) {
    trace->path = ArithPath::DigitWise;
    trace->steps.clear();
  }

  std::vector<Natural> top = x.digits();
  auto snapshot = [&] {
    if (trace) trace->steps.push_back(render_raw(top));
  };
  snapshot();

  std::vector<Natural> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Natural b = y.digit(i);
    if (top[i] < b) {
      std::size_t j = i + 1;
      while (j < n && top[j].is_zero()) ++j;
      if (j == n) throw Error(Errc::Underflow, "borrow ran past the leading digit");
      // Move one unit down a position at a time: 1001 -> 0401 -> 0331.
      for (; j > i; --j) {
        --top[j];
        top[j - 1] += radix(base, j - 1);
        snapshot();
      }
    }
    out[i] = top[i] - b;
  }
  return Representation(base, std::move(out));
}

Representation mul(const BaseSequence& base, const Representation& x, const Representation& y) {
  check_operand(base, x, "first");
  check_operand(base, y, "second");
  return encode_greedy(base, decode(x) * decode(y));
}

std::pair<Representation, Representation> divrem(const BaseSequence& base, const Representation& x,
                                                 const Representation& y) {
  check_operand(base, x, "first");
  check_operand(base, y, "second");
  if (y.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  auto [q, r] = divmod(decode(x), decode(y));
  return {encode_greedy(base, q), encode_greedy(base, r)};
}

}  // namespace numbase
