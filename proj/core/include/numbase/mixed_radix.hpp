#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "numbase/codec.hpp"

namespace numbase {

/// True iff w_{i+1} = (digit_bound(i) + 1) * w_i for every i < upto.
/// In such a base position i is an ordinary radix-(digit_bound(i) + 1) digit.
bool is_pure_mixed_radix(const BaseSequence& base, std::size_t upto);

enum class ArithPath { DigitWise, DecodeFallback };

/// Optional record of how an arithmetic call ran.
///
/// For add, `steps` holds one line per position ("1 + 2 + 0 = 3 (radix 3): write 0, carry 1").
/// For sub, `steps` holds the minuend before any borrow and after each
/// single-position borrow, at the minuend's full width ("1001", "0401", "0331").
struct ArithTrace {
  ArithPath path = ArithPath::DigitWise;
  std::vector<std::string> steps;
};

/// Canonical form of x + y. Carries digit by digit at radix
/// digit_bound(i) + 1 when the base is pure mixed-radix over the touched
/// positions, otherwise goes through decode and encode_greedy.
Representation add(const BaseSequence& base, const Representation& x, const Representation& y,
                   ArithTrace* trace = nullptr);

/// Canonical form of x - y; Errc::Underflow when y > x. Borrows walk left to
/// the nearest nonzero digit and come back down one position at a time.
Representation sub(const BaseSequence& base, const Representation& x, const Representation& y,
                   ArithTrace* trace = nullptr);

Representation add_via_decode(const BaseSequence& base, const Representation& x,
                              const Representation& y);
Representation sub_via_decode(const BaseSequence& base, const Representation& x,
                              const Representation& y);

/// No digit-level rule exists for these; both run through decode.
Representation mul(const BaseSequence& base, const Representation& x, const Representation& y);
std::pair<Representation, Representation> divrem(const BaseSequence& base, const Representation& x,
                                                 const Representation& y);

}  // namespace numbase
