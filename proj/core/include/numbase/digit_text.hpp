#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numbase/codec.hpp"

namespace numbase {

/// How digit vectors are written.
///
/// Compact concatenates decimal digits (every digit must be <= 9).
/// Delimited joins decimal digit values with a separator; a lone digit is
/// written with a leading separator (".12") so the two languages never
/// overlap. Auto picks Compact when it can. Zero is always "0".
struct RenderFormat {
  enum class Mode { Compact, Delimited, Auto };

  Mode mode = Mode::Auto;
  char separator = '.';

  static RenderFormat compact() { return {Mode::Compact, '.'}; }
  static RenderFormat delimited(char sep = '.') { return {Mode::Delimited, sep}; }
  static RenderFormat automatic(char sep = '.') { return {Mode::Auto, sep}; }
};

/// Most significant digit first.
std::string render(const Representation& rep, RenderFormat fmt = {});

/// Renders a digit vector as is, keeping high zeros and without the
/// single-digit marker. Used for fixed-width intermediate states.
std::string render_raw(std::span<const Natural> digits, RenderFormat fmt = {});

/// Inverse of render. Digits are checked against position_limit().
/// Under Auto the presence of the separator selects Delimited.
Representation parse(const BaseSequence& base, std::string_view text, RenderFormat fmt = {});

/// render(encode_greedy(v)) for v = lo..hi.
std::vector<std::string> table(const BaseSequence& base, const Natural& lo, const Natural& hi,
                               RenderFormat fmt = {});

}  // namespace numbase
