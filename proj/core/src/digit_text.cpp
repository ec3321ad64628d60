#include "numbase/digit_text.hpp"

#include <algorithm>

#include "numbase/error.hpp"

namespace numbase {

namespace {

void check_separator(char sep) {
  if (sep >= '0' && sep <= '9') {
    throw Error(Errc::InvalidParameter, std::string("separator '") + sep + "' is a digit");
  }
}

bool all_single_char(std::span<const Natural> digits) {
  const Natural nine(9u);
  return std::all_of(digits.begin(), digits.end(), [&](const Natural& d) { return d <= nine; });
}

std::string concat(std::span<const Natural> digits) {
  std::string out;
  out.reserve(digits.size());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    out.push_back(static_cast<char>('0' + *it->to_u64()));
  }
  return out;
}

std::string join(std::span<const Natural> digits, char sep) {
  std::string out;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (it != digits.rbegin()) out.push_back(sep);
    if (const auto small = it->to_u64()) {
      out += std::to_string(*small);
    } else {
      out += it->to_string();
    }
  }
  return out;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// `0 | [1-9][0-9]*`
Natural parse_field(std::string_view field, std::string_view whole) {
  if (field.empty()) {
    throw Error(Errc::SyntaxError, "empty digit field in '" + std::string(whole) + "'");
  }
  if (!std::all_of(field.begin(), field.end(), is_digit)) {
    throw Error(Errc::SyntaxError, "non-digit character in '" + std::string(whole) + "'");
  }
  if (field.size() > 1 && field.front() == '0') {
    throw Error(Errc::SyntaxError,
                "digit field '" + std::string(field) + "' has a leading zero in '" +
                    std::string(whole) + "'");
  }
  return Natural::from_decimal(field);
}

std::vector<Natural> parse_compact(std::string_view text) {
  if (!std::all_of(text.begin(), text.end(), is_digit)) {
    throw Error(Errc::SyntaxError, "non-digit character in '" + std::string(text) + "'");
  }
  if (text.front() == '0') {
    throw Error(Errc::LeadingZero, "leading zero in '" + std::string(text) + "'");
  }
  std::vector<Natural> digits;
  digits.reserve(text.size());
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    digits.emplace_back(static_cast<unsigned>(*it - '0'));
  }
  return digits;
}

std::vector<Natural> parse_delimited(std::string_view text, char sep) {
  std::vector<std::string_view> fields;
  for (std::size_t start = 0;;) {
    const auto next = text.find(sep, start);
    fields.push_back(text.substr(start, next == std::string_view::npos ? next : next - start));
    if (next == std::string_view::npos) break;
    start = next + 1;
  }
  if (fields.size() < 2) {
    throw Error(Errc::SyntaxError, "delimited digit string '" + std::string(text) +
                                       "' has no separator '" + sep + "'");
  }
  // SEP digits: a single marked digit.
  if (fields.size() == 2 && fields[0].empty()) fields.erase(fields.begin());

  std::vector<Natural> digits;
  digits.reserve(fields.size());
  for (auto it = fields.rbegin(); it != fields.rend(); ++it) {
    digits.push_back(parse_field(*it, text));
  }
  if (digits.back().is_zero()) {
    throw Error(Errc::LeadingZero, "leading zero digit in '" + std::string(text) + "'");
  }
  return digits;
}

}  // namespace

std::string render(const Representation& rep, RenderFormat fmt) {
  check_separator(fmt.separator);
  if (rep.is_zero()) return "0";
  const auto digits = rep.digits();
  const bool small = all_single_char(digits);
  auto mode = fmt.mode;
  if (mode == RenderFormat::Mode::Auto) {
    mode = small ? RenderFormat::Mode::Compact : RenderFormat::Mode::Delimited;
  }
  if (mode == RenderFormat::Mode::Compact) {
    if (!small) {
      throw Error(Errc::CompactOverflow,
                  "a digit exceeds 9; compact form cannot represent " + join(digits, '.'));
    }
    return concat(digits);
  }
  std::string out = join(digits, fmt.separator);
  if (digits.size() == 1) out.insert(out.begin(), fmt.separator);
  return out;
}

std::string render_raw(std::span<const Natural> digits, RenderFormat fmt) {
  check_separator(fmt.separator);
  const bool small = all_single_char(digits);
  switch (fmt.mode) {
    case RenderFormat::Mode::Compact:
      if (!small) throw Error(Errc::CompactOverflow, "a digit exceeds 9");
      return concat(digits);
    case RenderFormat::Mode::Delimited:
      return join(digits, fmt.separator);
    case RenderFormat::Mode::Auto:
      return small ? concat(digits) : join(digits, fmt.separator);
  }
  return {};
}

Representation parse(const BaseSequence& base, std::string_view text, RenderFormat fmt) {
  check_separator(fmt.separator);
  if (text.empty()) throw Error(Errc::SyntaxError, "empty digit string");
  if (text == "0") return Representation(base);

  auto mode = fmt.mode;
  if (mode == RenderFormat::Mode::Auto) {
    mode = text.find(fmt.separator) != std::string_view::npos ? RenderFormat::Mode::Delimited
                                                              : RenderFormat::Mode::Compact;
  }
  std::vector<Natural> digits = mode == RenderFormat::Mode::Compact
                                    ? parse_compact(text)
                                    : parse_delimited(text, fmt.separator);

  // Zeros always fit, and the leading digit is nonzero, so capacity is
  // still checked.
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i].is_zero()) continue;
    const Natural limit = position_limit(base, i);
    if (digits[i] > limit) {
      throw Error(Errc::DigitOutOfRange,
                  "digit " + digits[i].to_string() + " at position " + std::to_string(i) +
                      " exceeds the bound " + limit.to_string() + " of " + base.describe(),
                  i);
    }
  }
  return Representation(base, std::move(digits));
}

std::vector<std::string> table(const BaseSequence& base, const Natural& lo, const Natural& hi,
                               RenderFormat fmt) {
  if (hi < lo) throw Error(Errc::InvalidParameter, "table range has lo > hi");
  std::vector<std::string> rows;
  for (Natural v = lo; v <= hi; ++v) rows.push_back(render(encode_greedy(base, v), fmt));
  return rows;
}

}  // namespace numbase
