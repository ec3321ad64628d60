#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "numbase/base_sequence.hpp"
#include "numbase/natural.hpp"

namespace numbase {

/// A nonzero digit a_i at position i.
struct DigitEntry {
  std::size_t position;
  Natural value;

  friend bool operator==(const DigitEntry&, const DigitEntry&) = default;
};

/// A digit vector a_0, a_1, ..., a_n (least significant first) over a base.
///
/// The empty vector is zero. High zero digits are stripped on construction,
/// so a nonempty representation always has a_n >= 1. Digits are not checked
/// against the base; see is_canonical().
///
/// Storage is sparse: in the prime base the leading position of A is about
/// A / ln A while only a handful of digits are nonzero.
class Representation {
 public:
  /// From a dense little-endian digit vector.
  explicit Representation(BaseSequence base, const std::vector<Natural>& digits = {});

  /// From nonzero entries in any order; repeated positions are summed.
  static Representation from_entries(BaseSequence base, std::vector<DigitEntry> entries);

  const BaseSequence& base() const noexcept { return base_; }
  /// Nonzero digits by increasing position.
  std::span<const DigitEntry> entries() const& noexcept { return entries_; }
  std::span<const DigitEntry> entries() const&& = delete;
  /// Dense little-endian digit vector a_0..a_n.
  std::vector<Natural> digits() const;
  /// n + 1, or 0 for zero.
  std::size_t size() const noexcept { return entries_.empty() ? 0 : entries_.back().position + 1; }
  bool is_zero() const noexcept { return entries_.empty(); }
  /// a_i, or 0 past the leading digit.
  Natural digit(std::size_t i) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.entries_ == b.entries_ && a.base_ == b.base_;
  }

 private:
  Representation(BaseSequence base, std::vector<DigitEntry> entries, int);

  BaseSequence base_;
  std::vector<DigitEntry> entries_;
};

/// Largest digit admitted at position i by the codec. Equal to
/// digit_bound(i), except at the final position of a finite base, where the
/// last term may be used at most once.
Natural position_limit(const BaseSequence& base, std::size_t i);

/// Greedy representation: repeatedly take the superior part of the rest.
Representation encode_greedy(const BaseSequence& base, const Natural& value);

/// Sum of a_i * w_i. Accepts out-of-bound and non-canonical digits.
Natural decode(const Representation& rep);

/// True iff every a_i <= position_limit(i) and every prefix sum
/// a_0 w_0 + ... + a_{k-1} w_{k-1} stays below w_k, for k = 1..n+1 (k = n+1
/// is skipped at the end of a finite base). These are exactly the vectors
/// encode_greedy produces. Never throws.
bool is_canonical(const Representation& rep);

/// The terms subtracted by iterating the superior part, largest first:
/// A = g(A) + g(A - g(A)) + ...
std::vector<Natural> expansion_superior_parts(const BaseSequence& base, const Natural& value);

struct VerificationReport {
  Natural lo;
  Natural hi;
  Natural checked;
  std::size_t roundtrip_failures = 0;
  std::size_t bound_violations = 0;
  std::size_t canonicity_violations = 0;
  std::optional<Natural> first_failure;

  bool passed() const noexcept {
    return roundtrip_failures == 0 && bound_violations == 0 && canonicity_violations == 0;
  }
};

/// Encodes every value in [lo, hi] and checks round trip, digit bounds and
/// canonicity. `workers` > 1 splits the range across threads; the report is
/// the same as a sequential run. Capacity errors propagate.
VerificationReport verify_range(const BaseSequence& base, const Natural& lo, const Natural& hi,
                                unsigned workers = 1);

}  // namespace numbase
