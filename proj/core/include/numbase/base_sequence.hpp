#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numbase/natural.hpp"

namespace numbase {

enum class BaseKind {
  Prime,
  Square,
  MPower,
  Factorial,
  PowerOf,
  Fibonacci,
  Lucas,
  Explicit,
  MixedRadix,
};

/// Per-position digit bounds t_0, t_1, ... (each >= 1) of a mixed-radix base,
/// whose weights follow w_0 = 1, w_{i+1} = (t_i + 1) * w_i.
class MixedRadixSpec {
 public:
  using Generator = std::function<Natural(std::size_t)>;

  /// t_i = t for every i.
  static MixedRadixSpec constant(Natural t);
  /// Exactly these bounds; the base then has bounds.size() + 1 weights.
  static MixedRadixSpec finite(std::vector<Natural> bounds);
  /// These bounds repeated forever.
  static MixedRadixSpec cyclic(std::vector<Natural> bounds);
  /// t_i = fn(i). Validated lazily, as positions are materialized.
  static MixedRadixSpec generated(std::string name, Generator fn);

  /// Factorial digit bounds t_i = i + 1.
  static MixedRadixSpec factorial();

  bool is_finite() const noexcept { return form_ == Form::Finite; }
  /// Number of bounds for finite specs.
  std::size_t length() const noexcept { return bounds_.size(); }
  Natural bound(std::size_t i) const;
  std::string describe() const;

  friend bool operator==(const MixedRadixSpec& a, const MixedRadixSpec& b);

 private:
  enum class Form { Finite, Cyclic, Generated };
  MixedRadixSpec(Form form, std::vector<Natural> bounds, std::string name, Generator fn);

  Form form_;
  std::vector<Natural> bounds_;
  std::string name_;
  Generator fn_;
};

namespace detail {
struct SequenceState;
}

/// A strictly increasing sequence of positional weights with w_0 = 1.
///
/// Terms are produced lazily and memoized in an append-only cache shared by
/// every copy of the handle; concurrent readers are safe. Finite bases
/// (explicit lists, finite mixed-radix specs) have a capacity and raise
/// Errc::IndexBeyondCapacity past it.
class BaseSequence {
 public:
  static BaseSequence prime();
  static BaseSequence square();
  static BaseSequence mpower(unsigned m);
  static BaseSequence factorial();
  static BaseSequence power_of(const Natural& p);
  static BaseSequence fibonacci();
  static BaseSequence lucas();
  static BaseSequence explicit_terms(std::vector<Natural> terms);
  static BaseSequence mixed_radix(MixedRadixSpec spec);

  BaseKind kind() const noexcept;
  /// Number of weights for finite bases, nullopt for unbounded ones.
  std::optional<std::size_t> capacity() const noexcept;
  bool is_finite() const noexcept { return capacity().has_value(); }
  std::string describe() const;

  /// w_i. Extends the cache on demand.
  Natural term(std::size_t i) const;

  /// Largest i with w_i <= a, together with w_i. Requires a >= 1.
  ///
  /// On a finite base whose last term is <= a there is no successor to
  /// prove maximality; the last term is returned.
  std::pair<std::size_t, Natural> superior_part(const Natural& a) const;

  /// floor((w_{i+1} - 1) / w_i), the largest digit position i admits.
  /// Undefined (IndexBeyondCapacity) at the final position of a finite base.
  Natural digit_bound(std::size_t i) const;

  /// Number of terms currently memoized.
  std::size_t materialized() const;

  /// Same family and parameters; such bases agree on every term.
  friend bool operator==(const BaseSequence& a, const BaseSequence& b);

 private:
  explicit BaseSequence(std::shared_ptr<detail::SequenceState> state);
  std::shared_ptr<detail::SequenceState> state_;
};

/// Builds a built-in family. `param` is m for MPower and p for PowerOf and
/// ignored otherwise. Explicit and MixedRadix are rejected here; use
/// make_explicit / make_mixed_radix.
BaseSequence make_builtin(BaseKind kind, std::uint64_t param = 0);
BaseSequence make_explicit(std::vector<Natural> terms);
BaseSequence make_mixed_radix(MixedRadixSpec spec);

}  // namespace numbase
