#include "numbase/base_sequence.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "numbase/error.hpp"

namespace numbase {

// ---------------------------------------------------------------------------
// MixedRadixSpec

MixedRadixSpec::MixedRadixSpec(Form form, std::vector<Natural> bounds, std::string name,
                               Generator fn)
    : form_(form), bounds_(std::move(bounds)), name_(std::move(name)), fn_(std::move(fn)) {
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (bounds_[i].is_zero()) {
      throw Error(Errc::InvalidParameter, "mixed-radix bound t_" + std::to_string(i) + " is 0",
                  i);
    }
  }
}

MixedRadixSpec MixedRadixSpec::constant(Natural t) {
  return MixedRadixSpec(Form::Cyclic, {std::move(t)}, {}, {});
}

MixedRadixSpec MixedRadixSpec::finite(std::vector<Natural> bounds) {
  return MixedRadixSpec(Form::Finite, std::move(bounds), {}, {});
}

MixedRadixSpec MixedRadixSpec::cyclic(std::vector<Natural> bounds) {
  if (bounds.empty()) throw Error(Errc::InvalidParameter, "cyclic bound list is empty");
  return MixedRadixSpec(Form::Cyclic, std::move(bounds), {}, {});
}

MixedRadixSpec MixedRadixSpec::generated(std::string name, Generator fn) {
  if (!fn) throw Error(Errc::InvalidParameter, "mixed-radix generator is empty");
  return MixedRadixSpec(Form::Generated, {}, std::move(name), std::move(fn));
}

MixedRadixSpec MixedRadixSpec::factorial() {
  return generated("i+1", [](std::size_t i) { return Natural(static_cast<std::uint64_t>(i) + 1); });
}

Natural MixedRadixSpec::bound(std::size_t i) const {
  switch (form_) {
    case Form::Finite:
      if (i >= bounds_.size()) {
        throw Error(Errc::IndexBeyondCapacity,
                    "bound t_" + std::to_string(i) + " beyond finite spec of length " +
                        std::to_string(bounds_.size()));
      }
      return bounds_[i];
    case Form::Cyclic:
      return bounds_[i % bounds_.size()];
    case Form::Generated: {
      Natural t = fn_(i);
      if (t.is_zero()) {
        throw Error(Errc::InvalidParameter, "mixed-radix bound t_" + std::to_string(i) + " is 0",
                    i);
      }
      return t;
    }
  }
  return {};
}

std::string MixedRadixSpec::describe() const {
  if (form_ == Form::Generated) return "t_i=" + name_;
  std::ostringstream os;
  os << (form_ == Form::Cyclic ? "cyclic[" : "[");
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (i) os << ',';
    if (i == 8 && bounds_.size() > 10) {
      os << "...," << bounds_.back();
      break;
    }
    os << bounds_[i];
  }
  os << ']';
  return os.str();
}

bool operator==(const MixedRadixSpec& a, const MixedRadixSpec& b) {
  return a.form_ == b.form_ && a.bounds_ == b.bounds_ && a.name_ == b.name_;
}

// ---------------------------------------------------------------------------
// Sequence state

namespace detail {

struct SequenceState {
  BaseKind kind;
  std::uint64_t param = 0;
  Natural multiplier;                   // PowerOf
  std::vector<Natural> explicit_terms;  // Explicit
  std::optional<MixedRadixSpec> spec;   // MixedRadix
  std::optional<std::size_t> capacity;

  mutable std::shared_mutex mu;
  mutable std::vector<Natural> cache;
  mutable std::vector<std::uint64_t> primes;

  // Appends w_{cache.size()}. Caller holds the unique lock.
  void extend() const {
    const std::size_t i = cache.size();
    if (capacity && i >= *capacity) {
      throw Error(Errc::IndexBeyondCapacity, "index " + std::to_string(i) +
                                                 " beyond capacity " + std::to_string(*capacity));
    }
    Natural w = generate(i);
    if (i > 0 && !(cache.back() < w)) {
      throw Error(Errc::NotStrictlyIncreasing,
                  "generated term w_" + std::to_string(i) + " does not increase");
    }
    cache.push_back(std::move(w));
  }

  void ensure(std::size_t count) const {
    while (cache.size() < count) extend();
  }

  Natural generate(std::size_t i) const {
    if (kind == BaseKind::Explicit) return explicit_terms[i];
    if (i == 0) return Natural(1u);
    const auto n = static_cast<std::uint64_t>(i);
    switch (kind) {
      case BaseKind::Prime:
        return Natural(next_prime());
      case BaseKind::Square:
        return pow(Natural(n + 1), 2);
      case BaseKind::MPower:
        return pow(Natural(n + 1), static_cast<unsigned>(param));
      case BaseKind::Factorial:
        return cache[i - 1] * Natural(n + 1);
      case BaseKind::PowerOf:
        return cache[i - 1] * multiplier;
      case BaseKind::Fibonacci:
        return i == 1 ? Natural(2u) : cache[i - 1] + cache[i - 2];
      case BaseKind::Lucas:
        return i == 1 ? Natural(3u) : cache[i - 1] + cache[i - 2];
      case BaseKind::MixedRadix:
        return (spec->bound(i - 1) + Natural(1u)) * cache[i - 1];
      case BaseKind::Explicit:
        break;
    }
    return {};
  }

  // Incremental trial division against the primes found so far.
  std::uint64_t next_prime() const {
    if (primes.empty()) {
      primes.push_back(2);
      return 2;
    }
    std::uint64_t c = primes.back() == 2 ? 3 : primes.back() + 2;
    for (;; c += 2) {
      if (c < primes.back()) {
        throw Error(Errc::InvalidParameter, "prime generation exceeded the 64-bit range");
      }
      bool is_prime = true;
      for (std::uint64_t p : primes) {
        if (p > c / p) break;
        if (c % p == 0) {
          is_prime = false;
          break;
        }
      }
      if (is_prime) {
        primes.push_back(c);
        return c;
      }
    }
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// BaseSequence

namespace {

std::shared_ptr<detail::SequenceState> make_state(BaseKind kind) {
  auto s = std::make_shared<detail::SequenceState>();
  s->kind = kind;
  return s;
}

}  // namespace

BaseSequence::BaseSequence(std::shared_ptr<detail::SequenceState> state)
    : state_(std::move(state)) {}

BaseSequence BaseSequence::prime() { return BaseSequence(make_state(BaseKind::Prime)); }
BaseSequence BaseSequence::square() { return BaseSequence(make_state(BaseKind::Square)); }
BaseSequence BaseSequence::factorial() { return BaseSequence(make_state(BaseKind::Factorial)); }
BaseSequence BaseSequence::fibonacci() { return BaseSequence(make_state(BaseKind::Fibonacci)); }
BaseSequence BaseSequence::lucas() { return BaseSequence(make_state(BaseKind::Lucas)); }

BaseSequence BaseSequence::mpower(unsigned m) {
  if (m < 2) throw Error(Errc::InvalidParameter, "m-power base needs m >= 2, got " + std::to_string(m));
  auto s = make_state(BaseKind::MPower);
  s->param = m;
  return BaseSequence(std::move(s));
}

BaseSequence BaseSequence::power_of(const Natural& p) {
  if (p < Natural(2u)) {
    throw Error(Errc::InvalidParameter, "power base needs p >= 2, got " + p.to_string());
  }
  auto s = make_state(BaseKind::PowerOf);
  s->multiplier = p;
  return BaseSequence(std::move(s));
}

BaseSequence BaseSequence::explicit_terms(std::vector<Natural> terms) {
  if (terms.empty()) throw Error(Errc::InvalidParameter, "explicit base has no terms");
  if (terms.front() != Natural(1u)) {
    throw Error(Errc::NotStartingAtOne, "first term is " + terms.front().to_string() + ", not 1",
                0);
  }
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!(terms[i - 1] < terms[i])) {
      throw Error(Errc::NotStrictlyIncreasing,
                  "term " + std::to_string(i) + " (" + terms[i].to_string() +
                      ") does not exceed its predecessor",
                  i);
    }
  }
  auto s = make_state(BaseKind::Explicit);
  s->capacity = terms.size();
  s->explicit_terms = std::move(terms);
  return BaseSequence(std::move(s));
}

BaseSequence BaseSequence::mixed_radix(MixedRadixSpec spec) {
  auto s = make_state(BaseKind::MixedRadix);
  if (spec.is_finite()) s->capacity = spec.length() + 1;
  s->spec = std::move(spec);
  return BaseSequence(std::move(s));
}

BaseKind BaseSequence::kind() const noexcept { return state_->kind; }

std::optional<std::size_t> BaseSequence::capacity() const noexcept { return state_->capacity; }

std::string BaseSequence::describe() const {
  switch (state_->kind) {
    case BaseKind::Prime: return "prime";
    case BaseKind::Square: return "square";
    case BaseKind::MPower: return "mpower:" + std::to_string(state_->param);
    case BaseKind::Factorial: return "factorial";
    case BaseKind::PowerOf: return "power:" + state_->multiplier.to_string();
    case BaseKind::Fibonacci: return "fibonacci";
    case BaseKind::Lucas: return "lucas";
    case BaseKind::Explicit: {
      std::ostringstream os;
      os << "explicit[";
      const auto& t = state_->explicit_terms;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ',';
        if (i == 8 && t.size() > 10) {
          os << "...," << t.back();
          break;
        }
        os << t[i];
      }
      os << ']';
      return os.str();
    }
    case BaseKind::MixedRadix: return "mixed" + state_->spec->describe();
  }
  return "unknown";
}

Natural BaseSequence::term(std::size_t i) const {
  const auto& s = *state_;
  {
    std::shared_lock lock(s.mu);
    if (i < s.cache.size()) return s.cache[i];
  }
  if (s.capacity && i >= *s.capacity) {
    throw Error(Errc::IndexBeyondCapacity,
                "index " + std::to_string(i) + " beyond capacity " + std::to_string(*s.capacity));
  }
  std::unique_lock lock(s.mu);
  s.ensure(i + 1);
  return s.cache[i];
}

std::pair<std::size_t, Natural> BaseSequence::superior_part(const Natural& a) const {
  if (a.is_zero()) throw Error(Errc::InvalidParameter, "superior part of 0 is undefined");
  const auto& s = *state_;
  auto search = [&]() -> std::pair<std::size_t, Natural> {
    auto it = std::upper_bound(s.cache.begin(), s.cache.end(), a);
    const auto idx = static_cast<std::size_t>(it - s.cache.begin()) - 1;
    return {idx, s.cache[idx]};
  };
  {
    std::shared_lock lock(s.mu);
    if (!s.cache.empty() && a < s.cache.back()) return search();
  }
  std::unique_lock lock(s.mu);
  while (s.cache.empty() || !(a < s.cache.back())) {
    if (s.capacity && s.cache.size() >= *s.capacity) break;
    s.extend();
  }
  return search();
}

Natural BaseSequence::digit_bound(std::size_t i) const {
  if (state_->capacity && i + 1 >= *state_->capacity) {
    throw Error(Errc::IndexBeyondCapacity,
                "digit bound at position " + std::to_string(i) +
                    " is undefined: base has only " + std::to_string(*state_->capacity) + " terms");
  }
  const Natural next = term(i + 1);
  return (next - Natural(1u)) / term(i);
}

std::size_t BaseSequence::materialized() const {
  std::shared_lock lock(state_->mu);
  return state_->cache.size();
}

bool operator==(const BaseSequence& a, const BaseSequence& b) {
  if (a.state_ == b.state_) return true;
  const auto& x = *a.state_;
  const auto& y = *b.state_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case BaseKind::MPower: return x.param == y.param;
    case BaseKind::PowerOf: return x.multiplier == y.multiplier;
    case BaseKind::Explicit: return x.explicit_terms == y.explicit_terms;
    case BaseKind::MixedRadix: return *x.spec == *y.spec;
    default: return true;
  }
}

// ---------------------------------------------------------------------------

BaseSequence make_builtin(BaseKind kind, std::uint64_t param) {
  switch (kind) {
    case BaseKind::Prime: return BaseSequence::prime();
    case BaseKind::Square: return BaseSequence::square();
    case BaseKind::MPower:
      if (param < 2 || param > std::numeric_limits<unsigned>::max()) {
        throw Error(Errc::InvalidParameter, "m-power base needs m >= 2, got " + std::to_string(param));
      }
      return BaseSequence::mpower(static_cast<unsigned>(param));
    case BaseKind::Factorial: return BaseSequence::factorial();
    case BaseKind::PowerOf: return BaseSequence::power_of(Natural(param));
    case BaseKind::Fibonacci: return BaseSequence::fibonacci();
    case BaseKind::Lucas: return BaseSequence::lucas();
    case BaseKind::Explicit:
    case BaseKind::MixedRadix:
      break;
  }
  throw Error(Errc::InvalidParameter, "not a built-in base kind");
}

BaseSequence make_explicit(std::vector<Natural> terms) {
  return BaseSequence::explicit_terms(std::move(terms));
}

BaseSequence make_mixed_radix(MixedRadixSpec spec) {
  return BaseSequence::mixed_radix(std::move(spec));
}

}  // namespace numbase
