#include "numbase/codec.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "numbase/error.hpp"

namespace numbase {

Representation::Representation(BaseSequence base, const std::vector<Natural>& digits)
    : base_(std::move(base)) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!digits[i].is_zero()) entries_.push_back({i, digits[i]});
  }
}

Representation::Representation(BaseSequence base, std::vector<DigitEntry> entries, int)
    : base_(std::move(base)), entries_(std::move(entries)) {}

Representation Representation::from_entries(BaseSequence base, std::vector<DigitEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const DigitEntry& a, const DigitEntry& b) { return a.position < b.position; });
  std::vector<DigitEntry> merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (e.value.is_zero()) continue;
    if (!merged.empty() && merged.back().position == e.position) {
      merged.back().value += e.value;
    } else {
      merged.push_back(std::move(e));
    }
  }
  return Representation(std::move(base), std::move(merged), 0);
}

std::vector<Natural> Representation::digits() const {
  std::vector<Natural> dense(size());
  for (const auto& e : entries_) dense[e.position] = e.value;
  return dense;
}

Natural Representation::digit(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const DigitEntry& e, std::size_t p) { return e.position < p; });
  return it != entries_.end() && it->position == i ? it->value : Natural{};
}

namespace {

bool is_last_position(const BaseSequence& base, std::size_t i) {
  const auto cap = base.capacity();
  return cap && i + 1 == *cap;
}

[[noreturn]] void throw_exhausted(const BaseSequence& base, const Natural& value) {
  throw Error(Errc::IndexBeyondCapacity,
              value.to_string() + " is beyond the range of " + base.describe() +
                  " (its last term may be used at most once)");
}

}  // namespace

Natural position_limit(const BaseSequence& base, std::size_t i) {
  if (is_last_position(base, i)) return Natural(1u);
  return base.digit_bound(i);
}

Representation encode_greedy(const BaseSequence& base, const Natural& value) {
  std::vector<DigitEntry> entries;
  Natural rest = value;
  while (!rest.is_zero()) {
    auto [pos, weight] = base.superior_part(rest);
    // Taking the superior part again while it still fits is a division.
    auto [count, remainder] = divmod(rest, weight);
    if (is_last_position(base, pos) && count > Natural(1u)) throw_exhausted(base, value);
    entries.push_back({pos, std::move(count)});
    rest = std::move(remainder);
  }
  std::reverse(entries.begin(), entries.end());
  return Representation::from_entries(base, std::move(entries));
}

Natural decode(const Representation& rep) {
  Natural sum;
  for (const auto& e : rep.entries()) sum += e.value * rep.base().term(e.position);
  return sum;
}

bool is_canonical(const Representation& rep) {
  const auto& base = rep.base();
  const auto entries = rep.entries();
  const auto cap = base.capacity();
  if (cap && rep.size() > *cap) return false;
  try {
    // The prefix sum only changes at nonzero digits, and the smallest weight
    // it must stay below is the one right after each of them. That includes
    // w_{n+1} for the whole sum: "1100" in the square base is 25 = w_4.
    Natural prefix;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      const auto& e = entries[j];
      if (e.value > position_limit(base, e.position)) return false;
      prefix += e.value * base.term(e.position);
      if (is_last_position(base, e.position)) continue;
      if (!(prefix < base.term(e.position + 1))) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::vector<Natural> expansion_superior_parts(const BaseSequence& base, const Natural& value) {
  std::vector<Natural> parts;
  Natural rest = value;
  std::optional<std::size_t> previous;
  while (!rest.is_zero()) {
    auto [pos, weight] = base.superior_part(rest);
    if (previous == pos && is_last_position(base, pos)) throw_exhausted(base, value);
    previous = pos;
    rest -= weight;
    parts.push_back(std::move(weight));
  }
  return parts;
}

namespace {

VerificationReport verify_chunk(const BaseSequence& base, const Natural& lo, const Natural& hi) {
  VerificationReport r{lo, hi, {}, 0, 0, 0, std::nullopt};
  for (Natural v = lo; v <= hi; ++v) {
    const Representation rep = encode_greedy(base, v);
    bool failed = false;
    if (decode(rep) != v) {
      ++r.roundtrip_failures;
      failed = true;
    }
    for (const auto& e : rep.entries()) {
      if (e.value > position_limit(base, e.position)) {
        ++r.bound_violations;
        failed = true;
        break;
      }
    }
    if (!is_canonical(rep)) {
      ++r.canonicity_violations;
      failed = true;
    }
    if (failed && !r.first_failure) r.first_failure = v;
    ++r.checked;
  }
  return r;
}

}  // namespace

VerificationReport verify_range(const BaseSequence& base, const Natural& lo, const Natural& hi,
                                unsigned workers) {
  if (hi < lo) throw Error(Errc::InvalidParameter, "verify range has lo > hi");
  const Natural count = hi - lo + Natural(1u);
  if (workers <= 1 || count < Natural(static_cast<std::uint64_t>(workers) * 64)) {
    return verify_chunk(base, lo, hi);
  }

  const Natural step = count / Natural(workers);
  std::vector<VerificationReport> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const Natural a = lo + step * Natural(w);
    const Natural b = w + 1 == workers ? hi : a + step - Natural(1u);
    pool.emplace_back([&, w, a, b] {
      try {
        parts[w] = verify_chunk(base, a, b);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  VerificationReport total{lo, hi, {}, 0, 0, 0, std::nullopt};
  for (const auto& p : parts) {
    total.checked += p.checked;
    total.roundtrip_failures += p.roundtrip_failures;
    total.bound_violations += p.bound_violations;
    total.canonicity_violations += p.canonicity_violations;
    if (!total.first_failure && p.first_failure) total.first_failure = p.first_failure;
  }
  return total;
}

}  // namespace numbase
