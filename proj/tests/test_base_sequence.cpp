#include <doctest.h>

#include <thread>

#include "numbase/base_sequence.hpp"
#include "numbase/error.hpp"
#include "oracles.hpp"

using namespace numbase;
using numbase::testing::sieve_primes;

namespace {

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidParameter;
}

std::vector<BaseSequence> builtin_bases() {
  return {BaseSequence::prime(),     BaseSequence::square(),       BaseSequence::mpower(3),
          BaseSequence::factorial(), BaseSequence::power_of(10u),  BaseSequence::fibonacci(),
          BaseSequence::lucas()};
}

}  // namespace

TEST_CASE("built-in families") {
  CHECK(make_builtin(BaseKind::Prime).term(4) == Natural(7u));
  CHECK(make_builtin(BaseKind::PowerOf, 2).term(3) == Natural(8u));
  CHECK(make_builtin(BaseKind::MPower, 3).term(1) == Natural(8u));
  CHECK(BaseSequence::prime().term(0) == Natural(1u));
  CHECK(BaseSequence::factorial().term(3) == Natural(24u));

  CHECK(error_code([] { make_builtin(BaseKind::MPower, 1); }) == Errc::InvalidParameter);
  CHECK(error_code([] { make_builtin(BaseKind::PowerOf, 1); }) == Errc::InvalidParameter);
  CHECK(error_code([] { make_builtin(BaseKind::Explicit); }) == Errc::InvalidParameter);

  auto fib = BaseSequence::fibonacci();
  auto luc = BaseSequence::lucas();
  const std::uint64_t fib_expected[] = {1, 2, 3, 5, 8, 13, 21, 34};
  const std::uint64_t luc_expected[] = {1, 3, 4, 7, 11, 18, 29, 47};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(fib.term(i) == Natural(fib_expected[i]));
    CHECK(luc.term(i) == Natural(luc_expected[i]));
  }
}

TEST_CASE("construction materializes nothing") {
  auto b = BaseSequence::prime();
  CHECK(b.materialized() == 0);
  (void)b.term(5);
  CHECK(b.materialized() == 6);
}

TEST_CASE("explicit bases") {
  auto b = make_explicit({1u, 2u, 3u});
  CHECK(b.capacity() == std::size_t{3});
  CHECK(b.term(2) == Natural(3u));
  CHECK(error_code([] { make_explicit({2u, 3u, 5u}); }) == Errc::NotStartingAtOne);
  CHECK(error_code([] { make_explicit({1u, 3u, 3u}); }) == Errc::NotStrictlyIncreasing);
  CHECK(error_code([] { make_explicit({}); }) == Errc::InvalidParameter);
  CHECK(error_code([] { make_explicit({1u, 4u, 9u}).term(5); }) == Errc::IndexBeyondCapacity);
}

TEST_CASE("mixed-radix construction") {
  auto fact = make_mixed_radix(MixedRadixSpec::factorial());
  const std::uint64_t f[] = {1, 2, 6, 24, 120, 720};
  for (std::size_t i = 0; i < 6; ++i) CHECK(fact.term(i) == Natural(f[i]));

  auto dec = make_mixed_radix(MixedRadixSpec::constant(9u));
  CHECK(dec.term(3) == Natural(1000u));
  auto bin = make_mixed_radix(MixedRadixSpec::constant(1u));
  CHECK(bin.term(10) == Natural(1024u));

  CHECK(error_code([] { MixedRadixSpec::finite({1u, 0u}); }) == Errc::InvalidParameter);
  CHECK(error_code([] { MixedRadixSpec::cyclic({}); }) == Errc::InvalidParameter);
  CHECK(error_code([] {
          make_mixed_radix(MixedRadixSpec::generated("zero at 3",
                                                     [](std::size_t i) {
                                                       return Natural(i == 3 ? 0u : 1u);
                                                     }))
              .term(4);
        }) == Errc::InvalidParameter);

  auto finite = make_mixed_radix(MixedRadixSpec::finite({2u, 3u}));
  CHECK(finite.capacity() == std::size_t{3});
  CHECK(finite.term(2) == Natural(12u));
  CHECK(error_code([&] { finite.term(3); }) == Errc::IndexBeyondCapacity);
}

TEST_CASE("mixed-radix digit bounds reproduce the spec") {
  auto cyc = make_mixed_radix(MixedRadixSpec::cyclic({1u, 4u, 2u}));
  for (std::size_t i = 0; i < 60; ++i) {
    const std::uint64_t t[] = {1, 4, 2};
    CHECK(cyc.digit_bound(i) == Natural(t[i % 3]));
  }
  auto fact = make_mixed_radix(MixedRadixSpec::factorial());
  for (std::size_t i = 0; i < 40; ++i) {
    CHECK(fact.digit_bound(i) == Natural(static_cast<std::uint64_t>(i) + 1));
  }
  auto finite = make_mixed_radix(MixedRadixSpec::finite({5u, 7u}));
  CHECK(finite.digit_bound(0) == Natural(5u));
  CHECK(finite.digit_bound(1) == Natural(7u));
  CHECK(error_code([&] { finite.digit_bound(2); }) == Errc::IndexBeyondCapacity);
}

TEST_CASE("superior part") {
  auto prime = BaseSequence::prime();
  CHECK(prime.superior_part(10u) == std::pair<std::size_t, Natural>{4, 7u});
  CHECK(BaseSequence::square().superior_part(24u).second == Natural(16u));
  for (const auto& b : builtin_bases()) {
    CHECK(b.superior_part(1u) == std::pair<std::size_t, Natural>{0, 1u});
  }
  CHECK(error_code([&] { prime.superior_part(0u); }) == Errc::InvalidParameter);

  // Finite base: past the last term there is nothing to compare with.
  auto ex = make_explicit({1u, 2u, 3u});
  CHECK(ex.superior_part(2u).first == 1);
  CHECK(ex.superior_part(3u).first == 2);
  CHECK(ex.superior_part(100u).first == 2);

  // Brute-force scan over sieved primes.
  const auto primes = sieve_primes(5000);
  for (std::uint64_t a = 2; a <= 5000; a += 7) {
    std::uint64_t best = 0;
    std::size_t idx = 0;
    for (std::size_t k = 0; k < primes.size() && primes[k] <= a; ++k) {
      best = primes[k];
      idx = k + 1;
    }
    const auto got = prime.superior_part(a);
    CHECK(got.first == idx);
    CHECK(got.second == Natural(best));
  }
}

TEST_CASE("digit bounds") {
  auto sq = BaseSequence::square();
  CHECK(sq.digit_bound(0) == Natural(3u));
  CHECK(sq.digit_bound(1) == Natural(2u));
  CHECK(BaseSequence::prime().digit_bound(7) == Natural(1u));
  CHECK(error_code([] { make_explicit({1u, 2u, 3u}).digit_bound(2); }) ==
        Errc::IndexBeyondCapacity);
  CHECK(make_explicit({1u, 2u, 3u}).digit_bound(1) == Natural(1u));

  // m-power bound: floor(((i+2)^m - 1) / (i+1)^m).
  for (unsigned m = 2; m <= 6; ++m) {
    auto b = BaseSequence::mpower(m);
    for (std::uint64_t i = 0; i < 30; ++i) {
      std::uint64_t lo = 1, hi = 1;
      for (unsigned e = 0; e < m; ++e) {
        lo *= i + 1;
        hi *= i + 2;
      }
      CHECK(b.digit_bound(i) == Natural((hi - 1) / lo));
    }
  }
}

TEST_CASE("primes against a sieve for the first 10^4 positions") {
  const auto primes = sieve_primes(120000);
  REQUIRE(primes.size() > 10001);
  auto b = BaseSequence::prime();
  for (std::size_t i = 1; i <= 10000; ++i) REQUIRE(b.term(i) == Natural(primes[i - 1]));
  // Bertrand: p_{k+1} < 2 p_k, so every prime position is binary.
  for (std::size_t i = 0; i < 10000; ++i) {
    REQUIRE(Natural(2u) * b.term(i) >= b.term(i + 1));
    REQUIRE(b.digit_bound(i) == Natural(1u));
  }
}

TEST_CASE("doubling condition implies binary digits") {
  auto check = [](const BaseSequence& b, std::size_t from, std::size_t count) {
    std::size_t held = 0;
    for (std::size_t i = from; i < from + count; ++i) {
      if (Natural(2u) * b.term(i) >= b.term(i + 1)) {
        ++held;
        REQUIRE(b.digit_bound(i) == Natural(1u));
      }
    }
    return held;
  };
  CHECK(check(BaseSequence::fibonacci(), 0, 10000) == 10000);
  CHECK(check(BaseSequence::mpower(2), 2, 10000) == 10000);
  CHECK(check(BaseSequence::mpower(3), 3, 10000) == 10000);
  // From m = 4 on, position m itself fails the doubling test:
  // 2 * 5^4 = 1250 < 6^4 = 1296, so a_4 can be 2.
  CHECK(check(BaseSequence::mpower(4), 4, 1) == 0);
  CHECK(BaseSequence::mpower(4).digit_bound(4) == Natural(2u));
}

TEST_CASE("structural invariants over many terms") {
  for (const auto& b : builtin_bases()) {
    CAPTURE(b.describe());
    CHECK(b.term(0) == Natural(1u));
    for (std::size_t i = 0; i < 300; ++i) {
      REQUIRE(b.term(i) < b.term(i + 1));
      REQUIRE(b.digit_bound(i) >= Natural(1u));
    }
  }
  auto p7 = BaseSequence::power_of(7u);
  for (std::size_t i = 1; i < 200; ++i) REQUIRE(p7.term(i) == Natural(7u) * p7.term(i - 1));
}

TEST_CASE("determinism and equality") {
  auto a = BaseSequence::prime();
  auto b = BaseSequence::prime();
  (void)a.term(500);
  for (std::size_t i = 0; i < 700; i += 3) REQUIRE(a.term(i) == b.term(i));
  CHECK(a == b);
  CHECK_FALSE(BaseSequence::mpower(2) == BaseSequence::mpower(3));
  CHECK(BaseSequence::power_of(10u) == BaseSequence::power_of(10u));
  CHECK_FALSE(BaseSequence::square() == BaseSequence::mpower(2));
  CHECK(make_explicit({1u, 2u}) == make_explicit({1u, 2u}));
  CHECK_FALSE(make_explicit({1u, 2u}) == make_explicit({1u, 3u}));
}

TEST_CASE("values are arbitrary precision") {
  auto f = BaseSequence::factorial();
  CHECK(f.term(29).to_string() == "265252859812191058636308480000000");  // 30!
  CHECK(BaseSequence::power_of(2u).term(100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("concurrent readers see one append-only cache") {
  auto shared = BaseSequence::prime();
  const auto reference = sieve_primes(60000);
  std::vector<std::thread> pool;
  std::vector<int> mismatches(6, 0);
  for (int t = 0; t < 6; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < 5000; i += 1 + t) {
        const Natural got = shared.term(i + 1);
        if (got != Natural(reference[i])) ++mismatches[t];
        const auto sp = shared.superior_part(Natural(reference[i]));
        if (sp.first != i + 1) ++mismatches[t];
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int m : mismatches) CHECK(m == 0);
}
