#include <doctest.h>

#include "deltasurf/delta_core.hpp"
#include "deltasurf/error.hpp"
#include "deltasurf/gluing.hpp"
#include "oracles.hpp"

using namespace deltasurf;

namespace {

IntSequence seq(std::initializer_list<long long> values) {
  IntSequence out;
  for (long long v : values) out.push_back(Int(v));
  return out;
}

}  // namespace

TEST_SUITE("delta_core") {

TEST_CASE("profiles of the worked sequences") {
  auto p = compute_profile(seq({1890, 1260, 1575, 840, 168, 180, 1250}));
  CHECK(p.display_n() == seq({3, 2, 3, 5, 7, 3}));

  p = compute_profile(seq({1125, 675, 375, 135, 102, 283}));
  CHECK(p.display_n() == seq({5, 3, 5, 5, 3}));

  p = compute_profile(seq({1}));
  CHECK(p.d == seq({1}));
  CHECK(p.display_n() == seq({1}));
}

TEST_CASE("profile rejects malformed input") {
  CHECK_THROWS_AS(compute_profile({}), DomainError);
  CHECK_THROWS_AS(compute_profile(seq({4, 0, 2})), DomainError);
}

TEST_CASE("validation of known sequences") {
  auto good = DeltaSequence::validate(seq({12, 8, 9}));
  REQUIRE(good.ok());
  CHECK(good.sequence->degenerate());
  CHECK_FALSE(good.sequence->principal());

  auto bad = DeltaSequence::validate(seq({225, 150, 12, 10}));
  REQUIRE_FALSE(bad.ok());
  REQUIRE(bad.report.violations.size() == 1);
  CHECK(bad.report.violations[0].condition == 2);
  CHECK(bad.report.violations[0].index == 3);

  CHECK(DeltaSequence::validate(seq({1})).ok());
  CHECK(DeltaSequence::validate(seq({1080, 720, 840, 520, 620, 248, 465})).ok());
}

TEST_CASE("each condition is reported at its first failing index") {
  auto c1 = DeltaSequence::validate(seq({6, 4}));  // gcd stays 2
  REQUIRE_FALSE(c1.ok());
  CHECK(c1.report.violations[0].condition == 1);

  auto c3 = DeltaSequence::validate(seq({3, 5}));
  REQUIRE_FALSE(c3.ok());
  CHECK(c3.report.violations[0].condition == 3);
  CHECK(c3.report.violations[0].index == 1);
}

TEST_CASE("trivial sequence carries both classification flags") {
  auto t = DeltaSequence::validate(seq({1}));
  REQUIRE(t.ok());
  CHECK(t.sequence->trivial());
  CHECK(t.sequence->principal());
  CHECK(t.sequence->degenerate());
}

TEST_CASE("factor form of fixtures") {
  auto d = DeltaSequence::require(seq({225, 150, 30, 12, 10}));
  auto form = to_factor_form(d);
  CHECK(form.n == seq({1, 3, 5, 5, 3}));
  CHECK(form.a == seq({1, 2, 2, 4, 10}));

  d = DeltaSequence::require(seq({12, 8, 9}));
  form = to_factor_form(d);
  CHECK(form.n == seq({1, 3, 4}));
  CHECK(form.a == seq({1, 2, 9}));

  form = to_factor_form(DeltaSequence::require(seq({1})));
  CHECK(form.n == seq({1}));
  CHECK(form.a == seq({1}));
}

TEST_CASE("from_factor_form rebuilds and rejects") {
  FactorForm f;
  f.n = seq({1, 3, 4});
  f.a = seq({1, 2, 9});
  CHECK(from_factor_form(f).values() == seq({12, 8, 9}));

  f.n = seq({1, 3});
  f.a = seq({1, 2});
  CHECK(from_factor_form(f).values() == seq({3, 2}));

  f.n = seq({1, 2});
  f.a = seq({1, 2});
  CHECK_THROWS_WITH_AS(from_factor_form(f), doctest::Contains("gcd"), DomainError);
}

TEST_CASE("factor form round-trips over the small enumeration") {
  for (long long n = 1; n <= 16; ++n) {
    for (const auto& d : enumerate_delta0(Int(n))) {
      auto rebuilt = from_factor_form(to_factor_form(d));
      CHECK(rebuilt == d);
    }
  }
}

TEST_CASE("profile identities over the small enumeration") {
  for (long long n = 1; n <= 20; ++n) {
    const std::size_t omega = n == 1 ? 0 : prime_omega(Int(n));
    for (const auto& d : enumerate_delta0(Int(n))) {
      // cardinality bound: g+1 <= 1 + number of prime factors of delta_0
      CHECK(d.size() <= 1 + omega);
      // delta_0 = prod n_i and d_k = prod_{i >= k} n_i
      Int prod = 1;
      for (std::size_t i = 1; i <= d.g(); ++i) prod *= d.profile().n_at(i);
      CHECK(prod == d.front());
      for (std::size_t k = 1; k <= d.g() + 1; ++k) {
        Int tail = 1;
        for (std::size_t i = k; i <= d.g(); ++i) tail *= d.profile().n_at(i);
        CHECK(tail == d.profile().d_at(k));
      }
      if (d.g() >= 1 && d.degenerate()) {
        CHECK(d.profile().d_at(2) == d.front() - d[1]);
      }
    }
  }
}

}  // TEST_SUITE
