#include <doctest.h>

#include <algorithm>

#include "deltasurf/error.hpp"
#include "deltasurf/gluing.hpp"
#include "deltasurf/semigroup.hpp"
#include "oracles.hpp"

using namespace deltasurf;

namespace {

IntSequence seq(std::initializer_list<long long> values) {
  IntSequence out;
  for (long long v : values) out.push_back(Int(v));
  return out;
}

DeltaSequence ds(std::initializer_list<long long> values) {
  return DeltaSequence::require(seq(values));
}

}  // namespace

TEST_SUITE("gluing") {

TEST_CASE("gluing the worked pairs") {
  CHECK(glue(ds({27, 18, 21, 13}), ds({20, 8, 15}), 2, 31).values() ==
        seq({1080, 720, 840, 520, 620, 248, 465}));
  CHECK(glue(ds({3, 2}), ds({1}), 4, 9).values() == seq({12, 8, 9}));
  CHECK(glue(ds({12, 8, 9}), ds({1}), 15, 16).values() == seq({180, 120, 135, 16}));
}

TEST_CASE("each gluing hypothesis is enforced by name") {
  auto left = ds({27, 18, 21, 13});
  auto right = ds({20, 8, 15});
  CHECK_THROWS_WITH_AS(glue(left, right, 1, 31), doctest::Contains("mu"), DomainError);
  CHECK_THROWS_WITH_AS(glue(left, right, 2, 32), doctest::Contains("not in"), DomainError);
  // 26 = 13 + 13 is a member but shares a factor with alpha = 40
  CHECK_THROWS_WITH_AS(glue(left, right, 2, 26), doctest::Contains("gcd"), DomainError);
  // 79 = 31 + 2*24? not needed: beta must stay below mu*n_g1*delta_g1 = 78
  CHECK_THROWS_WITH_AS(glue(left, right, 2, 81), doctest::Contains(">="), DomainError);
}

TEST_CASE("pair construction follows the algorithm line by line") {
  auto ok = glue_trivial(ds({3, 2}), 4, 9);
  REQUIRE(ok.ok());
  CHECK(ok.sequence->values() == seq({12, 8, 9}));

  auto trivial_base = glue_trivial(ds({1}), 3, 2);
  REQUIRE(trivial_base.ok());
  CHECK(trivial_base.sequence->values() == seq({3, 2}));

  CHECK(glue_trivial(ds({3, 2}), 4, 8).failure == Algorithm1Failure::common_factor);
  CHECK(glue_trivial(ds({3, 2}), 1, 5).failure == Algorithm1Failure::alpha_not_greater_one);
  CHECK(glue_trivial(ds({3, 2}), 4, 1).failure == Algorithm1Failure::beta_outside_semigroup);
  // n = gcd(3) = 3, bound = 3*4*2 = 24
  CHECK(glue_trivial(ds({3, 2}), 4, 25).failure == Algorithm1Failure::bound_exceeded);
}

TEST_CASE("decomposition of fixtures") {
  auto dec = decompose(ds({12, 8, 9}));
  CHECK(dec.seed.values() == seq({3, 2}));
  REQUIRE(dec.steps.size() == 1);
  CHECK(dec.steps[0].alpha == 4);
  CHECK(dec.steps[0].beta == 9);

  dec = decompose(ds({3, 2}));
  CHECK(dec.seed.values() == seq({3, 2}));
  CHECK(dec.steps.empty());

  dec = decompose(ds({1}));
  CHECK(dec.seed.trivial());
  CHECK(dec.steps.empty());

  auto glued = ds({1080, 720, 840, 520, 620, 248, 465});
  CHECK(replay(decompose(glued)) == glued);
}

TEST_CASE("decompose-replay round-trips over the small enumeration") {
  for (long long n = 1; n <= 20; ++n) {
    for (const auto& d : enumerate_delta0(Int(n))) {
      CHECK(replay(decompose(d)) == d);
    }
  }
}

TEST_CASE("ordered factorizations") {
  auto fs = ordered_factorizations(Int(12));
  CHECK(fs.size() == 8);
  CHECK(fs.front() == seq({2, 2, 3}));
  CHECK(fs.back() == seq({12}));
  CHECK(std::is_sorted(fs.begin(), fs.end()));
}

TEST_CASE("enumeration fixtures") {
  auto four = enumerate_delta0(Int(4));
  REQUIRE(four.size() == 4);
  CHECK(four[0].values() == seq({4, 1}));
  CHECK(four[1].values() == seq({4, 2, 1}));
  CHECK(four[2].values() == seq({4, 2, 3}));
  CHECK(four[3].values() == seq({4, 3}));

  auto one = enumerate_delta0(Int(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].trivial());

  auto twelve = enumerate_delta0(Int(12));
  CHECK(std::any_of(twelve.begin(), twelve.end(),
                    [](const DeltaSequence& d) { return d.values() == seq({12, 8, 9}); }));
}

TEST_CASE("enumeration matches the brute-force oracle") {
  for (long long n = 1; n <= 18; ++n) {
    auto fast = enumerate_delta0(Int(n));
    auto brute = oracles::brute_enumerate(n);
    REQUIRE(fast.size() == brute.size());
    for (std::size_t k = 0; k < fast.size(); ++k) CHECK(fast[k].values() == brute[k]);
  }
}

TEST_CASE("parallel enumeration preserves the output") {
  auto sequential = enumerate_delta0(Int(24), 1);
  auto parallel = enumerate_delta0(Int(24), 3);
  REQUIRE(sequential.size() == parallel.size());
  for (std::size_t k = 0; k < sequential.size(); ++k) {
    CHECK(sequential[k] == parallel[k]);
  }
}

TEST_CASE("glued semigroups are generated by the scaled pieces") {
  auto glued = glue(ds({27, 18, 21, 13}), ds({20, 8, 15}), 2, 31);
  auto minimal = minimal_generators(glued.values());
  IntSequence pieces = glued.values();
  std::sort(pieces.begin(), pieces.end());
  for (const Int& m : minimal) {
    CHECK(std::binary_search(pieces.begin(), pieces.end(), m));
  }
}

}  // TEST_SUITE
