#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qchain/betti.hpp"
#include "qchain/discrete_dist.hpp"
#include "qchain/sampler.hpp"

using namespace qchain;

TEST_CASE("chain spec validation") {
  const PrimeField f2(2);
  const ChainSpec spec(f2, {2, 3, 1});
  CHECK(spec.max_degree() == 2);
  CHECK(spec.dim(0) == 2);
  CHECK(spec.dim(2) == 1);
  CHECK_THROWS_AS(ChainSpec(f2, {}), std::invalid_argument);
  CHECK_THROWS_AS(ChainSpec(f2, {1, -1}), std::invalid_argument);
}

TEST_CASE("discrete distribution container") {
  const DiscreteDist d({{0, Rational(1, 2)}, {2, Rational(1, 2)}, {5, Rational(0)}});
  CHECK(d.probs().size() == 2);  // zero entries dropped
  CHECK(d.prob(0) == Rational(1, 2));
  CHECK(d.prob(1) == 0);
  CHECK(d.moment(0) == 1);
  CHECK(d.mean() == 1);
  CHECK(d.moment(2) == 2);
  CHECK(d == DiscreteDist({{2, Rational(1, 2)}, {0, Rational(1, 2)}}));
  CHECK(DiscreteDist::point_mass(3).prob(3) == 1);
  CHECK_THROWS_AS(d.moment(-1), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteDist({{0, Rational(1, 2)}}), std::logic_error);
  CHECK_THROWS_AS(DiscreteDist({{0, Rational(3, 2)}, {1, Rational(-1, 2)}}), std::logic_error);
  CHECK_THROWS_AS(DiscreteDist({{-1, Rational(1)}}), std::logic_error);
}

TEST_CASE("rank distribution") {
  const PrimeField f2(2);

  SUBCASE("degree bounds") {
    const ChainSpec spec(f2, {1, 1});
    CHECK(rank_distribution(spec, 0) == DiscreteDist::point_mass(0));
    CHECK(rank_distribution(spec, -3) == DiscreteDist::point_mass(0));
    CHECK_THROWS_AS(rank_distribution(spec, 2), std::out_of_range);
  }

  SUBCASE("two 1x1 matrices over F_2") {
    const DiscreteDist d = rank_distribution(ChainSpec(f2, {1, 1}), 1);
    CHECK(d.prob(0) == Rational(1, 2));
    CHECK(d.prob(1) == Rational(1, 2));
  }

  SUBCASE("first map is unconstrained") {
    // with no earlier constraint, P[rank A_1 = r] is the uniform-matrix law
    const PrimeField f3(3);
    const ChainSpec spec(f3, {3, 2});
    const DiscreteDist d = rank_distribution(spec, 1);
    for (Index r = 0; r <= 2; ++r) {
      CHECK(d.prob(r) == conditional_rank_prob(3, r, 2, f3));
    }
  }

  SUBCASE("map from the zero space") {
    const DiscreteDist d = rank_distribution(ChainSpec(f2, {2, 0}), 1);
    CHECK(d == DiscreteDist::point_mass(0));
  }

  SUBCASE("matches the nullity parametrization") {
    const ChainSpec spec(f2, {2, 2, 2});
    const DiscreteDist ranks = rank_distribution(spec, 2);
    // beta with a zero top map appended equals the nullity of A_2
    const DiscreteDist nullities = betti_distribution(ChainSpec(f2, {2, 2, 2, 0}), 2);
    for (Index r = 0; r <= 2; ++r) {
      CHECK(ranks.prob(r) == nullities.prob(2 - r));
    }
  }
}

TEST_CASE("betti distribution bounds and errors") {
  const PrimeField f2(2);
  const ChainSpec spec(f2, {1, 2, 1});
  CHECK_THROWS_AS(betti_distribution(spec, -1), std::out_of_range);
  CHECK_THROWS_AS(betti_distribution(spec, 2), std::invalid_argument);
  CHECK_THROWS_AS(betti_distribution(spec, 5), std::invalid_argument);
  try {
    betti_distribution(spec, 2);
    FAIL("expected an error for the top degree");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("append a trailing 0") != std::string::npos);
  }
}

TEST_CASE("betti distribution small cases") {
  const PrimeField f2(2);

  SUBCASE("two 1x1 matrices over F_2") {
    const DiscreteDist d = betti_distribution(ChainSpec(f2, {1, 1}), 0);
    CHECK(d.prob(0) == Rational(1, 2));
    CHECK(d.prob(1) == Rational(1, 2));
  }

  SUBCASE("zero next map leaves the full nullity") {
    // dims end in 0, so beta_m is just nul(A_m)
    const ChainSpec spec(f2, {2, 2, 0});
    const DiscreteDist betti = betti_distribution(spec, 1);
    const DiscreteDist ranks = rank_distribution(spec, 1);
    for (Index b = 0; b <= 2; ++b) {
      CHECK(betti.prob(b) == ranks.prob(2 - b));
    }
  }

  SUBCASE("appending the trailing zero preserves lower degrees") {
    const ChainSpec spec(f2, {1, 2, 1});
    const ChainSpec extended(f2, {1, 2, 1, 0});
    for (Index m = 0; m <= 1; ++m) {
      CHECK(betti_distribution(spec, m) == betti_distribution(extended, m));
    }
  }
}

TEST_CASE("betti distribution equals the literal nested sum") {
  const std::vector<std::vector<Index>> shapes = {
      {1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 1},
      {2, 2, 2}, {2, 3, 2}, {3, 1, 2}, {1, 2, 2, 1}, {2, 0, 3, 1},
  };
  for (const std::int64_t q : {2, 3}) {
    const PrimeField f(q);
    for (const auto& dims : shapes) {
      const ChainSpec spec(f, dims);
      for (Index m = 0; m < spec.max_degree(); ++m) {
        CAPTURE(q);
        CAPTURE(m);
        CHECK(betti_distribution(spec, m) == testing::betti_nested_sum(spec, m));
      }
    }
  }
}

TEST_CASE("betti distribution equals exhaustive enumeration") {
  const PrimeField f2(2);
  for (const auto& dims : std::vector<std::vector<Index>>{{1, 1}, {1, 2}, {1, 2, 1}}) {
    const ChainSpec spec(f2, dims);
    for (Index m = 0; m < spec.max_degree(); ++m) {
      CHECK(betti_distribution(spec, m) == enumerate_betti_oracle(spec, m));
    }
  }
}

TEST_CASE("betti support bounds") {
  for (const std::int64_t q : {2, 3}) {
    const PrimeField f(q);
    for (const auto& dims : std::vector<std::vector<Index>>{
             {1, 1}, {3, 1}, {1, 3}, {2, 2, 2}, {3, 2, 1}, {1, 3, 1}, {2, 0, 2}}) {
      const ChainSpec spec(f, dims);
      for (Index m = 0; m < spec.max_degree(); ++m) {
        const Index n_prev = m == 0 ? 0 : spec.dim(m - 1);
        const DiscreteDist dist = betti_distribution(spec, m);
        for (const auto& [b, p] : dist.probs()) {
          CHECK(b >= 0);
          CHECK(b <= spec.dim(m));
          CHECK(b >= spec.dim(m) - n_prev - spec.dim(m + 1));
        }
      }
    }
  }
}

TEST_CASE("betti moments") {
  const PrimeField f2(2);
  const ChainSpec spec(f2, {1, 1});
  CHECK(betti_moment(spec, 0, 0) == 1);
  CHECK(betti_moment(spec, 0, 1) == Rational(1, 2));
  CHECK(betti_moment(spec, 0, 2) == Rational(1, 2));
  // variance from the two moments: 1/2 - 1/4 = 1/4
  const Rational mean = betti_moment(spec, 0, 1);
  CHECK(betti_moment(spec, 0, 2) - mean * mean == Rational(1, 4));
  CHECK_THROWS_AS(betti_moment(spec, 0, -1), std::invalid_argument);
  CHECK_THROWS_AS(betti_moment(spec, 1, 0), std::invalid_argument);
}

TEST_CASE("distributions normalize for a family of specs") {
  // DiscreteDist construction rejects any law whose mass is not exactly 1,
  // so building every distribution in this family is itself the check.
  for (const std::int64_t q : {2, 3, 5}) {
    const PrimeField f(q);
    for (const auto& dims : std::vector<std::vector<Index>>{
             {4, 4}, {1, 2, 3, 4}, {4, 3, 2, 1}, {2, 4, 0, 4, 2}, {3, 3, 3, 3, 3}}) {
      const ChainSpec spec(f, dims);
      for (Index m = 0; m <= spec.max_degree(); ++m) {
        CHECK(rank_distribution(spec, m).moment(0) == 1);
        if (m < spec.max_degree()) {
          CHECK(betti_distribution(spec, m).moment(0) == 1);
        }
      }
    }
  }
}
