#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchain/chain_spec.hpp"
#include "qchain/counting.hpp"
#include "qchain/discrete_dist.hpp"
#include "qchain/matrix_fq.hpp"

namespace qchain {

/// One drawn chain complex: boundary maps A_1..A_M, where A_m is
/// dims[m-1] x dims[m] and every consecutive product A_{m-1} A_m is zero.
struct SampledComplex {
  ChainSpec spec;
  std::vector<MatrixFq> boundaries;

  /// 1-based accessor: boundary(m) is the map out of degree m.
  const MatrixFq& boundary(Index m) const {
    if (m < 1 || m > static_cast<Index>(boundaries.size())) {
      throw std::out_of_range("SampledComplex: no boundary map " + std::to_string(m));
    }
    return boundaries[static_cast<std::size_t>(m) - 1];
  }
};

/// Histogram of an integer statistic over Monte Carlo trials.
struct EmpiricalDist {
  std::map<Index, std::int64_t> counts;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;

  Rational frequency(Index v) const {
    const auto it = counts.find(v);
    return it == counts.end() ? Rational(0) : Rational(it->second, trials);
  }

  Rational mean() const {
    if (trials == 0) throw std::logic_error("EmpiricalDist: no trials");
    BigInt sum = 0;
    for (const auto& [v, c] : counts) sum += BigInt(v) * c;
    return Rational(sum, trials);
  }

  /// Frequencies as an exact distribution. Throws if there are no trials.
  DiscreteDist to_dist() const {
    if (trials == 0) throw std::logic_error("EmpiricalDist: no trials");
    std::map<Index, Rational> probs;
    for (const auto& [v, c] : counts) probs[v] = Rational(c, trials);
    return DiscreteDist(std::move(probs));
  }
};

/// Thrown when an exhaustive enumeration would visit more states than the
/// caller's budget allows; the message carries the exact state count.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const BigInt& states, const BigInt& budget)
      : std::runtime_error("enumeration needs " + states.str() +
                           " states but the budget allows " + budget.str()),
        states_(states) {}

  const BigInt& states() const { return states_; }

 private:
  BigInt states_;
};

/// Derives the seed for one trial from the root seed. Splitting by trial
/// index makes the merged histogram independent of how trials are
/// partitioned across workers.
std::uint64_t mix_seed(std::uint64_t root, std::uint64_t index);

/// Draws one uniform random chain complex. A_1 is uniform over all
/// dims[0] x dims[1] matrices; each later A_m is uniform over the matrices
/// annihilated by A_{m-1}, realized by drawing uniform coordinates in the
/// kernel basis of A_{m-1}. Deterministic given (spec, seed).
SampledComplex sample_complex(const ChainSpec& spec, std::uint64_t seed);

/// Histogram of the degree-m Betti number over independent sampled
/// complexes. Requires 0 <= m < max degree and trials >= 1.
EmpiricalDist empirical_betti(const ChainSpec& spec, Index m, std::int64_t trials,
                              std::uint64_t seed);

/// Upper bound on the number of candidate matrices enumerate_betti_oracle
/// visits per pass: sum over stages l = 1..m+1 of q^(n_0 n_1 + ... +
/// n_{l-1} n_l).
BigInt enumeration_states(const ChainSpec& spec, Index m);

/// Exact law of the degree-m Betti number by brute force: walks every
/// boundary-map tuple stage by stage, filtering candidates by the boundary
/// condition and weighting each valid choice by 1 / (number of valid
/// choices at its stage). Uses no closed-form counting, so it is an
/// independent oracle for betti_distribution. Throws BudgetExceeded when
/// enumeration_states(spec, m) > budget.
DiscreteDist enumerate_betti_oracle(const ChainSpec& spec, Index m,
                                    const BigInt& budget = BigInt(1000000));

/// Total variation distance: half the L1 distance between the two mass
/// functions.
Rational tv_distance(const DiscreteDist& a, const DiscreteDist& b);

/// Same, with empirical frequencies taken as exact rationals. Throws
/// std::invalid_argument when the empirical side has no trials.
Rational tv_distance(const EmpiricalDist& a, const DiscreteDist& b);

}  // namespace qchain
