#include "qchain/sampler.hpp"

#include <limits>
#include <random>
#include <utility>

namespace qchain {

namespace {

/// Uniform residue in [0, q) by rejection from uniform 64-bit words, so no
/// residue is favored by the final modulo.
std::int64_t uniform_residue(std::mt19937_64& rng, std::int64_t q) {
  const std::uint64_t uq = static_cast<std::uint64_t>(q);
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  // 2^64 mod q; words in the trailing partial block are rejected.
  const std::uint64_t rem = (max % uq + 1) % uq;
  std::uint64_t w = rng();
  while (rem != 0 && w > max - rem) w = rng();
  return static_cast<std::int64_t>(w % uq);
}

/// Visits every rows x cols residue matrix exactly once, in odometer order.
/// A matrix with no cells is visited once.
template <typename Fn>
void for_each_matrix(const PrimeField& field, Index rows, Index cols, Fn&& fn) {
  MatX m = MatX::Zero(rows, cols);
  const Index cells = rows * cols;
  const std::int64_t q = field.order();
  while (true) {
    fn(m);
    Index c = 0;
    while (c < cells) {
      std::int64_t& x = m(c / cols, c % cols);
      if (x + 1 < q) {
        ++x;
        break;
      }
      x = 0;
      ++c;
    }
    if (c == cells) return;
  }
}

/// Walks stages stage..m+1 of the enumeration tree. prev is the boundary
/// map out of degree stage-1 (the empty 0 x n_0 map when stage is 1) and
/// weight is the probability of the prefix that produced it.
void accumulate(const ChainSpec& spec, Index m, Index stage, const MatrixFq& prev,
                const Rational& weight, std::map<Index, Rational>& out) {
  const Index rows = spec.dim(stage - 1);
  const Index cols = spec.dim(stage);
  std::int64_t valid = 0;
  for_each_matrix(spec.field, rows, cols, [&](const MatX& x) {
    if (mat_mul(prev, MatrixFq(spec.field, x)).is_zero()) ++valid;
  });
  // The zero matrix always satisfies the constraint, so valid >= 1.
  const Rational share = weight / Rational(valid);
  for_each_matrix(spec.field, rows, cols, [&](const MatX& x) {
    const MatrixFq cand(spec.field, x);
    if (!mat_mul(prev, cand).is_zero()) return;
    if (stage == m + 1) {
      out[nullity(prev) - rank(cand)] += share;
    } else {
      accumulate(spec, m, stage + 1, cand, share, out);
    }
  });
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t root, std::uint64_t index) {
  // splitmix64 on the (root, index) stream.
  std::uint64_t z = root + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SampledComplex sample_complex(const ChainSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const PrimeField& f = spec.field;
  std::vector<MatrixFq> boundaries;
  boundaries.reserve(static_cast<std::size_t>(spec.max_degree()));
  MatrixFq prev(f, 0, spec.dim(0));
  for (Index m = 1; m <= spec.max_degree(); ++m) {
    const MatrixFq basis = kernel_basis(prev);
    MatX coeff(basis.cols(), spec.dim(m));
    for (Index i = 0; i < coeff.rows(); ++i) {
      for (Index j = 0; j < coeff.cols(); ++j) {
        coeff(i, j) = uniform_residue(rng, f.order());
      }
    }
    MatrixFq drawn = mat_mul(basis, MatrixFq(f, std::move(coeff)));
    boundaries.push_back(drawn);
    prev = std::move(drawn);
  }
  return SampledComplex{spec, std::move(boundaries)};
}

EmpiricalDist empirical_betti(const ChainSpec& spec, Index m, std::int64_t trials,
                              std::uint64_t seed) {
  if (m < 0 || m >= spec.max_degree()) {
    throw std::out_of_range("empirical_betti: degree " + std::to_string(m) +
                            " outside [0, " + std::to_string(spec.max_degree()) + ")");
  }
  if (trials < 1) throw std::invalid_argument("empirical_betti: trials must be >= 1");
  EmpiricalDist out;
  out.trials = trials;
  out.seed = seed;
  for (std::int64_t i = 0; i < trials; ++i) {
    const SampledComplex c = sample_complex(spec, mix_seed(seed, static_cast<std::uint64_t>(i)));
    const Index nul = m == 0 ? spec.dim(0) : nullity(c.boundary(m));
    ++out.counts[nul - rank(c.boundary(m + 1))];
  }
  return out;
}

BigInt enumeration_states(const ChainSpec& spec, Index m) {
  if (m < 0 || m >= spec.max_degree()) {
    throw std::out_of_range("enumeration_states: degree " + std::to_string(m) +
                            " outside [0, " + std::to_string(spec.max_degree()) + ")");
  }
  const BigInt q(spec.field.order());
  BigInt total = 0;
  BigInt prefix = 1;
  for (Index l = 1; l <= m + 1; ++l) {
    prefix *= pow(q, static_cast<unsigned>(spec.dim(l - 1) * spec.dim(l)));
    total += prefix;
  }
  return total;
}

DiscreteDist enumerate_betti_oracle(const ChainSpec& spec, Index m, const BigInt& budget) {
  const BigInt states = enumeration_states(spec, m);
  if (states > budget) throw BudgetExceeded(states, budget);
  std::map<Index, Rational> out;
  const MatrixFq empty(spec.field, 0, spec.dim(0));
  accumulate(spec, m, 1, empty, Rational(1), out);
  return DiscreteDist(std::move(out));
}

Rational tv_distance(const DiscreteDist& a, const DiscreteDist& b) {
  Rational total = 0;
  for (const auto& [v, p] : a.probs()) total += abs(p - b.prob(v));
  for (const auto& [v, p] : b.probs()) {
    if (a.prob(v) == 0) total += p;
  }
  return total / 2;
}

Rational tv_distance(const EmpiricalDist& a, const DiscreteDist& b) {
  if (a.trials == 0) throw std::invalid_argument("tv_distance: empirical side has no trials");
  Rational total = 0;
  for (const auto& [v, c] : a.counts) total += abs(Rational(c, a.trials) - b.prob(v));
  for (const auto& [v, p] : b.probs()) {
    if (a.counts.find(v) == a.counts.end()) total += p;
  }
  return total / 2;
}

}  // namespace qchain
