#include "qchain/betti.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace qchain {

namespace {

// Law of nul(A_m) = dim ker(A_m), computed by pushing the kernel dimension
// forward one degree at a time. Given nul(A_l) = k, the rank of A_{l+1} is
// distributed as the rank of a uniform k x n_{l+1} matrix, and then
// nul(A_{l+1}) = n_{l+1} - rank. Degree 0 starts as a point mass at n_0
// since A_0 = 0.
std::map<Index, Rational> nullity_law(const ChainSpec& spec, Index m) {
  std::map<Index, Rational> law{{spec.dim(0), Rational(1)}};
  for (Index l = 1; l <= m; ++l) {
    const Index n = spec.dim(l);
    std::map<Index, Rational> next;
    for (const auto& [k, p] : law) {
      for (Index r = 0; r <= n; ++r) {
        const Rational pr = conditional_rank_prob(k, r, n, spec.field);
        if (pr == 0) continue;
        next[n - r] += p * pr;
      }
    }
    law = std::move(next);
  }
  return law;
}

}  // namespace

DiscreteDist rank_distribution(const ChainSpec& spec, Index m) {
  if (m > spec.max_degree()) {
    throw std::out_of_range("rank_distribution: degree " + std::to_string(m) +
                            " exceeds the top degree " + std::to_string(spec.max_degree()));
  }
  // The complex is bounded below: every map at or below degree 0 is zero.
  if (m <= 0) return DiscreteDist::point_mass(0);
  // rank(A_m) = n_m - nul(A_m).
  const Index n = spec.dim(m);
  std::map<Index, Rational> out;
  for (const auto& [k, p] : nullity_law(spec, m)) out[n - k] += p;
  return DiscreteDist(std::move(out));
}

DiscreteDist betti_distribution(const ChainSpec& spec, Index m) {
  if (m < 0) throw std::out_of_range("betti_distribution: negative degree");
  if (m >= spec.max_degree()) {
    throw std::invalid_argument(
        "betti_distribution: degree " + std::to_string(m) +
        " needs the boundary map out of degree " + std::to_string(m + 1) +
        "; append a trailing 0 to dims to make that map explicit");
  }
  const Index n_next = spec.dim(m + 1);
  std::map<Index, Rational> out;
  for (const auto& [k, p] : nullity_law(spec, m)) {
    // beta = k - rank(A_{m+1}) where the conditional rank law given nul = k
    // is conditional_rank_prob(k, ., n_next).
    for (Index b = 0; b <= k; ++b) {
      const Rational pr = conditional_rank_prob(k, k - b, n_next, spec.field);
      if (pr == 0) continue;
      out[b] += p * pr;
    }
  }
  return DiscreteDist(std::move(out));
}

Rational betti_moment(const ChainSpec& spec, Index m, Index t) {
  if (t < 0) throw std::invalid_argument("betti_moment: moment order must be non-negative");
  return betti_distribution(spec, m).moment(t);
}

}  // namespace qchain
