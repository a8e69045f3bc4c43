#pragma once

#include "qchain/chain_spec.hpp"
#include "qchain/counting.hpp"
#include "qchain/discrete_dist.hpp"

namespace qchain {

/// Exact law of rank(A_m) for a uniform random chain complex with the given
/// shape. The complex is bounded below, so every m <= 0 yields a point mass
/// at rank 0. Throws std::out_of_range when m > max_degree.
DiscreteDist rank_distribution(const ChainSpec& spec, Index m);

/// Exact law of the Betti number beta_m = nul(A_m) - rank(A_{m+1}).
///
/// Defined for 0 <= m < max_degree; beta at the top degree depends on a map
/// the shape does not contain, so m == max_degree is rejected with a message
/// that says to append a trailing 0 to dims instead. Negative m throws
/// std::out_of_range.
DiscreteDist betti_distribution(const ChainSpec& spec, Index m);

/// t-th moment of beta_m, exact. t < 0 throws std::invalid_argument.
Rational betti_moment(const ChainSpec& spec, Index m, Index t);

}  // namespace qchain
