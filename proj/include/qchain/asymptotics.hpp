#pragma once

#include <span>
#include <vector>

#include "qchain/counting.hpp"

namespace qchain {

constexpr Index positive_part(Index x) { return x > 0 ? x : 0; }

/// Limiting (q -> infinity) kernel dimensions i*_0, ..., i*_j for the given
/// shape: i*_0 = n_0 and i*_l = (n_l - i*_{l-1})_+. Entries must be >= 0 and
/// 0 <= j <= max degree; violations throw.
std::vector<Index> limiting_nullities(std::span<const Index> dims, Index j);

/// Limiting Betti number in degree m, for 0 <= m < max degree:
/// (i*_m - n_{m+1})_+.
Index limiting_betti(std::span<const Index> dims, Index m);

/// Limiting rank of the boundary map out of degree m, 1 <= m <= max degree:
/// n_m minus the limiting nullity in degree m.
Index limiting_rank(std::span<const Index> dims, Index m);

/// t-th power of the limiting Betti number; the q -> infinity law is a point
/// mass, so this is its t-th moment. Requires t >= 0.
BigInt limiting_moment(std::span<const Index> dims, Index m, Index t);

struct LimitReport {
  Index degree = 0;
  Index betti = 0;
  std::vector<Index> nullities;  // limiting nullities, degrees 0..degree
  Index rank = 0;                // = dims[degree] - nullities[degree]
};

LimitReport limit_report(std::span<const Index> dims, Index m);

}  // namespace qchain
