#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "qchain/prime_field.hpp"

namespace qchain {

/// Exact non-negative counts; never overflows.
using BigInt = boost::multiprecision::cpp_int;

/// Exact probability; always stored in lowest terms with positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

/// The number of ordered, linearly independent k-tuples of vectors in
/// F_q^n: prod_{j<k} (q^n - q^j). 1 when k = 0, 0 when k > n.
BigInt count_independent_tuples(Index n, Index k, const PrimeField& field);

/// The number of k-dimensional subspaces of F_q^n (the q-binomial
/// coefficient), computed by exact big-integer cancellation. 0 when k > n.
BigInt q_binomial(Index n, Index k, const PrimeField& field);

/// The number of rows x cols matrices over F_q of rank r:
/// prod_{j<r} (q^rows - q^j)(q^cols - q^j) / (q^r - q^j).
/// 1 when r = 0, 0 when r > min(rows, cols).
BigInt count_rank_matrices(Index rows, Index cols, Index r, const PrimeField& field);

/// Probability that the next boundary map has rank r, given that it must map
/// an n_next-dimensional domain into the k-dimensional kernel of the previous
/// map: q^{-k n_next} * count_rank_matrices(k, n_next, r, q).
///
/// Impossible ranks (r < 0 or r > min(k, n_next)) carry probability 0; a
/// negative k or n_next is malformed and throws.
Rational conditional_rank_prob(Index k, Index r, Index n_next, const PrimeField& field);

/// The rank at which the conditional rank distribution concentrates as
/// q grows without bound: min(k, n_next).
Index conditional_rank_limit(Index k, Index n_next);

}  // namespace qchain
