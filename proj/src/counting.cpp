#include "qchain/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qchain {

namespace {

void require_non_negative(Index value, const char* name) {
  if (value < 0) {
    throw std::invalid_argument(std::string(name) + " must be non-negative, got " +
                                std::to_string(value));
  }
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw std::logic_error("counting: expected exact division");
  return quot;
}

}  // namespace

BigInt count_independent_tuples(Index n, Index k, const PrimeField& field) {
  require_non_negative(n, "n");
  require_non_negative(k, "k");
  if (k > n) return 0;
  const BigInt q = field.order();
  const BigInt qn = pow(q, static_cast<unsigned>(n));
  BigInt result = 1;
  BigInt qj = 1;  // q^j
  for (Index j = 0; j < k; ++j) {
    result *= qn - qj;
    qj *= q;
  }
  return result;
}

BigInt q_binomial(Index n, Index k, const PrimeField& field) {
  require_non_negative(n, "n");
  require_non_negative(k, "k");
  if (k > n) return 0;
  return exact_quotient(count_independent_tuples(n, k, field),
                        count_independent_tuples(k, k, field));
}

BigInt count_rank_matrices(Index rows, Index cols, Index r, const PrimeField& field) {
  require_non_negative(rows, "rows");
  require_non_negative(cols, "cols");
  require_non_negative(r, "r");
  if (r > std::min(rows, cols)) return 0;
  return exact_quotient(count_independent_tuples(rows, r, field) *
                            count_independent_tuples(cols, r, field),
                        count_independent_tuples(r, r, field));
}

Rational conditional_rank_prob(Index k, Index r, Index n_next, const PrimeField& field) {
  require_non_negative(k, "k");
  require_non_negative(n_next, "n_next");
  if (r < 0 || r > std::min(k, n_next)) return Rational(0);
  const BigInt total = pow(BigInt(field.order()), static_cast<unsigned>(k * n_next));
  return Rational(count_rank_matrices(k, n_next, r, field), total);
}

Index conditional_rank_limit(Index k, Index n_next) {
  require_non_negative(k, "k");
  require_non_negative(n_next, "n_next");
  return std::min(k, n_next);
}

}  // namespace qchain
