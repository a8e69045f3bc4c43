#include "qchain/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace qchain {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t order) : order_(order) {
  if (order > kMaxOrder) {
    throw std::invalid_argument("PrimeField: order " + std::to_string(order) +
                                " exceeds the supported maximum " + std::to_string(kMaxOrder));
  }
  if (!is_prime(order)) {
    throw std::invalid_argument("PrimeField: order " + std::to_string(order) + " is not prime");
  }
}

std::int64_t PrimeField::inverse(std::int64_t a) const {
  if (a == 0) throw std::domain_error("PrimeField: zero has no inverse");
  // Extended Euclid on (a, q); q prime makes every nonzero residue a unit.
  std::int64_t r0 = a, r1 = order_;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - quot * s1;
    s0 = s1;
    s1 = tmp;
  }
  return reduce(s0);
}

}  // namespace qchain
