#pragma once

#include <cstddef>
#include <cstdint>

namespace qchain {

using Index = std::ptrdiff_t;

bool is_prime(std::int64_t n);

/// The coefficient field F_q, q prime. Arithmetic acts on canonical residues
/// in [0, q).
///
/// The order is validated by trial division at construction and capped at
/// 2^31 - 1 so that a product of two residues always fits a signed 64-bit
/// word.
class PrimeField {
 public:
  static constexpr std::int64_t kMaxOrder = (std::int64_t{1} << 31) - 1;

  explicit PrimeField(std::int64_t order);

  std::int64_t order() const { return order_; }

  /// Canonical residue of x, correct for negative x.
  std::int64_t reduce(std::int64_t x) const {
    const std::int64_t r = x % order_;
    return r < 0 ? r + order_ : r;
  }

  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % order_; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % order_; }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : order_ - a; }

  /// Multiplicative inverse of a nonzero residue, by extended Euclid.
  std::int64_t inverse(std::int64_t a) const;

  bool operator==(const PrimeField& other) const { return order_ == other.order_; }
  bool operator!=(const PrimeField& other) const { return order_ != other.order_; }

 private:
  std::int64_t order_;
};

}  // namespace qchain
