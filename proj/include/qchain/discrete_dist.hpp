#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "qchain/counting.hpp"

namespace qchain {

/// A finite distribution on non-negative integers with exact probabilities.
///
/// Construction checks that the mass is exactly 1; zero-probability outcomes
/// are dropped, so iteration visits the support only.
class DiscreteDist {
 public:
  explicit DiscreteDist(std::map<Index, Rational> probs) : probs_(std::move(probs)) {
    Rational total = 0;
    for (auto it = probs_.begin(); it != probs_.end();) {
      if (it->first < 0) throw std::logic_error("DiscreteDist: negative outcome");
      if (it->second < 0) throw std::logic_error("DiscreteDist: negative probability");
      total += it->second;
      if (it->second == 0) {
        it = probs_.erase(it);
      } else {
        ++it;
      }
    }
    if (total != 1) throw std::logic_error("DiscreteDist: probabilities do not sum to 1");
  }

  static DiscreteDist point_mass(Index v) { return DiscreteDist({{v, Rational(1)}}); }

  const std::map<Index, Rational>& probs() const { return probs_; }

  Rational prob(Index v) const {
    const auto it = probs_.find(v);
    return it == probs_.end() ? Rational(0) : it->second;
  }

  /// sum_v v^t p(v); the zeroth moment is exactly 1.
  Rational moment(Index t) const {
    if (t < 0) throw std::invalid_argument("DiscreteDist: moment order must be non-negative");
    Rational sum = 0;
    for (const auto& [v, p] : probs_) {
      sum += Rational(pow(BigInt(v), static_cast<unsigned>(t))) * p;
    }
    return sum;
  }

  Rational mean() const { return moment(1); }

  bool operator==(const DiscreteDist& o) const { return probs_ == o.probs_; }
  bool operator!=(const DiscreteDist& o) const { return probs_ != o.probs_; }

 private:
  std::map<Index, Rational> probs_;
};

}  // namespace qchain
