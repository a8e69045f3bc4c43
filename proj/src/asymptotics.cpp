#include "qchain/asymptotics.hpp"

#include <stdexcept>
#include <string>

namespace qchain {

namespace {

void check_dims(std::span<const Index> dims) {
  if (dims.empty()) throw std::invalid_argument("dims must be non-empty");
  for (const Index n : dims) {
    if (n < 0) throw std::invalid_argument("dims entries must be non-negative");
  }
}

}  // namespace

std::vector<Index> limiting_nullities(std::span<const Index> dims, Index j) {
  check_dims(dims);
  const Index max_degree = static_cast<Index>(dims.size()) - 1;
  if (j < 0 || j > max_degree) {
    throw std::out_of_range("limiting_nullities: degree " + std::to_string(j) +
                            " outside [0, " + std::to_string(max_degree) + "]");
  }
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(j) + 1);
  out.push_back(dims[0]);
  for (Index l = 1; l <= j; ++l) {
    out.push_back(positive_part(dims[static_cast<std::size_t>(l)] - out.back()));
  }
  return out;
}

Index limiting_betti(std::span<const Index> dims, Index m) {
  check_dims(dims);
  const Index max_degree = static_cast<Index>(dims.size()) - 1;
  if (m < 0 || m >= max_degree) {
    throw std::out_of_range("limiting_betti: degree " + std::to_string(m) +
                            " outside [0, " + std::to_string(max_degree) + ")");
  }
  const std::vector<Index> ns = limiting_nullities(dims, m);
  return positive_part(ns.back() - dims[static_cast<std::size_t>(m) + 1]);
}

Index limiting_rank(std::span<const Index> dims, Index m) {
  check_dims(dims);
  const Index max_degree = static_cast<Index>(dims.size()) - 1;
  if (m < 1 || m > max_degree) {
    throw std::out_of_range("limiting_rank: degree " + std::to_string(m) +
                            " outside [1, " + std::to_string(max_degree) + "]");
  }
  const std::vector<Index> ns = limiting_nullities(dims, m);
  return dims[static_cast<std::size_t>(m)] - ns.back();
}

BigInt limiting_moment(std::span<const Index> dims, Index m, Index t) {
  if (t < 0) throw std::invalid_argument("limiting_moment: moment order must be non-negative");
  return pow(BigInt(limiting_betti(dims, m)), static_cast<unsigned>(t));
}

LimitReport limit_report(std::span<const Index> dims, Index m) {
  LimitReport r;
  r.degree = m;
  r.betti = limiting_betti(dims, m);
  r.nullities = limiting_nullities(dims, m);
  r.rank = dims[static_cast<std::size_t>(m)] - r.nullities.back();
  return r;
}

}  // namespace qchain
