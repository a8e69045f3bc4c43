#include "qchain/matrix_fq.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qchain {

namespace {

std::string shape_str(const MatrixFq& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Reduce w to reduced row echelon form in place and return the pivot
// columns. The pivot is always the first nonzero entry at or below the
// current row, in column order.
std::vector<Index> rref_in_place(MatX& w, const PrimeField& f) {
  std::vector<Index> pivots;
  const auto reduce = [&f](std::int64_t x) { return f.reduce(x); };
  Index pr = 0;
  for (Index c = 0; c < w.cols() && pr < w.rows(); ++c) {
    Index p = pr;
    while (p < w.rows() && w(p, c) == 0) ++p;
    if (p == w.rows()) continue;
    if (p != pr) w.row(pr).swap(w.row(p));
    const std::int64_t inv = f.inverse(w(pr, c));
    if (inv != 1) w.row(pr) = (w.row(pr) * inv).unaryExpr(reduce);
    for (Index i = 0; i < w.rows(); ++i) {
      if (i == pr || w(i, c) == 0) continue;
      const std::int64_t factor = w(i, c);
      w.row(i) = (w.row(i) - factor * w.row(pr)).unaryExpr(reduce);
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

}  // namespace

MatrixFq mat_mul(const MatrixFq& a, const MatrixFq& b) {
  if (a.field() != b.field()) {
    throw std::invalid_argument("mat_mul: field mismatch: F_" + std::to_string(a.field().order()) +
                                " vs F_" + std::to_string(b.field().order()));
  }
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: dimension mismatch: " + shape_str(a) + " times " +
                                shape_str(b));
  }
  const std::int64_t q = a.field().order();
  MatX out = MatX::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        out(i, j) = (out(i, j) + aik * b(k, j)) % q;
      }
    }
  }
  return MatrixFq(a.field(), std::move(out));
}

Index rank(const MatrixFq& m) {
  MatX w = m.mat();
  return static_cast<Index>(rref_in_place(w, m.field()).size());
}

Index nullity(const MatrixFq& m) { return m.cols() - rank(m); }

MatrixFq kernel_basis(const MatrixFq& m) {
  MatX w = m.mat();
  const PrimeField& f = m.field();
  const std::vector<Index> pivots = rref_in_place(w, f);
  const Index k = m.cols() - static_cast<Index>(pivots.size());
  MatX basis = MatX::Zero(m.cols(), k);
  Index out_col = 0;
  std::size_t next_pivot = 0;
  for (Index c = 0; c < m.cols(); ++c) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    // Free column c: set its coordinate to 1 and solve the pivot rows.
    basis(c, out_col) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], out_col) = f.neg(w(static_cast<Index>(r), c));
    }
    ++out_col;
  }
  return MatrixFq(f, std::move(basis));
}

}  // namespace qchain
