#pragma once

#include <Eigen/Dense>

#include "qchain/prime_field.hpp"

namespace qchain {

static_assert(sizeof(Index) == sizeof(Eigen::Index));

/// Dense storage for residue matrices: row-major, one int64 per entry.
using MatX = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Dense matrix over F_q. Entries are canonical residues in [0, q).
///
/// Zero rows or columns are legal: a 0 x n matrix is the unique map onto the
/// zero space and an n x 0 matrix the unique map out of it.
class MatrixFq {
 public:
  /// Zero matrix of the given shape.
  MatrixFq(PrimeField field, Index rows, Index cols)
      : field_(field), mat_(MatX::Zero(rows, cols)) {}

  /// Wraps an entry matrix, reducing every entry into [0, q).
  MatrixFq(PrimeField field, MatX entries)
      : field_(field), mat_(std::move(entries)) {
    mat_ = mat_.unaryExpr([this](std::int64_t x) { return field_.reduce(x); });
  }

  static MatrixFq identity(PrimeField field, Index n) {
    return MatrixFq(field, MatX(MatX::Identity(n, n)));
  }

  Index rows() const { return mat_.rows(); }
  Index cols() const { return mat_.cols(); }
  const PrimeField& field() const { return field_; }
  const MatX& mat() const { return mat_; }
  std::int64_t operator()(Index i, Index j) const { return mat_(i, j); }

  bool is_zero() const { return (mat_.array() == 0).all(); }

  bool operator==(const MatrixFq& o) const {
    return field_ == o.field_ && mat_.rows() == o.mat_.rows() &&
           mat_.cols() == o.mat_.cols() && (mat_.array() == o.mat_.array()).all();
  }
  bool operator!=(const MatrixFq& o) const { return !(*this == o); }

 private:
  PrimeField field_;
  MatX mat_;
};

/// Product reduced mod q. Throws on shape or field mismatch.
MatrixFq mat_mul(const MatrixFq& a, const MatrixFq& b);

/// F_q-rank by Gaussian elimination; an empty matrix has rank 0.
Index rank(const MatrixFq& m);

/// cols - rank.
Index nullity(const MatrixFq& m);

/// A cols x k matrix whose columns are a basis of ker(m), k = nullity(m).
/// Basis vectors are read off the reduced row echelon form, one per free
/// column in increasing column order, so the result is deterministic.
MatrixFq kernel_basis(const MatrixFq& m);

}  // namespace qchain
