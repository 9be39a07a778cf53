// Finite compressions of operators on l^2(N).
//
// A TruncatedOperator is the N x N matrix of P X P, P the projection onto
// span{e_0, ..., e_{N-1}}.  Products of compressions agree with compressions
// of products only on columns away from the top of the range; those columns
// form the interior window [0, interior_window).

#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qsei {

template <typename Scalar>
class TruncatedOperator {
 public:
  using scalar_type = Scalar;
  using Sparse = Eigen::SparseMatrix<Scalar, Eigen::ColMajor>;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  TruncatedOperator() = default;
  TruncatedOperator(Sparse matrix, int interior_window)
      : matrix_(std::move(matrix)), interior_(std::clamp(interior_window, 0, static_cast<int>(matrix_.cols()))) {
    if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("TruncatedOperator must be square");
  }

  static TruncatedOperator identity(int dim, int interior_window) {
    Sparse id(dim, dim);
    id.setIdentity();
    return {std::move(id), interior_window};
  }
  static TruncatedOperator zero(int dim, int interior_window) { return {Sparse(dim, dim), interior_window}; }

  /// Diagonal operator with the given entries.
  static TruncatedOperator diagonal(const std::vector<Scalar>& d, int interior_window) {
    const int n = static_cast<int>(d.size());
    std::vector<Eigen::Triplet<Scalar>> t;
    t.reserve(d.size());
    for (int i = 0; i < n; ++i)
      if (d[i] != Scalar(0)) t.emplace_back(i, i, d[i]);
    Sparse m(n, n);
    m.setFromTriplets(t.begin(), t.end());
    return {std::move(m), interior_window};
  }

  /// Weighted shift e_n -> w_n e_{n-step} (step > 0 lowers, step < 0 raises);
  /// components leaving the range are dropped.
  static TruncatedOperator weighted_shift(const std::vector<Scalar>& w, int step, int interior_window) {
    const int n = static_cast<int>(w.size());
    std::vector<Eigen::Triplet<Scalar>> t;
    for (int col = 0; col < n; ++col) {
      const int row = col - step;
      if (row < 0 || row >= n || w[col] == Scalar(0)) continue;
      t.emplace_back(row, col, w[col]);
    }
    Sparse m(n, n);
    m.setFromTriplets(t.begin(), t.end());
    return {std::move(m), interior_window};
  }

  int dim() const { return static_cast<int>(matrix_.rows()); }
  int interior_window() const { return interior_; }
  const Sparse& matrix() const { return matrix_; }
  Dense dense() const { return Dense(matrix_); }

  Scalar entry(int row, int col) const { return matrix_.coeff(row, col); }

  /// X e_col as a dense vector.
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> apply(int col) const {
    return Eigen::Matrix<Scalar, Eigen::Dynamic, 1>(matrix_.col(col));
  }

  TruncatedOperator adjoint() const { return {Sparse(matrix_.adjoint()), interior_}; }

  friend TruncatedOperator operator*(const TruncatedOperator& x, const TruncatedOperator& y) {
    check_dims(x, y);
    return {Sparse(x.matrix_ * y.matrix_), std::min(x.interior_, y.interior_)};
  }
  friend TruncatedOperator operator+(const TruncatedOperator& x, const TruncatedOperator& y) {
    check_dims(x, y);
    return {Sparse(x.matrix_ + y.matrix_), std::min(x.interior_, y.interior_)};
  }
  friend TruncatedOperator operator-(const TruncatedOperator& x, const TruncatedOperator& y) {
    check_dims(x, y);
    return {Sparse(x.matrix_ - y.matrix_), std::min(x.interior_, y.interior_)};
  }
  friend TruncatedOperator operator*(const Scalar& s, const TruncatedOperator& x) {
    return {Sparse(s * x.matrix_), x.interior_};
  }

 private:
  static void check_dims(const TruncatedOperator& x, const TruncatedOperator& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("TruncatedOperator dimension mismatch");
  }

  Sparse matrix_;
  int interior_ = 0;
};

using Operator = TruncatedOperator<std::complex<double>>;

/// max over interior columns of || (x - y) e_j ||_2.
template <typename Scalar>
double interior_residual(const TruncatedOperator<Scalar>& x, const TruncatedOperator<Scalar>& y) {
  const auto diff = (x - y);
  const int window = diff.interior_window();
  double worst = 0.0;
  for (int j = 0; j < window; ++j) worst = std::max(worst, static_cast<double>(diff.matrix().col(j).norm()));
  return worst;
}

/// Lower bandwidth and upper bandwidth of the stored pattern.
template <typename Scalar>
std::pair<int, int> bandwidths(const TruncatedOperator<Scalar>& x) {
  int lower = 0, upper = 0;
  const auto& m = x.matrix();
  for (int col = 0; col < m.outerSize(); ++col)
    for (typename TruncatedOperator<Scalar>::Sparse::InnerIterator it(m, col); it; ++it) {
      if (it.value() == Scalar(0)) continue;
      lower = std::max(lower, static_cast<int>(it.row()) - col);
      upper = std::max(upper, col - static_cast<int>(it.row()));
    }
  return {lower, upper};
}

/// Number of singular values above tol * (largest singular value).
template <typename Derived>
int numeric_rank(const Eigen::MatrixBase<Derived>& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<typename Derived::PlainObject> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) rank += s(i) > tol * s(0) ? 1 : 0;
  return rank;
}

}  // namespace qsei
