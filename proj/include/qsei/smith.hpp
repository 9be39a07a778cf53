// Smith normal form of integer matrices with explicit unimodular transforms.

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <numeric>
#include <tuple>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsei {

template <typename Int>
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Int>
struct SmithDecomposition {
  IntMatrix<Int> U;  ///< m x m, unimodular
  IntMatrix<Int> D;  ///< m x n, diagonal, d_i | d_{i+1}, d_i >= 0
  IntMatrix<Int> V;  ///< n x n, unimodular
  std::vector<Int> diagonal;  ///< nonzero invariant factors
};

/// Finitely generated abelian group Z^free_rank + sum Z/torsion[i].
template <typename Int>
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;  ///< each > 1, successively dividing

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

template <typename Int>
Int abs_value(const Int& x) {
  return x < 0 ? -x : x;
}

namespace detail {

// g = x a + y b with g >= 0.
template <typename Int>
std::tuple<Int, Int, Int> extended_gcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const Int t = a / b;
    std::tie(a, b) = std::make_pair(b, a - t * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - t * y1);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

// Replace rows (i, j) of M by (x Mi + y Mj, -b Mi + a Mj); determinant x a + y b = 1.
template <typename Derived, typename Int>
void mix_rows(Eigen::MatrixBase<Derived>& M, Eigen::Index i, Eigen::Index j, Int x, Int y, Int a, Int b) {
  const auto ri = M.row(i).eval();
  const auto rj = M.row(j).eval();
  M.row(i) = x * ri + y * rj;
  M.row(j) = -b * ri + a * rj;
}

template <typename Derived, typename Int>
void mix_cols(Eigen::MatrixBase<Derived>& M, Eigen::Index i, Eigen::Index j, Int x, Int y, Int a, Int b) {
  const auto ci = M.col(i).eval();
  const auto cj = M.col(j).eval();
  M.col(i) = x * ci + y * cj;
  M.col(j) = -b * ci + a * cj;
}

}  // namespace detail

/// U * A * V = D.
template <typename Int>
SmithDecomposition<Int> smith_normal_form(const IntMatrix<Int>& A) {
  using detail::extended_gcd;
  const Eigen::Index m = A.rows(), n = A.cols();
  SmithDecomposition<Int> s{IntMatrix<Int>::Identity(m, m), A, IntMatrix<Int>::Identity(n, n), {}};
  auto& D = s.D;

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    // pivot: smallest nonzero magnitude in the trailing block
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j)
        if (D(i, j) != 0 && (pi < 0 || abs_value(D(i, j)) < abs_value(D(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    D.row(t).swap(D.row(pi));
    s.U.row(t).swap(s.U.row(pi));
    D.col(t).swap(D.col(pj));
    s.V.col(t).swap(s.V.col(pj));

    for (;;) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        if (D(i, t) % D(t, t) == 0) {
          const Int f = D(i, t) / D(t, t);
          D.row(i) -= f * D.row(t);
          s.U.row(i) -= f * s.U.row(t);
          continue;
        }
        // strictly shrinks |D(t, t)|
        auto [g, x, y] = extended_gcd(D(t, t), D(i, t));
        const Int a = D(t, t) / g, b = D(i, t) / g;
        detail::mix_rows(D, t, i, x, y, a, b);
        detail::mix_rows(s.U, t, i, x, y, a, b);
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        if (D(t, j) % D(t, t) == 0) {
          const Int f = D(t, j) / D(t, t);
          D.col(j) -= f * D.col(t);
          s.V.col(j) -= f * s.V.col(t);
          continue;
        }
        auto [g, x, y] = extended_gcd(D(t, t), D(t, j));
        const Int a = D(t, t) / g, b = D(t, j) / g;
        detail::mix_cols(D, t, j, x, y, a, b);
        detail::mix_cols(s.V, t, j, x, y, a, b);
      }
      for (Eigen::Index i = t + 1; i < m && clean; ++i) clean = D(i, t) == 0;
      if (!clean) continue;

      // the pivot must divide the whole trailing block
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      D.row(t) += D.row(bad);
      s.U.row(t) += s.U.row(bad);
    }
    if (D(t, t) < 0) {
      D.row(t) = -D.row(t);
      s.U.row(t) = -s.U.row(t);
    }
    s.diagonal.push_back(D(t, t));
  }
  return s;
}

/// Z^rows / image(A).
template <typename Int>
AbelianGroup<Int> cokernel(const IntMatrix<Int>& A) {
  const auto s = smith_normal_form<Int>(A);
  AbelianGroup<Int> g;
  g.free_rank = static_cast<int>(A.rows()) - static_cast<int>(s.diagonal.size());
  for (const Int& d : s.diagonal)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

/// Free rank of ker(A : Z^cols -> Z^rows).
template <typename Int>
int kernel_rank(const IntMatrix<Int>& A) {
  return static_cast<int>(A.cols()) - static_cast<int>(smith_normal_form<Int>(A).diagonal.size());
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Int>
Int integer_determinant(IntMatrix<Int> M) {
  const Eigen::Index n = M.rows();
  if (n != M.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      M.row(k).swap(M.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

}  // namespace qsei
