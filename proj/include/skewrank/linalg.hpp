#pragma once

// Exact dense linear algebra over a field scalar (Rational, or any type with
// exact + - * / and ==). Eigen supplies storage and views; elimination is done
// here because Eigen's decompositions rely on magnitude thresholds.

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

namespace skewrank {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
inline bool is_zero_scalar(const Scalar& x) {
  return x == Scalar(0);
}

template <typename Scalar>
struct EchelonForm {
  DenseMatrix<Scalar> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row echelon form by Gauss-Jordan elimination. Pivots are the first
/// nonzero entry in each column scanned left to right, so the result is
/// canonical for the row space.
template <typename Derived>
EchelonForm<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  EchelonForm<Scalar> out;
  out.reduced = m;
  auto& a = out.reduced;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero_scalar(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j)
      if (!is_zero_scalar(a(r, j))) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero_scalar(a(i, c))) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!is_zero_scalar(a(r, j))) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Basis of the right kernel, one column per free variable, in increasing
/// order of the free column index.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    const auto col = static_cast<Eigen::Index>(k);
    basis(f, col) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      basis(ech.pivots[r], col) = -ech.reduced(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  DenseMatrix<Scalar> a = m;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && is_zero_scalar(a(p, c))) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = Scalar(1) / a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero_scalar(a(i, c))) continue;
      const Scalar f = a(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

template <typename Derived>
DenseMatrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  DenseMatrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = DenseMatrix<Scalar>::Identity(n, n);
  const auto ech = rref(aug);
  if (ech.rank() < n || ech.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw std::domain_error("matrix is singular");
  return ech.reduced.rightCols(n);
}

/// Pfaffian of an even-order skew-symmetric matrix by first-row expansion,
///   Pf(A) = sum_{j>=2} (-1)^j a_{1j} Pf(A without rows/columns 1, j),
/// memoized on the remaining index set.
template <typename Derived>
typename Derived::Scalar pfaffian(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("pfaffian of non-square matrix");
  if (n % 2 != 0) throw std::invalid_argument("pfaffian of odd-order matrix");
  if (n > 62) throw std::invalid_argument("pfaffian: order too large");
  std::unordered_map<std::uint64_t, Scalar> memo;
  auto rec = [&](auto&& self, std::uint64_t mask) -> Scalar {
    if (mask == 0) return Scalar(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int first = __builtin_ctzll(mask);
    const std::uint64_t rest = mask & (mask - 1);
    Scalar sum(0);
    int position = 1;
    for (std::uint64_t m = rest; m != 0; m &= m - 1, ++position) {
      const int j = __builtin_ctzll(m);
      const Scalar& entry = a(first, j);
      if (is_zero_scalar(entry)) continue;
      const Scalar sub = self(self, rest & ~(std::uint64_t{1} << j));
      if (position % 2 == 1)
        sum += entry * sub;
      else
        sum -= entry * sub;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return rec(rec, full);
}

}  // namespace skewrank
