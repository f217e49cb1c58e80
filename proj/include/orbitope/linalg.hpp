#pragma once

// Exact Gauss-Jordan routines. Templated on the scalar, but only meaningful
// for exact fields: pivots are tested against zero without a threshold.

#include "orbitope/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace orbitope::linalg {

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> reduced;          // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

template <typename Derived>
Echelon<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < a.rows(); ++r) {
      if (a(r, col) != Scalar(0)) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    a.row(row) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == Scalar(0)) continue;
      const Scalar f = a(r, col);
      a.row(r) -= f * a.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<Eigen::Index>(reduced_row_echelon(m).pivots.size());
}

/// Basis of {v : m v = 0}, one column per basis vector.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return Matrix<Scalar>::Identity(n, n);
  const auto ech = reduced_row_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    basis(f, static_cast<Eigen::Index>(k)) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      basis(ech.pivots[r], static_cast<Eigen::Index>(k)) = -ech.reduced(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

/// Inverse of a square matrix; std::nullopt when singular.
template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  auto ech = reduced_row_echelon(aug);
  if (static_cast<Eigen::Index>(ech.pivots.size()) < n || (n > 0 && ech.pivots[n - 1] >= n))
    return std::nullopt;
  return Matrix<Scalar>(ech.reduced.rightCols(n));
}

/// Greedy maximal linearly independent subset of the columns, in input order.
template <typename Derived>
std::vector<Eigen::Index> independent_columns(const Eigen::MatrixBase<Derived>& m) {
  if (m.cols() == 0 || m.rows() == 0) return {};
  const auto ech = reduced_row_echelon(m);
  return ech.pivots;
}

/// Orthogonal complement of span(columns of basis) under the Gram matrix.
template <typename DerivedB, typename DerivedG>
Matrix<typename DerivedB::Scalar> orthogonal_complement(const Eigen::MatrixBase<DerivedB>& basis,
                                                        const Eigen::MatrixBase<DerivedG>& gram) {
  using Scalar = typename DerivedB::Scalar;
  if (basis.cols() == 0) return Matrix<Scalar>::Identity(gram.rows(), gram.rows());
  const Matrix<Scalar> constraints = basis.transpose() * gram;
  return nullspace(constraints);
}

/// Orthogonal projection of v onto span(columns of basis) under the Gram matrix.
template <typename DerivedB, typename DerivedG, typename DerivedV>
Vector<typename DerivedB::Scalar> project(const Eigen::MatrixBase<DerivedB>& basis,
                                          const Eigen::MatrixBase<DerivedG>& gram,
                                          const Eigen::MatrixBase<DerivedV>& v) {
  using Scalar = typename DerivedB::Scalar;
  if (basis.cols() == 0) return Vector<Scalar>::Zero(v.size());
  const Matrix<Scalar> bg = basis.transpose() * gram;
  const Matrix<Scalar> normal = bg * basis;
  const auto inv = inverse(normal);
  if (!inv) throw std::invalid_argument("project: basis columns are dependent");
  const Vector<Scalar> coeffs = (*inv) * (bg * v);
  return basis * coeffs;
}

}  // namespace orbitope::linalg
