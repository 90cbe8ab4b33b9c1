#pragma once

// Exact dense linear algebra over a field, on Eigen matrices.  Every routine
// is templated on the scalar; the only requirements are exact equality with
// Scalar(0), the field operations, and that dividing by a non-invertible
// element throws std::domain_error (zero divisors are then skipped as
// pivots).

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <vector>

#include "skeinrep/cyclo.hpp"

namespace skeinrep {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RepMatrix = DenseMatrix<CycloScalar>;
using CycloVector = DenseVector<CycloScalar>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

template <class Scalar>
bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}
inline bool is_zero(const CycloScalar& x) { return x.is_zero(); }

template <class Scalar>
std::optional<Scalar> try_inverse(const Scalar& x) {
  try {
    return Scalar(1) / x;
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}
inline std::optional<CycloScalar> try_inverse(const CycloScalar& x) {
  try {
    return x.inverse();
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Reduced row echelon form in place; returns the pivot columns.
template <class Scalar>
std::vector<Eigen::Index> rref_in_place(DenseMatrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    std::optional<Scalar> inv;
    for (Eigen::Index i = row; i < m.rows(); ++i) {
      if (detail::is_zero(m(i, col))) continue;
      inv = detail::try_inverse(m(i, col));
      if (inv) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    for (Eigen::Index j = col; j < m.cols(); ++j)
      if (!detail::is_zero(m(row, j))) m(row, j) *= *inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || detail::is_zero(m(i, col))) continue;
      const Scalar f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j)
        if (!detail::is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Scalar>
Eigen::Index rank(DenseMatrix<Scalar> m) {
  return static_cast<Eigen::Index>(rref_in_place(m).size());
}

/// Columns form a basis of {x : m x = 0}.
template <class Scalar>
DenseMatrix<Scalar> nullspace(DenseMatrix<Scalar> m) {
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  const Eigen::Index n = m.cols();
  DenseMatrix<Scalar> basis(n, n - static_cast<Eigen::Index>(pivots.size()));
  basis.setConstant(Scalar(0));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!detail::is_zero(m(i, free))) basis(pivots[i], k) = -m(i, free);
    ++k;
  }
  return basis;
}

/// Solves a x = b for square nonsingular a.
template <class Scalar>
DenseMatrix<Scalar> solve(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows())
    throw DimensionMismatch("solve: shapes do not match");
  const Eigen::Index n = a.rows();
  DenseMatrix<Scalar> aug(n, n + b.cols());
  aug << a, b;
  const auto pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1))
    throw SingularMatrix("solve: matrix is singular");
  return aug.rightCols(b.cols());
}

template <class Scalar>
DenseMatrix<Scalar> inverse(const DenseMatrix<Scalar>& a) {
  DenseMatrix<Scalar> id(a.rows(), a.rows());
  id.setConstant(Scalar(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i) id(i, i) = Scalar(1);
  return solve(a, id);
}

template <class Scalar>
bool is_diagonal(const DenseMatrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && !detail::is_zero(m(i, j))) return false;
  return true;
}

template <class Scalar>
bool is_zero_matrix(const DenseMatrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!detail::is_zero(m.data()[i])) return false;
  return true;
}

template <class Scalar>
DenseMatrix<Scalar> identity_matrix(Eigen::Index n) {
  DenseMatrix<Scalar> id(n, n);
  id.setConstant(Scalar(0));
  for (Eigen::Index i = 0; i < n; ++i) id(i, i) = Scalar(1);
  return id;
}

/// Divides by the first nonzero entry in column-major order, so matrices
/// that agree up to a scalar normalize to the same matrix.
template <class Scalar>
DenseMatrix<Scalar> normalize_projective(const DenseMatrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Scalar& x = m.data()[i];
    if (detail::is_zero(x)) continue;
    const auto inv = detail::try_inverse(x);
    if (!inv) continue;
    DenseMatrix<Scalar> out = m;
    for (Eigen::Index k = 0; k < out.size(); ++k)
      if (!detail::is_zero(out.data()[k])) out.data()[k] *= *inv;
    return out;
  }
  return m;
}

/// True when a = lambda b for some invertible lambda.
template <class Scalar>
bool proportional(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (is_zero_matrix(a) || is_zero_matrix(b)) return is_zero_matrix(a) && is_zero_matrix(b);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Scalar& x = a.data()[i];
    const Scalar& y = b.data()[i];
    if (detail::is_zero(x) != detail::is_zero(y)) return false;
    if (detail::is_zero(y)) continue;
    const auto inv = detail::try_inverse(y);
    if (!inv) continue;
    const Scalar lambda = x * *inv;
    return a == DenseMatrix<Scalar>(b * lambda);
  }
  return false;
}

/// Row space accumulator for incremental rank computations.
template <class Scalar>
class EchelonBasis {
 public:
  explicit EchelonBasis(Eigen::Index dim) : dim_(dim) {}

  /// Reduces v against the stored rows; stores it and returns true when it is
  /// independent.
  bool insert(DenseVector<Scalar> v) {
    if (v.size() != dim_) throw DimensionMismatch("EchelonBasis: vector length");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar& c = v(pivots_[k]);
      if (detail::is_zero(c)) continue;
      const Scalar f = c;
      for (Eigen::Index j = 0; j < dim_; ++j)
        if (!detail::is_zero(rows_[k](j))) v(j) -= f * rows_[k](j);
    }
    for (Eigen::Index j = 0; j < dim_; ++j) {
      if (detail::is_zero(v(j))) continue;
      const auto inv = detail::try_inverse(v(j));
      if (!inv) continue;
      for (Eigen::Index t = 0; t < dim_; ++t)
        if (!detail::is_zero(v(t))) v(t) *= *inv;
      // keep stored rows reduced in the new pivot column
      for (auto& row : rows_) {
        if (detail::is_zero(row(j))) continue;
        const Scalar f = row(j);
        for (Eigen::Index t = 0; t < dim_; ++t)
          if (!detail::is_zero(v(t))) row(t) -= f * v(t);
      }
      rows_.push_back(std::move(v));
      pivots_.push_back(j);
      return true;
    }
    return false;
  }

  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index dimension() const { return dim_; }

 private:
  Eigen::Index dim_;
  std::vector<DenseVector<Scalar>> rows_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace skeinrep
