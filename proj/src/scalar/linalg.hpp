#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "error.hpp"
#include "scalar/field.hpp"
#include "scalar/matrix.hpp"

namespace torsionlab {

/// Result of one elimination pass.
/// `kernel` columns span ker M; `image_lift` columns are standard basis
/// vectors e_p for the pivot columns p, so M * image_lift is a basis of im M.
template <class F>
struct KernelImage {
  Matrix<F> kernel;
  Matrix<F> image_lift;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

namespace detail {

// Reduced row echelon form; columns are visited in `order`.
// Returns pivot columns (original indices) in visiting order.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& a, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col : order) {
    if (row == a.rows()) break;
    std::optional<std::size_t> best;
    if constexpr (FieldTraits<F>::exact) {
      for (std::size_t r = row; r < a.rows(); ++r)
        if (!is_zero(a(r, col))) {
          best = r;
          break;
        }
    } else {
      double mag = 0;
      for (std::size_t r = row; r < a.rows(); ++r) {
        double m = FieldTraits<F>::magnitude(a(r, col));
        if (!is_zero(a(r, col)) && m > mag) {
          mag = m;
          best = r;
        }
      }
    }
    if (!best) continue;
    if (*best != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(*best, c));
    F inv = F(1) / a(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = a(row, c) * inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      F factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_zero(a(row, c))) a(r, c) = a(r, c) - factor * a(row, c);
      a(r, col) = F(0);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace detail

/// Leftmost-pivot elimination (or the supplied column visiting order).
template <class F>
KernelImage<F> kernel_image_bases(const Matrix<F>& m, std::vector<std::size_t> column_order = {}) {
  if (column_order.empty()) column_order = detail::identity_order(m.cols());
  if (column_order.size() != m.cols()) fail(ErrorCode::InvalidArgument, "column order has wrong length");
  Matrix<F> a = m;
  std::vector<std::size_t> pivots = detail::rref_in_place(a, column_order);
  KernelImage<F> out;
  out.rank = pivots.size();
  out.pivot_columns = pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  out.image_lift = Matrix<F>(m.cols(), pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j) out.image_lift(pivots[j], j) = F(1);

  std::vector<std::size_t> free_cols;
  for (std::size_t c : column_order)
    if (!is_pivot[c]) free_cols.push_back(c);
  out.kernel = Matrix<F>(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t f = free_cols[j];
    out.kernel(f, j) = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) out.kernel(pivots[i], j) = -a(i, f);
  }
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  Matrix<F> a = m;
  return detail::rref_in_place(a, detail::identity_order(m.cols())).size();
}

template <class F>
F det_exact(const Matrix<F>& m) {
  if (!m.is_square()) fail(ErrorCode::NonSquareMatrix, "determinant of " + m.shape() + " matrix");
  Matrix<F> a = m;
  const std::size_t n = a.rows();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<std::size_t> best;
    if constexpr (FieldTraits<F>::exact) {
      for (std::size_t r = col; r < n; ++r)
        if (!is_zero(a(r, col))) {
          best = r;
          break;
        }
    } else {
      double mag = 0;
      for (std::size_t r = col; r < n; ++r) {
        double v = FieldTraits<F>::magnitude(a(r, col));
        if (!is_zero(a(r, col)) && v > mag) {
          mag = v;
          best = r;
        }
      }
    }
    if (!best) return F(0);
    if (*best != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(*best, c));
      det = -det;
    }
    det = det * a(col, col);
    F inv = F(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      F factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) = a(r, c) - factor * a(col, c);
    }
  }
  return det;
}

/// Inverse of a square matrix; throws SingularAssembly when singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) fail(ErrorCode::NonSquareMatrix, "inverse of " + m.shape() + " matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug = hcat(m, Matrix<F>::identity(n));
  auto pivots = detail::rref_in_place(aug, detail::identity_order(aug.cols()));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    fail(ErrorCode::SingularAssembly, "matrix is singular");
  Matrix<F> out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

/// Indices (into the columns of `m`) of the leftmost maximal independent set.
template <class F>
std::vector<std::size_t> independent_columns(const Matrix<F>& m) {
  Matrix<F> a = m;
  auto p = detail::rref_in_place(a, detail::identity_order(m.cols()));
  return p;
}

}  // namespace torsionlab
