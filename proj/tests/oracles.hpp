// Independent reference computations used only by the tests.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "chain/det_torsion.hpp"
#include "knots/pd_code.hpp"
#include "scalar/laurent.hpp"
#include "scalar/matrix.hpp"

namespace oracle {

using namespace torsionlab;

// Laplace expansion along the first row. Exponential, fine for n <= 7.
template <class T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == T(0)) continue;
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    T term = m(0, j) * cofactor_det(minor);
    if (j % 2) sum -= term; else sum += term;
  }
  return sum;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(k, n)), true);
  if (k > n) return out;
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// phi_C(1) with b_q taken as standard basis vectors e_S, S found by search,
// determinants by cofactor expansion. `reps[q]` are the homology cycles.
inline std::optional<Rational> torsion_by_subsets(const ChainComplex<Rational>& c,
                                                  const std::vector<Matrix<Rational>>& reps, int n_sign) {
  const int m = c.top();
  Rational result = 1;
  Matrix<Rational> next_b(c.dims[m + 1], 0);  // b_{q+1}
  for (int q = m; q >= 0; --q) {
    const std::size_t n = c.dims[q];
    Matrix<Rational> image = c.boundary(q + 1) * next_b;
    const std::size_t need = n - image.cols() - reps[static_cast<std::size_t>(q)].cols();
    std::optional<Matrix<Rational>> chosen;
    Rational det = 0;
    for (const auto& s : subsets(n, need)) {
      Matrix<Rational> b(n, s.size());
      for (std::size_t j = 0; j < s.size(); ++j) b(s[j], j) = 1;
      Matrix<Rational> a(n, n);
      std::size_t col = 0;
      const Matrix<Rational>* parts[] = {&image, &reps[static_cast<std::size_t>(q)], &b};
      for (const Matrix<Rational>* part : parts)
        for (std::size_t j = 0; j < part->cols(); ++j, ++col)
          for (std::size_t r = 0; r < n; ++r) a(r, col) = (*part)(r, j);
      Rational dd = cofactor_det(a);
      if (dd != 0) {
        chosen = b;
        det = dd;
        break;
      }
    }
    if (!chosen) return std::nullopt;
    result *= (q % 2 == 0) ? Rational(1 / det) : det;  // exponent (-1)^{q+1}
    next_b = *chosen;
  }
  return n_sign ? Rational(-result) : result;
}

// Alexander polynomial from the crossing/arc matrix of a knot diagram:
// positive crossing row (1-t, t, -1), negative (t-1, 1, -t) at the over arc,
// incoming under arc and outgoing under arc. One row and column deleted.
inline LaurentPoly alexander_from_arcs(const LinkDiagram& d) {
  const auto& cs = d.crossings;
  if (cs.empty()) return LaurentPoly(1);
  // edges joined through over-passes form arcs
  std::map<int, int> parent;
  for (int e : d.edges()) parent[e] = e;
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (const auto& c : cs) parent[find(c.over_in)] = find(c.over_out);
  std::map<int, std::size_t> arc;
  for (int e : d.edges()) arc.emplace(find(e), arc.size());
  const std::size_t n = cs.size();
  Matrix<LaurentPoly> m(n, arc.size());
  const LaurentPoly t = LaurentPoly::t();
  for (std::size_t r = 0; r < n; ++r) {
    const auto& c = cs[r];
    const std::size_t k = arc[find(c.over_in)], i = arc[find(c.under_in)], j = arc[find(c.under_out)];
    if (c.sign > 0) {
      m(r, k) += LaurentPoly(1) - t;
      m(r, i) += t;
      m(r, j) -= LaurentPoly(1);
    } else {
      m(r, k) += t - LaurentPoly(1);
      m(r, i) += LaurentPoly(1);
      m(r, j) -= t;
    }
  }
  Matrix<LaurentPoly> minor(n - 1, n - 1);
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c) minor(r, c) = m(r, c);
  LaurentPoly p = cofactor_det(minor).stripped();
  if (p.leading_coeff() < 0) p = -p;
  return p;
}

}  // namespace oracle
