#include "chain/det_torsion.hpp"

#include <algorithm>
#include <numeric>

namespace torsionlab {

std::vector<int> alpha(const GradedDims& v) {
  std::vector<int> out;
  int acc = 0;
  for (std::size_t n : v.dims) {
    acc = (acc + static_cast<int>(n % 2)) % 2;
    out.push_back(acc);
  }
  return out;
}

int sign_N(const GradedDims& chains, const GradedDims& homology) {
  auto a = alpha(chains);
  auto b = alpha(homology);
  int n = 0;
  for (std::size_t q = 0; q < std::min(a.size(), b.size()); ++q) n ^= a[q] & b[q];
  return n;
}

int fusion_sign(const GradedDims& v, const GradedDims& w) {
  if (v.top() != w.top())
    fail(ErrorCode::DegreeMismatch,
         "top degrees differ: " + std::to_string(v.top()) + " vs " + std::to_string(w.top()));
  auto av = alpha(v);
  auto aw = alpha(w);
  int m = 0;
  for (std::size_t q = 1; q < av.size(); ++q) m ^= av[q - 1] & aw[q];
  return m;
}

int duality_sign(const GradedDims& v) {
  const int m = v.top();
  if (m < 0 || m % 2 == 0) fail(ErrorCode::EvenTopDegree, "duality needs odd top degree, got " + std::to_string(m));
  auto a = alpha(v);
  int s = 0;
  for (int q = 1; q <= m; ++q) s ^= a[q - 1] & a[q];
  for (int q = 0; q <= (m - 1) / 2; ++q) s ^= a[2 * q];
  return s;
}

SignTable default_sign_table() { return {&sign_N, &fusion_sign, &duality_sign}; }

namespace {

int corrupt_n(const GradedDims& c, const GradedDims& h) {
  auto a = alpha(c);
  auto b = alpha(h);
  int n = 0;
  for (std::size_t q = 0; q + 1 < std::min(a.size(), b.size()); ++q) n ^= a[q] & b[q];
  return n;
}

int corrupt_m(const GradedDims& v, const GradedDims& w) {
  auto av = alpha(v);
  auto aw = alpha(w);
  int m = 0;
  for (std::size_t q = 1; q + 1 < av.size(); ++q) m ^= av[q - 1] & aw[q];
  return m;
}

int corrupt_s(const GradedDims& v) {
  const int m = v.top();
  auto a = alpha(v);
  int s = 0;
  for (int q = 1; q < m; ++q) s ^= a[q - 1] & a[q];
  for (int q = 0; q <= (m - 1) / 2; ++q) s ^= a[2 * q];
  return s;
}

}  // namespace

SignTable corrupted_sign_table() { return {&corrupt_n, &corrupt_m, &corrupt_s}; }

namespace {

template <class F>
bool matrix_is_zero(const Matrix<F>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (FieldTraits<F>::exact) {
        if (!is_zero(m(r, c))) return false;
      } else {
        if (std::abs(m(r, c)) > 1e-9) return false;
      }
    }
  return true;
}

template <class F>
F random_scalar(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> dist(-2, 2);
  int v = dist(rng);
  while (nonzero && v == 0) v = dist(rng);
  return F(static_cast<long>(v));
}

template <class F>
Matrix<F> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix<F> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar<F>(rng, false);
  return m;
}

// Unit lower triangular times upper triangular with nonzero diagonal.
template <class F>
Matrix<F> random_invertible(std::size_t n, std::mt19937_64& rng) {
  Matrix<F> lower = Matrix<F>::identity(n);
  Matrix<F> upper(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r > c) lower(r, c) = random_scalar<F>(rng, false);
      if (r < c) upper(r, c) = random_scalar<F>(rng, false);
      if (r == c) upper(r, c) = random_scalar<F>(rng, true);
    }
  return lower * upper;
}

template <class F>
F power_pm(const F& x, int q_plus_one) {
  // x^{(-1)^{q+1}}
  if (q_plus_one % 2 == 0) return x;
  return F(F(1) / x);
}

}  // namespace

template <class F>
void ChainComplex<F>::validate() const {
  if (dims.dims.empty()) fail(ErrorCode::ComplexInvalid, "complex has no degrees");
  if (d.size() != static_cast<std::size_t>(top()))
    fail(ErrorCode::ComplexInvalid, "expected " + std::to_string(top()) + " boundary maps, got " + std::to_string(d.size()));
  for (int q = 1; q <= top(); ++q) {
    const auto& m = d[static_cast<std::size_t>(q - 1)];
    if (m.rows() != dims[q - 1] || m.cols() != dims[q])
      fail(ErrorCode::ComplexInvalid, "d" + std::to_string(q) + " has shape " + m.shape() + ", expected " +
                                          std::to_string(dims[q - 1]) + "x" + std::to_string(dims[q]));
  }
  for (int q = 2; q <= top(); ++q)
    if (!matrix_is_zero(boundary(q - 1) * boundary(q)))
      fail(ErrorCode::ComplexInvalid, "d" + std::to_string(q - 1) + " d" + std::to_string(q) + " != 0");
}

template <class F>
HomologyData<F> compute_homology(const ChainComplex<F>& c) {
  const int m = c.top();
  HomologyData<F> h;
  std::vector<Matrix<F>> kernels;
  for (int q = 0; q <= m; ++q) {
    auto ki = kernel_image_bases(c.boundary(q));
    h.lifts.push_back(ki.image_lift);
    kernels.push_back(ki.kernel);
  }
  for (int q = 0; q <= m; ++q) {
    const auto uq = static_cast<std::size_t>(q);
    Matrix<F> bnd = q < m ? c.boundary(q + 1) * h.lifts[uq + 1] : Matrix<F>(c.dims[q], 0);
    Matrix<F> both = hcat(bnd, kernels[uq]);
    std::vector<std::size_t> chosen;
    for (std::size_t p : independent_columns(both))
      if (p >= bnd.cols()) chosen.push_back(p - bnd.cols());
    h.reps.push_back(kernels[uq].columns(chosen));
    h.ranks.dims.push_back(chosen.size());
  }
  return h;
}

template <class F>
HomologyData<F> perturb_choices(const ChainComplex<F>& c, const HomologyData<F>& h, std::mt19937_64& rng) {
  const int m = c.top();
  HomologyData<F> out;
  out.ranks = h.ranks;
  for (int q = 0; q <= m; ++q) {
    Matrix<F> dq = c.boundary(q);
    std::vector<std::size_t> order(dq.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    auto ki = kernel_image_bases(dq, order);
    Matrix<F> lift = ki.image_lift * random_invertible<F>(ki.rank, rng);
    if (ki.kernel.cols() > 0) lift = lift + ki.kernel * random_matrix<F>(ki.kernel.cols(), ki.rank, rng);
    out.lifts.push_back(lift);
  }
  for (int q = 0; q <= m; ++q) {
    const auto uq = static_cast<std::size_t>(q);
    Matrix<F> reps = h.reps[uq];
    if (q < m && reps.cols() > 0) {
      Matrix<F> bnd = c.boundary(q + 1);
      if (bnd.cols() > 0) reps = reps + bnd * random_matrix<F>(bnd.cols(), reps.cols(), rng);
    }
    out.reps.push_back(reps);
  }
  return out;
}

template <class F>
DetLineCoord<F> torsion_phi_with_sign(const ChainComplex<F>& c, const F& c_value, const HomologyData<F>& h, int n_sign) {
  if (is_zero(c_value)) fail(ErrorCode::ZeroInput, "volume element c is zero");
  const int m = c.top();
  if (h.reps.size() != static_cast<std::size_t>(m + 1) || h.lifts.size() != static_cast<std::size_t>(m + 1))
    fail(ErrorCode::SingularAssembly, "homology data does not match the complex");
  F value = c_value;
  for (int q = 0; q <= m; ++q) {
    const auto uq = static_cast<std::size_t>(q);
    Matrix<F> first = q < m ? c.boundary(q + 1) * h.lifts[uq + 1] : Matrix<F>(c.dims[q], 0);
    Matrix<F> assembled = hcat(hcat(first, h.reps[uq]), h.lifts[uq]);
    if (assembled.rows() != c.dims[q] || !assembled.is_square())
      fail(ErrorCode::SingularAssembly, "degree " + std::to_string(q) + " assembly is " + assembled.shape());
    if (assembled.rows() == 0) continue;
    F det = det_exact(assembled);
    if (is_zero(det)) fail(ErrorCode::SingularAssembly, "degree " + std::to_string(q) + " assembly is singular");
    value = value * power_pm(det, q + 1);
  }
  if (n_sign) value = -value;
  return {value, "homology"};
}

template <class F>
DetLineCoord<F> torsion_phi(const ChainComplex<F>& c, const F& c_value, const HomologyData<F>& h) {
  return torsion_phi_with_sign(c, c_value, h, sign_N(c.dims, h.ranks));
}

template <class F>
DetLineCoord<F> dualize(const DetLineCoord<F>& v, const GradedDims& vd, const std::vector<Matrix<F>>& pairing) {
  const int m = vd.top();
  int s = duality_sign(vd);
  if (pairing.size() != vd.dims.size())
    fail(ErrorCode::DegeneratePairing, "expected " + std::to_string(vd.dims.size()) + " pairing blocks");
  F value = v.value;
  for (int q = 0; q <= m; ++q) {
    const auto& p = pairing[static_cast<std::size_t>(q)];
    if (p.rows() != vd[q] || p.cols() != vd[q])
      fail(ErrorCode::DegeneratePairing, "pairing block " + std::to_string(q) + " has shape " + p.shape());
    if (p.rows() == 0) continue;
    F det = det_exact(p);
    if (is_zero(det)) fail(ErrorCode::DegeneratePairing, "pairing block " + std::to_string(q) + " is singular");
    // The dual basis has volume det(P_q)^{-1} against f; it sits in degree
    // m-q whose exponent is (-1)^{m-q} = -(-1)^q.
    value = q % 2 == 0 ? F(value * det) : F(value / det);
  }
  if (s) value = -value;
  return {value, v.frame + "'"};
}

#define TORSIONLAB_INSTANTIATE(F)                                                                          \
  template void ChainComplex<F>::validate() const;                                                        \
  template HomologyData<F> compute_homology(const ChainComplex<F>&);                                      \
  template HomologyData<F> perturb_choices(const ChainComplex<F>&, const HomologyData<F>&, std::mt19937_64&); \
  template DetLineCoord<F> torsion_phi(const ChainComplex<F>&, const F&, const HomologyData<F>&);         \
  template DetLineCoord<F> torsion_phi_with_sign(const ChainComplex<F>&, const F&, const HomologyData<F>&, int); \
  template DetLineCoord<F> dualize(const DetLineCoord<F>&, const GradedDims&, const std::vector<Matrix<F>>&);

TORSIONLAB_INSTANTIATE(Rational)
TORSIONLAB_INSTANTIATE(RatFunc)
TORSIONLAB_INSTANTIATE(Complex)

#undef TORSIONLAB_INSTANTIATE

}  // namespace torsionlab
