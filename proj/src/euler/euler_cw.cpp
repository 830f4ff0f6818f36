#include "euler/euler_cw.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace torsionlab {

namespace {

template <class F>
F from_rational(const Rational& c) {
  if constexpr (std::is_same_v<F, Complex>) {
    return Complex(c.get_d(), 0.0);
  } else {
    return F(c);
  }
}

template <class F>
F power(const F& x, long e) {
  if (e >= 0) return ipow(x, e);
  return ipow(F(F(1) / x), -e);
}

template <class F>
Matrix<F> matrix_power(const Matrix<F>& m, long e, std::map<long, Matrix<F>>& cache) {
  if (auto it = cache.find(e); it != cache.end()) return it->second;
  Matrix<F> r = Matrix<F>::identity(m.rows());
  Matrix<F> base = e >= 0 ? m : inverse(m);
  for (long k = 0; k < (e >= 0 ? e : -e); ++k) r = r * base;
  cache.emplace(e, r);
  return r;
}

template <class F>
bool matrices_equal(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if constexpr (FieldTraits<F>::exact) {
        if (!(a(r, c) == b(r, c))) return false;
      } else {
        if (std::abs(a(r, c) - b(r, c)) > 1e-9) return false;
      }
    }
  return true;
}

bool all_zero(const GradedDims& g) {
  for (auto n : g.dims)
    if (n) return false;
  return true;
}

// p(u) -> p(u^{1/2}); requires every exponent to be even.
LaurentPoly halve_powers(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) fail(ErrorCode::ParityError, "odd power of u in " + p.to_string('u'));
    out += LaurentPoly::monomial(c, e / 2);
  }
  return out;
}

// Embeds F-chains (rank n) into (F + G)-chains (rank n + k) at fibre offset.
template <class F>
Matrix<F> embed_fibres(const Matrix<F>& v, std::size_t n, std::size_t total, std::size_t offset) {
  if (n == 0) return Matrix<F>(0, v.cols());
  const std::size_t cells = v.rows() / n;
  Matrix<F> out(cells * total, v.cols());
  for (std::size_t cell = 0; cell < cells; ++cell)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < v.cols(); ++c) out(cell * total + offset + j, c) = v(cell * n + j, c);
  return out;
}

}  // namespace

template <class F>
F FlatBundle<F>::det(long h) const {
  if (monodromy.size() != 1) fail(ErrorCode::InvalidArgument, "expected one generator");
  return power(det_exact(monodromy.front()), h);
}

template <class F>
FlatBundle<F> FlatBundle<F>::dual() const {
  FlatBundle out;
  for (const auto& m : monodromy) out.monodromy.push_back(inverse(m).transpose());
  return out;
}

template <class F>
FlatBundle<F> direct_sum(const FlatBundle<F>& a, const FlatBundle<F>& b) {
  if (a.monodromy.size() != b.monodromy.size()) fail(ErrorCode::InvalidArgument, "bundles over different groups");
  FlatBundle<F> out;
  for (std::size_t g = 0; g < a.monodromy.size(); ++g) {
    const auto& x = a.monodromy[g];
    const auto& y = b.monodromy[g];
    Matrix<F> m(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) m(r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c) m(x.rows() + r, x.cols() + c) = y(r, c);
    out.monodromy.push_back(m);
  }
  return out;
}

template <class F>
ChainComplex<F> twist(const TwistedCWComplex& x, const FlatBundle<F>& f) {
  if (f.monodromy.empty()) fail(ErrorCode::InvalidArgument, "bundle has no monodromy");
  const std::size_t n = f.rank();
  if (n == 0) fail(ErrorCode::InvalidArgument, "bundle rank must be positive");
  for (const auto& m : f.monodromy)
    if (!m.is_square() || m.rows() != n) fail(ErrorCode::InvalidArgument, "monodromy matrices must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < f.monodromy.size(); ++i)
    for (std::size_t j = i + 1; j < f.monodromy.size(); ++j)
      if (!matrices_equal(f.monodromy[i] * f.monodromy[j], f.monodromy[j] * f.monodromy[i]))
        fail(ErrorCode::NonCommutingMonodromy, "generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
  if (f.monodromy.size() != 1) fail(ErrorCode::InvalidArgument, "the complex has one generator t, bundle has " + std::to_string(f.monodromy.size()));
  const Matrix<F>& mono = f.monodromy.front();
  if (is_zero(det_exact(mono))) fail(ErrorCode::InvalidArgument, "monodromy is not invertible");

  std::map<long, Matrix<F>> cache;
  ChainComplex<F> out;
  for (int q = 0; q <= x.top; ++q) out.dims.dims.push_back(x.cell_count(q) * n);
  for (int q = 1; q <= x.top; ++q) {
    const auto& src = x.d[static_cast<std::size_t>(q - 1)];
    Matrix<F> m(src.rows() * n, src.cols() * n);
    for (std::size_t r = 0; r < src.rows(); ++r)
      for (std::size_t c = 0; c < src.cols(); ++c) {
        const LaurentPoly& p = src(r, c);
        if (p.is_zero()) continue;
        if (n == 1) {
          F acc(0);
          for (const auto& [e, coef] : p.terms()) acc = acc + from_rational<F>(coef) * matrix_power(mono, e, cache)(0, 0);
          m(r, c) = acc;
          continue;
        }
        for (const auto& [e, coef] : p.terms()) {
          Matrix<F> pw = matrix_power(mono, e, cache);
          F cf = from_rational<F>(coef);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(r * n + i, c * n + j) = m(r * n + i, c * n + j) + cf * pw(i, j);
        }
      }
    out.d.push_back(m);
  }
  return out;
}

template <class F>
DetLineCoord<F> torsion_euler(const TwistedCWComplex& x, EulerOffset h, const FlatBundle<F>& f, int eta,
                              const HomologyData<F>* frame) {
  if (eta != 1 && eta != -1) fail(ErrorCode::InvalidArgument, "homological orientation must be +1 or -1");
  ChainComplex<F> c = twist(x, f);
  HomologyData<F> own;
  if (!frame) {
    own = compute_homology(c);
    frame = &own;
  }
  DetLineCoord<F> t = torsion_phi(c, F(1), *frame);
  t.value = t.value * f.det(h);
  if (f.rank() % 2 == 1 && eta == -1) t.value = -t.value;
  t.frame = "cells,xi+" + std::to_string(h);
  return t;
}

RatFunc base_torsion_qt(const TwistedCWComplex& x) {
  ChainComplex<RatFunc> c = twist(x, FlatBundle<RatFunc>::line(RatFunc::t()));
  HomologyData<RatFunc> h = compute_homology(c);
  if (!all_zero(h.ranks)) fail(ErrorCode::ZeroTorsion, "the complex is not acyclic over Q(t)");
  return torsion_phi(c, RatFunc(1), h).value;
}

long char_class_base(const TwistedCWComplex& x) {
  RatFunc tau = base_torsion_qt(x);
  RatFunc ratio = tau.bar() / tau;
  auto mono = ratio.as_monomial();
  if (!mono) fail(ErrorCode::ParityError, "bar(tau)/tau = " + ratio.to_string() + " is not a monomial");
  const auto& [coef, e] = *mono;
  if (coef != 1) fail(ErrorCode::ParityError, "bar(tau)/tau = " + ratio.to_string() + " has sign -1");
  return -static_cast<long>(e);
}

EulerOffset canonical_euler(const TwistedCWComplex& x) {
  long c = char_class_base(x);
  if (c % 2 != 0) fail(ErrorCode::ParityError, "c(xi) = " + std::to_string(c) + " t is not a square");
  return -c / 2;
}

template <class F>
F absolute_torsion(const TwistedCWComplex& x, const FlatBundle<F>& f, int eta) {
  if (!x.sw_conditions) fail(ErrorCode::StiefelWhitneyConditionViolated, "w_{m-1}(X) = 0 and w_1(F) = 0 on 2-torsion are declared false for this complex");
  EulerOffset h = canonical_euler(x);
  ChainComplex<F> c = twist(x, f);
  HomologyData<F> hd = compute_homology(c);
  if (!all_zero(hd.ranks)) fail(ErrorCode::NonAcyclicBundle, "H_*(X; F) is nonzero");
  return torsion_euler(x, h, f, eta, &hd).value;
}

RatFunc absolute_torsion_doubled(const TwistedCWComplex& x) {
  if (!x.sw_conditions) fail(ErrorCode::StiefelWhitneyConditionViolated, "w_{m-1}(X) = 0 and w_1(F) = 0 on 2-torsion are declared false for this complex");
  RatFunc tau = base_torsion_qt(x);
  long c = char_class_base(x);
  if (c % 2 != 0) fail(ErrorCode::ParityError, "c(xi) = " + std::to_string(c) + " t is not a square");
  return tau.double_powers() * RatFunc::t(static_cast<int>(-c));
}

template <class F>
F absolute_torsion_doubled_at(const TwistedCWComplex& x, const F& a) {
  RatFunc r = absolute_torsion_doubled(x);
  RatFunc in_a(halve_powers(r.num()), halve_powers(r.den()));
  return in_a.evaluate(a);
}

template <class F>
F pr_product(const F& u, const F& v, const TwistedCWComplex& x, const FlatBundle<F>& f, const PairingData<F>* pairing) {
  FlatBundle<F> fd = f.dual();
  FlatBundle<F> sum = direct_sum(f, fd);
  ChainComplex<F> csum = twist(x, sum);
  HomologyData<F> hsum = compute_homology(csum);
  const int m = x.top;
  if (all_zero(hsum.ranks)) {
    DetLineCoord<F> tau = torsion_phi(csum, F(1), hsum);
    GradedDims zero{std::vector<std::size_t>(static_cast<std::size_t>(m + 1), 0)};
    DetLineCoord<F> dv = dualize(DetLineCoord<F>{v, "H"}, zero, identity_pairing<F>(zero));
    DetLineCoord<F> fused = fuse(DetLineCoord<F>{u, "H"}, zero, dv, zero);
    return fused.value / tau.value;
  }
  if (!pairing)
    fail(ErrorCode::ZeroDenominatorTorsion, "F (+) F* is not acyclic; tau(X; F (+) F*) is not a scalar without pairing data");
  const std::size_t n = f.rank();
  const GradedDims& hf = pairing->frame_f.ranks;
  const GradedDims& hfd = pairing->frame_dual.ranks;
  if (hfd != dual_dims(hf)) fail(ErrorCode::DegeneratePairing, "H(F*) ranks are not dual to H(F) ranks");
  HomologyData<F> frame = hsum;
  for (int q = 0; q <= m; ++q) {
    const auto uq = static_cast<std::size_t>(q);
    frame.reps[uq] = hcat(embed_fibres(pairing->frame_f.reps[uq], n, 2 * n, 0),
                          embed_fibres(pairing->frame_dual.reps[uq], n, 2 * n, n));
    frame.ranks.dims[uq] = hf[q] + hfd[q];
  }
  DetLineCoord<F> tau = torsion_phi(csum, F(1), frame);
  if (is_zero(tau.value)) fail(ErrorCode::ZeroDenominatorTorsion, "tau(X; F (+) F*) vanishes");
  DetLineCoord<F> dv = dualize(DetLineCoord<F>{v, "H(F)"}, hf, pairing->blocks);
  DetLineCoord<F> fused = fuse(DetLineCoord<F>{u, "H(F)"}, hf, dv, hfd);
  return fused.value / tau.value;
}

void require_unitary(const FlatBundle<Complex>& f) {
  for (const auto& m : f.monodromy) {
    Matrix<Complex> adj = m.transpose().map([](const Complex& z) { return std::conj(z); });
    if (!matrices_equal(m * adj, Matrix<Complex>::identity(m.rows())))
      fail(ErrorCode::NonUnitaryMonodromy, "monodromy is not unitary");
  }
}

Complex involution_bar_det(const Complex& tau, const TwistedCWComplex& x, const FlatBundle<Complex>& f,
                           const std::vector<Matrix<Complex>>* pairing, const GradedDims* homology) {
  require_unitary(f);
  if (!homology || all_zero(*homology)) return std::conj(tau);
  if (!pairing) fail(ErrorCode::DegeneratePairing, "non-acyclic bundle needs pairing blocks");
  DetLineCoord<Complex> d = dualize(DetLineCoord<Complex>{tau, "H"}, *homology, *pairing);
  long e = x.semi_characteristic() * static_cast<long>(f.rank()) * ((x.top + 1) / 2);
  Complex out = std::conj(d.value);
  return e % 2 ? -out : out;
}

double phase(const Complex& tau, const TwistedCWComplex& x, const FlatBundle<Complex>& f) {
  if (std::abs(tau) == 0.0) fail(ErrorCode::ZeroElement, "phase of zero");
  Complex ratio = involution_bar_det(tau, x, f) / tau;
  double ph = std::fmod(-0.5 * std::arg(ratio), std::numbers::pi);
  if (ph < 0) ph += std::numbers::pi;
  if (ph >= std::numbers::pi) ph -= std::numbers::pi;
  return ph;
}

#define TORSIONLAB_INSTANTIATE(F)                                                                                 \
  template struct FlatBundle<F>;                                                                                 \
  template FlatBundle<F> direct_sum(const FlatBundle<F>&, const FlatBundle<F>&);                                 \
  template ChainComplex<F> twist(const TwistedCWComplex&, const FlatBundle<F>&);                                 \
  template DetLineCoord<F> torsion_euler(const TwistedCWComplex&, EulerOffset, const FlatBundle<F>&, int,        \
                                         const HomologyData<F>*);                                                \
  template F absolute_torsion(const TwistedCWComplex&, const FlatBundle<F>&, int);                               \
  template F pr_product(const F&, const F&, const TwistedCWComplex&, const FlatBundle<F>&, const PairingData<F>*);

TORSIONLAB_INSTANTIATE(Rational)
TORSIONLAB_INSTANTIATE(RatFunc)
TORSIONLAB_INSTANTIATE(Complex)

#undef TORSIONLAB_INSTANTIATE

template Rational absolute_torsion_doubled_at(const TwistedCWComplex&, const Rational&);
template Complex absolute_torsion_doubled_at(const TwistedCWComplex&, const Complex&);

}  // namespace torsionlab
