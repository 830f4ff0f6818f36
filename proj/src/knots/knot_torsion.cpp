#include "knots/knot_torsion.hpp"

#include <map>
#include <set>

#include "error.hpp"
#include "scalar/linalg.hpp"

namespace torsionlab {

namespace {

// At a crossing with over arc k, incoming under arc i and outgoing arc j,
// a positive crossing gives x_j = x_k x_i x_k^-1 and a negative one
// x_j = x_k^-1 x_i x_k. Passing under arc k at a crossing of sign s adds
// the letter x_k^-s to the longitude.
Word relator_for(int over, int in, int out, int sign) {
  if (sign > 0) return {{over, 1}, {in, 1}, {over, -1}, {out, -1}};
  return {{over, -1}, {in, 1}, {over, 1}, {out, -1}};
}

LaurentPoly one_minus_t() { return LaurentPoly(1) - LaurentPoly::t(); }

Matrix<RatFunc> to_ratfunc(const Matrix<LaurentPoly>& m) {
  return m.map([](const LaurentPoly& p) { return RatFunc(p); });
}

// Multiply a Q(t)-vector into a primitive vector of Z[t, t^-1] (entries
// with no common factor, lowest total exponent 0).
std::vector<LaurentPoly> primitive_integral(const Matrix<RatFunc>& v) {
  LaurentPoly den(1);
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const LaurentPoly& d = v(r, 0).den();
    LaurentPoly g = poly_gcd(den, d);
    den = exact_quotient(den * d, g);
  }
  std::vector<LaurentPoly> out;
  for (std::size_t r = 0; r < v.rows(); ++r) out.push_back(v(r, 0).num() * exact_quotient(den, v(r, 0).den()));
  LaurentPoly g;
  for (const auto& p : out)
    if (!p.is_zero()) g = g.is_zero() ? p.stripped() : poly_gcd(g, p);
  if (g.is_zero()) fail(ErrorCode::Internal, "kernel vector is zero");
  BigInt lcm_den = 1;
  for (auto& p : out) {
    if (p.is_zero()) continue;
    p = exact_quotient(p, g);
    BigInt l = denominator_lcm(p);
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), l.get_mpz_t());
  }
  BigInt content = 0;
  int min_e = 0;
  bool first = true;
  for (auto& p : out) {
    if (p.is_zero()) continue;
    p *= Rational(lcm_den);
    BigInt c = numerator_gcd(p);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    min_e = first ? p.min_exponent() : std::min(min_e, p.min_exponent());
    first = false;
  }
  for (auto& p : out)
    if (!p.is_zero()) p = (p * Rational(BigInt(1), content)).shifted(-min_e);
  return out;
}

}  // namespace

WirtingerPresentation wirtinger(const LinkDiagram& d) {
  WirtingerPresentation w;
  if (d.crossings.empty()) {
    if (d.free_loops != 1) fail(ErrorCode::NotAKnot, "diagram has " + std::to_string(d.free_loops) + " components");
    w.generators = 1;
    return w;
  }
  auto comps = d.traced_components();
  if (comps.size() != 1 || d.free_loops != 0)
    fail(ErrorCode::NotAKnot, "diagram has " + std::to_string(d.component_count()) + " components");
  std::vector<int> edges = comps.front();
  std::map<int, std::pair<std::size_t, bool>> head;  // edge -> (crossing, enters from below)
  std::set<int> arc_starts;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    head[d.crossings[c].under_in] = {c, true};
    head[d.crossings[c].over_in] = {c, false};
    arc_starts.insert(d.crossings[c].under_out);
  }
  std::size_t start = 0;
  while (!arc_starts.count(edges[start])) ++start;
  std::rotate(edges.begin(), edges.begin() + static_cast<long>(start), edges.end());

  const std::size_t n = d.crossings.size();
  std::map<int, int> arc_of;
  std::vector<std::size_t> crossing_ending_arc;
  int cur = 0;
  for (int e : edges) {
    arc_of[e] = cur;
    auto [c, below] = head.at(e);
    if (below) {
      crossing_ending_arc.push_back(c);
      ++cur;
    }
  }
  if (crossing_ending_arc.size() != n) fail(ErrorCode::Internal, "arc count does not match crossing count");
  w.generators = n;
  int exponent_sum = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const Crossing& c = d.crossings[crossing_ending_arc[r]];
    const int k = arc_of.at(c.over_in);
    const int i = static_cast<int>(r);
    const int j = static_cast<int>((r + 1) % n);
    w.relators.push_back(relator_for(k, i, j, c.sign));
    w.longitude.push_back({k, -c.sign});
    exponent_sum -= c.sign;
  }
  for (int k = 0; k < std::abs(exponent_sum); ++k) w.longitude.push_back({0, exponent_sum > 0 ? -1 : 1});
  return w;
}

Matrix<LaurentPoly> fox_matrix(const std::vector<Word>& words, std::size_t generators) {
  Matrix<LaurentPoly> m(generators, words.size());
  for (std::size_t r = 0; r < words.size(); ++r) {
    int s = 0;
    for (const auto& [g, e] : words[r]) {
      if (g < 0 || static_cast<std::size_t>(g) >= generators) fail(ErrorCode::Internal, "generator out of range");
      auto& entry = m(static_cast<std::size_t>(g), r);
      if (e > 0) {
        entry += LaurentPoly::t(s);
        ++s;
      } else {
        --s;
        entry -= LaurentPoly::t(s);
      }
    }
  }
  return m;
}

TorsionRep exterior_torsion(const LinkDiagram& d) {
  WirtingerPresentation w = wirtinger(d);
  const std::size_t n = w.generators;
  if (n == 1) {
    // a single generator and no independent relator: the exterior is a circle
    return {RatFunc(LaurentPoly(1), one_minus_t()), false};
  }
  Matrix<LaurentPoly> fox = fox_matrix(w.relators, n);
  auto minor = [&](std::size_t drop_rel, std::size_t drop_gen) {
    Matrix<RatFunc> m(n - 1, n - 1);
    for (std::size_t r = 0, rr = 0; r < n; ++r) {
      if (r == drop_gen) continue;
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == drop_rel) continue;
        m(rr, cc++) = RatFunc(fox(r, c));
      }
      ++rr;
    }
    return det_exact(m);
  };
  RatFunc det = minor(n - 1, n - 1);
  for (std::size_t rel = 0; rel < n && det.is_zero(); ++rel)
    for (std::size_t gen = 0; gen < n && det.is_zero(); ++gen) det = minor(rel, gen);
  if (det.is_zero()) fail(ErrorCode::ZeroMinor, "every Fox minor vanishes");
  return {det / RatFunc(one_minus_t()), false};
}

TorsionRep surgery_torsion(const LinkDiagram& d) {
  TorsionRep a = exterior_torsion(d);
  return {a.value / RatFunc(one_minus_t()), false};
}

LaurentPoly conway_from_canonical(const RatFunc& canonical) {
  LaurentPoly z = LaurentPoly::t(1) - LaurentPoly::t(-1);
  RatFunc p = RatFunc(z * z) * canonical.double_powers();
  if (!p.is_laurent()) fail(ErrorCode::NonPolynomialInZ, "(t-t^-1)^2 tau(t^2) = " + p.to_string() + " is not a Laurent polynomial");
  LaurentPoly rest = p.num();
  LaurentPoly out;
  while (!rest.is_zero()) {
    const int deg = rest.max_exponent();
    const Rational c = rest.leading_coeff();
    if (deg < 0 || deg % 2 != 0 || c.get_den() != 1)
      fail(ErrorCode::NonPolynomialInZ, "(t-t^-1)^2 tau(t^2) = " + p.num().to_string() + " is not an integer polynomial in z^2");
    LaurentPoly zp(1);
    for (int k = 0; k < deg; ++k) zp *= z;
    rest -= zp * c;
    out += LaurentPoly::monomial(c, deg);
  }
  return out;
}

TorsionRep canonical_normalize(const TorsionRep& r) {
  if (r.value.is_zero()) fail(ErrorCode::ZeroTorsion, "torsion is zero");
  RatFunc ratio = r.value.bar() / r.value;
  auto mono = ratio.as_monomial();
  if (!mono) fail(ErrorCode::ParityError, "bar(r)/r = " + ratio.to_string() + " is not +-t^k");
  const auto& [coef, e] = *mono;
  if (coef != 1) fail(ErrorCode::ParityError, "bar(r)/r = " + ratio.to_string() + " has sign -1");
  if (e % 2 != 0) fail(ErrorCode::ParityError, "bar(r)/r = " + ratio.to_string() + " is an odd power of t");
  RatFunc value = r.value * RatFunc::t(e / 2);
  LaurentPoly conway = conway_from_canonical(value);
  if (conway.coeff(0) == -1) value = -value;
  return {value, true};
}

LaurentPoly conway_from_torsion(const LinkDiagram& d) {
  return conway_from_canonical(canonical_normalize(surgery_torsion(d)).value);
}

RatFunc conway_at_u(const LaurentPoly& conway) {
  LaurentPoly z = LaurentPoly::t(1) - LaurentPoly::t(-1);
  LaurentPoly out;
  for (const auto& [k, c] : conway.terms()) {
    if (k < 0) fail(ErrorCode::InvalidArgument, "Conway polynomial with negative power");
    LaurentPoly zp(1);
    for (int i = 0; i < k; ++i) zp *= z;
    out += zp * c;
  }
  return RatFunc(out);
}

AlexanderPoly alexander_poly(const LinkDiagram& d) {
  RatFunc a = exterior_torsion(d).value * RatFunc(one_minus_t());
  if (!a.is_laurent()) fail(ErrorCode::Internal, "(1-t)A(t) is not a polynomial: " + a.to_string());
  LaurentPoly p = a.num().stripped();
  if (p.leading_coeff() < 0) p = -p;
  Rational at_one = p.evaluate(Rational(1));
  return {p, sgn(at_one)};
}

ChainComplex<RatFunc> exterior_complex_qt(const LinkDiagram& d) {
  WirtingerPresentation w = wirtinger(d);
  const std::size_t n = w.generators;
  ChainComplex<RatFunc> c;
  c.dims.dims = {1, n, n - 1};
  Matrix<RatFunc> d1(1, n);
  for (std::size_t j = 0; j < n; ++j) d1(0, j) = RatFunc(LaurentPoly::t() - LaurentPoly(1));
  std::vector<Word> rel(w.relators.begin(), w.relators.end() - (w.relators.empty() ? 0 : 1));
  c.d = {d1, to_ratfunc(fox_matrix(rel, n))};
  return c;
}

TwistedCWComplex surgery_complex(const LinkDiagram& d) {
  WirtingerPresentation w = wirtinger(d);
  const std::size_t n = w.generators;
  std::vector<Word> two_cells(w.relators.begin(), w.relators.end() - (w.relators.empty() ? 0 : 1));
  two_cells.push_back(w.longitude);
  Matrix<LaurentPoly> d2 = fox_matrix(two_cells, n);

  auto ki = kernel_image_bases(to_ratfunc(d2));
  if (ki.kernel.cols() != 1)
    fail(ErrorCode::Internal, "ker d2 has dimension " + std::to_string(ki.kernel.cols()) + " over Q(t), expected 1");
  std::vector<LaurentPoly> v = primitive_integral(ki.kernel);
  const LaurentPoly& lon = v.back();
  if (!lon.is_monomial() || (lon.leading_coeff() != 1 && lon.leading_coeff() != -1))
    fail(ErrorCode::Internal, "longitude coefficient " + lon.to_string() + " of the 3-cell boundary is not a unit");

  TwistedCWComplex x;
  x.top = 3;
  x.cells = {1, n, n, 1};
  x.orientable = true;
  x.betti = {1, 1, 1, 1};
  x.sw_conditions = true;
  Matrix<LaurentPoly> d1(1, n);
  for (std::size_t j = 0; j < n; ++j) d1(0, j) = LaurentPoly::t() - LaurentPoly(1);
  Matrix<LaurentPoly> d3(n, 1);
  for (std::size_t j = 0; j < n; ++j) d3(j, 0) = one_minus_t() * v[j];
  x.d = {d1, d2, d3};

  // Fix the sign of d3 against the Fox route.
  ChainComplex<RatFunc> c;
  c.dims.dims = {1, n, n, 1};
  c.d = {to_ratfunc(d1), to_ratfunc(d2), to_ratfunc(d3)};
  RatFunc tau = torsion_phi(c, RatFunc(1), compute_homology(c)).value;
  RatFunc fox = canonical_normalize(surgery_torsion(d)).value;
  RatFunc ratio = tau / fox;
  auto mono = ratio.as_monomial();
  if (!mono || (mono->first != 1 && mono->first != -1))
    fail(ErrorCode::Internal, "surgery complex torsion " + tau.to_string() + " is not +-t^k times the Fox torsion " + fox.to_string());
  if (mono->first == -1)
    for (std::size_t j = 0; j < n; ++j) x.d[2](j, 0) = -x.d[2](j, 0);
  return x;
}

Rational absolute_torsion_at(const RatFunc& canonical, const LaurentPoly& alexander, const Rational& a) {
  if (sgn(a) == 0) fail(ErrorCode::InvalidArgument, "a must be nonzero");
  if (a == 1) fail(ErrorCode::NonAcyclicBundle, "a = 1: H_*(X; F_a) is nonzero (need a != 1)");
  if (sgn(alexander.evaluate(a)) == 0)
    fail(ErrorCode::NonAcyclicBundle, "a = " + to_string(a) + " is a root of the Alexander polynomial: H_*(X; F_a) is nonzero");
  return canonical.evaluate(a);
}

Complex absolute_torsion_at(const RatFunc& canonical, const LaurentPoly& alexander, const Complex& a) {
  if (std::abs(a) <= 1e-12) fail(ErrorCode::InvalidArgument, "a must be nonzero");
  if (std::abs(a - Complex(1.0)) <= 1e-12) fail(ErrorCode::NonAcyclicBundle, "a = 1: H_*(X; F_a) is nonzero (need a != 1)");
  if (std::abs(alexander.evaluate(a)) <= 1e-12)
    fail(ErrorCode::NonAcyclicBundle, "a = " + to_string(a) + " is a root of the Alexander polynomial: H_*(X; F_a) is nonzero");
  return canonical.evaluate(a);
}

Rational absolute_torsion_at(const LinkDiagram& d, const Rational& a) {
  return absolute_torsion_at(canonical_normalize(surgery_torsion(d)).value, alexander_poly(d).poly, a);
}

Complex absolute_torsion_at(const LinkDiagram& d, const Complex& a) {
  return absolute_torsion_at(canonical_normalize(surgery_torsion(d)).value, alexander_poly(d).poly, a);
}

}  // namespace torsionlab
