#include <doctest.h>

#include <cmath>
#include <numbers>

#include "error.hpp"
#include "euler/euler_cw.hpp"
#include "euler/twisted_complex.hpp"
#include "knots/knot_torsion.hpp"

using namespace torsionlab;

namespace {

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

// S^1 x S^2 with one cell per degree; the lift of the 3-cell is chosen so
// that the base structure is not canonical.
const char* kS1xS2 =
    "dim 3\n"
    "cells 1 1 1 1\n"
    "orientable yes\n"
    "betti 1 1 1 1\n"
    "sw_conditions yes\n"
    "d 1\n"
    "t-1\n"
    "d 2\n"
    "0\n"
    "d 3\n"
    "t-1\n";

FlatBundle<RatFunc> universal() { return FlatBundle<RatFunc>::line(RatFunc::t()); }

}  // namespace

TEST_CASE("twisted complex text format round-trips and validates") {
  TwistedCWComplex x = parse_twisted_complex(kS1xS2);
  CHECK_NOTHROW(x.validate());
  CHECK(x.semi_characteristic() == 1);
  CHECK(print_twisted_complex(parse_twisted_complex(print_twisted_complex(x))) == print_twisted_complex(x));
  std::string bad_betti = kS1xS2;
  bad_betti.replace(bad_betti.find("betti 1 1 1 1"), 13, "betti 1 0 0 1");
  CHECK(code_of([&] { parse_twisted_complex(bad_betti).validate(); }) == ErrorCode::ComplexInvalid);
  std::string even = "dim 2\ncells 1 2 1\norientable yes\nbetti 1 2 1\nsw_conditions yes\nd 1\n0 0\nd 2\n0\n0\n";
  CHECK(code_of([&] { parse_twisted_complex(even).validate(); }) == ErrorCode::ComplexInvalid);
}

TEST_CASE("S1 x S2: torsion, characteristic class and canonical structure") {
  TwistedCWComplex x = parse_twisted_complex(kS1xS2);
  // tau_0 = (t - 1)^-1 (1 - t)^-1 up to the frame sign
  const RatFunc base = base_torsion_qt(x);
  CHECK(base.bar() != base);
  const long c = char_class_base(x);
  CHECK(c % 2 == 0);
  const EulerOffset h = canonical_euler(x);
  CHECK(char_class(c, h) == 0);
  const RatFunc canon = torsion_euler(x, h, universal()).value;
  CHECK(canon.bar() == canon);
  // the unknot's 0-surgery is S1 x S2
  TwistedCWComplex unknot = surgery_complex(parse_pd(""));
  CHECK(torsion_euler(unknot, canonical_euler(unknot), universal()).value == canon);
  CHECK(absolute_torsion(x, FlatBundle<Rational>::line(Rational(2))) == 2);
  CHECK(absolute_torsion_doubled_at(x, Rational(3)) == Rational(3, 4));
}

TEST_CASE("action of H on Euler structures") {
  TwistedCWComplex x = parse_twisted_complex(kS1xS2);
  const auto f = FlatBundle<Rational>::line(Rational(5));
  const Rational tau = torsion_euler(x, 0, f).value;
  for (long h : {-2L, -1L, 1L, 2L}) {
    CHECK(torsion_euler(x, h, f).value == f.det(h) * tau);
    for (int q = 0; q <= 3; ++q) {
      const int k = static_cast<int>(q % 2 == 0 ? h : -h);
      CHECK(torsion_euler(relift_cell(x, q, 0, k), 0, f).value == torsion_euler(x, h, f).value);
    }
  }
}

TEST_CASE("rank-two bundles") {
  TwistedCWComplex x = surgery_complex(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
  auto a = FlatBundle<Rational>::line(Rational(2));
  auto b = FlatBundle<Rational>::line(Rational(3));
  auto ab = direct_sum(a, b);
  CHECK(ab.rank() == 2);
  CHECK(ab.det(1) == 6);
  const Rational ta = torsion_euler(x, 0, a).value;
  const Rational tb = torsion_euler(x, 0, b).value;
  const Rational tab = torsion_euler(x, 0, ab).value;
  CHECK(tab * tab == ta * ta * tb * tb);
  CHECK(ab.dual().monodromy[0] == Matrix<Rational>{{Rational(1, 2), 0}, {0, Rational(1, 3)}});
  // commuting monodromies are required
  FlatBundle<Rational> two{{Matrix<Rational>{{1, 1}, {0, 1}}, Matrix<Rational>{{1, 0}, {1, 1}}}};
  CHECK(code_of([&] { twist(x, two); }) != ErrorCode::Ok);
}

TEST_CASE("absolute torsion errors") {
  TwistedCWComplex x = parse_twisted_complex(kS1xS2);
  CHECK(code_of([&] { absolute_torsion(x, FlatBundle<Rational>::line(Rational(1))); }) ==
        ErrorCode::NonAcyclicBundle);
  TwistedCWComplex y = x;
  y.sw_conditions = false;
  CHECK(code_of([&] { absolute_torsion(y, FlatBundle<Rational>::line(Rational(2))); }) ==
        ErrorCode::StiefelWhitneyConditionViolated);
  // relifting moves c by an even amount
  CHECK(char_class_base(relift_cell(x, 1, 0, 1)) == char_class_base(x) - 2);
  // d3 = t^2 - 1 gives bar(tau)/tau = t^3
  std::string text = kS1xS2;
  text.replace(text.rfind("t-1"), 3, "t^2-1");
  CHECK(code_of([&] { canonical_euler(parse_twisted_complex(text)); }) == ErrorCode::ParityError);
}

TEST_CASE("phase: canonical structure is real, shifted structure follows a^(2h)") {
  TwistedCWComplex x = surgery_complex(parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"));
  const long h0 = canonical_euler(x);
  const auto fi = FlatBundle<Complex>::line(Complex(0, 1));
  const Complex t0 = torsion_euler(x, h0, fi).value;
  const double p0 = phase(t0, x, fi);
  CHECK(std::min(p0, std::numbers::pi - p0) < 1e-9);
  const Complex t1 = torsion_euler(x, h0 + 1, fi).value;
  CHECK(std::abs(phase(t1, x, fi) - std::numbers::pi / 2) < 1e-9);
  // phase(g tau) = phase(tau) + arg(g) mod pi
  const Complex g = std::polar(2.0, 0.4);
  double moved = phase(g * t1, x, fi) - phase(t1, x, fi) - 0.4;
  moved = std::fmod(moved + 10 * std::numbers::pi, std::numbers::pi);
  CHECK(std::min(moved, std::numbers::pi - moved) < 1e-9);
  CHECK(code_of([&] { phase(t1, x, FlatBundle<Complex>::line(Complex(2, 0))); }) ==
        ErrorCode::NonUnitaryMonodromy);
  CHECK(code_of([&] { phase(Complex(0, 0), x, fi); }) == ErrorCode::ZeroElement);
}

TEST_CASE("involution on a unitary acyclic bundle is complex conjugation") {
  TwistedCWComplex x = surgery_complex(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
  const auto f = FlatBundle<Complex>::line(std::polar(1.0, 0.9));
  const Complex tau = torsion_euler(x, canonical_euler(x) + 2, f).value;
  CHECK(std::abs(involution_bar_det(tau, x, f) - std::conj(tau)) < 1e-12);
}

TEST_CASE("pairing of the torsion with itself") {
  for (const char* code : {"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"}) {
    TwistedCWComplex x = surgery_complex(parse_pd(code));
    const long h0 = canonical_euler(x);
    for (const Rational& a : {Rational(2), Rational(-3), Rational(5, 2)}) {
      const auto f = FlatBundle<Rational>::line(a);
      const Rational t = absolute_torsion(x, f);
      CHECK(pr_product(t, t, x, f) == 1);
      for (long h : {1L, 2L, -1L}) {
        const Rational tau = torsion_euler(x, h0 + h, f).value;
        CHECK(pr_product(tau, tau, x, f) == f.det(2 * h));
      }
    }
  }
}

TEST_CASE("pairing on a non-acyclic bundle needs frame data") {
  TwistedCWComplex x = parse_twisted_complex(kS1xS2);
  const auto f = FlatBundle<Rational>::line(Rational(1));
  CHECK(code_of([&] { pr_product(Rational(1), Rational(1), x, f); }) == ErrorCode::ZeroDenominatorTorsion);
}
