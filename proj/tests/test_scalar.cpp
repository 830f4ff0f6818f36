#include <doctest.h>

#include <random>

#include "error.hpp"
#include "oracles.hpp"
#include "scalar/field.hpp"
#include "scalar/laurent.hpp"
#include "scalar/linalg.hpp"
#include "scalar/ratfunc.hpp"

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

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("+2/6").get_str() == "1/3");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { parse_rational("x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational(""); }) == ErrorCode::ParseError);
}

TEST_CASE("complex samples") {
  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("-2.5i") == Complex(0, -2.5));
  CHECK(parse_complex("1e-3-2i") == Complex(1e-3, -2));
  CHECK(std::abs(parse_complex("cis:1.5707963267948966") - Complex(0, 1)) < 1e-15);
  CHECK(code_of([] { parse_complex("nan"); }) == ErrorCode::ParseError);
  SamplePoint p = parse_sample("-3/4");
  CHECK(p.is_exact);
  CHECK(p.exact == Rational(-3, 4));
  CHECK_FALSE(parse_sample("0.5+0.5i").is_exact);
}

TEST_CASE("Laurent polynomial arithmetic") {
  LaurentPoly t = LaurentPoly::t();
  LaurentPoly p = t - LaurentPoly::t(-1);
  CHECK((p * p).to_string() == "t^2-2+t^-2");
  CHECK(LaurentPoly::parse("t^2-2+t^-2") == p * p);
  CHECK(LaurentPoly::parse("3/2*t - t^-3").coeff(-3) == -1);
  CHECK(p.bar() == -p);
  CHECK((p * p).substitute_power(2) == LaurentPoly::parse("t^4-2+t^-4"));
  CHECK(LaurentPoly::parse("t^-2+t^-1").stripped() == LaurentPoly::parse("1+t"));
  CHECK((t - LaurentPoly(1)).evaluate(Rational(3)) == 2);
  auto [q, r] = poly_divmod(LaurentPoly::parse("t^3-1"), LaurentPoly::parse("t-1"));
  CHECK(q == LaurentPoly::parse("t^2+t+1"));
  CHECK(r.is_zero());
  CHECK(poly_gcd(LaurentPoly::parse("t^2-1"), LaurentPoly::parse("t^2-2t+1")) == LaurentPoly::parse("t-1"));
  CHECK(code_of([] { LaurentPoly::parse("t^"); }) == ErrorCode::ParseError);
}

TEST_CASE("rational functions are stored in canonical form") {
  RatFunc a(LaurentPoly::parse("2t-2"), LaurentPoly::parse("4t^2-4"));
  CHECK(a == RatFunc(LaurentPoly(1), LaurentPoly::parse("2t+2")));
  CHECK(a.den().trailing_coeff() != 0);
  CHECK(a.den().leading_coeff() == 1);
  RatFunc b = RatFunc::parse("(t^2-t+1)/(t^2-2t+1)");
  CHECK(b.bar() == b);
  CHECK(b.evaluate(Rational(2)) == 3);
  CHECK(code_of([&] { b.evaluate(Rational(1)); }) == ErrorCode::PoleAtEvaluationPoint);
  CHECK(code_of([] { RatFunc(LaurentPoly(1), LaurentPoly()); }) == ErrorCode::DivisionByZero);
  CHECK((b * b.inverse()) == RatFunc(1));
  CHECK(RatFunc::t(3).as_monomial()->second == 3);
  CHECK(b.double_powers().evaluate(Rational(2)) == b.evaluate(Rational(4)));
}

TEST_CASE("determinant and rank agree with cofactor expansion") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-3, 3);
  std::uniform_int_distribution<std::size_t> sz(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = sz(rng);
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
    const Rational det = det_exact(m);
    CHECK(det == oracle::cofactor_det(m));
    CHECK((rank(m) == n) == (det != 0));
    if (det != 0) CHECK(m * inverse(m) == Matrix<Rational>::identity(n));
  }
  CHECK(code_of([] { det_exact(Matrix<Rational>(2, 3)); }) == ErrorCode::NonSquareMatrix);
  CHECK(code_of([] { inverse(Matrix<Rational>(2, 2)); }) == ErrorCode::SingularAssembly);
}

TEST_CASE("kernel and image bases") {
  Matrix<Rational> m{{1, 2, 3}, {2, 4, 6}};
  auto ki = kernel_image_bases(m);
  CHECK(ki.rank == 1);
  CHECK(ki.kernel.cols() == 2);
  CHECK((m * ki.kernel) == Matrix<Rational>(2, 2));
  CHECK(rank(m * ki.image_lift) == 1);
  Matrix<RatFunc> q{{RatFunc::parse("t-1"), RatFunc::parse("t^2-1")}};
  CHECK(rank(q) == 1);
  CHECK(det_exact(Matrix<RatFunc>{{RatFunc::t(), RatFunc(1)}, {RatFunc(1), RatFunc::t(-1)}}).is_zero());
}

TEST_CASE("complex elimination uses the zero threshold") {
  Matrix<Complex> m{{Complex(1, 1), Complex(2, 0)}, {Complex(1, -1), Complex(1, -1)}};
  CHECK(std::abs(det_exact(m) - (Complex(1, 1) * Complex(1, -1) - Complex(2, 0) * Complex(1, -1))) < 1e-12);
  Matrix<Complex> s{{Complex(1, 0), Complex(1e-13, 0)}, {Complex(0, 0), Complex(1e-13, 0)}};
  CHECK(rank(s) == 1);
  CHECK(FieldTraits<Complex>::is_zero(Complex(1e-11, 0)));
}
