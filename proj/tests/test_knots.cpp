#include <doctest.h>

#include <string>

#include "error.hpp"
#include "knots/knot_torsion.hpp"
#include "knots/pd_code.hpp"
#include "knots/skein.hpp"
#include "oracles.hpp"
#include "verify/acceptance.hpp"

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

LinkDiagram fixture(const std::string& name) { return load_fixture(TORSIONLAB_TEST_FIXTURES, name); }

LaurentPoly z(const char* s) { return LaurentPoly::parse(s, 'z'); }

}  // namespace

TEST_CASE("PD parsing") {
  LinkDiagram t = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  CHECK(t.crossings.size() == 3);
  CHECK(t.writhe() == -3);
  CHECK(t.component_count() == 1);
  CHECK(parse_pd("X 1 4 2 5 -\nX 3 6 4 1 -\nX 5 2 6 3 -\n") == t);
  CHECK(parse_pd(print_pd(t)) == t);
  CHECK(parse_pd("# nothing\n").free_loops == 1);
  CHECK(code_of([] { parse_pd("X[1,4,2,5] X[3,6,4,1]"); }) == ErrorCode::InconsistentArcs);
  CHECK(code_of([] { parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,1]"); }) == ErrorCode::InconsistentArcs);
  CHECK(code_of([] { parse_pd("X[1,4,2]"); }) == ErrorCode::MalformedCode);
  CHECK(code_of([] { parse_pd("X[1,4,2,5] + X[3,6,4,1] X[5,2,6,3]"); }) == ErrorCode::InconsistentArcs);
  try {
    parse_pd("X[1,4,2,5]\nY[3,6,4,1]\n");
    FAIL("expected MalformedCode");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("mirror and connected sum") {
  LinkDiagram t = fixture("trefoil_left");
  CHECK(mirror(t).writhe() == 3);
  CHECK(mirror(mirror(t)) == t);
  CHECK(mirror(t) == fixture("trefoil_right"));
  CHECK(connected_sum(t, t) == fixture("granny"));
  CHECK(connected_sum(t, mirror(t)) == fixture("square"));
  CHECK(code_of([&] { connected_sum(t, fixture("hopf")); }) == ErrorCode::NotAKnot);
}

TEST_CASE("skein recursion values") {
  CHECK(conway_skein(fixture("unknot")) == LaurentPoly(1));
  CHECK(conway_skein(fixture("trefoil_left")) == z("z^2+1"));
  CHECK(conway_skein(fixture("trefoil_right")) == z("z^2+1"));
  CHECK(conway_skein(fixture("figure_eight")) == z("1-z^2"));
  CHECK(conway_skein(fixture("5_1")) == z("z^4+3z^2+1"));
  CHECK(conway_skein(fixture("5_2")) == z("2z^2+1"));
  CHECK(conway_skein(fixture("6_1")) == z("1-2z^2"));
  CHECK(conway_skein(fixture("granny")) == z("z^4+2z^2+1"));
  CHECK(conway_skein(fixture("hopf")) == z("z"));
  CHECK(conway_skein(mirror(fixture("hopf"))) == z("-z"));
  LinkDiagram split;
  split.free_loops = 2;
  CHECK(conway_skein(split).is_zero());
}

TEST_CASE("skein inline checks and fault injection") {
  SkeinStats stats;
  conway_skein(fixture("5_2"), &stats);
  CHECK(stats.checks > 0);
  CHECK(stats.check_failures == 0);
  SkeinStats bad;
  SkeinOptions corrupt;
  corrupt.corrupt_skein = true;
  conway_skein(fixture("5_2"), &bad, corrupt);
  CHECK(bad.check_failures > 0);
  SkeinOptions tiny;
  tiny.budget = 2;
  CHECK(code_of([&] { conway_skein(fixture("6_1"), nullptr, tiny); }) == ErrorCode::RecursionBudgetExceeded);
}

TEST_CASE("even powers and Reidemeister smoke test") {
  for (const auto& name : knot_fixture_names()) {
    const LaurentPoly p = conway_skein(fixture(name));
    for (const auto& [e, c] : p.terms()) CHECK(e % 2 == 0);
  }
  LinkDiagram kinked = fixture("trefoil_4crossing");
  CHECK(conway_skein(kinked) == conway_skein(fixture("trefoil_left")));
  CHECK(conway_from_torsion(kinked) == conway_from_torsion(fixture("trefoil_left")));
}

TEST_CASE("Alexander polynomial matches the arc-matrix oracle") {
  for (const auto& name : knot_fixture_names()) {
    CAPTURE(name);
    LinkDiagram d = fixture(name);
    CHECK(alexander_poly(d).poly == oracle::alexander_from_arcs(d));
  }
  CHECK(alexander_poly(fixture("trefoil_left")).poly == LaurentPoly::parse("t^2-t+1"));
  CHECK(alexander_poly(fixture("unknot")).poly == LaurentPoly(1));
}

TEST_CASE("Alexander and Conway are related by t^(1/2) - t^(-1/2)") {
  for (const auto& name : knot_fixture_names()) {
    CAPTURE(name);
    LinkDiagram d = fixture(name);
    // nabla(u - u^-1) is the Alexander polynomial in t = u^2, up to +-u^k
    RatFunc lhs = conway_at_u(conway_skein(d));
    RatFunc rhs = RatFunc(alexander_poly(d).poly.substitute_power(2));
    auto ratio = (lhs / rhs).as_monomial();
    REQUIRE(ratio.has_value());
    CHECK(abs(ratio->first) == 1);
  }
}

TEST_CASE("torsion pipeline equals the skein pipeline") {
  for (const auto& name : knot_fixture_names()) {
    CAPTURE(name);
    LinkDiagram d = fixture(name);
    CHECK(conway_from_torsion(d) == conway_skein(d));
  }
  CHECK(code_of([] { conway_from_torsion(fixture("hopf")); }) == ErrorCode::NotAKnot);
}

TEST_CASE("canonical torsion is bar-symmetric and agrees across routes") {
  for (const auto& name : knot_fixture_names()) {
    CAPTURE(name);
    LinkDiagram d = fixture(name);
    TorsionRep c = canonical_normalize(surgery_torsion(d));
    CHECK(c.canonical);
    CHECK(c.value.bar() == c.value);
  }
  CHECK(code_of([] { canonical_normalize({RatFunc::parse("1+t"), false}); }) == ErrorCode::ParityError);
}

TEST_CASE("absolute torsion values") {
  // T(F_a) = nabla(z) / z^2 with z^2 = a - 2 + 1/a
  CHECK(absolute_torsion_at(fixture("unknot"), Rational(2)) == 2);
  CHECK(absolute_torsion_at(fixture("trefoil_left"), Rational(2)) == 3);
  CHECK(absolute_torsion_at(fixture("trefoil_right"), Rational(2)) == 3);
  CHECK(absolute_torsion_at(fixture("figure_eight"), Rational(2)) == 1);
  CHECK(absolute_torsion_at(fixture("5_2"), Rational(3)) == Rational(11, 4));
  CHECK(code_of([] { absolute_torsion_at(fixture("trefoil_left"), Rational(1)); }) == ErrorCode::NonAcyclicBundle);
  CHECK(code_of([] { absolute_torsion_at(fixture("6_1"), Rational(2)); }) == ErrorCode::NonAcyclicBundle);
  CHECK(code_of([] { absolute_torsion_at(fixture("6_1"), Rational(1, 2)); }) == ErrorCode::NonAcyclicBundle);
  CHECK(code_of([] { absolute_torsion_at(fixture("unknot"), Rational(0)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { absolute_torsion_at(fixture("trefoil_left"), std::polar(1.0, std::acos(0.5))); }) ==
        ErrorCode::NonAcyclicBundle);
}

TEST_CASE("surgery complex shape") {
  TwistedCWComplex x = surgery_complex(fixture("figure_eight"));
  CHECK(x.cells == std::vector<std::size_t>{1, 4, 4, 1});
  CHECK(x.betti == std::vector<long>{1, 1, 1, 1});
  CHECK_NOTHROW(x.validate());
  ChainComplex<RatFunc> e = exterior_complex_qt(fixture("figure_eight"));
  CHECK(e.dims.dims == std::vector<std::size_t>{1, 4, 3});
}

TEST_CASE("Wirtinger presentation") {
  WirtingerPresentation w = wirtinger(fixture("trefoil_left"));
  CHECK(w.generators == 3);
  CHECK(w.relators.size() == 3);
  int exponent_sum = 0;
  for (const auto& [g, e] : w.longitude) exponent_sum += e;
  CHECK(exponent_sum == 0);
  Matrix<LaurentPoly> f = fox_matrix(w.relators, w.generators);
  // fundamental formula: the Fox columns sum against (x_j - 1) to zero
  for (std::size_t r = 0; r < f.cols(); ++r) {
    LaurentPoly s;
    for (std::size_t j = 0; j < f.rows(); ++j) s += f(j, r) * (LaurentPoly::t() - LaurentPoly(1));
    CHECK(s.is_zero());
  }
}
