#include <doctest.h>

#include <string>

#include "torsionlab/torsionlab.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { tl_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

}  // namespace

TEST_CASE("C API: chain complex torsion") {
  tl_complex* c = nullptr;
  REQUIRE(tl_complex_parse("field rational\ndims 1 1\nd 1\n4\n", nullptr, &c) == TL_OK);
  Str torsion, alpha, beta, field;
  int n = -1;
  CHECK(tl_complex_torsion(c, &torsion.p, &n, &alpha.p, &beta.p) == TL_OK);
  CHECK(torsion.s() == "1/4");
  CHECK(n == 0);
  CHECK(alpha.s() == "1 0");
  CHECK(beta.s() == "0 0");
  CHECK(tl_complex_field(c, &field.p) == TL_OK);
  CHECK(field.s() == "rational");
  CHECK(tl_complex_torsion(c, nullptr, nullptr, nullptr, nullptr) == TL_OK);
  tl_complex_free(c);
}

TEST_CASE("C API: field override and errors") {
  tl_complex* c = nullptr;
  REQUIRE(tl_complex_parse("dims 1 1\nd 1\nt-1\n", "laurent", &c) == TL_OK);
  Str torsion;
  CHECK(tl_complex_torsion(c, &torsion.p, nullptr, nullptr, nullptr) == TL_OK);
  CHECK(torsion.s() == "(1)/(t-1)");
  tl_complex_free(c);
  c = nullptr;
  CHECK(tl_complex_parse("dims 1 1 1\nd 1\n1\nd 2\n1\n", nullptr, &c) == TL_COMPLEX_INVALID);
  CHECK(c == nullptr);
  CHECK(std::string(tl_last_error()).find("ComplexInvalid") != std::string::npos);
  CHECK(tl_complex_parse("dims 1 1\nd 1\nx\n", nullptr, &c) == TL_PARSE_ERROR);
  CHECK(std::string(tl_last_error()).find("line 3") != std::string::npos);
  CHECK(tl_complex_parse(nullptr, nullptr, &c) == TL_INVALID_ARGUMENT);
  CHECK(tl_complex_parse("dims 1\n", "reals", &c) == TL_INVALID_ARGUMENT);
  tl_complex_free(nullptr);
  CHECK(std::string(tl_status_name(TL_NON_ACYCLIC_BUNDLE)) == "NonAcyclicBundle");
  CHECK(std::string(tl_status_name(999)) == "Unknown");
}

TEST_CASE("C API: knot invariants") {
  tl_knot* k = nullptr;
  REQUIRE(tl_knot_parse(kTrefoil, &k) == TL_OK);
  int crossings = 0, components = 0, writhe = 0;
  CHECK(tl_knot_info(k, &crossings, &components, &writhe) == TL_OK);
  CHECK(crossings == 3);
  CHECK(components == 1);
  CHECK(writhe == -3);
  Str conway, skein, alex, canon, t, nabla;
  size_t nodes = 0, checks = 0, failures = 1;
  CHECK(tl_knot_conway(k, &conway.p) == TL_OK);
  CHECK(conway.s() == "z^2+1");
  CHECK(tl_knot_conway_skein(k, &skein.p, &nodes, &checks, &failures) == TL_OK);
  CHECK(skein.s() == "z^2+1");
  CHECK(checks > 0);
  CHECK(failures == 0);
  int sign = 0;
  CHECK(tl_knot_alexander(k, &alex.p, &sign) == TL_OK);
  CHECK(alex.s() == "t^2-t+1");
  CHECK(sign == 1);
  CHECK(tl_knot_canonical_torsion(k, &canon.p) == TL_OK);
  CHECK(tl_knot_abs_torsion(k, "2", &t.p, &nabla.p) == TL_OK);
  CHECK(t.s() == "3");
  CHECK(nabla.s() == "3/2");
  Str bad;
  CHECK(tl_knot_abs_torsion(k, "1", &bad.p, nullptr) == TL_NON_ACYCLIC_BUNDLE);
  CHECK(bad.p == nullptr);
  CHECK(std::string(tl_last_error()).find("a != 1") != std::string::npos);
  CHECK(tl_knot_abs_torsion(k, "zz", &bad.p, nullptr) == TL_PARSE_ERROR);
  Str report;
  int all = 0;
  CHECK(tl_knot_verify(k, 2, &report.p, &all) == TL_OK);
  CHECK(all == 1);
  CHECK(report.s().find("conway_pipelines: PASS") != std::string::npos);
  tl_knot_free(k);
}

TEST_CASE("C API: links and malformed codes") {
  tl_knot* k = nullptr;
  CHECK(tl_knot_parse("X[1,2,3]", &k) == TL_MALFORMED_CODE);
  REQUIRE(tl_knot_parse("X[1,3,2,4] X[3,1,4,2]", &k) == TL_OK);
  Str p;
  CHECK(tl_knot_conway(k, &p.p) == TL_NOT_A_KNOT);
  CHECK(tl_knot_conway_skein(k, &p.p, nullptr, nullptr, nullptr) == TL_OK);
  CHECK(p.s() == "z");
  tl_knot_free(k);
}

TEST_CASE("C API: last error is per thread and cleared on success") {
  tl_knot* k = nullptr;
  CHECK(tl_knot_parse("X[1]", &k) != TL_OK);
  CHECK(std::string(tl_last_error()) != "");
  REQUIRE(tl_knot_parse("", &k) == TL_OK);
  CHECK(std::string(tl_last_error()) == "");
  tl_knot_free(k);
}
