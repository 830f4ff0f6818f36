#include "torsionlab/torsionlab.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "chain/complex_io.hpp"
#include "error.hpp"
#include "knots/knot_torsion.hpp"
#include "knots/skein.hpp"
#include "verify/acceptance.hpp"
#include "verify/checks.hpp"

struct tl_complex {
  torsionlab::AnyComplex value;
};

struct tl_knot {
  torsionlab::LinkDiagram value;
};

namespace {

using namespace torsionlab;

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

// Runs `body`, mapping exceptions to status codes. Out-strings are only
// written on success, so callers never free partial results.
template <class Fn>
int guarded(Fn&& body) {
  try {
    body();
    last_error.clear();
    return TL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "Internal: out of memory";
    return TL_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return TL_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

const LinkDiagram& knot_of(const tl_knot* k) {
  require(k, "knot");
  if (k->value.component_count() != 1)
    fail(ErrorCode::NotAKnot, "diagram has " + std::to_string(k->value.component_count()) + " components");
  return k->value;
}

// Components below 1e-12 relative to |z| are rounding noise.
Complex snap(Complex z) {
  const double tol = 1e-12 * std::max(1.0, std::abs(z));
  return {std::abs(z.real()) <= tol ? 0.0 : z.real(), std::abs(z.imag()) <= tol ? 0.0 : z.imag()};
}

template <class F>
F unit_of(const ChainComplex<F>&) {
  return F(1);
}

// nabla(z) with z^2 = a - 2 + 1/a; knots have even Conway polynomials.
template <class F>
F conway_at_a(const LaurentPoly& conway, const F& a) {
  const F z2 = a - F(2) + F(1) / a;
  F sum(0);
  for (const auto& [e, c] : conway.terms()) {
    if (e % 2 != 0) fail(ErrorCode::NonPolynomialInZ, "odd power of z in the Conway polynomial of a knot");
    F term = ipow(z2, e / 2);
    if constexpr (std::is_same_v<F, Rational>) {
      sum += c * term;
    } else {
      sum += c.get_d() * term;
    }
  }
  return sum;
}

}  // namespace

extern "C" {

const char* tl_version(void) { return "0.1.0"; }

const char* tl_status_name(int status) {
  if (status < 0 || status > TL_INTERNAL) return "Unknown";
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* tl_last_error(void) { return last_error.c_str(); }

void tl_string_free(char* s) { std::free(s); }

int tl_fixtures_dir(char** dir) {
  return guarded([&] {
    require(dir, "dir");
    *dir = dup(default_fixtures_dir());
  });
}

int tl_complex_parse(const char* text, const char* field, tl_complex** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::optional<FieldKind> kind;
    if (field) kind = parse_field_name(field);
    auto c = std::make_unique<tl_complex>(tl_complex{parse_chain_complex(text, kind)});
    validate(c->value);
    *out = c.release();
  });
}

void tl_complex_free(tl_complex* c) { delete c; }

int tl_complex_field(const tl_complex* c, char** field) {
  return guarded([&] {
    require(c, "complex");
    put(field, field_name(c->value.field));
  });
}

int tl_complex_print(const tl_complex* c, char** text) {
  return guarded([&] {
    require(c, "complex");
    put(text, print_chain_complex(c->value));
  });
}

int tl_complex_torsion(const tl_complex* c, char** torsion, int* n_sign, char** alpha_out, char** beta_out) {
  return guarded([&] {
    require(c, "complex");
    std::string value;
    GradedDims chains;
    GradedDims homology;
    std::visit(
        [&](const auto& cc) {
          auto h = compute_homology(cc);
          value = format_scalar(torsion_phi(cc, unit_of(cc), h).value);
          chains = cc.dims;
          homology = h.ranks;
        },
        c->value.complex);
    const int n = sign_N(chains, homology);
    std::string a = join(alpha(chains));
    std::string b;
    for (std::size_t i = 0; i < homology.dims.size(); ++i) b += (i ? " " : "") + std::to_string(homology.dims[i]);
    char* t = dup(value);
    char* as = nullptr;
    char* bs = nullptr;
    try {
      as = dup(a);
      bs = dup(b);
    } catch (...) {
      std::free(t);
      std::free(as);
      throw;
    }
    if (torsion) *torsion = t; else std::free(t);
    if (alpha_out) *alpha_out = as; else std::free(as);
    if (beta_out) *beta_out = bs; else std::free(bs);
    if (n_sign) *n_sign = n;
  });
}

int tl_knot_parse(const char* text, tl_knot** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new tl_knot{parse_pd(text)};
  });
}

void tl_knot_free(tl_knot* k) { delete k; }

int tl_knot_info(const tl_knot* k, int* crossings, int* components, int* writhe) {
  return guarded([&] {
    require(k, "knot");
    if (crossings) *crossings = static_cast<int>(k->value.crossings.size());
    if (components) *components = k->value.component_count();
    if (writhe) *writhe = k->value.writhe();
  });
}

int tl_knot_conway(const tl_knot* k, char** poly) {
  return guarded([&] { put(poly, conway_from_torsion(knot_of(k)).to_string('z')); });
}

int tl_knot_conway_skein(const tl_knot* k, char** poly, size_t* nodes, size_t* checks, size_t* failures) {
  return guarded([&] {
    require(k, "knot");
    SkeinStats stats;
    LaurentPoly p = conway_skein(k->value, &stats);
    put(poly, p.to_string('z'));
    if (nodes) *nodes = stats.nodes;
    if (checks) *checks = stats.checks;
    if (failures) *failures = stats.check_failures;
  });
}

int tl_knot_alexander(const tl_knot* k, char** poly, int* sign_at_one) {
  return guarded([&] {
    AlexanderPoly a = alexander_poly(knot_of(k));
    put(poly, a.poly.to_string('t'));
    if (sign_at_one) *sign_at_one = a.sign_at_one;
  });
}

int tl_knot_canonical_torsion(const tl_knot* k, char** value) {
  return guarded([&] { put(value, canonical_normalize(surgery_torsion(knot_of(k))).value.to_string('t')); });
}

int tl_knot_abs_torsion(const tl_knot* k, const char* a, char** torsion, char** conway_value) {
  return guarded([&] {
    const LinkDiagram& d = knot_of(k);
    require(a, "a");
    SamplePoint p = parse_sample(a);
    std::string t;
    std::string c;
    if (p.is_exact) {
      t = absolute_torsion_at(d, p.exact).get_str();
      c = conway_at_a(conway_from_torsion(d), p.exact).get_str();
    } else {
      t = to_string(snap(absolute_torsion_at(d, p.floating)));
      c = to_string(snap(conway_at_a(conway_from_torsion(d), p.floating)));
    }
    char* ts = dup(t);
    char* cs = nullptr;
    try {
      cs = dup(c);
    } catch (...) {
      std::free(ts);
      throw;
    }
    if (torsion) *torsion = ts; else std::free(ts);
    if (conway_value) *conway_value = cs; else std::free(cs);
  });
}

int tl_knot_verify(const tl_knot* k, int jobs, char** report, int* all_pass) {
  return guarded([&] {
    const LinkDiagram d = knot_of(k);
    const LaurentPoly alex = alexander_poly(d).poly;
    Rational a = 2;
    while (alex.evaluate(a) == 0) a += 1;
    std::vector<std::pair<std::string, std::function<CheckResult()>>> tasks = {
        {"conway_pipelines", [d] { return check_conway_pipelines(d); }},
        {"skein_inline", [d] { return check_skein_inline(d); }},
        {"bar_symmetry", [d] { return check_bar_symmetry(d); }},
        {"realness", [d] { return check_realness(d, 20); }},
        {"phase_law", [d] { return check_phase_law(d, 10); }},
        {"pr_product", [d, a] { return check_pr_product(d, a); }},
        {"action_law", [d] { return check_action_law(d); }},
    };
    bool ok = true;
    std::string text;
    for (const auto& r : run_checks(tasks, jobs)) {
      ok = ok && r.pass;
      text += r.name + ": " + (r.pass ? "PASS " : "FAIL ") + r.detail + "\n";
    }
    put(report, text);
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

int tl_selftest(const char* fixtures_dir, int jobs, int corrupt_sign_table, int timing, char** report,
                int* all_pass) {
  return guarded([&] {
    AcceptanceOptions opts;
    if (fixtures_dir) opts.fixtures_dir = fixtures_dir;
    opts.jobs = jobs;
    opts.corrupt_sign_table = corrupt_sign_table != 0;
    bool ok = true;
    std::string text;
    for (const auto& r : run_acceptance(opts)) {
      ok = ok && r.pass;
      text += std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail;
      if (timing) {
        char buf[48];
        std::snprintf(buf, sizeof buf, " (%.1f ms)", r.millis);
        text += buf;
      }
      text += "\n";
    }
    put(report, text);
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

}  // extern "C"
