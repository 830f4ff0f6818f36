#include "verify/acceptance.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "chain/det_torsion.hpp"
#include "error.hpp"
#include "euler/euler_cw.hpp"
#include "knots/knot_torsion.hpp"
#include "knots/skein.hpp"
#include "verify/checks.hpp"

#ifndef TORSIONLAB_DEFAULT_FIXTURES
#define TORSIONLAB_DEFAULT_FIXTURES "fixtures/knots"
#endif

namespace torsionlab {

namespace {

using Fixtures = std::vector<std::pair<std::string, LinkDiagram>>;

Fixtures load_all(const std::string& dir) {
  Fixtures out;
  for (const auto& name : knot_fixture_names()) out.emplace_back(name, load_fixture(dir, name));
  return out;
}

std::string dims_str(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// ---- criterion 1, 2, 3: knot pipelines

CheckResult pipelines(const Fixtures& fx) {
  std::string detail;
  for (const auto& [name, d] : fx) {
    CheckResult r = check_conway_pipelines(d);
    if (!r.pass) return {"", false, name + ": " + r.detail};
    if (name == "unknot" && conway_skein(d) != LaurentPoly(1)) return {"", false, "unknot: nabla != 1"};
    detail += (detail.empty() ? "" : "; ") + name + " " + conway_skein(d).to_string('z');
  }
  return {"", true, detail};
}

CheckResult symbolic_identity(const Fixtures& fx) {
  std::size_t literal = 0;
  std::size_t corrected = 0;
  std::string witness;
  const RatFunc z = RatFunc::t(1) - RatFunc::t(-1);
  for (const auto& [name, d] : fx) {
    RatFunc lhs = absolute_torsion_doubled(surgery_complex(d));
    RatFunc rhs = conway_at_u(conway_skein(d));
    if (lhs - rhs == RatFunc()) {
      ++literal;
    } else if (witness.empty()) {
      witness = name + ": T(u^2) = " + lhs.to_string('u') + ", nabla(u-u^-1) = " + rhs.to_string('u');
    }
    if (z * z * lhs == rhs) ++corrected;
  }
  const std::string n = std::to_string(fx.size());
  if (literal == fx.size()) return {"", true, "T(u^2) = nabla(u-u^-1) on " + n + "/" + n + " fixtures"};
  return {"", false,
          "T(u^2) - nabla(u-u^-1) != 0 on " + std::to_string(fx.size() - literal) + "/" + n + " fixtures; witness " +
              witness + "; (u-u^-1)^2 T(u^2) = nabla(u-u^-1) holds on " + std::to_string(corrected) + "/" + n};
}

CheckResult skein_inline(const std::string& dir, const Fixtures& fx) {
  SkeinStats total;
  Fixtures all = fx;
  for (const char* extra : {"trefoil_4crossing", "hopf"}) all.emplace_back(extra, load_fixture(dir, extra));
  for (const auto& [name, d] : all) {
    SkeinStats s;
    conway_skein(d, &s);
    total.nodes += s.nodes;
    total.checks += s.checks;
    total.check_failures += s.check_failures;
    if (s.check_failures) return {"", false, name + ": " + std::to_string(s.check_failures) + " inline checks failed"};
  }
  return {"", total.checks > 0,
          std::to_string(all.size()) + " runs, nodes=" + std::to_string(total.nodes) +
              " checks=" + std::to_string(total.checks) + " failures=" + std::to_string(total.check_failures)};
}

// ---- criterion 4: sign functions against direct sums

int prefix_parity(const std::vector<std::size_t>& v, int q) {
  std::size_t s = 0;
  for (int j = 0; j <= q && j < static_cast<int>(v.size()); ++j) s += v[static_cast<std::size_t>(j)];
  return static_cast<int>(s % 2);
}

int oracle_n(const std::vector<std::size_t>& c, const std::vector<std::size_t>& h) {
  int s = 0;
  for (int q = 0; q < static_cast<int>(c.size()); ++q) s += prefix_parity(c, q) * prefix_parity(h, q);
  return s % 2;
}

int oracle_m(const std::vector<std::size_t>& v, const std::vector<std::size_t>& w) {
  int s = 0;
  for (int q = 1; q < static_cast<int>(v.size()); ++q) s += prefix_parity(v, q - 1) * prefix_parity(w, q);
  return s % 2;
}

int oracle_s(const std::vector<std::size_t>& v) {
  const int m = static_cast<int>(v.size()) - 1;
  int s = 0;
  for (int q = 1; q <= m; ++q) s += prefix_parity(v, q - 1) * prefix_parity(v, q);
  for (int q = 0; 2 * q <= m - 1; ++q) s += prefix_parity(v, 2 * q);
  return s % 2;
}

std::vector<std::vector<std::size_t>> all_dims(int m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> v(static_cast<std::size_t>(m + 1), 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == 2) v[i++] = 0;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

CheckResult sign_oracle(const SignTable& table) {
  std::size_t cases = 0;
  for (int m = 0; m <= 5; ++m) {
    const auto dims = all_dims(m);
    for (const auto& v : dims) {
      const GradedDims gv{v};
      for (const auto& w : dims) {
        const GradedDims gw{w};
        if (table.n(gv, gw) != oracle_n(v, w))
          return {"", false, "N(C) mismatch at dims " + dims_str(v) + ", homology " + dims_str(w)};
        if (table.m(gv, gw) != oracle_m(v, w))
          return {"", false, "M(V,W) mismatch at V " + dims_str(v) + ", W " + dims_str(w)};
        cases += 2;
      }
      if (m % 2 == 1) {
        if (table.s(gv) != oracle_s(v)) return {"", false, "s(V) mismatch at V " + dims_str(v)};
      } else {
        try {
          table.s(gv);
          return {"", false, "s(V) accepted even top degree at V " + dims_str(v)};
        } catch (const Error& e) {
          if (e.code() != ErrorCode::EvenTopDegree) throw;
        }
      }
      ++cases;
    }
    if (m > 0) {
      try {
        table.m(GradedDims{std::vector<std::size_t>(static_cast<std::size_t>(m + 1), 1)},
                GradedDims{std::vector<std::size_t>(static_cast<std::size_t>(m), 1)});
        return {"", false, "M(V,W) accepted mismatched top degrees at m = " + std::to_string(m)};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegreeMismatch) throw;
      }
    }
  }
  return {"", true, std::to_string(cases) + " cases, m <= 5, dims <= 2"};
}

// ---- criterion 5: choice independence and linearity of phi_C

CheckResult phi_well_defined(const AcceptanceOptions& opts, const SignTable& table) {
  std::mt19937_64 rng(opts.seed);
  std::size_t acyclic = 0;
  std::size_t rechoices = 0;
  for (std::size_t n = 0; n < opts.random_complexes; ++n) {
    ChainComplex<Rational> c = random_integer_complex(rng, 4, 4, -2, 2);
    HomologyData<Rational> h = compute_homology(c);
    const int sign = table.n(c.dims, h.ranks);
    const Rational tau = torsion_phi_with_sign(c, Rational(1), h, sign).value;
    if (tau == 0) return {"", false, "complex " + std::to_string(n) + " " + dims_str(c.dims.dims) + ": zero coordinate"};
    bool acyc = true;
    for (std::size_t b : h.ranks.dims) acyc = acyc && b == 0;
    acyclic += acyc;
    for (int k = 0; k < 3; ++k) {
      HomologyData<Rational> other = perturb_choices(c, h, rng);
      // the frame of H must stay the same, so only b_q and cycle reps move
      const Rational again = torsion_phi_with_sign(c, Rational(1), other, sign).value;
      ++rechoices;
      if (again != tau)
        return {"", false,
                "complex " + std::to_string(n) + " dims " + dims_str(c.dims.dims) + ": " + tau.get_str() + " vs " +
                    again.get_str() + " after re-choice"};
    }
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    int p = 0;
    while (p == 0) p = num(rng);
    Rational g(p, den(rng));
    g.canonicalize();
    const Rational scaled = torsion_phi_with_sign(c, Rational(g), h, sign).value;
    if (scaled != g * tau)
      return {"", false, "complex " + std::to_string(n) + ": phi(g c) = " + scaled.get_str() + ", g phi(c) = " +
                             Rational(g * tau).get_str()};
  }
  return {"", true,
          std::to_string(opts.random_complexes) + " complexes (" + std::to_string(acyclic) + " acyclic), " +
              std::to_string(rechoices) + " re-choices, exact"};
}

// ---- criteria 6-9: Euler structures on surgeries

CheckResult per_fixture(const Fixtures& fx, const std::function<CheckResult(const LinkDiagram&)>& check) {
  std::string detail;
  for (const auto& [name, d] : fx) {
    CheckResult r = check(d);
    if (!r.pass) return {"", false, name + ": " + r.detail};
    detail = r.detail;
  }
  return {"", true, std::to_string(fx.size()) + " fixtures; last: " + detail};
}

CheckResult pr_products(const Fixtures& fx) {
  std::size_t count = 0;
  for (const auto& [name, d] : fx) {
    if (name != "trefoil_left" && name != "trefoil_right" && name != "figure_eight") continue;
    for (const Rational& a : {Rational(2), Rational(3), Rational(-1, 2)}) {
      CheckResult r = check_pr_product(d, a);
      if (!r.pass) return {"", false, name + ": " + r.detail};
      ++count;
    }
  }
  return {"", count > 0, std::to_string(count) + " (knot, a) pairs, <T,T> = 1 and <tau,tau> = a^(2h) for h = +-1"};
}

// ---- criterion 10

CheckResult non_acyclic(const Fixtures& fx) {
  std::vector<std::pair<std::string, std::function<void()>>> cases;
  auto find = [&](const std::string& name) -> const LinkDiagram& {
    for (const auto& [n, d] : fx)
      if (n == name) return d;
    fail(ErrorCode::Internal, "missing fixture " + name);
  };
  for (const auto& [name, d] : fx) {
    const LinkDiagram* dp = &d;
    cases.emplace_back(name + " at a = 1", [dp] { absolute_torsion_at(*dp, Rational(1)); });
    cases.emplace_back(name + " at a = 1 (complex)", [dp] { absolute_torsion_at(*dp, Complex(1, 0)); });
    cases.emplace_back(name + " cell route at a = 1",
                       [dp] { absolute_torsion(surgery_complex(*dp), FlatBundle<Rational>::line(Rational(1))); });
  }
  const LinkDiagram& six = find("6_1");
  const LinkDiagram& tref = find("trefoil_left");
  for (const Rational& a : {Rational(2), Rational(1, 2)}) {
    cases.emplace_back("6_1 at a = " + a.get_str(), [&six, a] { absolute_torsion_at(six, a); });
    cases.emplace_back("6_1 cell route at a = " + a.get_str(),
                       [&six, a] { absolute_torsion(surgery_complex(six), FlatBundle<Rational>::line(a)); });
  }
  for (double theta : {std::numbers::pi / 3, -std::numbers::pi / 3})
    cases.emplace_back("trefoil at e^(i" + std::to_string(theta) + ")",
                       [&tref, theta] { absolute_torsion_at(tref, std::polar(1.0, theta)); });
  for (const auto& [label, run] : cases) {
    try {
      run();
      return {"", false, label + ": returned a value"};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonAcyclicBundle) return {"", false, label + ": raised " + e.what()};
    }
  }
  return {"", true, std::to_string(cases.size()) + " inputs raised NonAcyclicBundle"};
}

}  // namespace

const std::vector<std::string>& knot_fixture_names() {
  static const std::vector<std::string> names = {"unknot", "trefoil_left", "trefoil_right", "figure_eight", "5_1",
                                                 "5_2",    "6_1",          "granny",        "square"};
  return names;
}

std::string default_fixtures_dir() {
  if (const char* env = std::getenv("TORSIONLAB_FIXTURES"); env && *env) return env;
  return TORSIONLAB_DEFAULT_FIXTURES;
}

LinkDiagram load_fixture(const std::string& dir, const std::string& name) {
  const std::string path = dir + "/" + name + ".pd";
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MalformedCode, "cannot read fixture " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_pd(text.str());
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  const std::string dir = opts.fixtures_dir.empty() ? default_fixtures_dir() : opts.fixtures_dir;
  const SignTable table = opts.corrupt_sign_table ? corrupted_sign_table() : default_sign_table();
  // fixtures are parsed once per criterion so criteria stay independent
  auto with_fixtures = [dir](std::function<CheckResult(const Fixtures&)> body) {
    return [dir, body] { return body(load_all(dir)); };
  };
  struct Spec {
    int id;
    std::string name;
    std::function<CheckResult()> run;
  };
  std::vector<Spec> specs = {
      {1, "conway-pipelines", with_fixtures(pipelines)},
      {2, "absolute-torsion-equals-conway", with_fixtures(symbolic_identity)},
      {3, "skein-inline-checks", with_fixtures([dir](const Fixtures& fx) { return skein_inline(dir, fx); })},
      {4, "sign-functions-oracle", [table] { return sign_oracle(table); }},
      {5, "phi-choice-independence", [opts, table] { return phi_well_defined(opts, table); }},
      {6, "euler-action-law", with_fixtures([](const Fixtures& fx) { return per_fixture(fx, check_action_law); })},
      {7, "bar-symmetry-and-realness", with_fixtures([](const Fixtures& fx) {
         CheckResult bar = per_fixture(fx, check_bar_symmetry);
         if (!bar.pass) return bar;
         CheckResult real = per_fixture(fx, [](const LinkDiagram& d) { return check_realness(d, 20); });
         if (!real.pass) return real;
         return CheckResult{"", true, "tau0 bar-invariant; " + real.detail};
       })},
      {8, "pr-product", with_fixtures(pr_products)},
      {9, "phase-law",
       with_fixtures([](const Fixtures& fx) { return per_fixture(fx, [](const LinkDiagram& d) {
                                               return check_phase_law(d, 10);
                                             }); })},
      {10, "non-acyclic-errors", with_fixtures(non_acyclic)},
  };
  std::vector<double> millis(specs.size());
  std::vector<std::pair<std::string, std::function<CheckResult()>>> tasks;
  for (std::size_t i = 0; i < specs.size(); ++i)
    tasks.emplace_back(specs[i].name, [&specs, &millis, i] {
      const auto start = std::chrono::steady_clock::now();
      CheckResult r = specs[i].run();
      millis[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return r;
    });
  std::vector<CheckResult> results = run_checks(tasks, opts.jobs);
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < specs.size(); ++i)
    out.push_back({specs[i].id, specs[i].name, results[i].pass, results[i].detail, millis[i]});
  return out;
}

}  // namespace torsionlab
