#include "verify/checks.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "error.hpp"
#include "euler/euler_cw.hpp"
#include "knots/knot_torsion.hpp"
#include "knots/skein.hpp"

namespace torsionlab {

namespace {

CheckResult make(std::string name, bool pass, std::string detail) { return {std::move(name), pass, std::move(detail)}; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Residuals as a decade bound, so reports do not depend on rounding noise.
std::string bound(double x) {
  if (x == 0) return "0";
  const int k = std::min(15, static_cast<int>(std::floor(-std::log10(x))));
  return k <= 0 ? fmt(x) : "< 1e-" + std::to_string(k);
}

std::string fmt(const Complex& z) { return to_string(z); }

RatFunc canonical_tau(const TwistedCWComplex& x) {
  return torsion_euler(x, canonical_euler(x), FlatBundle<RatFunc>::line(RatFunc::t())).value;
}

}  // namespace

std::vector<CheckResult> run_checks(const std::vector<std::pair<std::string, std::function<CheckResult()>>>& tasks,
                                    int jobs) {
  std::vector<CheckResult> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i].second();
        if (out[i].name.empty()) out[i].name = tasks[i].first;
      } catch (const std::exception& e) {
        out[i] = make(tasks[i].first, false, std::string("raised ") + e.what());
      }
    }
  };
  const auto n = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(n, tasks.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

std::vector<Complex> unit_circle_samples(std::size_t n, const LaurentPoly& alexander) {
  std::vector<Complex> out;
  for (std::size_t k = 0; k < n; ++k) {
    double theta = 2 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    Complex a = std::polar(1.0, theta);
    while (std::abs(alexander.evaluate(a)) <= 1e-6 || std::abs(a - 1.0) <= 1e-6) {
      theta += 1e-3;
      a = std::polar(1.0, theta);
    }
    out.push_back(a);
  }
  return out;
}

double angle_distance_mod_pi(double x, double y) {
  double r = std::fmod(x - y, std::numbers::pi);
  if (r < 0) r += std::numbers::pi;
  return std::min(r, std::numbers::pi - r);
}

ChainComplex<Rational> random_integer_complex(std::mt19937_64& rng, int max_top, std::size_t max_dim, int lo,
                                              int hi) {
  std::uniform_int_distribution<int> top_dist(1, max_top);
  std::uniform_int_distribution<std::size_t> dim_dist(0, max_dim);
  std::uniform_int_distribution<int> entry(lo, hi);
  ChainComplex<Rational> c;
  const int m = top_dist(rng);
  for (int q = 0; q <= m; ++q) c.dims.dims.push_back(dim_dist(rng));
  for (int q = 1; q <= m; ++q) {
    const std::size_t rows = c.dims[q - 1];
    const std::size_t cols = c.dims[q];
    Matrix<Rational> d(rows, cols);
    if (q == 1) {
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t j = 0; j < cols; ++j) d(r, j) = entry(rng);
    } else {
      // integer vectors in range killed by d_{q-1}
      const Matrix<Rational>& prev = c.d.back();
      std::vector<std::vector<int>> kernel;
      std::vector<int> v(rows, lo);
      const auto span = static_cast<std::size_t>(hi - lo + 1);
      std::size_t total = 1;
      for (std::size_t i = 0; i < rows; ++i) total *= span;
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (std::size_t i = 0; i < rows; ++i) {
          v[i] = lo + static_cast<int>(rest % span);
          rest /= span;
        }
        bool zero = true;
        for (std::size_t r = 0; r < prev.rows() && zero; ++r) {
          Rational s = 0;
          for (std::size_t i = 0; i < rows; ++i) s += prev(r, i) * v[i];
          zero = s == 0;
        }
        if (zero) kernel.push_back(v);
      }
      std::uniform_int_distribution<std::size_t> pick(0, kernel.size() - 1);
      for (std::size_t j = 0; j < cols; ++j) {
        const auto& col = kernel[pick(rng)];
        for (std::size_t r = 0; r < rows; ++r) d(r, j) = col[r];
      }
    }
    c.d.push_back(std::move(d));
  }
  c.validate();
  return c;
}

CheckResult check_conway_pipelines(const LinkDiagram& d) {
  LaurentPoly fox = conway_from_torsion(d);
  LaurentPoly skein = conway_skein(d);
  if (fox == skein) return make("conway_pipelines", true, "nabla = " + skein.to_string('z'));
  return make("conway_pipelines", false,
              "torsion route " + fox.to_string('z') + " != skein route " + skein.to_string('z') + " for " +
                  std::to_string(d.crossings.size()) + "-crossing diagram");
}

CheckResult check_skein_inline(const LinkDiagram& d) {
  SkeinStats stats;
  conway_skein(d, &stats);
  std::string detail = "nodes=" + std::to_string(stats.nodes) + " checks=" + std::to_string(stats.checks) +
                       " failures=" + std::to_string(stats.check_failures);
  return make("skein_inline", stats.checks > 0 && stats.check_failures == 0, detail);
}

CheckResult check_bar_symmetry(const LinkDiagram& d) {
  TwistedCWComplex x = surgery_complex(d);
  RatFunc tau = canonical_tau(x);
  RatFunc fox = canonical_normalize(surgery_torsion(d)).value;
  if (tau.bar() != tau) return make("bar_symmetry", false, "bar(tau0) = " + tau.bar().to_string() + " != " + tau.to_string());
  if (tau != fox)
    return make("bar_symmetry", false, "cell route " + tau.to_string() + " != presentation route " + fox.to_string());
  return make("bar_symmetry", true, "tau0 = " + tau.to_string());
}

CheckResult check_realness(const LinkDiagram& d, std::size_t samples) {
  TwistedCWComplex x = surgery_complex(d);
  AlexanderPoly alex = alexander_poly(d);
  RatFunc canon = canonical_normalize(surgery_torsion(d)).value;
  double worst_im = 0;
  double worst_diff = 0;
  for (const Complex& a : unit_circle_samples(samples, alex.poly)) {
    Complex t = absolute_torsion(x, FlatBundle<Complex>::line(a));
    Complex other = absolute_torsion_at(canon, alex.poly, a);
    const double scale = std::max(1.0, std::abs(t));
    worst_im = std::max(worst_im, std::abs(t.imag()) / scale);
    worst_diff = std::max(worst_diff, std::abs(t - other) / scale);
    if (std::abs(t.imag()) > 1e-9 * scale || std::abs(t - other) > 1e-9 * scale)
      return make("realness", false,
                  "a = " + fmt(a) + ": T = " + fmt(t) + ", presentation route " + fmt(other));
  }
  return make("realness", true,
              std::to_string(samples) + " samples, max |Im T| " + bound(worst_im) + ", route gap " + bound(worst_diff));
}

CheckResult check_phase_law(const LinkDiagram& d, std::size_t samples) {
  TwistedCWComplex x = surgery_complex(d);
  AlexanderPoly alex = alexander_poly(d);
  const long h0 = canonical_euler(x);
  double worst = 0;
  for (const Complex& a : unit_circle_samples(samples, alex.poly)) {
    auto f = FlatBundle<Complex>::line(a);
    for (long off : {1L, -1L, 2L}) {
      Complex tau = torsion_euler(x, h0 + off, f).value;
      double measured = phase(tau, x, f);
      double expected = 0.5 * std::arg(std::pow(a, static_cast<double>(2 * off)));
      double gap = angle_distance_mod_pi(measured, expected);
      worst = std::max(worst, gap);
      if (gap > 1e-9)
        return make("phase_law", false,
                    "a = " + fmt(a) + ", offset " + std::to_string(off) + ": phase " + fmt(measured) + ", expected " +
                        fmt(expected));
    }
  }
  return make("phase_law", true, std::to_string(samples) + " samples x offsets {1,-1,2}, max gap " + bound(worst));
}

CheckResult check_pr_product(const LinkDiagram& d, const Rational& a) {
  TwistedCWComplex x = surgery_complex(d);
  auto f = FlatBundle<Rational>::line(a);
  const long h0 = canonical_euler(x);
  std::string detail;
  for (long off : {0L, 1L, -1L}) {
    Rational tau = torsion_euler(x, h0 + off, f).value;
    Rational pr = pr_product(tau, tau, x, f);
    Rational expected = f.det(2 * off);
    detail += (detail.empty() ? "" : ", ") + std::string("offset ") + std::to_string(off) + " -> " + pr.get_str();
    if (pr != expected)
      return make("pr_product", false,
                  "a = " + a.get_str() + ", offset " + std::to_string(off) + ": <tau,tau> = " + pr.get_str() +
                      ", expected " + expected.get_str());
  }
  return make("pr_product", true, "a = " + a.get_str() + ": " + detail);
}

CheckResult check_action_law(const LinkDiagram& d) {
  TwistedCWComplex x = surgery_complex(d);
  auto universal = FlatBundle<RatFunc>::line(RatFunc::t());
  auto at3 = FlatBundle<Rational>::line(Rational(3));
  const RatFunc base = torsion_euler(x, 0, universal).value;
  const Rational base3 = torsion_euler(x, 0, at3).value;
  int count = 0;
  for (int q = 0; q <= x.top; ++q)
    for (long h : {1L, -1L, 2L, -2L}) {
      const int k = static_cast<int>(q % 2 == 0 ? h : -h);
      // moving the lift of a q-cell by t^k moves the Euler structure by (-1)^q k
      TwistedCWComplex y = relift_cell(x, q, 0, k);
      RatFunc moved = torsion_euler(y, 0, universal).value;
      RatFunc expected = universal.det(h) * base;
      Rational moved3 = torsion_euler(y, 0, at3).value;
      Rational expected3 = at3.det(h) * base3;
      if (moved != expected || torsion_euler(x, h, universal).value != expected || moved3 != expected3)
        return make("action_law", false,
                    "cell (" + std::to_string(q) + ", 0) relifted by t^" + std::to_string(k) + ": tau = " +
                        moved.to_string() + ", det(h) tau = " + expected.to_string());
      ++count;
    }
  return make("action_law", true, std::to_string(count) + " relifts over Q(t) and at a = 3");
}

}  // namespace torsionlab
