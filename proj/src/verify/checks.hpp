#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "chain/det_torsion.hpp"
#include "knots/pd_code.hpp"
#include "scalar/laurent.hpp"

namespace torsionlab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // outputs on success, a witness on failure
};

/// Runs the tasks on up to `jobs` threads; results keep task order. A task
/// that throws becomes a failed check carrying the error text.
std::vector<CheckResult> run_checks(const std::vector<std::pair<std::string, std::function<CheckResult()>>>& tasks,
                                    int jobs);

/// n points e^{i theta} with theta in (0, 2 pi), nudged away from a = 1 and
/// from roots of `alexander` (|alexander(a)| > 1e-6).
std::vector<Complex> unit_circle_samples(std::size_t n, const LaurentPoly& alexander);

/// Distance between two angles modulo pi.
double angle_distance_mod_pi(double x, double y);

/// Random complex over Q with entries in [lo, hi]: d_1 is arbitrary, later
/// columns are drawn from the integer vectors in ker d_{q-1} with entries
/// in range, so d^2 = 0 holds by construction.
ChainComplex<Rational> random_integer_complex(std::mt19937_64& rng, int max_top, std::size_t max_dim, int lo, int hi);

// Per-knot checks shared by `knot verify` and the acceptance suite.
CheckResult check_conway_pipelines(const LinkDiagram& d);
CheckResult check_skein_inline(const LinkDiagram& d);
CheckResult check_bar_symmetry(const LinkDiagram& d);
CheckResult check_realness(const LinkDiagram& d, std::size_t samples);
CheckResult check_phase_law(const LinkDiagram& d, std::size_t samples);
CheckResult check_pr_product(const LinkDiagram& d, const Rational& a);
CheckResult check_action_law(const LinkDiagram& d);

}  // namespace torsionlab
