#pragma once

#include <cstddef>

#include "knots/pd_code.hpp"
#include "scalar/laurent.hpp"

namespace torsionlab {

struct SkeinStats {
  std::size_t nodes = 0;           // diagrams resolved (memo misses)
  std::size_t memo_hits = 0;
  std::size_t checks = 0;          // inline invariant checks performed
  std::size_t check_failures = 0;
};

struct SkeinOptions {
  std::size_t budget = 2'000'000;  // max resolved diagrams
  bool corrupt_skein = false;       // fault injection: flips the sign of z * nabla(L0)
};

/// Conway polynomial (variable z) by skein recursion toward a descending
/// diagram: the lowest-index crossing first reached from below is switched,
/// nabla(D) = nabla(D') + sign * z * nabla(D0). Every node checks the skein
/// identity, the parity and vanishing pattern of the z-powers, the constant
/// term 1 for knots and the linking number for two-component links.
/// Throws RecursionBudgetExceeded.
LaurentPoly conway_skein(const LinkDiagram& d, SkeinStats* stats = nullptr, const SkeinOptions& opts = {});

/// Oriented smoothing of crossing `index`.
LinkDiagram smooth(const LinkDiagram& d, std::size_t index);
/// Crossing change at `index`.
LinkDiagram switch_crossing(const LinkDiagram& d, std::size_t index);
/// Index of the first crossing met from below, or -1 when descending.
long first_bad_crossing(const LinkDiagram& d);

}  // namespace torsionlab
