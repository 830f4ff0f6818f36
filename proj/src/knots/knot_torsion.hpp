#pragma once

#include <utility>
#include <vector>

#include "chain/det_torsion.hpp"
#include "euler/twisted_complex.hpp"
#include "knots/pd_code.hpp"
#include "scalar/ratfunc.hpp"

namespace torsionlab {

/// A word in the free group: (generator, +1 or -1) letters.
using Word = std::vector<std::pair<int, int>>;

/// Wirtinger presentation of a knot diagram. Generators are arcs numbered
/// in traversal order from the smallest edge; relator r belongs to the
/// crossing where arc r ends. `longitude` is the 0-framed longitude read
/// from the start of arc 0.
struct WirtingerPresentation {
  std::size_t generators = 0;
  std::vector<Word> relators;
  Word longitude;
};

/// NotAKnot for diagrams with more than one component.
WirtingerPresentation wirtinger(const LinkDiagram& d);

/// Abelianized Fox derivatives (every generator -> t). Entry (j, r) is
/// d(word_r)/d(x_j), so the columns are boundaries of 2-cells.
Matrix<LaurentPoly> fox_matrix(const std::vector<Word>& words, std::size_t generators);

/// Representative of a torsion in Q(t), raw (defined up to +-t^k) or
/// canonical (bar-symmetric, sign fixed by the Conway constant term).
struct TorsionRep {
  RatFunc value;
  bool canonical = false;
};

/// A(t) = det(Fox minor) / (1 - t), deleting the last relator and last
/// generator (other minors in index order when that one vanishes).
TorsionRep exterior_torsion(const LinkDiagram& d);

/// A(t) / (1 - t): the torsion of the 0-surgery.
TorsionRep surgery_torsion(const LinkDiagram& d);

/// +-t^k r with bar(result) = result and Conway constant term +1.
/// ParityError when bar(r)/r is not +t^{even}; NonPolynomialInZ.
TorsionRep canonical_normalize(const TorsionRep& r);

/// P(t) = (t - t^-1)^2 tau(t^2) for a canonical tau, written in z = t - t^-1.
/// NonPolynomialInZ when P is not an integer polynomial in z^2.
LaurentPoly conway_from_canonical(const RatFunc& canonical);

/// Conway polynomial (variable z) of a knot through the torsion pipeline.
LaurentPoly conway_from_torsion(const LinkDiagram& d);

/// nabla(u - u^-1) as an element of Q(u).
RatFunc conway_at_u(const LaurentPoly& conway);

struct AlexanderPoly {
  LaurentPoly poly;   // lowest exponent 0, bar-symmetric up to t^deg
  int sign_at_one;    // sign of poly(1)
};

/// (1 - t) A(t) with integer coefficients, shifted to lowest exponent 0
/// and with positive leading coefficient.
AlexanderPoly alexander_poly(const LinkDiagram& d);

/// CW model of the 0-surgery: cells (1, n, n, 1); 2-cells are the first
/// n - 1 relators and the longitude disk; d3 = +-(1 - t) v where v spans
/// ker d2 primitively. The sign of d3 is fixed so the canonical torsion of
/// this complex equals the canonical torsion of the Fox route.
TwistedCWComplex surgery_complex(const LinkDiagram& d);

/// The exterior as the presentation 2-complex without its last relator,
/// over Q(t).
ChainComplex<RatFunc> exterior_complex_qt(const LinkDiagram& d);

/// Canonical surgery torsion evaluated at t = a. NonAcyclicBundle when
/// a = 1 or Alexander(a) = 0 (exactly for rationals, within 1e-12 for
/// complex values). InvalidArgument for a = 0.
Rational absolute_torsion_at(const LinkDiagram& d, const Rational& a);
Complex absolute_torsion_at(const LinkDiagram& d, const Complex& a);

/// Same with the canonical torsion already computed.
Rational absolute_torsion_at(const RatFunc& canonical, const LaurentPoly& alexander, const Rational& a);
Complex absolute_torsion_at(const RatFunc& canonical, const LaurentPoly& alexander, const Complex& a);

}  // namespace torsionlab
