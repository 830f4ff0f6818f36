#pragma once

#include <optional>
#include <vector>

#include "chain/det_torsion.hpp"
#include "euler/twisted_complex.hpp"

namespace torsionlab {

/// Flat bundle over a space with H = Z: the monodromy matrix of the
/// generator t. Line bundles F_a have monodromy [a]; the universal line
/// bundle over Q(t) has monodromy [t].
template <class F>
struct FlatBundle {
  std::vector<Matrix<F>> monodromy;  // one matrix per generator of H

  static FlatBundle line(const F& a) { return FlatBundle{{Matrix<F>{{a}}}}; }
  std::size_t rank() const { return monodromy.empty() ? 0 : monodromy.front().rows(); }
  /// det_F(t^h).
  F det(long h) const;
  /// F*: monodromy (M^T)^{-1}.
  FlatBundle dual() const;
};

/// F (+) G with block-diagonal monodromy.
template <class F>
FlatBundle<F> direct_sum(const FlatBundle<F>& a, const FlatBundle<F>& b);

/// Euler structures are recorded as an offset h (times the generator)
/// relative to the base structure fixed by the cell lifts.
using EulerOffset = long;

/// C_*(X; F): each group-ring entry p(t) becomes p(M); cell i, fibre j has
/// index i * rank + j. Throws NonCommutingMonodromy, InvalidArgument.
template <class F>
ChainComplex<F> twist(const TwistedCWComplex& x, const FlatBundle<F>& f);

/// tau(X, h xi_base; F) relative to the cell frame and `frame` (computed
/// with compute_homology when absent). `eta` multiplies the result for odd
/// rank.
template <class F>
DetLineCoord<F> torsion_euler(const TwistedCWComplex& x, EulerOffset h, const FlatBundle<F>& f, int eta = 1,
                              const HomologyData<F>* frame = nullptr);

/// tau_0 of the base structure over Q(t); ZeroTorsion unless acyclic.
RatFunc base_torsion_qt(const TwistedCWComplex& x);

/// c(xi_base) as a multiple of the generator, from bar(tau_0) = det(c)^{-1} tau_0.
/// ZeroTorsion; ParityError when the ratio is not +t^{even}.
long char_class_base(const TwistedCWComplex& x);

/// Offset of the canonical Euler structure, -c(xi_base)/2.
EulerOffset canonical_euler(const TwistedCWComplex& x);

/// c(h xi_base) = c(xi_base) + 2h.
inline long char_class(long c_base, EulerOffset h) { return c_base + 2 * h; }

/// Absolute torsion of an acyclic bundle. Route "canonical": torsion at the
/// canonical structure. Route "doubled": det_F(c^{-1/2}) tau at the base
/// structure, with the square root taken symbolically through t = u^2.
/// StiefelWhitneyConditionViolated, ParityError.
template <class F>
F absolute_torsion(const TwistedCWComplex& x, const FlatBundle<F>& f, int eta = 1);

/// Symbolic absolute torsion of line bundles: T(u^2) as an element of Q(u),
/// computed as u^{-c} tau_0(u^2).
RatFunc absolute_torsion_doubled(const TwistedCWComplex& x);

/// Evaluates the symbolic form at a (line bundle F_a).
template <class F>
F absolute_torsion_doubled_at(const TwistedCWComplex& x, const F& a);

/// Intersection-pairing data for a non-acyclic bundle: frames of H(X;F) and
/// H(X;F*) and the blocks P_q(i, j) = <g_i, e_j> of the pairing between
/// H_{m-q}(F*) and H_q(F).
template <class F>
struct PairingData {
  HomologyData<F> frame_f;
  HomologyData<F> frame_dual;
  std::vector<Matrix<F>> blocks;
};

/// <u, v>_PR = fuse(u, D(v)) / tau(X; F (+) F*). Acyclic bundles need no
/// pairing data. ZeroDenominatorTorsion, DegeneratePairing.
template <class F>
F pr_product(const F& u, const F& v, const TwistedCWComplex& x, const FlatBundle<F>& f,
             const PairingData<F>* pairing = nullptr);

/// Canonical involution on det H(X; F) for unitary F. Acyclic: complex
/// conjugation. Otherwise (-1)^{s chi * rank * (m+1)/2} conj(D(tau)) in the
/// pairing frame. NonUnitaryMonodromy.
Complex involution_bar_det(const Complex& tau, const TwistedCWComplex& x, const FlatBundle<Complex>& f,
                           const std::vector<Matrix<Complex>>* pairing = nullptr, const GradedDims* homology = nullptr);

/// Ph(tau) in [0, pi): -1/2 arg(bar(tau)/tau) mod pi. ZeroElement, NonUnitaryMonodromy.
double phase(const Complex& tau, const TwistedCWComplex& x, const FlatBundle<Complex>& f);

void require_unitary(const FlatBundle<Complex>& f);

}  // namespace torsionlab
