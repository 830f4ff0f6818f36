#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "scalar/linalg.hpp"

namespace torsionlab {

/// dims[q] = dim V_q for q = 0..m.
struct GradedDims {
  std::vector<std::size_t> dims;

  int top() const { return static_cast<int>(dims.size()) - 1; }
  std::size_t operator[](int q) const { return q >= 0 && q <= top() ? dims[static_cast<std::size_t>(q)] : 0; }
  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// alpha_q = sum_{j<=q} dims_j mod 2, for q = 0..m.
std::vector<int> alpha(const GradedDims& v);

/// N(C) = sum_q alpha_q(C) beta_q(C) mod 2.
int sign_N(const GradedDims& chains, const GradedDims& homology);

/// M(V, W) = sum_{q>=1} alpha_{q-1}(V) alpha_q(W) mod 2. DegreeMismatch unless tops agree.
int fusion_sign(const GradedDims& v, const GradedDims& w);

/// s(V) = sum_{q=1}^m alpha_{q-1} alpha_q + sum_{q=0}^{(m-1)/2} alpha_{2q} mod 2. EvenTopDegree unless m odd.
int duality_sign(const GradedDims& v);

/// The three sign residues behind one interface, so verification code can
/// swap in a deliberately wrong table as a negative control.
struct SignTable {
  int (*n)(const GradedDims&, const GradedDims&);
  int (*m)(const GradedDims&, const GradedDims&);
  int (*s)(const GradedDims&);
};
SignTable default_sign_table();
/// Each residue drops its last summand.
SignTable corrupted_sign_table();

/// A scalar coordinate of an element of a determinant line, relative to a
/// named ordered frame. Odd-degree factors enter inverted, so rescaling a
/// degree-q frame vector by g rescales the coordinate by g^{(-1)^{q+1}}.
template <class F>
struct DetLineCoord {
  F value;
  std::string frame;
};

/// Boundary maps d_q : C_q -> C_{q-1} for q = 1..m, stored as
/// dims[q-1] x dims[q] matrices.
template <class F>
struct ChainComplex {
  GradedDims dims;
  std::vector<Matrix<F>> d;  // d[q-1] is d_q

  int top() const { return dims.top(); }

  /// d_q for any q; outside 1..m this is the zero map with the right shape.
  Matrix<F> boundary(int q) const {
    if (q >= 1 && q <= top()) return d[static_cast<std::size_t>(q - 1)];
    return Matrix<F>(dims[q - 1], dims[q]);
  }

  /// Shapes match and d_{q-1} d_q = 0 (exactly, or within 1e-9 for floats).
  void validate() const;
};

template <class F>
struct HomologyData {
  GradedDims ranks;
  std::vector<Matrix<F>> reps;   // reps[q]: dims[q] x ranks[q] cycles
  std::vector<Matrix<F>> lifts;  // lifts[q]: b_q, dims[q] x rank d_q
};

template <class F>
HomologyData<F> compute_homology(const ChainComplex<F>& c);

/// Another valid set of choices: b_q from a shuffled pivot order, re-mixed by
/// an invertible matrix plus kernel vectors; each cycle representative moved
/// by a random boundary. Homology classes are unchanged.
template <class F>
HomologyData<F> perturb_choices(const ChainComplex<F>& c, const HomologyData<F>& h, std::mt19937_64& rng);

/// Coordinate of phi_C(c) relative to the volume element of `h`, where
/// `c` is given relative to the standard cell frame.
template <class F>
DetLineCoord<F> torsion_phi(const ChainComplex<F>& c, const F& c_value, const HomologyData<F>& h);

/// Same, with the sign table swapped for fault-injection tests.
template <class F>
DetLineCoord<F> torsion_phi_with_sign(const ChainComplex<F>& c, const F& c_value, const HomologyData<F>& h, int n_sign);

template <class F>
DetLineCoord<F> fuse(const DetLineCoord<F>& v, const GradedDims& vd, const DetLineCoord<F>& w, const GradedDims& wd) {
  F val = v.value * w.value;
  if (fusion_sign(vd, wd)) val = -val;
  return {val, v.frame + "+" + w.frame};
}

/// Coordinate of D(v) in the frame of V' described by `pairing`:
/// pairing[q] is the dims[q] x dims[q] matrix P_q(i, j) = f_i(e_j), where
/// e is the frame of V_q and f the chosen frame of V'_{m-q} = V_q^*.
/// The identity block means the dual frame.
template <class F>
DetLineCoord<F> dualize(const DetLineCoord<F>& v, const GradedDims& vd, const std::vector<Matrix<F>>& pairing);

template <class F>
std::vector<Matrix<F>> identity_pairing(const GradedDims& vd) {
  std::vector<Matrix<F>> p;
  for (std::size_t n : vd.dims) p.push_back(Matrix<F>::identity(n));
  return p;
}

/// Dims of V' (V'_q = (V_{m-q})^*).
inline GradedDims dual_dims(const GradedDims& v) {
  return GradedDims{std::vector<std::size_t>(v.dims.rbegin(), v.dims.rend())};
}

}  // namespace torsionlab
