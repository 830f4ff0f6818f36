#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scalar/laurent.hpp"
#include "scalar/matrix.hpp"

namespace torsionlab {

/// Cellular chain complex of the maximal free abelian cover of a closed
/// odd-dimensional manifold with H = Z (generator t). Boundary entries are
/// integer Laurent polynomials in t; the chosen cell lifts fix the base
/// Euler structure.
struct TwistedCWComplex {
  int top = 3;
  std::vector<std::size_t> cells;       // cells[q], q = 0..top
  std::vector<Matrix<LaurentPoly>> d;   // d[q-1]: cells[q-1] x cells[q]
  bool orientable = true;
  std::vector<long> betti;              // declared b_q(X; R)
  bool sw_conditions = true;          // declared: w_{m-1}(X) = 0, w_1(F) trivial on 2-torsion of H_1

  Matrix<LaurentPoly> boundary(int q) const;
  std::size_t cell_count(int q) const { return q >= 0 && q <= top ? cells[static_cast<std::size_t>(q)] : 0; }

  /// Sum of b_{2i} for 2i <= (m-1)/2.
  long semi_characteristic() const;

  /// m odd, Euler characteristic 0, integer entries, d^2 = 0 over Z[t, t^-1],
  /// declared Betti numbers equal the ranks of the untwisted (t = 1) homology.
  /// Throws ComplexInvalid.
  void validate() const;
};

// Text format ('#' comments):
//
//   dim 3
//   cells 1 2 2 1
//   orientable yes
//   betti 1 1 1 1
//   sw_conditions yes
//   d 1
//   t-1 0
//   ...
//
// Boundary blocks follow the chain-complex format; entries are integer
// Laurent polynomials in t.
TwistedCWComplex parse_twisted_complex(std::string_view text);
std::string print_twisted_complex(const TwistedCWComplex& x);

/// Multiply column i of d_q by t^k and row i of d_{q+1} by t^-k: the same
/// cell with its lift moved by t^k.
TwistedCWComplex relift_cell(const TwistedCWComplex& x, int q, std::size_t i, int k);

}  // namespace torsionlab
