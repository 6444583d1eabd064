#pragma once

#include <vector>

#include "ccx/complex.hpp"
#include "ccx/duality_types.hpp"

namespace ccx {

// Per-wall side choice; valid when no two chosen sides are disjoint.
struct Ultrafilter {
  Bitset orientation;  // bit w set = side_b of wall w

  bool consistent(const Wallspace& w) const;
  static Ultrafilter principal(const Wallspace& w, int point);
};

struct DualResult {
  CubeComplex complex;
  std::vector<int> wall_to_hyperplane;  // bijection onto the dual's hyperplanes
};

// Sageev dual of a finite wallspace: vertices are the consistent
// orientations reachable from a principal ultrafilter by single-wall flips,
// edges join orientations differing on one wall. The result always passes
// the median gate.
DualResult dual_complex(const Wallspace& w, const Caps& caps = {});

// Inverse direction: ground = vertices, one wall per hyperplane bipartition.
Wallspace walls_of(const CubeComplex& c);

struct QuotientResult {
  CubeComplex complex;
  std::vector<int> vertex_map;           // original vertex -> quotient class
  std::vector<int> kept_to_hyperplane;   // kept[i] -> hyperplane of the quotient
  bool collapsed_to_point = false;       // warning marker for empty K
};

// Collapses every hyperplane outside `keep`; the quotient's hyperplanes
// biject with `keep`.
QuotientResult restriction_quotient(const CubeComplex& c, const std::vector<int>& keep);

struct Decomposition {
  std::vector<std::vector<int>> classes;  // finest mutually-transverse split
  std::vector<QuotientResult> factors;
};

// Finest product decomposition: connected components of the
// non-transversality graph on hyperplanes; distance additivity across the
// factors is asserted exactly.
Decomposition irreducible_decompose(const CubeComplex& c);

}  // namespace ccx
