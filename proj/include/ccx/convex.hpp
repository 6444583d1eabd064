#pragma once

#include <utility>
#include <vector>

#include "ccx/complex.hpp"

namespace ccx {

// Convex vertex set certified by the halfspaces cutting it out; the
// intersection of defining_halfspaces equals vertices. Construct through
// convex_hull or certify_convex so convexity is established once, not
// re-derived by every consumer.
struct ConvexSet {
  Bitset vertices;
  std::vector<std::pair<int, bool>> defining_halfspaces;  // (hyperplane, side_b)
};

struct ConvexityCheck {
  bool convex = true;
  int x = -1, y = -1, via = -1;  // witness: via lies between x,y but outside S
};

ConvexityCheck is_convex(const CubeComplex& c, const Bitset& s);

// Smallest convex superset: the intersection of every halfspace containing
// s. Idempotent and monotone.
ConvexSet convex_hull(const CubeComplex& c, const Bitset& s);

// Wraps an already convex set; throws Error::validation with the interval
// witness otherwise.
ConvexSet certify_convex(const CubeComplex& c, const Bitset& s);

ConvexSet halfspace_set(const CubeComplex& c, int h, bool side_b);
ConvexSet carrier_hull(const CubeComplex& c, int h);

// Nearest vertex of C to x. Computed by iterated medians toward x; checks
// uniqueness and the geodesic-through law d(x,c) = d(x,gate) + d(gate,c)
// for every c in C.
int gate(const CubeComplex& c, int x, const ConvexSet& C);

// Gates of every vertex of s; asserts the separation law
// sep(gate(x),gate(y)) = sep(x,y) & crossing(C) over all pairs of s.
Bitset project_set(const CubeComplex& c, const Bitset& s, const ConvexSet& C);

// Hyperplanes with both halfspaces meeting C.
Bitset crossing_mask(const CubeComplex& c, const ConvexSet& C);

// The two sides of the separation law for one pair, for callers that want
// the sets themselves.
struct ProjectionSeparation {
  std::vector<int> gate_separators;
  std::vector<int> filtered_separators;  // sep(x,y) restricted to crossing(C)
};
ProjectionSeparation projection_separation(const CubeComplex& c, int x, int y,
                                           const ConvexSet& C);

int l1_diameter(const CubeComplex& c, const Bitset& s);

}  // namespace ccx
