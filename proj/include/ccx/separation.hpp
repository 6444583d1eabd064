#pragma once

#include <vector>

#include "ccx/complex.hpp"

namespace ccx {

enum class RelationKind { equal, transverse, nested };

// For nested (disjoint) pairs, side_of_a of the first hyperplane is
// contained in side_of_b of the second.
struct HyperplaneRelation {
  RelationKind kind = RelationKind::equal;
  bool side_of_a = false;
  bool side_of_b = false;
};

HyperplaneRelation relation(const CubeComplex& c, int a, int b);

// true when the carriers of j and h lie in opposite halfspaces of v;
// false (not an error) when either is transverse to v.
bool separates(const CubeComplex& c, int v, int j, int h);

// Three pairwise disjoint hyperplanes none of which separates the others.
bool facing_triple(const CubeComplex& c, int a, int b, int h);

struct SeparationReport {
  int j = -1, h = -1;
  bool applicable = false;          // false for equal/transverse pairs
  std::vector<int> crossing;        // hyperplanes transverse to both
  int degree_direct = -1;           // max facing-triple-free crossing family
  int degree_projection = -1;       // l1 diameter of the projected carrier
  bool strongly_separated = false;  // degree == 0
  bool direct_capped = false;       // search fell back to the projection value
};

// Well-separation degree of a disjoint pair by both routes; equality of the
// two is asserted unless the direct search hit its cap. Transverse pairs
// come back applicable = false.
SeparationReport well_separation_degree(const CubeComplex& c, int j, int h);

// Cheap equivalent of degree == 0: disjoint with empty crossing set.
bool strongly_separated(const CubeComplex& c, int j, int h);

// Smallest C such that every join (A,B) of hyperplanes crossing the
// geodesic, with every member of A transverse to every member of B, has
// min(|A|,|B|) <= C. Rejects non-geodesic input.
int thinness_constant(const CubeComplex& c, const std::vector<int>& geodesic);

// Max over joins of min(|A|,|B|) for an arbitrary hyperplane family.
int max_min_join(const CubeComplex& c, const std::vector<int>& hyps);

struct LayerReport {
  std::vector<std::vector<int>> layers;  // by l-infinity distance from x to the carrier
  bool away_consistent = false;  // halfspaces away from x pairwise intersect
  bool away_closed = false;      // closed under separation away from x
};

// Partition of U by the l-infinity distance from x to each carrier. When U
// is consistently oriented away from x and closed, each layer is checked to
// be pairwise transverse of size <= dimension (throws Error::property on
// violation).
LayerReport hyperplane_layers(const CubeComplex& c, int x, const std::vector<int>& hyps);

}  // namespace ccx
