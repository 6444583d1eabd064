#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccx/complex.hpp"

namespace ccx {

// Total adjacency-preserving vertex bijection with its induced hyperplane
// permutation.
struct Automorphism {
  std::vector<int> vmap;
  std::vector<int> hmap;
};

// Validates the map and derives the hyperplane permutation; throws
// Error::validation naming a violated edge.
Automorphism make_automorphism(const CubeComplex& c, std::vector<int> vmap);

struct Group {
  std::vector<Automorphism> elements;  // element 0 is the identity
  bool truncated = false;              // hit the enumeration cap

  int order() const { return static_cast<int>(elements.size()); }
};

Group generate_group(const CubeComplex& c, const std::vector<Automorphism>& gens,
                     long long cap = 1'000'000);

// Element sets as bitsets over the group, one per hyperplane / vertex.
struct StabilizerTables {
  std::vector<Bitset> hyperplane;
  std::vector<Bitset> vertex;
};
StabilizerTables stabilizer_tables(const CubeComplex& c, const Group& g);

std::vector<int> hyperplane_stabilizer(const CubeComplex& c, const Group& g, int h);
std::vector<int> pair_stabilizer(const CubeComplex& c, const Group& g, int h1, int h2);

// Number of hyperplanes separating the pair (0 when equal or transverse).
int separation_count(const CubeComplex& c, int j, int h);

// N_hyp(R): max |stab(J1) & stab(J2)| over pairs separated by >= R others
// (J1 = J2 contributes at R = 0). N_weak(R): same over vertex pairs at
// distance >= R. Both tables are non-increasing by construction.
struct AcylProfile {
  std::vector<long long> n_hyp;
  std::vector<long long> n_weak;
  bool lower_bound_only = false;  // group enumeration was truncated
};

AcylProfile acyl_profile(const CubeComplex& c, const Group& g);

// {g : d(x,gx) <= d and d(y,gy) <= d}, element indices.
std::vector<int> coarse_stabilizer(const CubeComplex& c, const Group& g, int x, int y, int d);

// Upper bound for the diagonal Ramsey number Ram(max(R,dim)+2): exact small
// values, central binomial beyond.
long long ramsey_bound(int r, int dim);

// Penetration reach of the base orbit into each halfspace: how far the
// orbit of `base` gets from the opposite halfspace while inside the side.
// Flagged when the reach never exceeds `depth` (the finite inessentiality
// proxy; sides the orbit misses entirely have reach 0).
struct HalfspaceReach {
  int h = -1;
  bool side_b = false;
  int reach = 0;
  bool flagged = false;
};
std::vector<HalfspaceReach> essentiality_report(const CubeComplex& c, const Group& g,
                                                int base, int depth);

// Injective adjacency-preserving map on a vertex subset; the finite-window
// proxy for a translation of a periodic complex.
struct PartialAutomorphism {
  Bitset domain;
  std::vector<int> vmap;  // -1 outside the domain
  std::string window_note;
};

PartialAutomorphism make_partial_automorphism(const CubeComplex& c, const Bitset& domain,
                                              std::vector<int> vmap,
                                              std::string window_note = "");

// Image class of h under the induced partial map, -1 when no edge of h is
// mapped; consistency across the mapped edges is enforced.
int partial_image_hyperplane(const CubeComplex& c, const PartialAutomorphism& p, int h);

// Pairs (J, n) where the n-th iterate carries a halfspace of J strictly
// inside the same-orientation halfspace, with the count of hyperplanes
// strictly between J and its image.
struct SkewerWitness {
  int h = -1;
  int power = 0;
  bool side_b = false;       // skewered halfspace of h
  int image_h = -1;
  bool image_side_b = false; // corresponding halfspace of the image
  int between = 0;
};

struct SkewerResult {
  std::vector<SkewerWitness> witnesses;
  std::string diagnostic;  // set when no iterate covers any carrier
};

SkewerResult skewer_detect(const CubeComplex& c, const PartialAutomorphism& p);

// Certificate that the window translation skewers a well-separated pair
// with small stabilizer intersection inside `sym`. A skewered pair counts
// as well-separated window-relatively only when every hyperplane crossing
// it is fixed by the translation, so its crossing family does not grow
// with the window.
struct WpdCandidate {
  SkewerWitness witness;
  bool well_separated = false;
  int degree = -1;          // well-separation degree within the window
  long long stab_card = -1; // |stab(J) & stab(image)| inside sym
  std::string failure;      // empty when usable
};

struct WpdOutcome {
  bool certified = false;
  // certificate fields
  int h = -1;
  int power = 0;
  int degree = -1;
  long long stab_card = -1;
  SkewerWitness witness;
  std::string window_note;
  // refusal
  std::string refusal;
  std::vector<WpdCandidate> candidates;
};

WpdOutcome wpd_certificate(const CubeComplex& c, const PartialAutomorphism& p,
                           const Group& sym);

// Displacement of a group element along the chosen x-y geodesic, against
// the thinness constant C of the geodesic and the endpoint displacement d:
// the corrected bound 2C + 6d is asserted, the literal C + 6d recorded.
struct DisplacementRow {
  int z = -1;
  int disp = 0;
  int h1 = 0;  // hyperplanes separating {gx,z} and {gz,y}
  int h2 = 0;  // hyperplanes separating {x,gz} and {z,gy}
  bool balance_ok = true;   // |h1-h2| <= 4d
  bool pairsum_ok = true;   // disp <= h1+h2+2d
};

struct DisplacementReport {
  std::vector<int> geodesic;
  int thinness = 0;
  int endpoint_disp = 0;
  int max_disp = 0;
  bool corrected_ok = true;  // disp <= 2C+6d everywhere
  bool literal_ok = true;    // disp <= C+6d everywhere (recorded only)
  std::vector<DisplacementRow> rows;
};

DisplacementReport displacement_check(const CubeComplex& c, const Automorphism& g,
                                      int x, int y);

// Deterministic geodesic from x to y: greedy smallest-id descent.
std::vector<int> pick_geodesic(const CubeComplex& c, int x, int y);

}  // namespace ccx
