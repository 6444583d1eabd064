#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccx/complex.hpp"

namespace ccx {

// Graph on hyperplanes, adjacent when carriers intersect; covers both
// transversality and osculation. Distances are exact BFS.
struct ContactGraph {
  int node_count = 0;
  std::vector<Bitset> adj;
  std::vector<std::vector<std::int16_t>> dist;  // -1 across components

  int distance(int a, int b) const { return dist[a][b]; }
};

ContactGraph contact_graph(const CubeComplex& c);

struct DeltaChain {
  int j = -1, h = -1;
  std::vector<int> chain;  // ordered from the j side toward h
  int length() const { return static_cast<int>(chain.size()); }
};

// Maximum-length chain of pairwise strongly separated hyperplanes
// separating j and h, each chain member separating its neighbors. Longest
// path in the DAG of nested, consecutively strongly separated separators;
// pairwise strong separation of the result is re-verified explicitly.
DeltaChain delta_chain(const CubeComplex& c, int j, int h);

struct QiPairStat {
  int j, h;
  int delta;
  int contact_dist;
};

struct QiReport {
  bool clean = true;
  std::vector<QiPairStat> lower_violations;     // delta > d
  std::vector<QiPairStat> sandwich_violations;  // delta < floor(d/5)
  // pairs where the literal upper bound d <= 5*delta fails; reported, not
  // asserted (transverse contact pairs fail it trivially).
  int literal_upper_failures = 0;
  int pairs_checked = 0;
};

// Checks delta <= d and delta >= floor(d/5) over every hyperplane pair.
QiReport qi_check(const CubeComplex& c);

// Exact four-point Gromov constant of the contact graph, doubled so it
// stays integral. Quadruple scan; refuses above caps.max_contact_nodes.
int four_point_delta_x2(const ContactGraph& cg, int max_nodes = 300);

// Every contact-graph geodesic stays near the separators of its endpoint
// pair: each interior vertex is within contact-distance 1 of some
// separator, and each separator is within 1 of some interior vertex.
// Checked over every geodesic of every pair.
struct HagenReport {
  bool holds = true;
  std::string detail;
  long long geodesics_checked = 0;
};

HagenReport hagen_check(const CubeComplex& c, const ContactGraph& cg,
                        long long geodesic_cap = 2'000'000);

}  // namespace ccx
