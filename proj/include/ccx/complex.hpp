#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "ccx/bitset.hpp"
#include "ccx/error.hpp"
#include "ccx/graph.hpp"

namespace ccx {

// One theta-class of edges together with its two halfspaces and carrier.
// side_a is the halfspace containing vertex 0.
struct Hyperplane {
  int id = -1;
  std::vector<int> edge_ids;
  Bitset side_a;
  Bitset side_b;
  Bitset carrier;  // endpoints of the class's edges
};

struct DistResult {
  int distance = 0;
  std::vector<int> separators;  // hyperplane ids, ascending
};

// Validated complex: a connected simple median graph with its hyperplane
// structure. Immutable after construction; all queries are const. The
// two lazy caches (graph-BFS rows and cube-BFS rows) are mutex-guarded so
// concurrent queries stay safe.
class CubeComplex {
public:
  // Validates and builds; throws Error::validation with the reason on
  // failure and Error::cap when over the caps.
  static CubeComplex build(const CubeGraph& g, const Caps& caps = {});

  const CubeGraph& graph() const { return g_; }
  int vertex_count() const { return g_.vertex_count; }
  int edge_count() const { return g_.edge_count(); }
  int hyperplane_count() const { return static_cast<int>(hyperplanes_.size()); }
  int dimension() const { return dimension_; }

  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& hyperplane(int h) const;
  int edge_hyperplane(int edge_id) const { return edge_class_[edge_id]; }

  // true when v lies in side_b of h.
  bool side_of(int v, int h) const { return sign_[v].test(h); }
  const Bitset& signature(int v) const { return sign_[v]; }
  const Bitset& halfspace(int h, bool side_b) const;
  const Bitset& carrier(int h) const;
  // Halfspace of h not containing vertex v.
  const Bitset& halfspace_away_from(int h, int v) const { return halfspace(h, !side_of(v, h)); }

  bool transverse(int a, int b) const { return transverse_[a].test(b); }
  bool disjoint_hyperplanes(int a, int b) const { return a != b && !transverse(a, b); }
  const Bitset& transverse_mask(int h) const { return transverse_[h]; }

  // l1 distance together with the separating hyperplanes; asserts the
  // separator count against the graph metric.
  DistResult dist_l1(int x, int y) const;
  int dist(int x, int y) const;  // plain l1 distance (signature xor)
  Bitset separator_mask(int x, int y) const;

  // Longest chain of pairwise disjoint separators; cross-checked against
  // BFS in the graph augmented with an edge per common cube.
  int dist_linf(int x, int y) const;
  // Cube-diagonal BFS row from x (the cross-check metric on its own).
  std::vector<int> linf_row(int x) const;

  int median(int x, int y, int z) const;
  Bitset interval(int x, int y) const;
  bool between(int x, int m, int y) const;

  // Graph BFS row, cached.
  const std::vector<std::uint16_t>& bfs_row(int src) const;

  // Adjacency of the cube-diagonal graph (edge per common cube), built on
  // first use.
  const std::vector<Bitset>& cube_adjacency() const;

  // Vertex with the given hyperplane signature, -1 if none.
  int vertex_by_signature(const Bitset& sig) const;

  // True when u,w lie in a common cube (separators pairwise transverse).
  bool common_cube(int u, int w) const;

  CubeComplex(const CubeComplex& o);
  CubeComplex& operator=(const CubeComplex& o);
  CubeComplex(CubeComplex&&) = default;
  CubeComplex& operator=(CubeComplex&&) = default;

private:
  CubeComplex() = default;
  void check_vertex(int v) const;

  CubeGraph g_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<int> edge_class_;
  std::vector<Bitset> sign_;        // per vertex, bit h = side_b membership
  std::vector<Bitset> transverse_;  // per hyperplane
  std::unordered_map<Bitset, int, BitsetHash> vertex_by_sign_;
  int dimension_ = 0;

  mutable std::mutex cache_mu_;
  mutable std::vector<std::vector<std::uint16_t>> bfs_rows_;
  mutable std::vector<char> bfs_have_;
  mutable std::vector<std::vector<int>> linf_rows_;
  mutable std::vector<char> linf_have_;
  mutable std::vector<Bitset> cube_adj_;
};

// Structure gate: is g a connected simple median graph? Fills counts and
// dimension on success, witness/reason on failure. Throws Error::validation
// for an empty graph and Error::cap above caps.max_validation_vertices.
ValidationReport validate_median(const CubeGraph& g, const Caps& caps = {});

// Validation failure carrying the full report (witness included).
class MedianError : public Error {
public:
  explicit MedianError(ValidationReport r)
      : Error(Kind::validation, "not a median graph: " + r.reason), report(std::move(r)) {}
  ValidationReport report;
};

// Maximum clique in the transversality graph; equals the largest cube
// dimension via the Helly property of halfspaces.
int max_transverse_clique(const std::vector<Bitset>& transverse);

}  // namespace ccx
