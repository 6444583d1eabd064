#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccx/bitset.hpp"

namespace ccx {

// Raw graph description. May be structurally invalid (loops, duplicate
// edges, disconnected); validate_median is the gate that turns it into a
// usable complex.
struct CubeGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;     // normalized u <= v, sorted lexicographically
  std::vector<std::vector<int>> adjacency;    // sorted neighbor lists

  // Normalizes edge order and builds adjacency. Throws on out-of-range
  // vertex ids; loops and duplicates are kept for the validator to flag.
  static CubeGraph make(int vertex_count, std::vector<std::pair<int, int>> edges);

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  int edge_id(int u, int v) const;  // -1 when absent

  // BFS distances from src; unreachable = -1.
  std::vector<int> bfs(int src) const;
};

struct Caps {
  int max_vertices = 50000;
  int max_hyperplanes = 5000;
  long long max_group = 1000000;
  int max_contact_nodes = 300;
  int max_walls = 16;
  // The definitional median scan is cubic; complexes above this size are
  // refused unless the cap is raised explicitly.
  int max_validation_vertices = 1500;
};

struct ValidationReport {
  bool is_median = false;
  // Triple with zero or >= 2 medians; absent for non-metric failures
  // (loops, duplicate edges) and on success.
  std::optional<std::array<int, 3>> witness;
  int medians_at_witness = -1;
  std::string reason;  // "", "loop", "multi_edge", "disconnected", "no_median", "multiple_medians"
  int vertex_count = 0;
  int edge_count = 0;
  int hyperplane_count = 0;  // filled on success
  int dimension = 0;         // filled on success
};

}  // namespace ccx
