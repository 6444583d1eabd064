#include "ccx/graph.hpp"

#include <algorithm>
#include <queue>

#include "ccx/error.hpp"

namespace ccx {

CubeGraph CubeGraph::make(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 0) throw Error::validation("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw Error::validation("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  CubeGraph g;
  g.vertex_count = vertex_count;
  g.edges = std::move(edges);
  g.adjacency.assign(vertex_count, {});
  for (auto [u, v] : g.edges) {
    if (u == v) continue;  // loops flagged later by the validator
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
  return g;
}

bool CubeGraph::has_edge(int u, int v) const {
  const auto& nb = adjacency[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int CubeGraph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges.begin());
}

std::vector<int> CubeGraph::bfs(int src) const {
  std::vector<int> dist(vertex_count, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adjacency[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

}  // namespace ccx
