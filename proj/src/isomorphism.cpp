#include "ccx/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace ccx {

namespace {

std::vector<int> refine_colors(const CubeGraph& g) {
  const int n = g.vertex_count;
  std::vector<int> col(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(col[v]);
      for (int u : g.adjacency[v]) sig[v].push_back(col[u]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    // labels follow the lexicographic order of signatures, which keeps the
    // numbering canonical across relabelings of the same graph
    std::map<std::vector<int>, int> relabel;
    for (int v = 0; v < n; ++v) relabel.emplace(sig[v], -1);
    int next_label = 0;
    for (auto& [s, lab] : relabel) lab = next_label++;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = relabel[sig[v]];
    if (next == col) break;
    col = std::move(next);
  }
  return col;
}

struct IsoSearch {
  const CubeGraph& a;
  const CubeGraph& b;
  std::vector<int> col_a, col_b;
  std::vector<int> map_ab, map_ba;
  std::vector<int> order;  // vertices of a, rarest color first
  long long budget = 20'000'000;

  bool feasible(int va, int vb) {
    if (col_a[va] != col_b[vb]) return false;
    for (int u : a.adjacency[va]) {
      int mu = map_ab[u];
      if (mu >= 0 && !b.has_edge(vb, mu)) return false;
    }
    for (int u : b.adjacency[vb]) {
      int mu = map_ba[u];
      if (mu >= 0 && !a.has_edge(va, mu)) return false;
    }
    return true;
  }

  bool rec(std::size_t idx) {
    if (--budget < 0) return false;
    if (idx == order.size()) return true;
    int va = order[idx];
    for (int vb = 0; vb < b.vertex_count; ++vb) {
      if (map_ba[vb] >= 0 || !feasible(va, vb)) continue;
      map_ab[va] = vb;
      map_ba[vb] = va;
      if (rec(idx + 1)) return true;
      map_ab[va] = -1;
      map_ba[vb] = -1;
    }
    return false;
  }
};

}  // namespace

bool graph_isomorphic(const CubeGraph& a, const CubeGraph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  if (a.vertex_count == 0) return true;
  auto ca = refine_colors(a);
  auto cb = refine_colors(b);
  std::map<int, int> ha, hb;
  for (int v : ca) ++ha[v];
  for (int v : cb) ++hb[v];
  {
    std::vector<int> va, vb;
    for (auto [c, k] : ha) va.push_back(k);
    for (auto [c, k] : hb) vb.push_back(k);
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) return false;
  }
  // refinement labels are canonical (sorted signature maps), so classes
  // must match color-for-color, not just as a histogram
  if (ha != hb) return false;

  IsoSearch s{a, b, std::move(ca), std::move(cb),
              std::vector<int>(a.vertex_count, -1), std::vector<int>(b.vertex_count, -1),
              {}};
  s.order.resize(a.vertex_count);
  for (int v = 0; v < a.vertex_count; ++v) s.order[v] = v;
  std::map<int, int> freq;
  for (int v : s.col_a) ++freq[v];
  std::stable_sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    return freq[s.col_a[x]] < freq[s.col_a[y]];
  });
  return s.rec(0);
}

}  // namespace ccx
