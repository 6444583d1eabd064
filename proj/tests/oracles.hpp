#pragma once

// Brute-force reference implementations used only by tests. Each one takes
// the definitional route (exhaustive enumeration over distances, subsets or
// orientations) and stays independent of the library's algorithmic path.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ccx/bitset.hpp"
#include "ccx/duality_types.hpp"
#include "ccx/graph.hpp"

namespace ccx::oracle {

inline std::vector<std::vector<int>> all_pairs_bfs(const CubeGraph& g) {
  std::vector<std::vector<int>> d(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) d[v] = g.bfs(v);
  return d;
}

// medians of a triple straight from the distance definition
inline std::vector<int> medians(const std::vector<std::vector<int>>& d, int x, int y, int z) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(d.size()); ++v)
    if (d[x][v] + d[v][y] == d[x][y] && d[y][v] + d[v][z] == d[y][z] &&
        d[x][v] + d[v][z] == d[x][z])
      out.push_back(v);
  return out;
}

inline std::vector<int> interval(const std::vector<std::vector<int>>& d, int x, int y) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(d.size()); ++v)
    if (d[x][v] + d[v][y] == d[x][y]) out.push_back(v);
  return out;
}

// Theta classes through the Djokovic-Winkler relation on edges:
// e=(a,b) and f=(x,y) are related iff d(a,x)+d(b,y) != d(a,y)+d(b,x).
// Transitive closure by union-find; in a median graph this matches the
// square-closure classes.
inline std::vector<std::vector<int>> djokovic_classes(const CubeGraph& g) {
  auto d = all_pairs_bfs(g);
  const int m = g.edge_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e = 0; e < m; ++e) {
    auto [a, b] = g.edges[e];
    for (int f = e + 1; f < m; ++f) {
      auto [x, y] = g.edges[f];
      if (d[a][x] + d[b][y] != d[a][y] + d[b][x]) {
        int re = find(e), rf = find(f);
        if (re != rf) parent[std::max(re, rf)] = std::min(re, rf);
      }
    }
  }
  std::map<int, std::vector<int>> by_root;
  for (int e = 0; e < m; ++e) by_root[find(e)].push_back(e);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : by_root) out.push_back(std::move(v));
  return out;
}

// Independent hyperplane structure: classes with vertex sides computed by
// component search, used by the metric and separation oracles below.
struct Walls {
  std::vector<std::vector<int>> classes;
  std::vector<Bitset> side_with_v0;  // halfspace containing vertex 0
  int count() const { return static_cast<int>(classes.size()); }

  bool same_side(int h, int u, int v) const {
    return side_with_v0[h].test(u) == side_with_v0[h].test(v);
  }
};

inline Walls wall_structure(const CubeGraph& g) {
  Walls w;
  w.classes = djokovic_classes(g);
  for (const auto& cls : w.classes) {
    std::vector<char> banned(g.edge_count(), 0);
    for (int e : cls) banned[e] = 1;
    Bitset side(g.vertex_count);
    std::vector<int> stack{0};
    side.set(0);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.adjacency[u]) {
        int e = g.edge_id(std::min(u, v), std::max(u, v));
        if (banned[e] || side.test(v)) continue;
        side.set(v);
        stack.push_back(v);
      }
    }
    w.side_with_v0.push_back(std::move(side));
  }
  return w;
}

inline bool walls_transverse(const Walls& w, int n, int a, int b) {
  const Bitset& A = w.side_with_v0[a];
  const Bitset& B = w.side_with_v0[b];
  Bitset nA = A.complemented();
  Bitset nB = B.complemented();
  (void)n;
  return A.intersects(B) && A.intersects(nB) && nA.intersects(B) && nA.intersects(nB);
}

inline std::vector<int> separators(const Walls& w, int x, int y) {
  std::vector<int> out;
  for (int h = 0; h < w.count(); ++h)
    if (!w.same_side(h, x, y)) out.push_back(h);
  return out;
}

// max pairwise-disjoint separator family by subset enumeration
inline int brute_linf(const CubeGraph& g, const Walls& w, int x, int y) {
  auto seps = separators(w, x, y);
  const int t = static_cast<int>(seps.size());
  int best = 0;
  for (int mask = 0; mask < (1 << t); ++mask) {
    bool ok = true;
    for (int i = 0; i < t && ok; ++i)
      for (int j = i + 1; j < t && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) &&
            walls_transverse(w, g.vertex_count, seps[i], seps[j]))
          ok = false;
    if (ok) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
  }
  return best;
}

inline Bitset wall_carrier(const CubeGraph& g, const Walls& w, int h) {
  Bitset c(g.vertex_count);
  for (int e : w.classes[h]) {
    c.set(g.edges[e].first);
    c.set(g.edges[e].second);
  }
  return c;
}

// carrier-side separation straight from the definition
inline bool wall_separates(const CubeGraph& g, const Walls& w, int v, int j, int h) {
  Bitset cj = wall_carrier(g, w, j);
  Bitset ch = wall_carrier(g, w, h);
  const Bitset& a = w.side_with_v0[v];
  Bitset b = a.complemented();
  auto inside = [&](const Bitset& carrier, const Bitset& side) {
    return carrier.is_subset_of(side);
  };
  return (inside(cj, a) && inside(ch, b)) || (inside(cj, b) && inside(ch, a));
}

inline bool wall_facing_triple(const CubeGraph& g, const Walls& w, int a, int b, int c) {
  const int n = g.vertex_count;
  if (walls_transverse(w, n, a, b) || walls_transverse(w, n, a, c) ||
      walls_transverse(w, n, b, c))
    return false;
  return !wall_separates(g, w, a, b, c) && !wall_separates(g, w, b, a, c) &&
         !wall_separates(g, w, c, a, b);
}

// max facing-triple-free subfamily by full subset enumeration
inline int brute_max_ftf(const CubeGraph& g, const Walls& w, const std::vector<int>& cand) {
  const int t = static_cast<int>(cand.size());
  int best = 0;
  for (int mask = 0; mask < (1 << t); ++mask) {
    bool ok = true;
    for (int a = 0; a < t && ok; ++a)
      for (int b = a + 1; b < t && ok; ++b)
        for (int c = b + 1; c < t && ok; ++c)
          if ((mask >> a & 1) && (mask >> b & 1) && (mask >> c & 1) &&
              wall_facing_triple(g, w, cand[a], cand[b], cand[c]))
            ok = false;
    if (ok) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
  }
  return best;
}

// max over joins of min(|A|,|B|) by 3-coloring enumeration (<= 12 walls)
inline int brute_max_min_join(const CubeGraph& g, const Walls& w,
                              const std::vector<int>& hyps) {
  const int t = static_cast<int>(hyps.size());
  int best = 0;
  std::vector<int> color(t, 0);
  long long total = 1;
  for (int i = 0; i < t; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    int na = 0, nb = 0;
    for (int i = 0; i < t; ++i) {
      color[i] = c % 3;
      c /= 3;
      if (color[i] == 1) ++na;
      if (color[i] == 2) ++nb;
    }
    bool ok = true;
    for (int i = 0; i < t && ok; ++i)
      for (int j = 0; j < t && ok; ++j)
        if (color[i] == 1 && color[j] == 2 &&
            !walls_transverse(w, g.vertex_count, hyps[i], hyps[j]))
          ok = false;
    if (ok) best = std::max(best, std::min(na, nb));
  }
  return best;
}

inline bool wall_strongly_separated(const CubeGraph& g, const Walls& w, int a, int b) {
  const int n = g.vertex_count;
  if (a == b || walls_transverse(w, n, a, b)) return false;
  for (int v = 0; v < w.count(); ++v)
    if (v != a && v != b && walls_transverse(w, n, v, a) && walls_transverse(w, n, v, b))
      return false;
  return true;
}

// maximum chain by subset enumeration: each subset of the separators of
// (j,h) is tested against the chain conditions directly
inline int brute_delta(const CubeGraph& g, const Walls& w, int j, int h) {
  std::vector<int> cand;
  for (int v = 0; v < w.count(); ++v)
    if (v != j && v != h && wall_separates(g, w, v, j, h)) cand.push_back(v);
  const int t = static_cast<int>(cand.size());
  int best = 0;
  Bitset cj = wall_carrier(g, w, j);
  const int anchor = cj.find_first();
  for (int mask = 0; mask < (1 << t); ++mask) {
    std::vector<int> chain;
    for (int i = 0; i < t; ++i)
      if (mask >> i & 1) chain.push_back(cand[i]);
    // order by distance from j: size of the side holding carrier(j)
    std::sort(chain.begin(), chain.end(), [&](int a, int b) {
      auto side = [&](int v) {
        const Bitset& s = w.side_with_v0[v];
        return s.test(anchor) ? s.count() : g.vertex_count - s.count();
      };
      return side(a) < side(b);
    });
    bool ok = true;
    for (std::size_t a = 0; a < chain.size() && ok; ++a)
      for (std::size_t b = a + 1; b < chain.size() && ok; ++b)
        if (!wall_strongly_separated(g, w, chain[a], chain[b])) ok = false;
    for (std::size_t m = 1; m + 1 < chain.size() && ok; ++m)
      if (!wall_separates(g, w, chain[m], chain[m - 1], chain[m + 1])) ok = false;
    if (ok) best = std::max(best, static_cast<int>(chain.size()));
  }
  return best;
}

// Largest cube dimension by direct growth: a d-cube at v needs d neighbors
// whose subset suprema all exist, built up mask by mask from common
// neighbors at the right distance.
inline int brute_max_cube(const CubeGraph& g) {
  auto d = all_pairs_bfs(g);
  int best = g.edge_count() > 0 ? 1 : 0;  // an edge is a 1-cube
  for (int v = 0; v < g.vertex_count; ++v) {
    const auto& nb = g.adjacency[v];
    const int deg = static_cast<int>(nb.size());
    if (deg > 20) continue;  // desk-scale oracle
    std::vector<int> sup(1 << deg, -1);
    sup[0] = v;
    for (int bit = 0; bit < deg; ++bit) sup[1 << bit] = nb[bit];
    // masks in increasing popcount order via plain enumeration
    for (int mask = 1; mask < (1 << deg); ++mask) {
      int pc = __builtin_popcount(static_cast<unsigned>(mask));
      if (pc < 2) continue;
      int b1 = mask & -mask;
      int m1 = mask ^ b1;
      int b2 = m1 & -m1;
      int m2 = mask ^ b2;
      if (sup[m1] < 0 || sup[m2] < 0) continue;
      // candidate = common neighbor of two facet suprema at distance pc
      int found = -1;
      for (int w : g.adjacency[sup[m1]]) {
        if (d[v][w] != pc || !g.has_edge(w, sup[m2])) continue;
        bool all = true;
        for (int bit = 0; bit < deg && all; ++bit)
          if ((mask >> bit) & 1) {
            int facet = mask ^ (1 << bit);
            if (sup[facet] < 0 || !g.has_edge(w, sup[facet])) all = false;
          }
        if (all) {
          found = w;
          break;
        }
      }
      if (found >= 0) {
        sup[mask] = found;
        best = std::max(best, pc);
      }
    }
  }
  return best;
}

// nearest vertex scan; returns all minimizers
inline std::vector<int> nearest_in_set(const std::vector<std::vector<int>>& d, int x,
                                       const std::vector<int>& set) {
  int best = -1;
  for (int v : set)
    if (best < 0 || d[x][v] < best) best = d[x][v];
  std::vector<int> out;
  for (int v : set)
    if (d[x][v] == best) out.push_back(v);
  return out;
}

// convex hull by interval closure, the route independent of halfspaces
inline std::set<int> hull_by_closure(const std::vector<std::vector<int>>& d,
                                     std::set<int> s) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = s;
    for (int x : s)
      for (int y : s)
        for (int v : interval(d, x, y))
          if (next.insert(v).second) grew = true;
    s = std::move(next);
  }
  return s;
}

// exhaustive consistent-orientation enumeration for small wallspaces
inline std::vector<Bitset> brute_consistent_orientations(const Wallspace& w) {
  const int m = w.wall_count();
  std::vector<Bitset> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      const Bitset& si = (mask >> i & 1) ? w.walls[i].second : w.walls[i].first;
      for (int j = i + 1; j < m && ok; ++j) {
        const Bitset& sj = (mask >> j & 1) ? w.walls[j].second : w.walls[j].first;
        if (!si.intersects(sj)) ok = false;
      }
    }
    if (ok) {
      Bitset b(m);
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) b.set(i);
      out.push_back(b);
    }
  }
  return out;
}

// second four-point implementation: ordered scan without the sort trick
inline int brute_four_point_x2(const std::vector<std::vector<std::int16_t>>& dist) {
  const int k = static_cast<int>(dist.size());
  int best = 0;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
          if (dist[a][b] < 0 || dist[a][x] < 0 || dist[a][y] < 0) continue;
          int s1 = dist[a][b] + dist[x][y];
          int s2 = dist[a][x] + dist[b][y];
          int s3 = dist[a][y] + dist[b][x];
          if (s1 >= s2 && s1 >= s3) best = std::max(best, s1 - std::max(s2, s3));
        }
  return best;
}

// does every red/blue edge coloring of K_n contain a monochromatic
// triangle? brute force over all colorings
inline bool every_coloring_has_mono_triangle(int n) {
  const int pairs = n * (n - 1) / 2;
  auto pair_id = [n](int i, int j) { return i * n + j; };
  std::vector<int> id(n * n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) id[pair_id(i, j)] = next++;
  for (long long mask = 0; mask < (1LL << pairs); ++mask) {
    bool mono = false;
    for (int a = 0; a < n && !mono; ++a)
      for (int b = a + 1; b < n && !mono; ++b)
        for (int c = b + 1; c < n && !mono; ++c) {
          int e1 = (mask >> id[pair_id(a, b)]) & 1;
          int e2 = (mask >> id[pair_id(a, c)]) & 1;
          int e3 = (mask >> id[pair_id(b, c)]) & 1;
          if (e1 == e2 && e2 == e3) mono = true;
        }
    if (!mono) return false;
  }
  return true;
}

}  // namespace ccx::oracle
