#include "ccx/duality.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

#include "ccx/error.hpp"

namespace ccx {

void Wallspace::validate() const {
  if (ground <= 0) throw Error::validation("wallspace needs a nonempty ground set");
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < wall_count(); ++i) {
    const auto& [a, b] = walls[i];
    if (static_cast<int>(a.size()) != ground || static_cast<int>(b.size()) != ground)
      throw Error::validation("wall sides sized against the wrong ground set");
    if (a.none() || b.none())
      throw Error::validation("wall " + std::to_string(i) + " has an empty side");
    if (a.intersects(b) || static_cast<int>(a.count() + b.count()) != ground)
      throw Error::validation("wall " + std::to_string(i) + " does not partition the ground set");
    std::vector<int> canon = a.test(0) ? a.to_vector() : b.to_vector();
    if (!seen.emplace(std::move(canon), i).second)
      throw Error::validation("duplicate wall " + std::to_string(i));
  }
}

bool Ultrafilter::consistent(const Wallspace& w) const {
  for (int i = 0; i < w.wall_count(); ++i) {
    const Bitset& si = orientation.test(i) ? w.walls[i].second : w.walls[i].first;
    for (int j = i + 1; j < w.wall_count(); ++j) {
      const Bitset& sj = orientation.test(j) ? w.walls[j].second : w.walls[j].first;
      if (!si.intersects(sj)) return false;
    }
  }
  return true;
}

Ultrafilter Ultrafilter::principal(const Wallspace& w, int point) {
  if (point < 0 || point >= w.ground) throw Error::usage("unknown ground point");
  Ultrafilter u;
  u.orientation = Bitset(w.wall_count());
  for (int i = 0; i < w.wall_count(); ++i)
    if (w.walls[i].second.test(point)) u.orientation.set(i);
  return u;
}

DualResult dual_complex(const Wallspace& w, const Caps& caps) {
  w.validate();
  const int m = w.wall_count();
  if (m > caps.max_walls)
    throw Error::cap("wall count " + std::to_string(m) + " exceeds cap " +
                     std::to_string(caps.max_walls));

  // side compatibility per wall pair, indexed [side_i][side_j]
  std::vector<std::vector<std::array<bool, 4>>> comp(m, std::vector<std::array<bool, 4>>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int si = 0; si < 2; ++si)
        for (int sj = 0; sj < 2; ++sj) {
          const Bitset& a = si ? w.walls[i].second : w.walls[i].first;
          const Bitset& b = sj ? w.walls[j].second : w.walls[j].first;
          comp[i][j][si * 2 + sj] = a.intersects(b);
        }
  auto flip_ok = [&](const Bitset& ori, int wall) {
    const int side = !ori.test(wall);
    for (int j = 0; j < m; ++j) {
      if (j == wall) continue;
      if (!comp[wall][j][side * 2 + ori.test(j)]) return false;
    }
    return true;
  };

  // flip-closure BFS from the principal ultrafilter of point 0
  std::unordered_map<Bitset, int, BitsetHash> id;
  std::vector<Bitset> vert;
  std::vector<std::pair<int, int>> edges;
  Bitset start = Ultrafilter::principal(w, 0).orientation;
  id.emplace(start, 0);
  vert.push_back(start);
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    Bitset cur = vert[u];
    for (int wall = 0; wall < m; ++wall) {
      if (!flip_ok(cur, wall)) continue;
      Bitset nxt = cur;
      nxt.test(wall) ? nxt.reset(wall) : nxt.set(wall);
      auto [it, fresh] = id.emplace(nxt, static_cast<int>(vert.size()));
      if (fresh) {
        vert.push_back(nxt);
        q.push(static_cast<int>(vert.size()) - 1);
      }
      if (u < it->second) edges.emplace_back(u, it->second);
    }
  }

  CubeGraph g = CubeGraph::make(static_cast<int>(vert.size()), std::move(edges));
  DualResult out{CubeComplex::build(g, caps), {}};

  // wall i corresponds to the theta class of the edges flipping it
  out.wall_to_hyperplane.assign(m, -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    Bitset d = vert[u] ^ vert[v];
    int wall = d.find_first();
    if (wall < 0 || d.count() != 1) throw Error::internal("dual edge flips zero or many walls");
    int h = out.complex.edge_hyperplane(e);
    if (out.wall_to_hyperplane[wall] >= 0 && out.wall_to_hyperplane[wall] != h)
      throw Error::internal("wall maps to two distinct hyperplanes");
    out.wall_to_hyperplane[wall] = h;
  }
  for (int i = 0; i < m; ++i)
    if (out.wall_to_hyperplane[i] < 0)
      throw Error::internal("wall " + std::to_string(i) + " is not crossed by the dual");
  if (out.complex.hyperplane_count() != m)
    throw Error::internal("dual hyperplane count differs from the wall count");
  return out;
}

Wallspace walls_of(const CubeComplex& c) {
  Wallspace w;
  w.ground = c.vertex_count();
  for (int h = 0; h < c.hyperplane_count(); ++h)
    w.walls.emplace_back(c.halfspace(h, false), c.halfspace(h, true));
  w.validate();
  return w;
}

QuotientResult restriction_quotient(const CubeComplex& c, const std::vector<int>& keep) {
  const int n = c.vertex_count();
  Bitset kept(c.hyperplane_count());
  for (int h : keep) {
    c.hyperplane(h);
    kept.set(h);
  }

  // contract every edge whose hyperplane is dropped
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < c.edge_count(); ++e) {
    if (kept.test(c.edge_hyperplane(e))) continue;
    int a = find(c.graph().edges[e].first);
    int b = find(c.graph().edges[e].second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> klass(n, -1);
  int classes = 0;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (klass[r] < 0) klass[r] = classes++;
    klass[v] = klass[r];
  }

  std::vector<std::pair<int, int>> qedges;
  for (int e = 0; e < c.edge_count(); ++e) {
    if (!kept.test(c.edge_hyperplane(e))) continue;
    int a = klass[c.graph().edges[e].first];
    int b = klass[c.graph().edges[e].second];
    if (a == b) throw Error::internal("kept edge collapsed in the quotient");
    qedges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(qedges.begin(), qedges.end());
  qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());

  CubeGraph qg = CubeGraph::make(classes, std::move(qedges));
  QuotientResult out{CubeComplex::build(qg), std::move(klass), {}, keep.empty()};

  std::vector<int> sorted_keep(keep);
  std::sort(sorted_keep.begin(), sorted_keep.end());
  sorted_keep.erase(std::unique(sorted_keep.begin(), sorted_keep.end()), sorted_keep.end());
  out.kept_to_hyperplane.assign(sorted_keep.size(), -1);
  for (int e = 0; e < c.edge_count(); ++e) {
    int h = c.edge_hyperplane(e);
    if (!kept.test(h)) continue;
    auto idx = std::lower_bound(sorted_keep.begin(), sorted_keep.end(), h) -
               sorted_keep.begin();
    int a = out.vertex_map[c.graph().edges[e].first];
    int b = out.vertex_map[c.graph().edges[e].second];
    int qh = out.complex.edge_hyperplane(qg.edge_id(a, b));
    if (out.kept_to_hyperplane[idx] >= 0 && out.kept_to_hyperplane[idx] != qh)
      throw Error::internal("kept hyperplane split in the quotient");
    out.kept_to_hyperplane[idx] = qh;
  }
  if (out.complex.hyperplane_count() != static_cast<int>(sorted_keep.size()))
    throw Error::internal("quotient hyperplanes do not biject with the kept set");
  return out;
}

Decomposition irreducible_decompose(const CubeComplex& c) {
  const int k = c.hyperplane_count();
  Decomposition out;
  if (k == 0) {
    out.classes.push_back({});
    out.factors.push_back(restriction_quotient(c, {}));
    return out;
  }

  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (!c.transverse(a, b)) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
  std::map<int, std::vector<int>> by_root;
  for (int h = 0; h < k; ++h) by_root[find(h)].push_back(h);
  for (auto& [root, members] : by_root) out.classes.push_back(std::move(members));

  for (const auto& cls : out.classes) out.factors.push_back(restriction_quotient(c, cls));

  // product law: distances add across the factors
  for (int x = 0; x < c.vertex_count(); ++x) {
    for (int y = x + 1; y < c.vertex_count(); ++y) {
      int total = 0;
      for (const auto& f : out.factors)
        total += f.complex.dist(f.vertex_map[x], f.vertex_map[y]);
      if (total != c.dist(x, y))
        throw Error::property("factor distances do not add up for pair (" +
                              std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  return out;
}

}  // namespace ccx
