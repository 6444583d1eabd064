#include "ccx/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "ccx/error.hpp"

namespace ccx {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Structure {
  std::vector<Hyperplane> hyperplanes;
  std::vector<int> edge_class;
  std::vector<Bitset> sign;
  std::vector<Bitset> transverse;
  int dimension = 0;
};

// Theta classes via square detection: opposite sides of a square are
// merged, then the transitive closure is taken with union-find.
std::vector<int> theta_classes(const CubeGraph& g, int& class_count) {
  const int m = g.edge_count();
  UnionFind uf(m);
  std::vector<int> common;
  for (int e = 0; e < m; ++e) {
    auto [a, b] = g.edges[e];
    for (int c : g.adjacency[b]) {
      if (c == a) continue;
      // common neighbors of a and c close the square a-b-c-d
      common.clear();
      std::set_intersection(g.adjacency[a].begin(), g.adjacency[a].end(),
                            g.adjacency[c].begin(), g.adjacency[c].end(),
                            std::back_inserter(common));
      for (int d : common) {
        if (d == b) continue;
        uf.unite(e, g.edge_id(c, d));
      }
    }
  }
  // canonical class ids ordered by smallest edge id
  std::vector<int> cls(m, -1);
  class_count = 0;
  for (int e = 0; e < m; ++e) {
    int r = uf.find(e);
    if (cls[r] < 0) cls[r] = class_count++;
    cls[e] = cls[r];
  }
  return cls;
}

Structure compute_structure(const CubeGraph& g) {
  Structure s;
  const int n = g.vertex_count;
  const int m = g.edge_count();
  int k = 0;
  s.edge_class = theta_classes(g, k);

  s.hyperplanes.resize(k);
  for (int h = 0; h < k; ++h) {
    s.hyperplanes[h].id = h;
    s.hyperplanes[h].carrier = Bitset(n);
  }
  for (int e = 0; e < m; ++e) {
    auto& hp = s.hyperplanes[s.edge_class[e]];
    hp.edge_ids.push_back(e);
    hp.carrier.set(g.edges[e].first);
    hp.carrier.set(g.edges[e].second);
  }

  // halfspaces: components after deleting the class's edges
  s.sign.assign(n, Bitset(k));
  for (int h = 0; h < k; ++h) {
    auto& hp = s.hyperplanes[h];
    std::vector<char> in_class(m, 0);
    for (int e : hp.edge_ids) in_class[e] = 1;
    UnionFind comp(n);
    for (int e = 0; e < m; ++e)
      if (!in_class[e]) comp.unite(g.edges[e].first, g.edges[e].second);
    hp.side_a = Bitset(n);
    hp.side_b = Bitset(n);
    const int root_a = comp.find(0);
    int root_b = -1;
    for (int v = 0; v < n; ++v) {
      int r = comp.find(v);
      if (r == root_a) {
        hp.side_a.set(v);
      } else {
        if (root_b < 0) root_b = r;
        if (r != root_b)
          throw Error::internal("hyperplane removal yields more than two components");
        hp.side_b.set(v);
        s.sign[v].set(h);
      }
    }
    if (hp.side_b.none())
      throw Error::internal("hyperplane removal does not disconnect");
    for (int e : hp.edge_ids) {
      auto [u, v] = g.edges[e];
      if (hp.side_a.test(u) == hp.side_a.test(v))
        throw Error::internal("class edge does not straddle its hyperplane");
    }
  }

  // pairwise transversality: all four halfspace intersections nonempty
  s.transverse.assign(k, Bitset(k));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const auto& A = s.hyperplanes[a];
      const auto& B = s.hyperplanes[b];
      bool t = A.side_a.intersects(B.side_a) && A.side_a.intersects(B.side_b) &&
               A.side_b.intersects(B.side_a) && A.side_b.intersects(B.side_b);
      if (t) {
        s.transverse[a].set(b);
        s.transverse[b].set(a);
      }
    }
  }
  s.dimension = max_transverse_clique(s.transverse);
  return s;
}

struct CliqueSearch {
  const std::vector<Bitset>& adj;
  int best = 0;

  void expand(int rsize, Bitset p, Bitset x) {
    if (p.none() && x.none()) {
      best = std::max(best, rsize);
      return;
    }
    if (rsize + static_cast<int>(p.count()) <= best) return;
    // pivot with the most neighbors in P
    int pivot = -1;
    std::size_t pivot_deg = 0;
    Bitset both = p | x;
    both.for_each([&](int u) {
      std::size_t d = p.count_and(adj[u]);
      if (pivot < 0 || d > pivot_deg) {
        pivot = u;
        pivot_deg = d;
      }
    });
    Bitset cand = p.and_not(adj[pivot]);
    cand.for_each([&](int v) {
      if (!p.test(v)) return;  // may have been moved to X already
      expand(rsize + 1, p & adj[v], x & adj[v]);
      p.reset(v);
      x.set(v);
    });
  }
};

// Flat index for unordered pairs x < y.
inline std::size_t pair_index(int n, int x, int y) {
  return static_cast<std::size_t>(x) * n - static_cast<std::size_t>(x) * (x + 1) / 2 +
         (y - x - 1);
}

struct MedianScan {
  bool ok = true;
  std::array<int, 3> witness{};
  int medians = -1;
};

// Definitional check: every vertex triple must have exactly one vertex on
// all three pairwise geodesics. Distances are exact BFS; intervals are
// precomputed as bitsets, so the scan is O(n^3/64) after an O(n*m) BFS
// sweep. This is the authoritative gate; everything downstream assumes it.
MedianScan median_scan(const CubeGraph& g) {
  const int n = g.vertex_count;
  std::vector<std::vector<int>> dist(n);
  for (int v = 0; v < n; ++v) dist[v] = g.bfs(v);

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<Bitset> interval(pairs);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      Bitset b(n);
      const int dxy = dist[x][y];
      for (int v = 0; v < n; ++v)
        if (dist[x][v] + dist[v][y] == dxy) b.set(v);
      interval[pair_index(n, x, y)] = std::move(b);
    }
  }

  MedianScan out;
  for (int x = 0; x < n && out.ok; ++x) {
    for (int y = x + 1; y < n && out.ok; ++y) {
      const Bitset& ixy = interval[pair_index(n, x, y)];
      for (int z = y + 1; z < n; ++z) {
        std::size_t c = 0;
        const Bitset& ixz = interval[pair_index(n, x, z)];
        const Bitset& iyz = interval[pair_index(n, y, z)];
        Bitset meet = ixy & ixz;
        meet &= iyz;
        c = meet.count();
        if (c != 1) {
          out.ok = false;
          out.witness = {x, y, z};
          out.medians = static_cast<int>(c);
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

int max_transverse_clique(const std::vector<Bitset>& transverse) {
  const int k = static_cast<int>(transverse.size());
  if (k == 0) return 0;
  CliqueSearch cs{transverse};
  cs.expand(0, Bitset::full(k), Bitset(k));
  return cs.best;
}

ValidationReport validate_median(const CubeGraph& g, const Caps& caps) {
  if (g.vertex_count == 0) throw Error::validation("empty graph");
  ValidationReport r;
  r.vertex_count = g.vertex_count;
  r.edge_count = g.edge_count();

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].first == g.edges[e].second) {
      r.reason = "loop";
      return r;
    }
    if (e + 1 < g.edges.size() && g.edges[e] == g.edges[e + 1]) {
      r.reason = "multi_edge";
      return r;
    }
  }

  auto d0 = g.bfs(0);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (d0[v] < 0) {
      r.reason = "disconnected";
      r.witness = {0, v, v};
      r.medians_at_witness = 0;
      return r;
    }
  }

  if (g.vertex_count > caps.max_validation_vertices)
    throw Error::cap("median validation is cubic; " + std::to_string(g.vertex_count) +
                     " vertices exceeds the cap of " +
                     std::to_string(caps.max_validation_vertices));

  MedianScan scan = median_scan(g);
  if (!scan.ok) {
    r.witness = scan.witness;
    r.medians_at_witness = scan.medians;
    r.reason = scan.medians == 0 ? "no_median" : "multiple_medians";
    return r;
  }

  Structure s = compute_structure(g);
  r.is_median = true;
  r.hyperplane_count = static_cast<int>(s.hyperplanes.size());
  r.dimension = s.dimension;
  return r;
}

CubeComplex CubeComplex::build(const CubeGraph& g, const Caps& caps) {
  if (g.vertex_count > caps.max_vertices)
    throw Error::cap("vertex count " + std::to_string(g.vertex_count) + " exceeds cap " +
                     std::to_string(caps.max_vertices));
  ValidationReport r = validate_median(g, caps);
  if (!r.is_median) throw MedianError(r);
  if (r.hyperplane_count > caps.max_hyperplanes)
    throw Error::cap("hyperplane count " + std::to_string(r.hyperplane_count) +
                     " exceeds cap " + std::to_string(caps.max_hyperplanes));

  Structure s = compute_structure(g);
  CubeComplex c;
  c.g_ = g;
  c.hyperplanes_ = std::move(s.hyperplanes);
  c.edge_class_ = std::move(s.edge_class);
  c.sign_ = std::move(s.sign);
  c.transverse_ = std::move(s.transverse);
  c.dimension_ = s.dimension;
  c.vertex_by_sign_.reserve(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) c.vertex_by_sign_.emplace(c.sign_[v], v);
  c.bfs_rows_.resize(g.vertex_count);
  c.bfs_have_.assign(g.vertex_count, 0);
  c.linf_rows_.resize(g.vertex_count);
  c.linf_have_.assign(g.vertex_count, 0);
  return c;
}

CubeComplex::CubeComplex(const CubeComplex& o) {
  std::lock_guard lk(o.cache_mu_);
  g_ = o.g_;
  hyperplanes_ = o.hyperplanes_;
  edge_class_ = o.edge_class_;
  sign_ = o.sign_;
  transverse_ = o.transverse_;
  vertex_by_sign_ = o.vertex_by_sign_;
  dimension_ = o.dimension_;
  bfs_rows_ = o.bfs_rows_;
  bfs_have_ = o.bfs_have_;
  linf_rows_ = o.linf_rows_;
  linf_have_ = o.linf_have_;
  cube_adj_ = o.cube_adj_;
}

CubeComplex& CubeComplex::operator=(const CubeComplex& o) {
  if (this == &o) return *this;
  CubeComplex tmp(o);
  *this = std::move(tmp);
  return *this;
}

void CubeComplex::check_vertex(int v) const {
  if (v < 0 || v >= g_.vertex_count) throw Error::usage("unknown vertex id " + std::to_string(v));
}

const Hyperplane& CubeComplex::hyperplane(int h) const {
  if (h < 0 || h >= hyperplane_count())
    throw Error::usage("unknown hyperplane id " + std::to_string(h));
  return hyperplanes_[h];
}

const Bitset& CubeComplex::halfspace(int h, bool side_b) const {
  const auto& hp = hyperplane(h);
  return side_b ? hp.side_b : hp.side_a;
}

const Bitset& CubeComplex::carrier(int h) const { return hyperplane(h).carrier; }

const std::vector<std::uint16_t>& CubeComplex::bfs_row(int src) const {
  check_vertex(src);
  std::lock_guard lk(cache_mu_);
  if (!bfs_have_[src]) {
    auto d = g_.bfs(src);
    bfs_rows_[src].assign(d.begin(), d.end());
    bfs_have_[src] = 1;
  }
  return bfs_rows_[src];
}

int CubeComplex::dist(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  return static_cast<int>(sign_[x].count_xor(sign_[y]));
}

Bitset CubeComplex::separator_mask(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  return sign_[x] ^ sign_[y];
}

DistResult CubeComplex::dist_l1(int x, int y) const {
  Bitset seps = separator_mask(x, y);
  DistResult r;
  r.separators = seps.to_vector();
  r.distance = static_cast<int>(r.separators.size());
  if (static_cast<int>(bfs_row(x)[y]) != r.distance)
    throw Error::internal("separator count disagrees with the graph metric");
  return r;
}

bool CubeComplex::common_cube(int u, int w) const {
  if (u == w) return false;
  Bitset sep = sign_[u] ^ sign_[w];
  bool ok = true;
  sep.for_each([&](int h) {
    if (!ok) return;
    Bitset rest = sep;
    rest.reset(h);
    if (!rest.is_subset_of(transverse_[h])) ok = false;
  });
  return ok;
}

const std::vector<Bitset>& CubeComplex::cube_adjacency() const {
  std::lock_guard lk(cache_mu_);
  if (cube_adj_.empty()) {
    const int n = g_.vertex_count;
    cube_adj_.assign(n, Bitset(n));
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w)
        if (common_cube(u, w)) {
          cube_adj_[u].set(w);
          cube_adj_[w].set(u);
        }
  }
  return cube_adj_;
}

std::vector<int> CubeComplex::linf_row(int x) const {
  check_vertex(x);
  {
    std::lock_guard lk(cache_mu_);
    if (linf_have_[x]) return linf_rows_[x];
  }
  const auto& adj = cube_adjacency();
  const int n = g_.vertex_count;
  std::vector<int> dist(n, -1);
  dist[x] = 0;
  std::queue<int> q;
  q.push(x);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    adj[u].for_each([&](int w) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    });
  }
  std::lock_guard lk(cache_mu_);
  linf_rows_[x] = dist;
  linf_have_[x] = 1;
  return linf_rows_[x];
}

int CubeComplex::dist_linf(int x, int y) const {
  Bitset sep = separator_mask(x, y);
  std::vector<int> seps = sep.to_vector();
  // nesting order: disjoint separators of the same pair nest, and the
  // halfspace containing x orders them; sort by the size of that side.
  std::vector<std::size_t> key(seps.size());
  for (std::size_t i = 0; i < seps.size(); ++i)
    key[i] = halfspace(seps[i], side_of(x, seps[i])).count();
  std::vector<int> order(seps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return key[a] != key[b] ? key[a] < key[b] : seps[a] < seps[b];
  });
  std::vector<int> dp(seps.size(), 1);
  int chain = seps.empty() ? 0 : 1;
  for (std::size_t j = 0; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (disjoint_hyperplanes(seps[order[i]], seps[order[j]]))
        dp[j] = std::max(dp[j], dp[i] + 1);
    }
    chain = std::max(chain, dp[j]);
  }
  int via_cubes = linf_row(x)[y];
  if (via_cubes != chain)
    throw Error::internal("disjoint-separator chain disagrees with cube-diagonal BFS");
  return chain;
}

int CubeComplex::median(int x, int y, int z) const {
  check_vertex(x);
  check_vertex(y);
  check_vertex(z);
  Bitset maj = Bitset::majority(sign_[x], sign_[y], sign_[z]);
  int m = vertex_by_signature(maj);
  if (m < 0) throw Error::internal("median signature has no vertex");
  return m;
}

Bitset CubeComplex::interval(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  Bitset out(g_.vertex_count);
  for (int v = 0; v < g_.vertex_count; ++v)
    if (sign_[v].is_between(sign_[x], sign_[y])) out.set(v);
  return out;
}

bool CubeComplex::between(int x, int m, int y) const {
  check_vertex(x);
  check_vertex(m);
  check_vertex(y);
  return sign_[m].is_between(sign_[x], sign_[y]);
}

int CubeComplex::vertex_by_signature(const Bitset& sig) const {
  auto it = vertex_by_sign_.find(sig);
  return it == vertex_by_sign_.end() ? -1 : it->second;
}

}  // namespace ccx
