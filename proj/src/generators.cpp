#include "ccx/generators.hpp"

#include <algorithm>
#include <set>

#include "ccx/error.hpp"

namespace ccx {

std::uint64_t bounded_rand(std::uint64_t& state, std::uint64_t bound) {
  // splitmix64 stream; rejection keeps the draw unbiased and the stream
  // identical on every platform.
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  if (bound == 0) throw Error::internal("bounded_rand with zero bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

CubeGraph make_cube(int dim) {
  if (dim < 0 || dim > 16) throw Error::usage("cube dimension out of range [0,16]");
  const int n = 1 << dim;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
  return CubeGraph::make(n, std::move(edges));
}

CubeGraph make_path(int n) {
  if (n < 1) throw Error::usage("path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return CubeGraph::make(n, std::move(edges));
}

CubeGraph make_grid(int a, int b) {
  if (a < 1 || b < 1) throw Error::usage("grid sides must be positive");
  auto id = [b](int x, int y) { return x * b + y; };
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < b; ++y) {
      if (x + 1 < a) edges.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < b) edges.emplace_back(id(x, y), id(x, y + 1));
    }
  }
  return CubeGraph::make(a * b, std::move(edges));
}

CubeGraph make_star(int leaves) {
  if (leaves < 0) throw Error::usage("negative leaf count");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return CubeGraph::make(leaves + 1, std::move(edges));
}

CubeGraph make_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw Error::usage("tree needs at least one vertex");
  std::uint64_t state = seed ^ 0x7472656573ull;
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(bounded_rand(state, v)), v);
  return CubeGraph::make(n, std::move(edges));
}

int coset_tree_vertex(int depth, int level, int b) {
  // levels stacked bottom-up: level j occupies a block of size 2^(depth-j)
  int off = 0;
  for (int j = 0; j < level; ++j) off += 1 << (depth - j);
  return off + b;
}

CubeGraph make_coset_tree(int depth) {
  if (depth < 1 || depth > 16) throw Error::usage("coset-tree depth out of range [1,16]");
  int n = 0;
  for (int j = 0; j <= depth; ++j) n += 1 << (depth - j);
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j + 1 <= depth; ++j)
    for (int b = 0; b < (1 << (depth - j)); ++b)
      edges.emplace_back(coset_tree_vertex(depth, j, b),
                         coset_tree_vertex(depth, j + 1, b >> 1));
  return CubeGraph::make(n, std::move(edges));
}

std::vector<std::vector<int>> cube_symmetry_generators(int dim) {
  const int n = 1 << dim;
  std::vector<std::vector<int>> gens;
  if (dim >= 2) {
    std::vector<int> swap01(n), cycle(n);
    for (int v = 0; v < n; ++v) {
      int s = v & ~3;
      s |= ((v & 1) << 1) | ((v >> 1) & 1);
      swap01[v] = s;
      int c = 0;  // bit i -> bit i+1, top bit wraps to 0
      for (int b = 0; b < dim; ++b)
        if (v >> b & 1) c |= 1 << ((b + 1) % dim);
      cycle[v] = c;
    }
    gens.push_back(swap01);
    if (dim >= 3) gens.push_back(cycle);
  }
  std::vector<int> flip0(n);
  for (int v = 0; v < n; ++v) flip0[v] = v ^ 1;
  gens.push_back(flip0);
  return gens;
}

std::vector<std::vector<int>> grid_symmetry_generators(int a, int b, bool with_transpose) {
  auto id = [b](int x, int y) { return x * b + y; };
  std::vector<std::vector<int>> gens;
  std::vector<int> hflip(a * b), vflip(a * b);
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) {
      hflip[id(x, y)] = id(a - 1 - x, y);
      vflip[id(x, y)] = id(x, b - 1 - y);
    }
  gens.push_back(hflip);
  gens.push_back(vflip);
  if (with_transpose && a == b) {
    std::vector<int> tr(a * b);
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < b; ++y) tr[id(x, y)] = id(y, x);
    gens.push_back(tr);
  }
  return gens;
}

std::vector<int> path_end_swap(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - 1 - i;
  return v;
}

std::vector<std::vector<int>> coset_tree_symmetry_generators(int depth) {
  std::vector<std::vector<int>> gens;
  const int n = coset_tree_vertex(depth, depth, 0) + 1;
  // one generator per internal node: swap the two child subtrees
  for (int level = 1; level <= depth; ++level) {
    for (int node = 0; node < (1 << (depth - level)); ++node) {
      std::vector<int> vmap(n);
      for (int v = 0; v < n; ++v) vmap[v] = v;
      for (int j = 0; j < level; ++j) {
        // vertices of level j below this node: prefix `node`, then one
        // branch bit, then j-level offset bits
        const int tail = level - j;  // bits below `node` at level j
        for (int rest = 0; rest < (1 << (tail - 1)); ++rest) {
          int left = (node << tail) | rest;
          int right = (node << tail) | (1 << (tail - 1)) | rest;
          std::swap(vmap[coset_tree_vertex(depth, j, left)],
                    vmap[coset_tree_vertex(depth, j, right)]);
        }
      }
      gens.push_back(std::move(vmap));
    }
  }
  return gens;
}

Wallspace make_random_wallspace(int k, int m, std::uint64_t seed) {
  if (k < 2) throw Error::usage("wallspace needs at least two points");
  if (m < 1) throw Error::usage("wall count must be positive");
  std::uint64_t state = seed ^ 0x77616c6c73ull;
  // distinct planted integer points
  std::set<std::pair<long long, long long>> used;
  std::vector<std::pair<long long, long long>> pts;
  while (static_cast<int>(pts.size()) < k) {
    long long x = static_cast<long long>(bounded_rand(state, 1 << 20));
    long long y = static_cast<long long>(bounded_rand(state, 1 << 20));
    if (used.insert({x, y}).second) pts.emplace_back(x, y);
  }

  Wallspace w;
  w.ground = k;
  std::set<std::vector<int>> seen;  // canonical side containing point 0
  int attempts = 0;
  while (w.wall_count() < m) {
    if (++attempts > 20000) throw Error::internal("wallspace generator stalled");
    int i = static_cast<int>(bounded_rand(state, k));
    int j = static_cast<int>(bounded_rand(state, k));
    if (i == j) continue;
    // perpendicular bisector of (pts[i], pts[j]): side by squared distance
    Bitset a(k), b(k);
    bool degenerate = false;
    for (int p = 0; p < k && !degenerate; ++p) {
      long long dxi = pts[p].first - pts[i].first, dyi = pts[p].second - pts[i].second;
      long long dxj = pts[p].first - pts[j].first, dyj = pts[p].second - pts[j].second;
      long long di = dxi * dxi + dyi * dyi;
      long long dj = dxj * dxj + dyj * dyj;
      if (di == dj) degenerate = true;
      else if (di < dj) a.set(p);
      else b.set(p);
    }
    if (degenerate || a.none() || b.none()) continue;
    std::vector<int> canon = a.test(0) ? a.to_vector() : b.to_vector();
    if (!seen.insert(canon).second) continue;
    w.walls.emplace_back(std::move(a), std::move(b));
  }
  w.validate();
  return w;
}

}  // namespace ccx
