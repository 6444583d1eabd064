#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "ccx/complex.hpp"
#include "ccx/error.hpp"
#include "ccx/duality.hpp"
#include "ccx/generators.hpp"
#include "oracles.hpp"

using namespace ccx;

namespace {

CubeGraph triangle() { return CubeGraph::make(3, {{0, 1}, {1, 2}, {0, 2}}); }

CubeGraph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return CubeGraph::make(n, std::move(e));
}

}  // namespace

TEST_CASE("validation accepts hypercubes") {
  auto r = validate_median(make_cube(3));
  CHECK(r.is_median);
  CHECK(r.vertex_count == 8);
  CHECK(r.edge_count == 12);
  CHECK(r.hyperplane_count == 3);
  CHECK(r.dimension == 3);
  CHECK(!r.witness.has_value());
}

TEST_CASE("validation rejects the triangle with the full witness") {
  auto r = validate_median(triangle());
  CHECK(!r.is_median);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == std::array<int, 3>{0, 1, 2});
  auto d = oracle::all_pairs_bfs(triangle());
  CHECK(oracle::medians(d, 0, 1, 2).empty());
  CHECK(r.reason == "no_median");
}

TEST_CASE("validation rejects near-median graphs") {
  // complete bipartite K_{2,3}: every triple has a median, one triple has two
  auto k23 = CubeGraph::make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  auto r = validate_median(k23);
  CHECK(!r.is_median);
  CHECK(r.reason == "multiple_medians");
  REQUIRE(r.witness.has_value());
  auto d = oracle::all_pairs_bfs(k23);
  auto [x, y, z] = *r.witness;
  CHECK(oracle::medians(d, x, y, z).size() >= 2);

  // a cube with one corner removed: the deleted corner was the median of
  // its three neighbors
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : make_cube(3).edges)
    if (u != 7 && v != 7) edges.push_back({u, v});
  auto q3minus = CubeGraph::make(7, edges);
  auto rm = validate_median(q3minus);
  CHECK(!rm.is_median);
  CHECK(rm.reason == "no_median");
}

TEST_CASE("validation rejects the six cycle") {
  auto g = cycle(6);
  auto r = validate_median(g);
  CHECK(!r.is_median);
  REQUIRE(r.witness.has_value());
  auto [x, y, z] = *r.witness;
  auto d = oracle::all_pairs_bfs(g);
  CHECK(static_cast<int>(oracle::medians(d, x, y, z).size()) == r.medians_at_witness);
  CHECK(r.medians_at_witness != 1);
}

TEST_CASE("validation flags structural defects") {
  CHECK_THROWS_AS(validate_median(CubeGraph::make(0, {})), Error);

  auto loop = validate_median(CubeGraph::make(2, {{0, 0}, {0, 1}}));
  CHECK(!loop.is_median);
  CHECK(loop.reason == "loop");

  auto multi = validate_median(CubeGraph::make(2, {{0, 1}, {0, 1}}));
  CHECK(!multi.is_median);
  CHECK(multi.reason == "multi_edge");

  auto disc = validate_median(CubeGraph::make(4, {{0, 1}, {2, 3}}));
  CHECK(!disc.is_median);
  CHECK(disc.reason == "disconnected");
  CHECK(disc.witness.has_value());
}

TEST_CASE("single vertex is a valid complex") {
  auto c = CubeComplex::build(CubeGraph::make(1, {}));
  CHECK(c.hyperplane_count() == 0);
  CHECK(c.dimension() == 0);
  CHECK(c.median(0, 0, 0) == 0);
}

TEST_CASE("hyperplanes of named complexes") {
  auto q3 = CubeComplex::build(make_cube(3));
  REQUIRE(q3.hyperplane_count() == 3);
  for (const auto& h : q3.hyperplanes()) {
    CHECK(h.edge_ids.size() == 4);
    CHECK(h.side_a.count() == 4);
    CHECK(h.side_b.count() == 4);
    CHECK(h.carrier.count() == 8);
  }

  auto p5 = CubeComplex::build(make_path(5));
  REQUIRE(p5.hyperplane_count() == 4);
  for (const auto& h : p5.hyperplanes()) CHECK(h.edge_ids.size() == 1);
}

TEST_CASE("theta classes match the Djokovic oracle on the 3x3 grid") {
  auto g = make_grid(3, 3);
  auto c = CubeComplex::build(g);
  REQUIRE(c.hyperplane_count() == 4);
  for (const auto& h : c.hyperplanes()) CHECK(h.edge_ids.size() == 3);

  auto classes = oracle::djokovic_classes(g);
  REQUIRE(classes.size() == 4);
  std::set<std::set<int>> expected, actual;
  for (const auto& cls : classes) expected.insert({cls.begin(), cls.end()});
  for (const auto& h : c.hyperplanes())
    actual.insert({h.edge_ids.begin(), h.edge_ids.end()});
  CHECK(expected == actual);
}

TEST_CASE("hyperplane computation is deterministic and partitions the edges") {
  auto g = make_random_tree(40, 7);
  auto c1 = CubeComplex::build(g);
  auto c2 = CubeComplex::build(g);
  REQUIRE(c1.hyperplane_count() == c2.hyperplane_count());
  std::set<int> covered;
  for (int h = 0; h < c1.hyperplane_count(); ++h) {
    CHECK(c1.hyperplane(h).edge_ids == c2.hyperplane(h).edge_ids);
    for (int e : c1.hyperplane(h).edge_ids) CHECK(covered.insert(e).second);
  }
  CHECK(static_cast<int>(covered.size()) == g.edge_count());
}

TEST_CASE("l1 distance and separators") {
  auto q3 = CubeComplex::build(make_cube(3));
  auto d = q3.dist_l1(0, 7);
  CHECK(d.distance == 3);
  CHECK(d.separators == std::vector<int>{0, 1, 2});
  CHECK(q3.dist_l1(5, 5).distance == 0);
  CHECK(q3.dist_l1(5, 5).separators.empty());

  auto p5 = CubeComplex::build(make_path(5));
  auto dp = p5.dist_l1(0, 4);
  CHECK(dp.distance == 4);
  CHECK(dp.separators == std::vector<int>{0, 1, 2, 3});
  // per-hyperplane side test oracle
  auto w = oracle::wall_structure(make_path(5));
  CHECK(oracle::separators(w, 0, 4).size() == 4);
}

TEST_CASE("linf distance: chain equals cube BFS equals brute force") {
  auto q3 = CubeComplex::build(make_cube(3));
  CHECK(q3.dist_linf(0, 7) == 1);

  auto p5 = CubeComplex::build(make_path(5));
  CHECK(p5.dist_linf(0, 4) == 4);

  auto gg = make_grid(3, 3);
  auto grid = CubeComplex::build(gg);
  auto w = oracle::wall_structure(gg);
  CHECK(oracle::brute_linf(gg, w, 0, 8) == 2);
  CHECK(grid.dist_linf(0, 8) == 2);

  for (auto g : {make_grid(4, 3), make_random_tree(12, 3), make_cube(4)}) {
    auto c = CubeComplex::build(g);
    auto ww = oracle::wall_structure(g);
    for (int x = 0; x < c.vertex_count(); ++x)
      for (int y = x + 1; y < c.vertex_count(); ++y)
        CHECK(c.dist_linf(x, y) == oracle::brute_linf(g, ww, x, y));
  }
}

TEST_CASE("median and interval") {
  auto q3 = CubeComplex::build(make_cube(3));
  CHECK(q3.median(0b000, 0b011, 0b101) == 0b001);

  auto p5 = CubeComplex::build(make_path(5));
  CHECK(p5.interval(0, 2).to_vector() == std::vector<int>{0, 1, 2});

  auto gg = make_grid(3, 3);
  auto grid = CubeComplex::build(gg);
  auto d = oracle::all_pairs_bfs(gg);
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y)
      for (int z = 0; z < 9; ++z) {
        auto ms = oracle::medians(d, x, y, z);
        REQUIRE(ms.size() == 1);
        CHECK(grid.median(x, y, z) == ms[0]);
      }
}

TEST_CASE("dimension by clique and by cube growth") {
  CHECK(CubeComplex::build(make_cube(3)).dimension() == 3);
  CHECK(CubeComplex::build(make_cube(4)).dimension() == 4);
  CHECK(CubeComplex::build(make_random_tree(30, 11)).dimension() == 1);
  CHECK(CubeComplex::build(make_path(2)).dimension() == 1);
  CHECK(CubeComplex::build(make_grid(3, 3)).dimension() == 2);
  CHECK(CubeComplex::build(make_grid(4, 2)).dimension() == 2);

  // transversality cliques against direct cube growth
  std::vector<CubeGraph> corpus{make_cube(3), make_cube(4), make_grid(3, 4),
                                make_path(7), make_random_tree(18, 9),
                                make_coset_tree(3)};
  for (std::uint64_t s : {5ull, 50ull, 500ull}) {
    auto dual = dual_complex(make_random_wallspace(12, 8, s));
    corpus.push_back(dual.complex.graph());
  }
  for (const auto& g : corpus)
    CHECK(CubeComplex::build(g).dimension() == oracle::brute_max_cube(g));
}

TEST_CASE("metric invariants across a small corpus") {
  for (auto g : {make_cube(3), make_grid(3, 4), make_path(9), make_random_tree(15, 5),
                 make_coset_tree(3)}) {
    auto c = CubeComplex::build(g);
    for (int x = 0; x < c.vertex_count(); ++x) {
      for (int y = x; y < c.vertex_count(); ++y) {
        int l1 = c.dist_l1(x, y).distance;  // asserts #separators == BFS internally
        int linf = c.dist_linf(x, y);       // asserts chain == cube BFS internally
        CHECK(linf >= (l1 + c.dimension() - 1) / c.dimension());
        CHECK(linf <= l1);
      }
    }
  }
}

TEST_CASE("halfspaces are convex") {
  for (auto g : {make_cube(3), make_grid(3, 3), make_path(7)}) {
    auto c = CubeComplex::build(g);
    auto d = oracle::all_pairs_bfs(g);
    for (int h = 0; h < c.hyperplane_count(); ++h) {
      for (bool side : {false, true}) {
        const Bitset& hs = c.halfspace(h, side);
        auto pts = hs.to_vector();
        for (int x : pts)
          for (int y : pts)
            for (int v : oracle::interval(d, x, y)) CHECK(hs.test(v));
      }
    }
  }
}

TEST_CASE("caps refuse oversized input") {
  Caps tight;
  tight.max_vertices = 4;
  CHECK_THROWS_AS(CubeComplex::build(make_path(9), tight), Error);
  Caps scan;
  scan.max_validation_vertices = 5;
  CHECK_THROWS_AS(validate_median(make_path(9), scan), Error);
}

TEST_CASE("concurrent queries share one complex safely") {
  auto c = CubeComplex::build(make_grid(5, 4));
  std::vector<std::thread> workers;
  std::atomic<int> failures{0};
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&c, &failures, t] {
      try {
        for (int x = 0; x < c.vertex_count(); ++x) {
          for (int y = 0; y < c.vertex_count(); ++y) {
            if (c.dist_l1(x, y).distance != c.dist(x, y)) ++failures;
            if (c.dist_linf(x, y) > c.dist(x, y)) ++failures;
          }
          c.interval(t, x);
          c.median(t, x, c.vertex_count() - 1);
        }
      } catch (...) {
        ++failures;
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(failures == 0);
}

TEST_CASE("generator shapes and parameter guards") {
  auto t3 = make_coset_tree(3);
  CHECK(t3.vertex_count == 15);  // level sizes 8 + 4 + 2 + 1
  CHECK(t3.edge_count() == 14);
  int leaves = 0;
  for (int v = 0; v < t3.vertex_count; ++v)
    if (t3.adjacency[v].size() == 1) ++leaves;
  CHECK(leaves == 8);
  // levels join by inclusion: every non-leaf level vertex has two children
  for (int b = 0; b < 4; ++b)
    CHECK(t3.adjacency[coset_tree_vertex(3, 1, b)].size() == 3);

  CHECK_THROWS_AS(make_cube(17), Error);
  CHECK_THROWS_AS(make_coset_tree(0), Error);
  CHECK_THROWS_AS(make_path(0), Error);
  CHECK_THROWS_AS(make_grid(0, 3), Error);
}
