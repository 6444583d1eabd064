#include <doctest.h>

#include "ccx/duality.hpp"
#include "ccx/error.hpp"
#include "ccx/generators.hpp"
#include "ccx/isomorphism.hpp"
#include "oracles.hpp"

using namespace ccx;

namespace {

Wallspace crossing_pair_on_four() {
  Wallspace w;
  w.ground = 4;
  Bitset a(4), b(4), c(4), d(4);
  a.set(0); a.set(1); b.set(2); b.set(3);
  c.set(0); c.set(2); d.set(1); d.set(3);
  w.walls = {{a, b}, {c, d}};
  return w;
}

Wallspace nested_walls(int k) {
  Wallspace w;
  w.ground = k + 1;
  for (int i = 0; i < k; ++i) {
    Bitset a(k + 1), b(k + 1);
    for (int p = 0; p <= k; ++p) (p <= i ? a : b).set(p);
    w.walls.emplace_back(a, b);
  }
  return w;
}

Wallspace coordinate_walls(int bits) {
  Wallspace w;
  w.ground = 1 << bits;
  for (int i = 0; i < bits; ++i) {
    Bitset a(w.ground), b(w.ground);
    for (int p = 0; p < w.ground; ++p) ((p >> i & 1) ? b : a).set(p);
    w.walls.emplace_back(a, b);
  }
  return w;
}

}  // namespace

TEST_CASE("wallspace validation") {
  auto w = crossing_pair_on_four();
  w.validate();

  Wallspace dup = w;
  dup.walls.push_back(dup.walls[0]);
  CHECK_THROWS_AS(dup.validate(), Error);

  Wallspace bad = w;
  bad.walls[0].second = Bitset(4);
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("ultrafilters") {
  auto w = crossing_pair_on_four();
  for (int p = 0; p < 4; ++p) CHECK(Ultrafilter::principal(w, p).consistent(w));

  auto nested = nested_walls(3);
  Ultrafilter bad;
  bad.orientation = Bitset(3);
  bad.orientation.set(2);  // far side of the outermost wall, near side of the rest
  CHECK(!bad.consistent(nested));
}

TEST_CASE("dual of two crossing walls is the square") {
  auto d = dual_complex(crossing_pair_on_four());
  CHECK(d.complex.vertex_count() == 4);
  CHECK(d.complex.edge_count() == 4);
  CHECK(d.complex.hyperplane_count() == 2);
  CHECK(oracle::brute_consistent_orientations(crossing_pair_on_four()).size() == 4);
}

TEST_CASE("dual of nested walls is a path") {
  for (int k = 1; k <= 6; ++k) {
    auto d = dual_complex(nested_walls(k));
    CHECK(d.complex.vertex_count() == k + 1);
    CHECK(graph_isomorphic(d.complex.graph(), make_path(k + 1)));
  }
}

TEST_CASE("dual of three crossing walls is the cube") {
  auto w = coordinate_walls(3);
  auto d = dual_complex(w);
  CHECK(d.complex.vertex_count() == 8);
  CHECK(graph_isomorphic(d.complex.graph(), make_cube(3)));
  CHECK(oracle::brute_consistent_orientations(w).size() == 8);
}

TEST_CASE("flip closure reaches every consistent orientation") {
  std::uint64_t seeds[] = {3, 14, 159, 2653};
  for (auto s : seeds) {
    auto w = make_random_wallspace(10 + static_cast<int>(s % 5), 8, s);
    auto d = dual_complex(w);
    CHECK(static_cast<std::size_t>(d.complex.vertex_count()) ==
          oracle::brute_consistent_orientations(w).size());
  }
}

TEST_CASE("round trips through walls_of") {
  for (auto g : {make_cube(3), make_path(5), make_grid(3, 4), make_random_tree(12, 9),
                 make_coset_tree(3)}) {
    auto c = CubeComplex::build(g);
    auto w = walls_of(c);
    CHECK(w.wall_count() == c.hyperplane_count());
    auto d = dual_complex(w);
    CHECK(graph_isomorphic(d.complex.graph(), g));
  }
  for (std::uint64_t s : {7ull, 77ull, 777ull}) {
    auto d = dual_complex(make_random_wallspace(12, 8, s));
    auto round = dual_complex(walls_of(d.complex));
    CHECK(graph_isomorphic(round.complex.graph(), d.complex.graph()));
  }
}

TEST_CASE("wall correspondence flips exactly its hyperplane") {
  auto d = dual_complex(coordinate_walls(3));
  std::vector<int> seen = d.wall_to_hyperplane;
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<int>{0, 1, 2});
}

TEST_CASE("restriction quotients") {
  auto grid = CubeComplex::build(make_grid(3, 3));
  // kept horizontal cuts give the vertical factor path
  auto q = restriction_quotient(grid, {0, 2});
  CHECK(q.complex.vertex_count() == 3);
  CHECK(graph_isomorphic(q.complex.graph(), make_path(3)));
  CHECK(q.kept_to_hyperplane.size() == 2);

  std::vector<int> all{0, 1, 2, 3};
  auto qa = restriction_quotient(grid, all);
  CHECK(graph_isomorphic(qa.complex.graph(), grid.graph()));

  auto q3 = CubeComplex::build(make_cube(3));
  auto qe = restriction_quotient(q3, {1});
  CHECK(qe.complex.vertex_count() == 2);
  CHECK(qe.complex.edge_count() == 1);

  auto qp = restriction_quotient(q3, {});
  CHECK(qp.collapsed_to_point);
  CHECK(qp.complex.vertex_count() == 1);
}

TEST_CASE("irreducible decomposition") {
  auto grid = CubeComplex::build(make_grid(3, 3));
  auto d = irreducible_decompose(grid);
  REQUIRE(d.classes.size() == 2);
  for (const auto& f : d.factors) CHECK(graph_isomorphic(f.complex.graph(), make_path(3)));

  auto tree = CubeComplex::build(make_random_tree(15, 4));
  CHECK(irreducible_decompose(tree).classes.size() == 1);

  auto q3 = CubeComplex::build(make_cube(3));
  auto dq = irreducible_decompose(q3);
  REQUIRE(dq.classes.size() == 3);
  for (const auto& f : dq.factors) CHECK(f.complex.vertex_count() == 2);

  // every hyperplane lands in exactly one class
  auto dual = dual_complex(make_random_wallspace(12, 7, 99));
  auto dd = irreducible_decompose(dual.complex);
  int covered = 0;
  for (const auto& cls : dd.classes) covered += static_cast<int>(cls.size());
  CHECK(covered == dual.complex.hyperplane_count());
}

TEST_CASE("isomorphism checker sanity") {
  CHECK(graph_isomorphic(make_path(6), make_path(6)));
  CHECK(!graph_isomorphic(make_path(6), make_star(5)));
  CHECK(graph_isomorphic(make_grid(3, 4), make_grid(4, 3)));
  CHECK(!graph_isomorphic(make_grid(3, 4), make_grid(2, 6)));
  CHECK(graph_isomorphic(make_cube(4), make_cube(4)));
}

TEST_CASE("wall cap refuses oversized wallspaces unless raised") {
  auto p20 = CubeComplex::build(make_path(20));
  auto w = walls_of(p20);  // 19 nested walls
  CHECK_THROWS_AS(dual_complex(w), Error);
  Caps wide;
  wide.max_walls = 32;
  CHECK(dual_complex(w, wide).complex.vertex_count() == 20);
}
