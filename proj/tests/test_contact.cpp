#include <doctest.h>

#include "ccx/contact.hpp"
#include "ccx/duality.hpp"
#include "ccx/generators.hpp"
#include "ccx/separation.hpp"
#include "oracles.hpp"

using namespace ccx;

TEST_CASE("contact graphs of named complexes") {
  auto q3 = CubeComplex::build(make_cube(3));
  auto cq = contact_graph(q3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) CHECK(cq.adj[a].test(b));

  auto pg = make_path(5);
  auto p5 = CubeComplex::build(pg);
  auto cp = contact_graph(p5);
  CHECK(cp.adj[0].to_vector() == std::vector<int>{1});
  CHECK(cp.adj[1].to_vector() == std::vector<int>{0, 2});
  CHECK(cp.adj[2].to_vector() == std::vector<int>{1, 3});
  CHECK(cp.adj[3].to_vector() == std::vector<int>{2});
  // oracle: adjacency is carrier intersection
  auto w = oracle::wall_structure(pg);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      CHECK(cp.adj[a].test(b) ==
            oracle::wall_carrier(pg, w, a).intersects(oracle::wall_carrier(pg, w, b)));

  auto star = CubeComplex::build(make_star(5));
  auto cs = contact_graph(star);
  for (int a = 0; a < 5; ++a) CHECK(cs.adj[a].count() == 4);
}

TEST_CASE("delta chains") {
  auto q3 = CubeComplex::build(make_cube(3));
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) CHECK(delta_chain(q3, a, b).length() == 0);

  auto pg = make_path(5);
  auto p5 = CubeComplex::build(pg);
  auto ch = delta_chain(p5, 0, 3);
  CHECK(ch.length() == 2);
  CHECK(ch.chain == std::vector<int>{1, 2});
  auto w = oracle::wall_structure(pg);
  CHECK(oracle::brute_delta(pg, w, 0, 3) == 2);

  auto grid = CubeComplex::build(make_grid(3, 3));
  CHECK(delta_chain(grid, 0, 2).length() == 0);

  // brute-force chain enumeration across small corpora
  for (auto g : {make_random_tree(12, 17), make_grid(4, 3), make_coset_tree(3)}) {
    auto c = CubeComplex::build(g);
    auto ww = oracle::wall_structure(g);
    for (int a = 0; a < c.hyperplane_count(); ++a)
      for (int b = a + 1; b < c.hyperplane_count(); ++b)
        CHECK(delta_chain(c, a, b).length() == oracle::brute_delta(g, ww, a, b));
  }
}

TEST_CASE("qi sandwich on small complexes") {
  auto q3 = CubeComplex::build(make_cube(3));
  auto rq = qi_check(q3);
  CHECK(rq.clean);
  CHECK(rq.literal_upper_failures == 3);  // transverse pairs: d = 1 > 5 * 0

  auto p5 = CubeComplex::build(make_path(5));
  auto rp = qi_check(p5);
  CHECK(rp.clean);
  CHECK(delta_chain(p5, 0, 3).length() == 2);
  CHECK(contact_graph(p5).distance(0, 3) == 3);
}

TEST_CASE("qi closed form along path families") {
  for (int k = 3; k <= 24; ++k) {
    auto pk = CubeComplex::build(make_path(k));
    int first = 0, last = k - 2;
    CHECK(delta_chain(pk, first, last).length() == k - 3);
    CHECK(contact_graph(pk).distance(first, last) == k - 2);
    CHECK(qi_check(pk).clean);
  }
}

TEST_CASE("distance three or more in the contact graph forces strong separation") {
  for (auto g : {make_path(9), make_random_tree(16, 23), make_grid(3, 6),
                 make_coset_tree(3)}) {
    auto c = CubeComplex::build(g);
    auto cg = contact_graph(c);
    for (int a = 0; a < c.hyperplane_count(); ++a)
      for (int b = a + 1; b < c.hyperplane_count(); ++b)
        if (cg.distance(a, b) >= 3) CHECK(strongly_separated(c, a, b));
  }
}

TEST_CASE("consecutive strong separation along nested chains is pairwise") {
  for (auto g : {make_path(8), make_random_tree(14, 41), make_grid(4, 4)}) {
    auto c = CubeComplex::build(g);
    for (int j = 0; j < c.hyperplane_count(); ++j) {
      for (int h = 0; h < c.hyperplane_count(); ++h) {
        if (j == h) continue;
        std::vector<int> seps;
        for (int v = 0; v < c.hyperplane_count(); ++v)
          if (v != j && v != h && separates(c, v, j, h)) seps.push_back(v);
        for (int a : seps)
          for (int b : seps)
            for (int m : seps) {
              if (a == b || a == m || b == m) continue;
              if (separates(c, m, a, b) && strongly_separated(c, a, m) &&
                  strongly_separated(c, m, b))
                CHECK(strongly_separated(c, a, b));
            }
      }
    }
  }
}

TEST_CASE("four point constants") {
  auto p7 = CubeComplex::build(make_path(7));
  CHECK(four_point_delta_x2(contact_graph(p7)) == 0);

  auto q3 = CubeComplex::build(make_cube(3));
  CHECK(four_point_delta_x2(contact_graph(q3)) == 0);

  auto dual = dual_complex(make_random_wallspace(14, 9, 4242));
  auto cg = contact_graph(dual.complex);
  CHECK(four_point_delta_x2(cg) == oracle::brute_four_point_x2(cg.dist));

  auto grid = CubeComplex::build(make_grid(5, 5));
  auto cgg = contact_graph(grid);
  CHECK(four_point_delta_x2(cgg) == oracle::brute_four_point_x2(cgg.dist));
}

TEST_CASE("geodesics track separators") {
  for (auto g : {make_path(9), make_grid(4, 4), make_random_tree(18, 3),
                 make_coset_tree(3)}) {
    auto c = CubeComplex::build(g);
    auto cg = contact_graph(c);
    auto rep = hagen_check(c, cg);
    INFO(rep.detail);
    CHECK(rep.holds);
    CHECK(rep.geodesics_checked > 0);
  }
}
