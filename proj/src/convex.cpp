#include "ccx/convex.hpp"

#include <string>

#include "ccx/error.hpp"

namespace ccx {

ConvexityCheck is_convex(const CubeComplex& c, const Bitset& s) {
  if (s.none()) throw Error::usage("empty set");
  ConvexityCheck out;
  auto pts = s.to_vector();
  for (std::size_t i = 0; i < pts.size() && out.convex; ++i) {
    for (std::size_t j = i + 1; j < pts.size() && out.convex; ++j) {
      Bitset iv = c.interval(pts[i], pts[j]);
      if (!iv.is_subset_of(s)) {
        out.convex = false;
        out.x = pts[i];
        out.y = pts[j];
        out.via = iv.and_not(s).find_first();
      }
    }
  }
  return out;
}

ConvexSet convex_hull(const CubeComplex& c, const Bitset& s) {
  if (s.none()) throw Error::usage("empty set");
  ConvexSet out;
  out.vertices = Bitset::full(c.vertex_count());
  for (int h = 0; h < c.hyperplane_count(); ++h) {
    for (bool side : {false, true}) {
      if (s.is_subset_of(c.halfspace(h, side))) {
        out.vertices &= c.halfspace(h, side);
        out.defining_halfspaces.emplace_back(h, side);
      }
    }
  }
  return out;
}

ConvexSet certify_convex(const CubeComplex& c, const Bitset& s) {
  ConvexityCheck chk = is_convex(c, s);
  if (!chk.convex)
    throw Error::validation("set is not convex: interval(" + std::to_string(chk.x) + "," +
                            std::to_string(chk.y) + ") leaves it via " +
                            std::to_string(chk.via));
  ConvexSet hull = convex_hull(c, s);
  if (hull.vertices != s)
    throw Error::internal("convex set is not the intersection of its halfspaces");
  return hull;
}

ConvexSet halfspace_set(const CubeComplex& c, int h, bool side_b) {
  ConvexSet out;
  out.vertices = c.halfspace(h, side_b);
  out.defining_halfspaces = {{h, side_b}};
  return out;
}

ConvexSet carrier_hull(const CubeComplex& c, int h) {
  return certify_convex(c, c.carrier(h));
}

int gate(const CubeComplex& c, int x, const ConvexSet& C) {
  if (C.vertices.none()) throw Error::usage("empty convex set");
  if (C.vertices.test(x)) return x;
  int cur = C.vertices.find_first();
  int dcur = c.dist(x, cur);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int nb : c.graph().adjacency[cur]) {
      if (!C.vertices.test(nb)) continue;
      int m = c.median(x, cur, nb);
      int dm = c.dist(x, m);
      if (dm < dcur) {
        cur = m;
        dcur = dm;
        moved = true;
        break;
      }
    }
  }
  // uniqueness and the geodesic-through law over the whole set
  const Bitset& sx = c.signature(x);
  const Bitset& sg = c.signature(cur);
  int nearest = 0;
  C.vertices.for_each([&](int v) {
    if (c.dist(x, v) == dcur) ++nearest;
    if (!sg.is_between(sx, c.signature(v)))
      throw Error::property("gate law fails: no geodesic from " + std::to_string(v) +
                            " to " + std::to_string(x) + " through " + std::to_string(cur));
  });
  if (nearest != 1)
    throw Error::property("gate is not unique; set is not convex as certified");
  return cur;
}

Bitset crossing_mask(const CubeComplex& c, const ConvexSet& C) {
  Bitset out(c.hyperplane_count());
  for (int h = 0; h < c.hyperplane_count(); ++h)
    if (C.vertices.intersects(c.halfspace(h, false)) &&
        C.vertices.intersects(c.halfspace(h, true)))
      out.set(h);
  return out;
}

Bitset project_set(const CubeComplex& c, const Bitset& s, const ConvexSet& C) {
  if (s.none()) throw Error::usage("empty set");
  Bitset out(c.vertex_count());
  std::vector<int> pts = s.to_vector();
  std::vector<int> gates(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    gates[i] = gate(c, pts[i], C);
    out.set(gates[i]);
  }
  Bitset crossing = crossing_mask(c, C);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Bitset lhs = c.separator_mask(gates[i], gates[j]);
      Bitset rhs = c.separator_mask(pts[i], pts[j]) & crossing;
      if (lhs != rhs)
        throw Error::property("projection separation law fails for pair (" +
                              std::to_string(pts[i]) + "," + std::to_string(pts[j]) + ")");
    }
  }
  return out;
}

ProjectionSeparation projection_separation(const CubeComplex& c, int x, int y,
                                           const ConvexSet& C) {
  ProjectionSeparation out;
  int gx = gate(c, x, C);
  int gy = gate(c, y, C);
  out.gate_separators = c.separator_mask(gx, gy).to_vector();
  out.filtered_separators = (c.separator_mask(x, y) & crossing_mask(c, C)).to_vector();
  return out;
}

int l1_diameter(const CubeComplex& c, const Bitset& s) {
  int best = 0;
  auto pts = s.to_vector();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, c.dist(pts[i], pts[j]));
  return best;
}

}  // namespace ccx
