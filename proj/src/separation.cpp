#include "ccx/separation.hpp"

#include <algorithm>
#include <string>

#include "ccx/convex.hpp"
#include "ccx/error.hpp"

namespace ccx {

namespace {

// -1 when the carrier straddles v, else the side (as side_b flag) holding it.
int carrier_side(const CubeComplex& c, int v, int j) {
  if (c.carrier(j).is_subset_of(c.halfspace(v, false))) return 0;
  if (c.carrier(j).is_subset_of(c.halfspace(v, true))) return 1;
  return -1;
}

}  // namespace

HyperplaneRelation relation(const CubeComplex& c, int a, int b) {
  c.hyperplane(a);
  c.hyperplane(b);
  HyperplaneRelation r;
  if (a == b) {
    r.kind = RelationKind::equal;
    return r;
  }
  if (c.transverse(a, b)) {
    r.kind = RelationKind::transverse;
    return r;
  }
  r.kind = RelationKind::nested;
  for (bool sa : {false, true}) {
    for (bool sb : {false, true}) {
      if (c.halfspace(a, sa).is_subset_of(c.halfspace(b, sb))) {
        r.side_of_a = sa;
        r.side_of_b = sb;
        return r;
      }
    }
  }
  throw Error::internal("disjoint hyperplanes without a nesting witness");
}

bool separates(const CubeComplex& c, int v, int j, int h) {
  c.hyperplane(v);
  if (v == j || v == h || j == h) throw Error::usage("separates needs three distinct hyperplanes");
  int sj = carrier_side(c, v, j);
  int sh = carrier_side(c, v, h);
  return sj >= 0 && sh >= 0 && sj != sh;
}

bool facing_triple(const CubeComplex& c, int a, int b, int h) {
  if (a == b || a == h || b == h) return false;
  if (c.transverse(a, b) || c.transverse(a, h) || c.transverse(b, h)) return false;
  return !separates(c, a, b, h) && !separates(c, b, a, h) && !separates(c, h, a, b);
}

bool strongly_separated(const CubeComplex& c, int j, int h) {
  if (!c.disjoint_hyperplanes(j, h)) return false;
  return !c.transverse_mask(j).intersects(c.transverse_mask(h));
}

namespace {

struct FamilySearch {
  const CubeComplex& c;
  const std::vector<int>& cand;
  std::vector<int> chosen;
  int best = 0;
  int cap;                 // family size cap before falling back
  long long budget = 4'000'000;
  bool capped = false;

  bool extends_ftf_free(int v) {
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if (facing_triple(c, chosen[i], chosen[j], v)) return false;
    return true;
  }

  void rec(std::size_t idx) {
    if (capped) return;
    if (--budget < 0 || best > cap) {
      capped = true;
      return;
    }
    best = std::max(best, static_cast<int>(chosen.size()));
    if (idx >= cand.size()) return;
    if (static_cast<int>(chosen.size() + (cand.size() - idx)) <= best) return;
    if (extends_ftf_free(cand[idx])) {
      chosen.push_back(cand[idx]);
      rec(idx + 1);
      chosen.pop_back();
    }
    rec(idx + 1);
  }
};

}  // namespace

SeparationReport well_separation_degree(const CubeComplex& c, int j, int h) {
  c.hyperplane(j);
  c.hyperplane(h);
  SeparationReport r;
  r.j = j;
  r.h = h;
  if (j == h || c.transverse(j, h)) {
    r.applicable = false;
    return r;
  }
  r.applicable = true;
  r.crossing = (c.transverse_mask(j) & c.transverse_mask(h)).to_vector();

  // projection route: diameter of the carrier of h projected onto the
  // carrier hull of j
  ConvexSet nj = carrier_hull(c, j);
  Bitset projected = project_set(c, c.carrier(h), nj);
  r.degree_projection = l1_diameter(c, projected);

  FamilySearch fs{c, r.crossing, {}, 0,
                  2 * std::max(1, c.dimension()) * (r.degree_projection + 1)};
  fs.rec(0);
  if (fs.capped) {
    r.degree_direct = r.degree_projection;
    r.direct_capped = true;
  } else {
    r.degree_direct = fs.best;
    if (r.degree_direct != r.degree_projection)
      throw Error::property("well-separation degree mismatch for (" + std::to_string(j) +
                            "," + std::to_string(h) + "): direct " +
                            std::to_string(r.degree_direct) + " vs projection " +
                            std::to_string(r.degree_projection));
  }
  r.strongly_separated = r.degree_direct == 0;
  return r;
}

namespace {

struct JoinSearch {
  std::vector<Bitset> trans;  // local transversality
  int best = 0;
  long long budget = 50'000'000;

  void rec(int na, int nb, Bitset cand_a, Bitset cand_b) {
    best = std::max(best, std::min(na, nb));
    if (--budget < 0) throw Error::cap("join search exceeded its budget");
    int ub = std::min(na + static_cast<int>(cand_a.count()),
                      nb + static_cast<int>(cand_b.count()));
    if (ub <= best) return;
    Bitset pool = cand_a | cand_b;
    int v = pool.find_first();
    if (v < 0) return;
    if (cand_a.test(v)) {
      Bitset a2 = cand_a, b2 = cand_b & trans[v];
      a2.reset(v);
      b2.reset(v);
      rec(na + 1, nb, a2, b2);
    }
    // first member goes to A: the join is unordered
    if (cand_b.test(v) && na > 0) {
      Bitset a2 = cand_a & trans[v], b2 = cand_b;
      a2.reset(v);
      b2.reset(v);
      rec(na, nb + 1, a2, b2);
    }
    cand_a.reset(v);
    cand_b.reset(v);
    rec(na, nb, cand_a, cand_b);
  }
};

}  // namespace

int max_min_join(const CubeComplex& c, const std::vector<int>& hyps) {
  const int t = static_cast<int>(hyps.size());
  JoinSearch js;
  js.trans.assign(t, Bitset(t));
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (c.transverse(hyps[i], hyps[j])) {
        js.trans[i].set(j);
        js.trans[j].set(i);
      }
  js.rec(0, 0, Bitset::full(t), Bitset::full(t));
  return js.best;
}

int thinness_constant(const CubeComplex& c, const std::vector<int>& geodesic) {
  if (geodesic.empty()) throw Error::usage("empty geodesic");
  for (std::size_t i = 0; i + 1 < geodesic.size(); ++i)
    if (!c.graph().has_edge(geodesic[i], geodesic[i + 1]))
      throw Error::validation("vertex sequence is not a path");
  int ends = c.dist(geodesic.front(), geodesic.back());
  if (ends != static_cast<int>(geodesic.size()) - 1)
    throw Error::validation("vertex sequence is not a geodesic");
  std::vector<int> hyps = c.separator_mask(geodesic.front(), geodesic.back()).to_vector();
  return max_min_join(c, hyps);
}

LayerReport hyperplane_layers(const CubeComplex& c, int x, const std::vector<int>& hyps) {
  LayerReport out;
  std::vector<int> row = c.linf_row(x);

  std::vector<std::pair<int, int>> depth_of;  // (layer, hyperplane)
  int max_layer = 0;
  for (int h : hyps) {
    int d = -1;
    c.carrier(h).for_each([&](int v) {
      if (d < 0 || row[v] < d) d = row[v];
    });
    depth_of.emplace_back(d, h);
    max_layer = std::max(max_layer, d);
  }
  out.layers.assign(max_layer + 1, {});
  std::sort(depth_of.begin(), depth_of.end());
  for (auto [d, h] : depth_of) out.layers[d].push_back(h);

  out.away_consistent = true;
  for (std::size_t i = 0; i < hyps.size() && out.away_consistent; ++i)
    for (std::size_t j = i + 1; j < hyps.size(); ++j)
      if (!c.halfspace_away_from(hyps[i], x).intersects(c.halfspace_away_from(hyps[j], x))) {
        out.away_consistent = false;
        break;
      }

  Bitset member(c.hyperplane_count());
  for (int h : hyps) member.set(h);
  out.away_closed = true;
  for (int h : hyps) {
    if (!out.away_closed) break;
    const Bitset& away = c.halfspace_away_from(h, x);
    for (int w = 0; w < c.hyperplane_count(); ++w) {
      if (member.test(w) || w == h) continue;
      if (away.is_subset_of(c.halfspace_away_from(w, x))) {
        out.away_closed = false;
        break;
      }
    }
  }

  if (out.away_consistent && out.away_closed) {
    for (const auto& layer : out.layers) {
      if (static_cast<int>(layer.size()) > c.dimension())
        throw Error::property("layer exceeds the dimension bound");
      for (std::size_t i = 0; i < layer.size(); ++i)
        for (std::size_t j = i + 1; j < layer.size(); ++j)
          if (!c.transverse(layer[i], layer[j]))
            throw Error::property("layer contains a non-transverse pair");
    }
  }
  return out;
}

}  // namespace ccx
