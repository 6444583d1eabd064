#include "ccx/actions.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "ccx/error.hpp"
#include "ccx/separation.hpp"

namespace ccx {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<int> derive_hmap(const CubeComplex& c, const std::vector<int>& vmap) {
  std::vector<int> hmap(c.hyperplane_count(), -1);
  for (int e = 0; e < c.edge_count(); ++e) {
    auto [u, v] = c.graph().edges[e];
    int ie = c.graph().edge_id(vmap[u], vmap[v]);
    if (ie < 0) throw Error::validation("edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not preserved");
    int h = c.edge_hyperplane(e);
    int ih = c.edge_hyperplane(ie);
    if (hmap[h] >= 0 && hmap[h] != ih)
      throw Error::internal("map splits a hyperplane class");
    hmap[h] = ih;
  }
  return hmap;
}

}  // namespace

Automorphism make_automorphism(const CubeComplex& c, std::vector<int> vmap) {
  const int n = c.vertex_count();
  if (static_cast<int>(vmap.size()) != n) throw Error::validation("map has the wrong length");
  std::vector<char> hit(n, 0);
  for (int v : vmap) {
    if (v < 0 || v >= n) throw Error::validation("map image out of range");
    if (hit[v]++) throw Error::validation("map is not a bijection");
  }
  Automorphism a;
  a.hmap = derive_hmap(c, vmap);
  a.vmap = std::move(vmap);
  return a;
}

Group generate_group(const CubeComplex& c, const std::vector<Automorphism>& gens,
                     long long cap) {
  const int n = c.vertex_count();
  Group g;
  std::vector<int> ident(n);
  for (int v = 0; v < n; ++v) ident[v] = v;
  g.elements.push_back(make_automorphism(c, ident));

  std::unordered_map<std::vector<int>, int, VecHash> seen;
  seen.emplace(g.elements[0].vmap, 0);
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int at = q.front();
    q.pop();
    for (const auto& gen : gens) {
      std::vector<int> nv(n), nh(c.hyperplane_count());
      for (int v = 0; v < n; ++v) nv[v] = g.elements[at].vmap[gen.vmap[v]];
      auto it = seen.find(nv);
      if (it != seen.end()) continue;
      if (static_cast<long long>(g.elements.size()) >= cap) {
        g.truncated = true;
        return g;
      }
      for (int h = 0; h < c.hyperplane_count(); ++h)
        nh[h] = g.elements[at].hmap[gen.hmap[h]];
      seen.emplace(nv, static_cast<int>(g.elements.size()));
      g.elements.push_back({std::move(nv), std::move(nh)});
      q.push(g.order() - 1);
    }
  }
  return g;
}

StabilizerTables stabilizer_tables(const CubeComplex& c, const Group& g) {
  StabilizerTables t;
  t.hyperplane.assign(c.hyperplane_count(), Bitset(g.order()));
  t.vertex.assign(c.vertex_count(), Bitset(g.order()));
  for (int e = 0; e < g.order(); ++e) {
    const auto& a = g.elements[e];
    for (int h = 0; h < c.hyperplane_count(); ++h)
      if (a.hmap[h] == h) t.hyperplane[h].set(e);
    for (int v = 0; v < c.vertex_count(); ++v)
      if (a.vmap[v] == v) t.vertex[v].set(e);
  }
  return t;
}

std::vector<int> hyperplane_stabilizer(const CubeComplex& c, const Group& g, int h) {
  c.hyperplane(h);
  std::vector<int> out;
  for (int e = 0; e < g.order(); ++e)
    if (g.elements[e].hmap[h] == h) out.push_back(e);
  return out;
}

std::vector<int> pair_stabilizer(const CubeComplex& c, const Group& g, int h1, int h2) {
  c.hyperplane(h1);
  c.hyperplane(h2);
  std::vector<int> out;
  for (int e = 0; e < g.order(); ++e)
    if (g.elements[e].hmap[h1] == h1 && g.elements[e].hmap[h2] == h2) out.push_back(e);
  return out;
}

int separation_count(const CubeComplex& c, int j, int h) {
  if (j == h) return 0;
  int s = 0;
  for (int v = 0; v < c.hyperplane_count(); ++v)
    if (v != j && v != h && separates(c, v, j, h)) ++s;
  return s;
}

AcylProfile acyl_profile(const CubeComplex& c, const Group& g) {
  AcylProfile p;
  p.lower_bound_only = g.truncated;
  StabilizerTables t = stabilizer_tables(c, g);

  const int k = c.hyperplane_count();
  std::vector<long long> hyp_at;  // max over pairs with separation exactly s
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      int s = separation_count(c, a, b);
      long long card = static_cast<long long>(t.hyperplane[a].count_and(t.hyperplane[b]));
      if (s >= static_cast<int>(hyp_at.size())) hyp_at.resize(s + 1, 0);
      hyp_at[s] = std::max(hyp_at[s], card);
    }
  }
  p.n_hyp.assign(hyp_at.size(), 0);
  long long run = 0;
  for (int s = static_cast<int>(hyp_at.size()) - 1; s >= 0; --s) {
    run = std::max(run, hyp_at[s]);
    p.n_hyp[s] = run;
  }

  const int n = c.vertex_count();
  std::vector<long long> weak_at;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      int d = c.dist(x, y);
      long long card = static_cast<long long>(t.vertex[x].count_and(t.vertex[y]));
      if (d >= static_cast<int>(weak_at.size())) weak_at.resize(d + 1, 0);
      weak_at[d] = std::max(weak_at[d], card);
    }
  }
  p.n_weak.assign(weak_at.size(), 0);
  run = 0;
  for (int d = static_cast<int>(weak_at.size()) - 1; d >= 0; --d) {
    run = std::max(run, weak_at[d]);
    p.n_weak[d] = run;
  }
  return p;
}

std::vector<int> coarse_stabilizer(const CubeComplex& c, const Group& g, int x, int y,
                                   int d) {
  std::vector<int> out;
  for (int e = 0; e < g.order(); ++e) {
    const auto& a = g.elements[e];
    if (c.dist(x, a.vmap[x]) <= d && c.dist(y, a.vmap[y]) <= d) out.push_back(e);
  }
  return out;
}

long long ramsey_bound(int r, int dim) {
  if (r < 1 || dim < 1) throw Error::usage("ramsey bound needs r >= 1 and dim >= 1");
  const int s = std::max(r, dim) + 2;
  // exact diagonal values, then the central binomial bound
  if (s <= 2) return s;
  if (s == 3) return 6;
  if (s == 4) return 18;
  if (s > 30) throw Error::cap("ramsey bound overflows past s = 30");
  long long v = 1;
  for (int i = 1; i <= s - 1; ++i) v = v * (s - 1 + i) / i;  // C(2s-2, s-1)
  return v;
}

std::vector<HalfspaceReach> essentiality_report(const CubeComplex& c, const Group& g,
                                                int base, int depth) {
  const int n = c.vertex_count();
  if (base < 0 || base >= n) throw Error::usage("unknown base vertex");
  Bitset orbit(n);
  for (const auto& e : g.elements) orbit.set(e.vmap[base]);

  std::vector<HalfspaceReach> out;
  for (int h = 0; h < c.hyperplane_count(); ++h) {
    for (bool side : {false, true}) {
      // penetration = distance to the opposite halfspace = 1 + distance to
      // the carrier boundary on this side
      const Bitset& inside = c.halfspace(h, side);
      Bitset boundary = c.carrier(h) & inside;
      std::vector<int> pen(n, -1);
      std::queue<int> q;
      boundary.for_each([&](int v) {
        pen[v] = 1;
        q.push(v);
      });
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : c.graph().adjacency[u])
          if (inside.test(w) && pen[w] < 0) {
            pen[w] = pen[u] + 1;
            q.push(w);
          }
      }
      HalfspaceReach r;
      r.h = h;
      r.side_b = side;
      orbit.for_each([&](int v) {
        if (inside.test(v)) r.reach = std::max(r.reach, pen[v]);
      });
      r.flagged = r.reach <= depth;
      out.push_back(r);
    }
  }
  return out;
}

PartialAutomorphism make_partial_automorphism(const CubeComplex& c, const Bitset& domain,
                                              std::vector<int> vmap,
                                              std::string window_note) {
  const int n = c.vertex_count();
  if (static_cast<int>(vmap.size()) != n || static_cast<int>(domain.size()) != n)
    throw Error::validation("domain or map has the wrong length");
  std::vector<char> hit(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!domain.test(v)) {
      vmap[v] = -1;
      continue;
    }
    if (vmap[v] < 0 || vmap[v] >= n) throw Error::validation("image out of range");
    if (hit[vmap[v]]++) throw Error::validation("partial map is not injective");
  }
  auto pts = domain.to_vector();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (c.graph().has_edge(pts[i], pts[j]) !=
          c.graph().has_edge(vmap[pts[i]], vmap[pts[j]]))
        throw Error::validation("partial map does not preserve adjacency on (" +
                                std::to_string(pts[i]) + "," + std::to_string(pts[j]) + ")");
  PartialAutomorphism p;
  p.domain = domain;
  p.vmap = std::move(vmap);
  p.window_note = std::move(window_note);
  // hyperplane consistency across every mapped edge
  for (int h = 0; h < c.hyperplane_count(); ++h) partial_image_hyperplane(c, p, h);
  return p;
}

int partial_image_hyperplane(const CubeComplex& c, const PartialAutomorphism& p, int h) {
  int image = -1;
  for (int e : c.hyperplane(h).edge_ids) {
    auto [u, v] = c.graph().edges[e];
    if (!p.domain.test(u) || !p.domain.test(v)) continue;
    int ie = c.graph().edge_id(p.vmap[u], p.vmap[v]);
    if (ie < 0) throw Error::internal("validated partial map lost an edge");
    int ih = c.edge_hyperplane(ie);
    if (image >= 0 && image != ih)
      throw Error::validation("partial map is inconsistent on hyperplane " +
                              std::to_string(h));
    image = ih;
  }
  return image;
}

namespace {

PartialAutomorphism compose_partial(const CubeComplex& c, const PartialAutomorphism& outer,
                                    const PartialAutomorphism& inner) {
  const int n = c.vertex_count();
  Bitset dom(n);
  std::vector<int> vmap(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!inner.domain.test(v)) continue;
    int mid = inner.vmap[v];
    if (!outer.domain.test(mid)) continue;
    dom.set(v);
    vmap[v] = outer.vmap[mid];
  }
  PartialAutomorphism p;
  p.domain = std::move(dom);
  p.vmap = std::move(vmap);
  p.window_note = inner.window_note;
  return p;
}

}  // namespace

SkewerResult skewer_detect(const CubeComplex& c, const PartialAutomorphism& p) {
  SkewerResult out;
  PartialAutomorphism iter = p;
  bool any_tracked = false;
  // Total or self-mapping windows never empty their domain, so powers are
  // capped; a strict halfspace descent repeats no configuration past the
  // vertex count anyway.
  const int power_cap = c.vertex_count();
  for (int power = 1; iter.domain.any() && power <= power_cap; ++power) {
    for (int h = 0; h < c.hyperplane_count(); ++h) {
      // a mapped edge of the class pins the image hyperplane and the
      // orientation correspondence; the halfspace comparison itself runs
      // on the full complex
      int mapped_edge = -1;
      for (int e : c.hyperplane(h).edge_ids) {
        auto [u, v] = c.graph().edges[e];
        if (iter.domain.test(u) && iter.domain.test(v)) {
          mapped_edge = e;
          break;
        }
      }
      if (mapped_edge < 0) continue;
      any_tracked = true;
      int image = partial_image_hyperplane(c, iter, h);
      if (image < 0 || image == h) continue;
      auto [u, v] = c.graph().edges[mapped_edge];
      for (bool side : {false, true}) {
        int inside = c.halfspace(h, side).test(u) ? u : v;
        bool image_side = c.side_of(iter.vmap[inside], image);
        const Bitset& orig = c.halfspace(h, side);
        const Bitset& img = c.halfspace(image, image_side);
        if (img.is_subset_of(orig) && img != orig) {
          SkewerWitness w;
          w.h = h;
          w.power = power;
          w.side_b = side;
          w.image_h = image;
          w.image_side_b = image_side;
          w.between = separation_count(c, h, image);
          out.witnesses.push_back(w);
        }
      }
    }
    iter = compose_partial(c, iter, p);
  }
  if (!any_tracked)
    out.diagnostic = "no iterate of the map carries any hyperplane edge";
  return out;
}

WpdOutcome wpd_certificate(const CubeComplex& c, const PartialAutomorphism& p,
                           const Group& sym) {
  WpdOutcome out;
  out.window_note = p.window_note;
  SkewerResult sk = skewer_detect(c, p);
  if (sk.witnesses.empty()) {
    out.refusal = sk.diagnostic.empty() ? "no skewered pair" : sk.diagnostic;
    return out;
  }
  StabilizerTables tables = stabilizer_tables(c, sym);

  for (const auto& w : sk.witnesses) {
    WpdCandidate cand;
    cand.witness = w;
    // window-stable well-separation: every hyperplane crossing the pair
    // must be fixed by the translation, otherwise its orbit makes the
    // crossing family grow with the window
    Bitset crossing = c.transverse_mask(w.h) & c.transverse_mask(w.image_h);
    cand.well_separated = true;
    crossing.for_each([&](int v) {
      if (!cand.well_separated) return;
      if (partial_image_hyperplane(c, p, v) != v) {
        cand.well_separated = false;
        cand.failure = "crossing hyperplane " + std::to_string(v) +
                       " moves under the translation";
      }
    });
    if (cand.well_separated) {
      SeparationReport rep = well_separation_degree(c, w.h, w.image_h);
      cand.degree = rep.degree_direct;
      cand.stab_card =
          static_cast<long long>(tables.hyperplane[w.h].count_and(tables.hyperplane[w.image_h]));
    }
    out.candidates.push_back(cand);
  }

  int best = -1;
  for (int i = 0; i < static_cast<int>(out.candidates.size()); ++i) {
    const auto& cand = out.candidates[i];
    if (!cand.well_separated) continue;
    if (best < 0) {
      best = i;
      continue;
    }
    const auto& cur = out.candidates[best];
    auto key = [](const WpdCandidate& x) {
      return std::make_tuple(x.stab_card, x.degree, x.witness.h, x.witness.power);
    };
    if (key(cand) < key(cur)) best = i;
  }
  if (best < 0) {
    out.refusal = "no well-separated pair";
    return out;
  }
  const auto& cand = out.candidates[best];
  out.certified = true;
  out.h = cand.witness.h;
  out.power = cand.witness.power;
  out.degree = cand.degree;
  out.stab_card = cand.stab_card;
  out.witness = cand.witness;
  return out;
}

std::vector<int> pick_geodesic(const CubeComplex& c, int x, int y) {
  std::vector<int> path{x};
  int cur = x;
  while (cur != y) {
    int d = c.dist(cur, y);
    for (int nb : c.graph().adjacency[cur]) {
      if (c.dist(nb, y) == d - 1) {
        cur = nb;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

namespace {

// hyperplanes with {a,b} on one side and {c,d} on the other
int pairset_separators(const CubeComplex& c, int a, int b, int x, int y) {
  const Bitset& sa = c.signature(a);
  const Bitset& sb = c.signature(b);
  const Bitset& sx = c.signature(x);
  const Bitset& sy = c.signature(y);
  int count = 0;
  Bitset same_ab = (sa ^ sb).complemented();
  Bitset same_xy = (sx ^ sy).complemented();
  Bitset diff = sa ^ sx;
  count = static_cast<int>((same_ab & same_xy & diff).count());
  return count;
}

}  // namespace

DisplacementReport displacement_check(const CubeComplex& c, const Automorphism& g,
                                      int x, int y) {
  DisplacementReport r;
  r.geodesic = pick_geodesic(c, x, y);
  r.thinness = thinness_constant(c, r.geodesic);
  const int gx = g.vmap[x], gy = g.vmap[y];
  r.endpoint_disp = std::max(c.dist(x, gx), c.dist(y, gy));
  const int d = r.endpoint_disp;
  for (int z : r.geodesic) {
    DisplacementRow row;
    row.z = z;
    const int gz = g.vmap[z];
    row.disp = c.dist(z, gz);
    row.h1 = pairset_separators(c, gx, z, gz, y);
    row.h2 = pairset_separators(c, x, gz, z, gy);
    row.balance_ok = std::abs(row.h1 - row.h2) <= 4 * d;
    row.pairsum_ok = row.disp <= row.h1 + row.h2 + 2 * d;
    r.max_disp = std::max(r.max_disp, row.disp);
    if (row.disp > 2 * r.thinness + 6 * d) r.corrected_ok = false;
    if (row.disp > r.thinness + 6 * d) r.literal_ok = false;
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace ccx
