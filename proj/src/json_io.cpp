#include "ccx/json_io.hpp"

#include <fstream>

#include "ccx/error.hpp"

namespace ccx {

namespace {

json bitset_to_array(const Bitset& b) { return json(b.to_vector()); }

Bitset bitset_from_array(const json& arr, int universe) {
  Bitset b(universe);
  for (const auto& v : arr) {
    int i = v.get<int>();
    if (i < 0 || i >= universe) throw Error::validation("set element out of range");
    b.set(i);
  }
  return b;
}

}  // namespace

json graph_to_json(const CubeGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return json{{"vertices", g.vertex_count}, {"edges", edges}};
}

CubeGraph graph_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw Error::validation("complex json needs 'vertices' and 'edges'");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error::validation("edge is not a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return CubeGraph::make(j.at("vertices").get<int>(), std::move(edges));
}

json wallspace_to_json(const Wallspace& w) {
  json walls = json::array();
  for (const auto& [a, b] : w.walls)
    walls.push_back({bitset_to_array(a), bitset_to_array(b)});
  return json{{"ground", w.ground}, {"walls", walls}};
}

Wallspace wallspace_from_json(const json& j) {
  if (!j.contains("ground") || !j.contains("walls"))
    throw Error::validation("wallspace json needs 'ground' and 'walls'");
  Wallspace w;
  w.ground = j.at("ground").get<int>();
  for (const auto& wall : j.at("walls")) {
    if (!wall.is_array() || wall.size() != 2)
      throw Error::validation("wall is not a side pair");
    w.walls.emplace_back(bitset_from_array(wall[0], w.ground),
                         bitset_from_array(wall[1], w.ground));
  }
  w.validate();
  return w;
}

json automorphism_to_json(const Automorphism& a) { return json{{"map", a.vmap}}; }

std::vector<int> vertex_map_from_json(const json& j) {
  if (!j.contains("map")) throw Error::validation("automorphism json needs 'map'");
  return j.at("map").get<std::vector<int>>();
}

json partial_to_json(const PartialAutomorphism& p) {
  return json{{"map", p.vmap}, {"domain", p.domain.to_vector()}, {"window", p.window_note}};
}

PartialAutomorphism partial_from_json(const CubeComplex& c, const json& j) {
  if (!j.contains("map") || !j.contains("domain"))
    throw Error::validation("partial automorphism json needs 'map' and 'domain'");
  Bitset dom = bitset_from_array(j.at("domain"), c.vertex_count());
  std::string note = j.value("window", "");
  return make_partial_automorphism(c, dom, j.at("map").get<std::vector<int>>(), note);
}

json validation_to_json(const ValidationReport& r) {
  json j{{"is_median", r.is_median},
         {"vertex_count", r.vertex_count},
         {"edge_count", r.edge_count}};
  if (r.is_median) {
    j["hyperplane_count"] = r.hyperplane_count;
    j["dimension"] = r.dimension;
  } else {
    j["reason"] = r.reason;
    if (r.witness) {
      j["witness"] = *r.witness;
      j["medians_at_witness"] = r.medians_at_witness;
    }
  }
  return j;
}

json hyperplanes_to_json(const CubeComplex& c) {
  json out = json::array();
  for (const auto& h : c.hyperplanes()) {
    json edges = json::array();
    for (int e : h.edge_ids) {
      auto [u, v] = c.graph().edges[e];
      edges.push_back({u, v});
    }
    out.push_back(json{{"id", h.id},
                       {"edges", edges},
                       {"halfspace_a", bitset_to_array(h.side_a)},
                       {"halfspace_b", bitset_to_array(h.side_b)},
                       {"carrier", bitset_to_array(h.carrier)}});
  }
  return out;
}

json dist_to_json(const CubeComplex& c, int x, int y) {
  DistResult d = c.dist_l1(x, y);
  return json{{"x", x},
              {"y", y},
              {"l1", d.distance},
              {"separators", d.separators},
              {"linf", c.dist_linf(x, y)}};
}

json separation_to_json(const SeparationReport& r) {
  json j{{"j", r.j}, {"h", r.h}, {"applicable", r.applicable}};
  if (r.applicable) {
    j["crossing"] = r.crossing;
    j["degree_direct"] = r.degree_direct;
    j["degree_projection"] = r.degree_projection;
    j["strongly_separated"] = r.strongly_separated;
    if (r.direct_capped) j["direct_capped"] = true;
  }
  return j;
}

json separation_scan_to_json(const CubeComplex& c) {
  json out = json::array();
  for (int j = 0; j < c.hyperplane_count(); ++j)
    for (int h = j + 1; h < c.hyperplane_count(); ++h)
      if (c.disjoint_hyperplanes(j, h))
        out.push_back(separation_to_json(well_separation_degree(c, j, h)));
  return out;
}

json contact_to_json(const CubeComplex& c, const ContactGraph& cg) {
  json edges = json::array();
  for (int a = 0; a < cg.node_count; ++a)
    cg.adj[a].for_each([&](int b) {
      if (a < b) edges.push_back({a, b});
    });
  json ss = json::array();
  for (int a = 0; a < cg.node_count; ++a)
    for (int b = a + 1; b < cg.node_count; ++b)
      if (strongly_separated(c, a, b)) ss.push_back({a, b});
  return json{{"nodes", cg.node_count},
              {"edges", edges},
              {"strongly_separated_pairs", ss}};
}

json qi_to_json(const QiReport& r) {
  auto stats = [](const std::vector<QiPairStat>& v) {
    json out = json::array();
    for (const auto& s : v)
      out.push_back(json{{"j", s.j}, {"h", s.h}, {"delta", s.delta}, {"d", s.contact_dist}});
    return out;
  };
  return json{{"clean", r.clean},
              {"pairs_checked", r.pairs_checked},
              {"lower_violations", stats(r.lower_violations)},
              {"sandwich_violations", stats(r.sandwich_violations)},
              {"literal_upper_failures", r.literal_upper_failures}};
}

json dual_to_json(const DualResult& d) {
  return json{{"complex", graph_to_json(d.complex.graph())},
              {"wall_to_hyperplane", d.wall_to_hyperplane}};
}

json quotient_to_json(const QuotientResult& q) {
  json j{{"complex", graph_to_json(q.complex.graph())},
         {"vertex_map", q.vertex_map},
         {"kept_to_hyperplane", q.kept_to_hyperplane}};
  if (q.collapsed_to_point) j["warning"] = "empty hyperplane subset collapses to a point";
  return j;
}

json decomposition_to_json(const CubeComplex& c, const Decomposition& d) {
  (void)c;
  json classes = json::array();
  for (const auto& cls : d.classes) classes.push_back(cls);
  json factors = json::array();
  for (const auto& f : d.factors) factors.push_back(quotient_to_json(f));
  return json{{"classes", classes}, {"factors", factors}};
}

json profile_to_json(const AcylProfile& p) {
  return json{{"n_hyp", p.n_hyp},
              {"n_weak", p.n_weak},
              {"lower_bound_only", p.lower_bound_only}};
}

json essentiality_to_json(const std::vector<HalfspaceReach>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back(json{{"hyperplane", r.h},
                       {"side", r.side_b ? "b" : "a"},
                       {"reach", r.reach},
                       {"flagged", r.flagged}});
  return out;
}

json skewer_to_json(const SkewerResult& s) {
  json list = json::array();
  for (const auto& w : s.witnesses)
    list.push_back(json{{"hyperplane", w.h},
                        {"power", w.power},
                        {"side", w.side_b ? "b" : "a"},
                        {"image_hyperplane", w.image_h},
                        {"image_side", w.image_side_b ? "b" : "a"},
                        {"between", w.between}});
  json j{{"witnesses", list}};
  if (!s.diagnostic.empty()) j["diagnostic"] = s.diagnostic;
  return j;
}

json wpd_to_json(const WpdOutcome& w) {
  json j{{"certified", w.certified}};
  if (!w.window_note.empty()) j["window"] = w.window_note;
  if (w.certified) {
    j["hyperplane"] = w.h;
    j["power"] = w.power;
    j["degree"] = w.degree;
    j["stabilizer_intersection"] = w.stab_card;
    j["skewered_side"] = w.witness.side_b ? "b" : "a";
    j["image_hyperplane"] = w.witness.image_h;
  } else {
    j["refusal"] = w.refusal;
    json cands = json::array();
    for (const auto& cand : w.candidates) {
      json cj{{"hyperplane", cand.witness.h},
              {"power", cand.witness.power},
              {"image_hyperplane", cand.witness.image_h},
              {"well_separated", cand.well_separated}};
      if (!cand.failure.empty()) cj["failure"] = cand.failure;
      if (cand.degree >= 0) cj["degree"] = cand.degree;
      cands.push_back(cj);
    }
    j["candidates"] = cands;
  }
  return j;
}

json displacement_to_json(const DisplacementReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back(json{{"z", row.z},
                        {"disp", row.disp},
                        {"h1", row.h1},
                        {"h2", row.h2},
                        {"balance_ok", row.balance_ok},
                        {"pairsum_ok", row.pairsum_ok}});
  return json{{"geodesic", r.geodesic},
              {"thinness", r.thinness},
              {"endpoint_disp", r.endpoint_disp},
              {"max_disp", r.max_disp},
              {"corrected_bound_holds", r.corrected_ok},
              {"literal_bound_holds", r.literal_ok},
              {"rows", rows}};
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error::usage("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error::validation("json parse error in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace ccx
