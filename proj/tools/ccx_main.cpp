#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccx/actions.hpp"
#include "ccx/contact.hpp"
#include "ccx/convex.hpp"
#include "ccx/dot.hpp"
#include "ccx/duality.hpp"
#include "ccx/error.hpp"
#include "ccx/generators.hpp"
#include "ccx/json_io.hpp"
#include "ccx/separation.hpp"
#include "ccx/suite.hpp"

namespace {

using ccx::json;

struct Output {
  std::string path;  // empty = stdout

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ccx::Error::usage("cannot write " + path);
    out << text;
  }

  void emit_json(const json& j) const { emit(ccx::canonical(j)); }
};

struct CapFlags {
  ccx::Caps caps;

  void attach(CLI::App* cmd) {
    cmd->add_option("--cap-vertices", caps.max_vertices, "vertex cap before refusal");
    cmd->add_option("--cap-hyperplanes", caps.max_hyperplanes, "hyperplane cap");
    cmd->add_option("--cap-group", caps.max_group, "group enumeration cap");
    cmd->add_option("--cap-contact", caps.max_contact_nodes, "contact-graph node cap");
    cmd->add_option("--cap-walls", caps.max_walls, "wall cap for dualization");
    cmd->add_option("--cap-validation", caps.max_validation_vertices,
                    "vertex cap for the cubic median scan");
  }
};

ccx::CubeComplex load_complex(const std::string& path, const ccx::Caps& caps) {
  return ccx::CubeComplex::build(ccx::graph_from_json(ccx::load_json_file(path)), caps);
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::size_t at = 0;
  while (at < csv.size()) {
    std::size_t next = csv.find(',', at);
    if (next == std::string::npos) next = csv.size();
    try {
      out.push_back(std::stoi(csv.substr(at, next - at)));
    } catch (const std::exception&) {
      throw ccx::Error::usage("expected a comma-separated integer list, got '" + csv + "'");
    }
    at = next + 1;
  }
  return out;
}

ccx::Bitset to_set(const std::vector<int>& vs, int universe) {
  ccx::Bitset b(universe);
  for (int v : vs) {
    if (v < 0 || v >= universe) throw ccx::Error::usage("vertex out of range");
    b.set(v);
  }
  return b;
}

json action_report(const ccx::CubeComplex& c, const std::vector<std::string>& auto_paths,
                   const std::string& partial_path, int base, int depth,
                   const std::string& displacement, const ccx::Caps& caps) {
  std::vector<ccx::Automorphism> gens;
  for (const auto& p : auto_paths)
    gens.push_back(
        ccx::make_automorphism(c, ccx::vertex_map_from_json(ccx::load_json_file(p))));
  ccx::Group grp = ccx::generate_group(c, gens, caps.max_group);

  json out;
  out["group_order"] = grp.order();
  out["group_truncated"] = grp.truncated;
  out["profile"] = ccx::profile_to_json(ccx::acyl_profile(c, grp));
  out["essentiality"] =
      ccx::essentiality_to_json(ccx::essentiality_report(c, grp, base, depth));

  if (!displacement.empty()) {
    auto xy = parse_ints(displacement);
    if (xy.size() != 2) throw ccx::Error::usage("--displacement expects x,y");
    json reports = json::array();
    for (const auto& e : grp.elements)
      reports.push_back(ccx::displacement_to_json(
          ccx::displacement_check(c, e, xy[0], xy[1])));
    out["displacement"] = reports;
  }
  if (!partial_path.empty()) {
    auto pa = ccx::partial_from_json(c, ccx::load_json_file(partial_path));
    out["skewering"] = ccx::skewer_to_json(ccx::skewer_detect(c, pa));
    out["wpd"] = ccx::wpd_to_json(ccx::wpd_certificate(c, pa, grp));
  }
  return out;
}

json analyze_report(const ccx::CubeComplex& c, const ccx::Caps& caps) {
  json out;
  ccx::ValidationReport vr;
  vr.is_median = true;
  vr.vertex_count = c.vertex_count();
  vr.edge_count = c.edge_count();
  vr.hyperplane_count = c.hyperplane_count();
  vr.dimension = c.dimension();
  out["validation"] = ccx::validation_to_json(vr);
  out["hyperplanes"] = ccx::hyperplanes_to_json(c);
  out["separation"] = ccx::separation_scan_to_json(c);
  auto cg = ccx::contact_graph(c);
  out["contact"] = ccx::contact_to_json(c, cg);
  if (cg.node_count <= caps.max_contact_nodes && cg.node_count > 0)
    out["contact"]["twice_delta"] = ccx::four_point_delta_x2(cg, caps.max_contact_nodes);
  out["qi"] = ccx::qi_to_json(ccx::qi_check(c));
  out["decomposition"] = ccx::decomposition_to_json(c, ccx::irreducible_decompose(c));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"finite median-graph toolkit: hyperplanes, gates, separation, contact "
               "graphs, wallspace duality and symmetry certificates"};
  app.require_subcommand(1);

  Output output;
  app.add_option("--output", output.path, "write output to a file instead of stdout");
  std::string format = "json";
  app.add_option("--format", format, "output format: json | dot | text");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "generator seed");
  CapFlags caps;
  caps.attach(&app);

  std::string in_path, in_path2;

  auto* validate = app.add_subcommand("validate", "median-graph gate for a complex file");
  validate->add_option("complex", in_path)->required();

  auto* hyper = app.add_subcommand("hyperplanes", "theta classes with halfspaces");
  hyper->add_option("complex", in_path)->required();

  auto* dist = app.add_subcommand("dist", "l1 and l-infinity distance between vertices");
  int dx = 0, dy = 0;
  dist->add_option("complex", in_path)->required();
  dist->add_option("-x", dx)->required();
  dist->add_option("-y", dy)->required();

  auto* project = app.add_subcommand("project", "gates of a vertex set on a convex set");
  std::string of_csv, onto_hull;
  int onto_carrier = -1;
  std::string onto_halfspace;
  project->add_option("complex", in_path)->required();
  project->add_option("--of", of_csv, "comma-separated vertex list")->required();
  project->add_option("--onto-carrier", onto_carrier, "carrier hull of a hyperplane");
  project->add_option("--onto-halfspace", onto_halfspace, "hyperplane:side, side a|b");
  project->add_option("--onto-hull", onto_hull, "convex hull of a vertex list");

  auto* separation = app.add_subcommand("separation", "well-separation degree scan");
  std::string pair_csv;
  separation->add_option("complex", in_path)->required();
  separation->add_option("--pair", pair_csv, "restrict to one pair j,h");

  auto* contact = app.add_subcommand("contact", "contact graph and hyperbolicity");
  bool with_delta = false;
  contact->add_option("complex", in_path)->required();
  contact->add_flag("--delta", with_delta, "include the exact four-point constant");

  auto* qi = app.add_subcommand("qi", "chain statistic against contact distances");
  qi->add_option("complex", in_path)->required();

  auto* dual = app.add_subcommand("dual", "Sageev dual of a wallspace file");
  dual->add_option("wallspace", in_path)->required();

  auto* decompose = app.add_subcommand("decompose", "finest product decomposition");
  decompose->add_option("complex", in_path)->required();

  auto* action = app.add_subcommand("action", "symmetry analysis of a complex");
  std::vector<std::string> auto_paths;
  std::string partial_path, displacement;
  int base = 0, ess_depth = 1;
  action->add_option("complex", in_path)->required();
  action->add_option("--auto", auto_paths, "automorphism json (repeatable)");
  action->add_option("--partial", partial_path, "partial automorphism json");
  action->add_option("--base", base, "base vertex for orbits");
  action->add_option("--depth", ess_depth, "essentiality depth threshold");
  action->add_option("--displacement", displacement, "endpoints x,y");

  auto* analyze = app.add_subcommand("analyze", "full pipeline over one complex");
  std::vector<std::string> an_autos;
  std::string an_partial;
  analyze->add_option("complex", in_path)->required();
  analyze->add_option("--auto", an_autos, "automorphism json (repeatable)");
  analyze->add_option("--partial", an_partial, "partial automorphism json");

  auto* generate = app.add_subcommand("generate", "deterministic example generators");
  std::string kind;
  std::vector<int> params;
  generate->add_option("kind", kind,
                       "cube n | path n | grid a b | random-tree n | "
                       "random-wallspace k m | coset-tree depth")
      ->required();
  generate->add_option("params", params, "integer parameters");

  auto* dot = app.add_subcommand("dot", "DOT export of a complex or its contact graph");
  bool dot_contact_flag = false;
  dot->add_option("complex", in_path)->required();
  dot->add_flag("--contact", dot_contact_flag, "export the contact graph instead");

  auto* suite = app.add_subcommand("suite", "run the full verification battery");

  for (auto* sub : {validate, hyper, dist, project, separation, contact, qi, dual,
                    decompose, action, analyze, generate, dot, suite})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (validate->parsed()) {
    auto g = ccx::graph_from_json(ccx::load_json_file(in_path));
    auto rep = ccx::validate_median(g, caps.caps);
    if (format == "text") {
      std::string line = rep.is_median
          ? "median: " + std::to_string(rep.vertex_count) + " vertices, " +
            std::to_string(rep.edge_count) + " edges, " +
            std::to_string(rep.hyperplane_count) + " hyperplanes, dimension " +
            std::to_string(rep.dimension)
          : "not median: " + rep.reason;
      output.emit(line + "\n");
    } else {
      output.emit_json(ccx::validation_to_json(rep));
    }
    return rep.is_median ? 0 : 1;
  }
  if (hyper->parsed()) {
    output.emit_json(ccx::hyperplanes_to_json(load_complex(in_path, caps.caps)));
    return 0;
  }
  if (dist->parsed()) {
    output.emit_json(ccx::dist_to_json(load_complex(in_path, caps.caps), dx, dy));
    return 0;
  }
  if (project->parsed()) {
    auto c = load_complex(in_path, caps.caps);
    std::optional<ccx::ConvexSet> target;
    if (onto_carrier >= 0) target = ccx::carrier_hull(c, onto_carrier);
    else if (!onto_halfspace.empty()) {
      auto sep = onto_halfspace.find(':');
      if (sep == std::string::npos) throw ccx::Error::usage("--onto-halfspace wants h:a|b");
      int h = std::stoi(onto_halfspace.substr(0, sep));
      bool side_b = onto_halfspace.substr(sep + 1) == "b";
      target = ccx::halfspace_set(c, h, side_b);
    } else if (!onto_hull.empty()) {
      target = ccx::convex_hull(c, to_set(parse_ints(onto_hull), c.vertex_count()));
    } else {
      throw ccx::Error::usage("pick --onto-carrier, --onto-halfspace or --onto-hull");
    }
    ccx::Bitset of = to_set(parse_ints(of_csv), c.vertex_count());
    ccx::Bitset gates = ccx::project_set(c, of, *target);
    json j{{"gates", gates.to_vector()},
           {"target", target->vertices.to_vector()},
           {"diameter", ccx::l1_diameter(c, gates)}};
    output.emit_json(j);
    return 0;
  }
  if (separation->parsed()) {
    auto c = load_complex(in_path, caps.caps);
    if (!pair_csv.empty()) {
      auto jh = parse_ints(pair_csv);
      if (jh.size() != 2) throw ccx::Error::usage("--pair expects j,h");
      output.emit_json(
          ccx::separation_to_json(ccx::well_separation_degree(c, jh[0], jh[1])));
    } else {
      output.emit_json(ccx::separation_scan_to_json(c));
    }
    return 0;
  }
  if (contact->parsed()) {
    auto c = load_complex(in_path, caps.caps);
    auto cg = ccx::contact_graph(c);
    if (format == "dot") {
      output.emit(ccx::dot_contact(c, cg));
      return 0;
    }
    json j = ccx::contact_to_json(c, cg);
    if (with_delta) j["twice_delta"] = ccx::four_point_delta_x2(cg, caps.caps.max_contact_nodes);
    output.emit_json(j);
    return 0;
  }
  if (qi->parsed()) {
    auto rep = ccx::qi_check(load_complex(in_path, caps.caps));
    if (format == "text") {
      output.emit(std::string(rep.clean ? "clean" : "violations found") + ": " +
                  std::to_string(rep.pairs_checked) + " pairs, literal upper bound fails " +
                  std::to_string(rep.literal_upper_failures) + " times\n");
    } else {
      output.emit_json(ccx::qi_to_json(rep));
    }
    return rep.clean ? 0 : 1;
  }
  if (dual->parsed()) {
    auto w = ccx::wallspace_from_json(ccx::load_json_file(in_path));
    output.emit_json(ccx::dual_to_json(ccx::dual_complex(w, caps.caps)));
    return 0;
  }
  if (decompose->parsed()) {
    auto c = load_complex(in_path, caps.caps);
    output.emit_json(ccx::decomposition_to_json(c, ccx::irreducible_decompose(c)));
    return 0;
  }
  if (action->parsed()) {
    auto c = load_complex(in_path, caps.caps);
    output.emit_json(action_report(c, auto_paths, partial_path, base, ess_depth,
                                   displacement, caps.caps));
    return 0;
  }
  if (analyze->parsed()) {
    auto c = load_complex(in_path, caps.caps);
    json j = analyze_report(c, caps.caps);
    if (!an_autos.empty() || !an_partial.empty())
      j["action"] = action_report(c, an_autos, an_partial, 0, 1, "", caps.caps);
    output.emit_json(j);
    return 0;
  }
  if (generate->parsed()) {
    auto need = [&](std::size_t n) {
      if (params.size() != n)
        throw ccx::Error::usage("kind '" + kind + "' expects " + std::to_string(n) +
                                " parameter(s)");
    };
    if (kind == "cube") {
      need(1);
      output.emit_json(ccx::graph_to_json(ccx::make_cube(params[0])));
    } else if (kind == "path") {
      need(1);
      output.emit_json(ccx::graph_to_json(ccx::make_path(params[0])));
    } else if (kind == "grid") {
      need(2);
      output.emit_json(ccx::graph_to_json(ccx::make_grid(params[0], params[1])));
    } else if (kind == "random-tree") {
      need(1);
      output.emit_json(ccx::graph_to_json(ccx::make_random_tree(params[0], seed)));
    } else if (kind == "random-wallspace") {
      need(2);
      output.emit_json(
          ccx::wallspace_to_json(ccx::make_random_wallspace(params[0], params[1], seed)));
    } else if (kind == "coset-tree") {
      need(1);
      output.emit_json(ccx::graph_to_json(ccx::make_coset_tree(params[0])));
    } else {
      throw ccx::Error::usage("unknown generator kind '" + kind + "'");
    }
    return 0;
  }
  if (dot->parsed()) {
    auto c = load_complex(in_path, caps.caps);
    output.emit(dot_contact_flag ? ccx::dot_contact(c, ccx::contact_graph(c))
                                 : ccx::dot_complex(c));
    return 0;
  }
  if (suite->parsed()) {
    auto results = ccx::run_acceptance(std::cout);
    return ccx::all_passed(results) ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ccx::MedianError& e) {
    json j = ccx::validation_to_json(e.report);
    j["error"] = e.what();
    std::cout << ccx::canonical(j);
    return 1;
  } catch (const ccx::Error& e) {
    if (e.kind() == ccx::Error::Kind::usage) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 2;
    }
    json j{{"error", e.what()}};
    std::cout << ccx::canonical(j);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
