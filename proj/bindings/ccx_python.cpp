#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccx/actions.hpp"
#include "ccx/contact.hpp"
#include "ccx/convex.hpp"
#include "ccx/dot.hpp"
#include "ccx/duality.hpp"
#include "ccx/error.hpp"
#include "ccx/generators.hpp"
#include "ccx/isomorphism.hpp"
#include "ccx/json_io.hpp"
#include "ccx/separation.hpp"
#include "ccx/suite.hpp"

#include <iostream>
#include <sstream>

namespace py = pybind11;

namespace {

using ccx::json;

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

ccx::Bitset set_from_list(const std::vector<int>& vs, int universe) {
  ccx::Bitset b(universe);
  for (int v : vs) {
    if (v < 0 || v >= universe) throw ccx::Error::usage("vertex out of range");
    b.set(v);
  }
  return b;
}

ccx::CubeComplex build_complex(int vertices,
                               const std::vector<std::pair<int, int>>& edges) {
  return ccx::CubeComplex::build(ccx::CubeGraph::make(vertices, edges));
}

ccx::Group group_from_maps(const ccx::CubeComplex& c,
                           const std::vector<std::vector<int>>& maps, long long cap) {
  std::vector<ccx::Automorphism> gens;
  for (const auto& m : maps) gens.push_back(ccx::make_automorphism(c, m));
  return ccx::generate_group(c, gens, cap);
}

ccx::PartialAutomorphism partial_from_args(const ccx::CubeComplex& c,
                                           const std::vector<int>& domain,
                                           const std::vector<int>& vmap,
                                           const std::string& note) {
  return ccx::make_partial_automorphism(c, set_from_list(domain, c.vertex_count()), vmap,
                                        note);
}

}  // namespace

PYBIND11_MODULE(_ccx, m) {
  m.doc() = "finite median-graph toolkit: hyperplanes, gates, separation, contact "
            "graphs, wallspace duality and symmetry certificates";

  py::register_exception<ccx::Error>(m, "Error");

  py::class_<ccx::CubeComplex>(m, "Complex")
      .def(py::init(&build_complex), py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("vertex_count", &ccx::CubeComplex::vertex_count)
      .def_property_readonly("edge_count", &ccx::CubeComplex::edge_count)
      .def_property_readonly("hyperplane_count", &ccx::CubeComplex::hyperplane_count)
      .def_property_readonly("dimension", &ccx::CubeComplex::dimension)
      .def_property_readonly("edges",
                             [](const ccx::CubeComplex& c) { return c.graph().edges; })
      .def("dist",
           [](const ccx::CubeComplex& c, int x, int y) { return c.dist_l1(x, y).distance; })
      .def("separators",
           [](const ccx::CubeComplex& c, int x, int y) { return c.dist_l1(x, y).separators; })
      .def("dist_linf", &ccx::CubeComplex::dist_linf)
      .def("median", &ccx::CubeComplex::median)
      .def("interval",
           [](const ccx::CubeComplex& c, int x, int y) { return c.interval(x, y).to_vector(); })
      .def("hyperplane",
           [](const ccx::CubeComplex& c, int h) {
             json j = ccx::hyperplanes_to_json(c).at(h);
             return json_to_py(j);
           })
      .def("halfspace",
           [](const ccx::CubeComplex& c, int h, bool side_b) {
             return c.halfspace(h, side_b).to_vector();
           })
      .def("carrier",
           [](const ccx::CubeComplex& c, int h) { return c.carrier(h).to_vector(); })
      .def("transverse", &ccx::CubeComplex::transverse)
      .def("convex_hull",
           [](const ccx::CubeComplex& c, const std::vector<int>& vs) {
             return ccx::convex_hull(c, set_from_list(vs, c.vertex_count()))
                 .vertices.to_vector();
           })
      .def("is_convex",
           [](const ccx::CubeComplex& c, const std::vector<int>& vs) {
             return ccx::is_convex(c, set_from_list(vs, c.vertex_count())).convex;
           })
      .def("gate",
           [](const ccx::CubeComplex& c, int x, const std::vector<int>& hull_of) {
             auto target = ccx::convex_hull(c, set_from_list(hull_of, c.vertex_count()));
             return ccx::gate(c, x, target);
           },
           py::arg("x"), py::arg("hull_of"),
           "nearest vertex of the convex hull of the given set")
      .def("project",
           [](const ccx::CubeComplex& c, const std::vector<int>& of,
              const std::vector<int>& hull_of) {
             auto target = ccx::convex_hull(c, set_from_list(hull_of, c.vertex_count()));
             return ccx::project_set(c, set_from_list(of, c.vertex_count()), target)
                 .to_vector();
           })
      .def("relation",
           [](const ccx::CubeComplex& c, int a, int b) {
             switch (ccx::relation(c, a, b).kind) {
               case ccx::RelationKind::equal: return "equal";
               case ccx::RelationKind::transverse: return "transverse";
               default: return "nested";
             }
           })
      .def("separation_report",
           [](const ccx::CubeComplex& c, int j, int h) {
             return json_to_py(ccx::separation_to_json(ccx::well_separation_degree(c, j, h)));
           })
      .def("strongly_separated",
           [](const ccx::CubeComplex& c, int j, int h) {
             return ccx::strongly_separated(c, j, h);
           })
      .def("thinness",
           [](const ccx::CubeComplex& c, const std::vector<int>& geodesic) {
             return ccx::thinness_constant(c, geodesic);
           })
      .def("contact_graph",
           [](const ccx::CubeComplex& c) {
             return json_to_py(ccx::contact_to_json(c, ccx::contact_graph(c)));
           })
      .def("delta",
           [](const ccx::CubeComplex& c, int j, int h) {
             return ccx::delta_chain(c, j, h).length();
           })
      .def("delta_chain",
           [](const ccx::CubeComplex& c, int j, int h) {
             return ccx::delta_chain(c, j, h).chain;
           })
      .def("qi_check",
           [](const ccx::CubeComplex& c) { return json_to_py(ccx::qi_to_json(ccx::qi_check(c))); })
      .def("four_point_twice_delta",
           [](const ccx::CubeComplex& c, int cap) {
             return ccx::four_point_delta_x2(ccx::contact_graph(c), cap);
           },
           py::arg("cap") = 300)
      .def("walls",
           [](const ccx::CubeComplex& c) {
             return json_to_py(ccx::wallspace_to_json(ccx::walls_of(c)));
           })
      .def("decompose",
           [](const ccx::CubeComplex& c) {
             return json_to_py(ccx::decomposition_to_json(c, ccx::irreducible_decompose(c)));
           })
      .def("restriction_quotient",
           [](const ccx::CubeComplex& c, const std::vector<int>& keep) {
             auto q = ccx::restriction_quotient(c, keep);
             return py::make_tuple(q.complex, q.vertex_map);
           })
      .def("dot", [](const ccx::CubeComplex& c) { return ccx::dot_complex(c); })
      .def("to_json",
           [](const ccx::CubeComplex& c) { return ccx::canonical(ccx::graph_to_json(c.graph())); })
      .def("__repr__", [](const ccx::CubeComplex& c) {
        std::ostringstream s;
        s << "<ccx.Complex " << c.vertex_count() << " vertices, " << c.edge_count()
          << " edges, " << c.hyperplane_count() << " hyperplanes, dimension "
          << c.dimension() << ">";
        return s.str();
      });

  m.def("validate",
        [](int vertices, const std::vector<std::pair<int, int>>& edges) {
          auto rep = ccx::validate_median(ccx::CubeGraph::make(vertices, edges));
          return json_to_py(ccx::validation_to_json(rep));
        },
        py::arg("vertices"), py::arg("edges"),
        "median-graph gate; returns the report without throwing on failure");

  m.def("dual",
        [](int ground, const std::vector<std::pair<std::vector<int>, std::vector<int>>>&
                           walls) {
          ccx::Wallspace w;
          w.ground = ground;
          for (const auto& [a, b] : walls)
            w.walls.emplace_back(set_from_list(a, ground), set_from_list(b, ground));
          auto d = ccx::dual_complex(w);
          return py::make_tuple(d.complex, d.wall_to_hyperplane);
        },
        py::arg("ground"), py::arg("walls"),
        "Sageev dual: (complex, wall-to-hyperplane map)");

  m.def("make_cube", [](int d) { return ccx::CubeComplex::build(ccx::make_cube(d)); });
  m.def("make_path", [](int n) { return ccx::CubeComplex::build(ccx::make_path(n)); });
  m.def("make_grid",
        [](int a, int b) { return ccx::CubeComplex::build(ccx::make_grid(a, b)); });
  m.def("make_coset_tree",
        [](int d) { return ccx::CubeComplex::build(ccx::make_coset_tree(d)); });
  m.def("make_random_tree", [](int n, std::uint64_t seed) {
    return ccx::CubeComplex::build(ccx::make_random_tree(n, seed));
  });
  m.def("make_random_wallspace", [](int k, int mm, std::uint64_t seed) {
    return json_to_py(ccx::wallspace_to_json(ccx::make_random_wallspace(k, mm, seed)));
  });

  m.def("isomorphic", [](const ccx::CubeComplex& a, const ccx::CubeComplex& b) {
    return ccx::graph_isomorphic(a.graph(), b.graph());
  });

  m.def("group_order",
        [](const ccx::CubeComplex& c, const std::vector<std::vector<int>>& maps,
           long long cap) { return group_from_maps(c, maps, cap).order(); },
        py::arg("complex"), py::arg("generators"), py::arg("cap") = 1000000);

  m.def("acyl_profile",
        [](const ccx::CubeComplex& c, const std::vector<std::vector<int>>& maps,
           long long cap) {
          return json_to_py(ccx::profile_to_json(
              ccx::acyl_profile(c, group_from_maps(c, maps, cap))));
        },
        py::arg("complex"), py::arg("generators"), py::arg("cap") = 1000000);

  m.def("essentiality",
        [](const ccx::CubeComplex& c, const std::vector<std::vector<int>>& maps, int base,
           int depth) {
          return json_to_py(ccx::essentiality_to_json(
              ccx::essentiality_report(c, group_from_maps(c, maps, 1000000), base, depth)));
        },
        py::arg("complex"), py::arg("generators"), py::arg("base") = 0,
        py::arg("depth") = 1);

  m.def("displacement",
        [](const ccx::CubeComplex& c, const std::vector<int>& vmap, int x, int y) {
          return json_to_py(ccx::displacement_to_json(
              ccx::displacement_check(c, ccx::make_automorphism(c, vmap), x, y)));
        });

  m.def("skewer",
        [](const ccx::CubeComplex& c, const std::vector<int>& domain,
           const std::vector<int>& vmap, const std::string& note) {
          return json_to_py(
              ccx::skewer_to_json(ccx::skewer_detect(c, partial_from_args(c, domain, vmap, note))));
        },
        py::arg("complex"), py::arg("domain"), py::arg("map"), py::arg("window") = "");

  m.def("wpd_certificate",
        [](const ccx::CubeComplex& c, const std::vector<int>& domain,
           const std::vector<int>& vmap, const std::string& note,
           const std::vector<std::vector<int>>& sym) {
          return json_to_py(ccx::wpd_to_json(ccx::wpd_certificate(
              c, partial_from_args(c, domain, vmap, note), group_from_maps(c, sym, 1000000))));
        },
        py::arg("complex"), py::arg("domain"), py::arg("map"), py::arg("window") = "",
        py::arg("symmetries") = std::vector<std::vector<int>>{});

  m.def("ramsey_bound", &ccx::ramsey_bound, py::arg("r"), py::arg("dim"));

  m.def("separates",
        [](const ccx::CubeComplex& c, int v, int j, int h) {
          return ccx::separates(c, v, j, h);
        },
        "whether hyperplane v separates the carriers of j and h");

  m.def("facing_triple", [](const ccx::CubeComplex& c, int a, int b, int h) {
    return ccx::facing_triple(c, a, b, h);
  });

  m.def("hyperplane_layers",
        [](const ccx::CubeComplex& c, int x, const std::vector<int>& hyps) {
          auto rep = ccx::hyperplane_layers(c, x, hyps);
          py::dict out;
          out["layers"] = rep.layers;
          out["away_consistent"] = rep.away_consistent;
          out["away_closed"] = rep.away_closed;
          return out;
        },
        py::arg("complex"), py::arg("base"), py::arg("hyperplanes"));

  m.def("coarse_stabilizer",
        [](const ccx::CubeComplex& c, const std::vector<std::vector<int>>& maps, int x,
           int y, int d) {
          return ccx::coarse_stabilizer(c, group_from_maps(c, maps, 1000000), x, y, d);
        },
        py::arg("complex"), py::arg("generators"), py::arg("x"), py::arg("y"),
        py::arg("d"));

  m.def("hagen_check", [](const ccx::CubeComplex& c) {
    auto rep = ccx::hagen_check(c, ccx::contact_graph(c));
    py::dict out;
    out["holds"] = rep.holds;
    out["geodesics_checked"] = rep.geodesics_checked;
    if (!rep.detail.empty()) out["detail"] = rep.detail;
    return out;
  });

  m.def("cube_symmetry_generators", &ccx::cube_symmetry_generators);
  m.def("grid_symmetry_generators", &ccx::grid_symmetry_generators, py::arg("a"),
        py::arg("b"), py::arg("with_transpose") = false);
  m.def("path_end_swap", &ccx::path_end_swap);
  m.def("coset_tree_symmetry_generators", &ccx::coset_tree_symmetry_generators);

  m.def("run_suite",
        []() {
          auto results = ccx::run_acceptance(std::cout);
          return ccx::all_passed(results);
        },
        "run the full verification battery, printing one line per criterion");
}
