#include "ccx/dot.hpp"

#include <array>
#include <sstream>

#include "ccx/separation.hpp"

namespace ccx {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3"};

const char* class_color(int h) { return kPalette[h % kPalette.size()]; }

}  // namespace

std::string dot_complex(const CubeComplex& c) {
  std::ostringstream out;
  out << "graph complex {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (int v = 0; v < c.vertex_count(); ++v) out << "  " << v << ";\n";
  for (int e = 0; e < c.edge_count(); ++e) {
    auto [u, v] = c.graph().edges[e];
    int h = c.edge_hyperplane(e);
    out << "  " << u << " -- " << v << " [color=\"" << class_color(h)
        << "\", label=\"J" << h << "\", fontsize=8];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_contact(const CubeComplex& c, const ContactGraph& cg) {
  std::ostringstream out;
  out << "graph contact {\n";
  out << "  node [shape=box, fontsize=10];\n";
  for (int h = 0; h < cg.node_count; ++h)
    out << "  " << h << " [label=\"J" << h << "\", color=\"" << class_color(h) << "\"];\n";
  for (int a = 0; a < cg.node_count; ++a)
    cg.adj[a].for_each([&](int b) {
      if (a < b) out << "  " << a << " -- " << b << ";\n";
    });
  for (int a = 0; a < cg.node_count; ++a)
    for (int b = a + 1; b < cg.node_count; ++b)
      if (strongly_separated(c, a, b))
        out << "  " << a << " -- " << b
            << " [style=dashed, color=red, constraint=false, label=\"ss\", fontsize=8];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ccx
