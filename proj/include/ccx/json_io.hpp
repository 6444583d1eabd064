#pragma once

#include <string>

#include <json.hpp>

#include "ccx/actions.hpp"
#include "ccx/complex.hpp"
#include "ccx/contact.hpp"
#include "ccx/convex.hpp"
#include "ccx/duality.hpp"
#include "ccx/graph.hpp"
#include "ccx/separation.hpp"

namespace ccx {

using json = nlohmann::json;

// {"vertices": n, "edges": [[u,v], ...]} with 0 <= u < v < n.
json graph_to_json(const CubeGraph& g);
CubeGraph graph_from_json(const json& j);

// {"ground": n, "walls": [[[...sideA],[...sideB]], ...]}.
json wallspace_to_json(const Wallspace& w);
Wallspace wallspace_from_json(const json& j);

// {"map": [...]}; partial maps add "domain" and use -1 outside it.
json automorphism_to_json(const Automorphism& a);
std::vector<int> vertex_map_from_json(const json& j);
json partial_to_json(const PartialAutomorphism& p);
PartialAutomorphism partial_from_json(const CubeComplex& c, const json& j);

json validation_to_json(const ValidationReport& r);
json hyperplanes_to_json(const CubeComplex& c);
json dist_to_json(const CubeComplex& c, int x, int y);
json separation_to_json(const SeparationReport& r);
json separation_scan_to_json(const CubeComplex& c);  // disjoint pairs, sorted by (j,h)
json contact_to_json(const CubeComplex& c, const ContactGraph& cg);
json qi_to_json(const QiReport& r);
json dual_to_json(const DualResult& d);
json quotient_to_json(const QuotientResult& q);
json decomposition_to_json(const CubeComplex& c, const Decomposition& d);
json profile_to_json(const AcylProfile& p);
json essentiality_to_json(const std::vector<HalfspaceReach>& rows);
json skewer_to_json(const SkewerResult& s);
json wpd_to_json(const WpdOutcome& w);
json displacement_to_json(const DisplacementReport& r);

// Canonical serialization used everywhere: sorted keys (nlohmann objects
// already sort), two-space indent, '\n' terminated.
std::string canonical(const json& j);

json load_json_file(const std::string& path);

}  // namespace ccx
