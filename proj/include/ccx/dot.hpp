#pragma once

#include <string>

#include "ccx/complex.hpp"
#include "ccx/contact.hpp"

namespace ccx {

// DOT text for the 1-skeleton, edges colored by hyperplane class.
std::string dot_complex(const CubeComplex& c);

// DOT text for the contact graph; strongly separated pairs appear as
// dashed annotations (they are never contact edges).
std::string dot_contact(const CubeComplex& c, const ContactGraph& cg);

}  // namespace ccx
