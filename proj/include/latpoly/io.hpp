#pragma once

#include "latpoly/polytope.hpp"

#include <string>

namespace latpoly {

// Format: "<num_vertices> <ambient_rank>\n" then one vertex per line,
// space-separated decimal integers; '#' starts a comment.
LatticePolytope parse_polytope(const std::string& text);
std::string serialize_polytope(const LatticePolytope& P);

}  // namespace latpoly
