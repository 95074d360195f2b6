#pragma once

#include "latpoly/enumerate.hpp"

#include <map>
#include <optional>

namespace latpoly {

// Tangent cone of a polytope at a vertex, translated so the apex is 0:
// rays are the primitive edge directions, cone_facets the inner normals of
// the polytope facets through the vertex.
struct VertexCone {
    IntVector apex;
    std::vector<IntVector> rays;         // primitive, sorted
    std::vector<IntVector> cone_facets;  // primitive, <u, x> >= 0 on the cone

    int rank() const { return static_cast<int>(apex.size()); }
};

VertexCone vertex_cone(const LatticePolytope& P, const IntVector& v);

// Builds a cone directly from ray generators (apex 0); requires the rays to
// span the space and the cone to be strictly convex.
VertexCone cone_from_rays(const std::vector<IntVector>& rays);

struct GorensteinDatum {
    IntVector point;  // m_0, apex-relative: <u, m_0> = 1 for every cone facet u
};

std::optional<GorensteinDatum> gorenstein_point(const VertexCone& C);

// One entry per vertex; P is Gorenstein iff every value is present.
std::map<IntVector, std::optional<GorensteinDatum>> is_gorenstein_map(const LatticePolytope& P);
bool is_gorenstein(const LatticePolytope& P);

// Minimal generating set of the semigroup C ∩ M (Gordan enumeration over the
// ray zonotope, then irreducibility filtering). Throws ResourceError past the
// desk-scale guard.
PointSet hilbert_basis(const VertexCone& C);

struct VeryAmpleResult {
    bool ok = false;
    std::optional<IntVector> violator;  // a Hilbert basis element not generated
};

VeryAmpleResult very_ample_at(const LatticePolytope& P, const IntVector& v);
bool is_very_ample(const LatticePolytope& P);

// True iff x lies in the cone (all facet pairings nonnegative).
bool cone_contains(const VertexCone& C, const IntVector& x);

// Semigroup membership: is x a nonnegative integer combination of gens
// (all gens and x inside the cone C, used for bounding the search)?
bool semigroup_generates(const VertexCone& C, const std::vector<IntVector>& gens,
                         const IntVector& x);

}  // namespace latpoly
