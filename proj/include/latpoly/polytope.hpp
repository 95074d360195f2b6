#pragma once

#include "latpoly/linalg.hpp"

#include <optional>

namespace latpoly {

// Facet inequality <normal, x> + offset >= 0, valid on P and tight on the facet.
struct Facet {
    IntVector normal;  // primitive, inner
    Int offset;

    Int eval(const IntVector& p) const { return dot(normal, p) + offset; }
    bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
    bool operator<(const Facet& o) const {
        return normal != o.normal ? normal < o.normal : offset < o.offset;
    }
};

struct Edge {
    IntVector a, b;      // endpoints, a < b lexicographically
    Int lattice_length;  // gcd of coordinate differences
};

class LatticePolytope {
public:
    int ambient_rank = 0;
    int dim = -1;
    std::vector<IntVector> vertices;  // sorted lexicographically

    const IntVector& vertex(size_t i) const { return vertices[i]; }
    size_t vertex_count() const { return vertices.size(); }
    bool is_full_dimensional() const { return dim == ambient_rank; }
    bool operator==(const LatticePolytope& o) const {
        return ambient_rank == o.ambient_rank && vertices == o.vertices;
    }
};

LatticePolytope hull_from_points(const std::vector<IntVector>& points, int ambient_rank);

// Irredundant H-representation; requires dim P = ambient_rank.
std::vector<Facet> facet_description(const LatticePolytope& P);

std::vector<Edge> edge_skeleton(const LatticePolytope& P);

LatticePolytope dilate(const LatticePolytope& P, const Int& k);

std::optional<AffineUnimodularMap> lattice_equivalent(const LatticePolytope& P,
                                                      const LatticePolytope& Q);

// Full-rank coordinate model of the affine span of a point set: an origin
// point plus a basis of the saturated direction lattice, so that integer
// local coordinates enumerate exactly span ∩ M.
struct SpanModel {
    IntVector base;
    std::vector<IntVector> basis;       // size = dim of the span
    std::vector<IntVector> complement;  // completes basis to a basis of Z^n

    int local_rank() const { return static_cast<int>(basis.size()); }
    IntVector to_local(const IntVector& ambient) const;
    IntVector to_ambient(const IntVector& local) const;
};

SpanModel span_model(const std::vector<IntVector>& points);

}  // namespace latpoly
