#pragma once

#include "latpoly/classify.hpp"

namespace latpoly {

Int min_edge_length(const LatticePolytope& P);

// Hull of the interior lattice points; absent when the interior is empty.
std::optional<LatticePolytope> adjoint_polytope(const LatticePolytope& P);

struct AdjointVertexRecord {
    IntVector vertex;
    std::optional<IntVector> m_v;  // absolute coordinates
    bool m_v_interior = false;
};

struct AdjointReport {
    std::vector<AdjointVertexRecord> per_vertex;
    bool gorenstein = false;
    Int min_edge = 0;
    bool sections_nonzero = false;
    bool nef_certified = false;            // gorenstein && sections && all m_v interior
    bool hypotheses_hold = false;          // gorenstein && sections && min_edge >= n-1
    bool counterexample_candidate = false; // hypotheses hold but the conclusion fails
};

AdjointReport freeness_check(const LatticePolytope& P);

enum class FanException { None, ProjectiveSpace, BundleOverP1, IndexNFano };
const char* fan_exception_name(FanException e);

struct Tm1Report {
    AdjointReport base;
    FanException exception = FanException::None;
};

Tm1Report theorem_tm1_check(const LatticePolytope& P);

struct AdjointVeryAmpleResult {
    bool ok = false;
    struct VertexWitness {
        IntVector vertex;
        bool ok = false;
        std::optional<IntVector> violator;
    };
    std::vector<VertexWitness> per_vertex;
};

AdjointVeryAmpleResult adjoint_very_ample(const LatticePolytope& P);

struct Tm2Report {
    bool gorenstein = false;
    Int min_edge = 0;
    bool fan_is_projective_space = false;
    bool hypotheses_hold = false;
    bool conclusion_holds = false;
    bool counterexample_candidate = false;
};

Tm2Report theorem_tm2_check(const LatticePolytope& P);

// Maximal cones of the normal fan, one per vertex; generators are the inner
// facet normals through the vertex, and the vertex-cone rays give the dual
// H-description used for membership.
struct NormalFan {
    struct MaxCone {
        std::vector<IntVector> generators;  // sorted primitive rays in N
        std::vector<IntVector> dual_rays;   // edge directions at the vertex
    };
    std::vector<MaxCone> cones;  // sorted by generators
};

NormalFan normal_fan(const LatticePolytope& P);
bool fan_equal(const NormalFan& F, const NormalFan& G);
std::optional<IntMatrix> fan_equivalent(const NormalFan& F, const NormalFan& G);

bool fan_contains(const NormalFan& F, const IntVector& dual_vector);

}  // namespace latpoly
