#pragma once

#include "latpoly/polytope.hpp"

#include <optional>

namespace latpoly {

// Sorted, duplicate-free.
using PointSet = std::vector<IntVector>;

PointSet lattice_points(const LatticePolytope& P);
PointSet interior_lattice_points(const LatticePolytope& P);
// Points in the relative interior (interior of the span-restricted model).
PointSet relative_interior_lattice_points(const LatticePolytope& P);

// Reference enumerator: plain bounding-box scan against the facet
// inequalities. The default path uses recursive slab slicing; the two must
// agree (tested).
PointSet lattice_points_boxscan(const LatticePolytope& P);

struct LevelGenerationResult {
    bool holds = false;
    PointSet missing;  // points of ((k+1)P)∩M not of the form a+b
};

// Checks (kP)∩M + P∩M = ((k+1)P)∩M.
LevelGenerationResult level_generation_check(const LatticePolytope& P, const Int& k);

struct NormalityResult {
    bool normal = false;
    std::optional<Int> first_failing_k;
};

NormalityResult normality_check(const LatticePolytope& P);

}  // namespace latpoly
