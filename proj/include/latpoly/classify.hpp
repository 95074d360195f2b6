#pragma once

#include "latpoly/cones.hpp"

namespace latpoly {

enum class FamilyTag { BasicSimplex, Pn, Qn, QprimeN, Rn, Dn, Other };

struct CanonicalFamily {
    FamilyTag tag = FamilyTag::Other;
    std::vector<Int> params;  // Rn only: a_1 <= ... <= a_n, positive
};

const char* family_name(FamilyTag tag);

struct ClassificationVerdict {
    CanonicalFamily family;
    std::optional<AffineUnimodularMap> witness;  // maps the input onto the model
};

// The canonical models in standard coordinates.
LatticePolytope canonical_polytope(const CanonicalFamily& family, int n);

// Int(nP) = ∅  =>  BasicSimplex (precondition checked).
ClassificationVerdict classify_empty_interior(const LatticePolytope& P);

// #Int(nP) = 1  =>  Pn or Qn.
ClassificationVerdict classify_unique_interior(const LatticePolytope& P);

// Gorenstein, Int((n-1)P) = ∅, Int(nP) != ∅, n >= 3  =>  Pn, Qn or Rn(a).
ClassificationVerdict classify_gorenstein_small_interior(const LatticePolytope& P);

// Empty lattice n-simplex: hollow (n-1)-dilate => BasicSimplex; unique
// interior point of the (n-1)-dilate and n >= 3 => Dn; else Other.
ClassificationVerdict classify_empty_simplex(const LatticePolytope& P);

bool is_empty_lattice_simplex(const LatticePolytope& P);

}  // namespace latpoly
