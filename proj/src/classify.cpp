#include "latpoly/classify.hpp"

#include <algorithm>
#include <functional>

namespace latpoly {

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::BasicSimplex: return "BasicSimplex";
        case FamilyTag::Pn: return "Pn";
        case FamilyTag::Qn: return "Qn";
        case FamilyTag::QprimeN: return "QprimeN";
        case FamilyTag::Rn: return "Rn";
        case FamilyTag::Dn: return "Dn";
        case FamilyTag::Other: return "Other";
    }
    return "?";
}

LatticePolytope canonical_polytope(const CanonicalFamily& family, int n) {
    auto e = [n](int i) { return unit_vector(n, i); };
    std::vector<IntVector> pts;
    switch (family.tag) {
        case FamilyTag::BasicSimplex:
            if (n < 1) throw PreconditionError("BasicSimplex needs n >= 1");
            pts.push_back(zero_vector(n));
            for (int i = 0; i < n; ++i) pts.push_back(e(i));
            break;
        case FamilyTag::Pn:
            if (n < 2) throw PreconditionError("Pn needs n >= 2");
            pts.push_back(zero_vector(n));
            pts.push_back(scale(2, e(0)));
            for (int i = 1; i < n; ++i) pts.push_back(e(i));
            break;
        case FamilyTag::Qn:
            if (n < 2) throw PreconditionError("Qn needs n >= 2");
            pts.push_back(zero_vector(n));
            pts.push_back(e(0));
            pts.push_back(e(1));
            pts.push_back(add(e(0), e(1)));
            for (int i = 2; i < n; ++i) pts.push_back(e(i));
            break;
        case FamilyTag::QprimeN:
            if (n < 3) throw PreconditionError("QprimeN needs n >= 3");
            pts.push_back(zero_vector(n));
            for (int i = 0; i < n; ++i) pts.push_back(e(i));
            pts.push_back(sub(add(e(0), e(1)), e(n - 1)));
            break;
        case FamilyTag::Rn: {
            if (n < 3) throw PreconditionError("Rn needs n >= 3");
            if (static_cast<int>(family.params.size()) != n)
                throw PreconditionError("Rn needs n parameters");
            for (size_t i = 1; i < family.params.size(); ++i)
                if (family.params[i] < family.params[i - 1] || family.params[i - 1] < 1)
                    throw PreconditionError("Rn parameters must be positive and sorted");
            pts.push_back(zero_vector(n));
            for (int i = 0; i < n - 1; ++i) pts.push_back(e(i));
            for (int i = 0; i < n - 1; ++i)
                pts.push_back(add(e(i), scale(family.params[i], e(n - 1))));
            pts.push_back(scale(family.params[n - 1], e(n - 1)));
            break;
        }
        case FamilyTag::Dn:
            if (n < 3) throw PreconditionError("Dn needs n >= 3");
            pts.push_back(zero_vector(n));
            pts.push_back(e(0));
            pts.push_back(e(1));
            pts.push_back(add(add(e(0), e(1)), scale(2, e(2))));
            for (int i = 3; i < n; ++i) pts.push_back(e(i));
            break;
        case FamilyTag::Other:
            throw PreconditionError("canonical_polytope: Other has no model");
    }
    return hull_from_points(pts, n);
}

bool is_empty_lattice_simplex(const LatticePolytope& P) {
    if (!P.is_full_dimensional()) return false;
    size_t n = static_cast<size_t>(P.ambient_rank);
    return P.vertices.size() == n + 1 && lattice_points(P).size() == n + 1;
}

namespace {

ClassificationVerdict verdict_for(const LatticePolytope& P, CanonicalFamily fam) {
    LatticePolytope model = canonical_polytope(fam, P.ambient_rank);
    auto w = lattice_equivalent(P, model);
    if (!w) return {CanonicalFamily{FamilyTag::Other, {}}, std::nullopt};
    return {std::move(fam), std::move(w)};
}

Int count_interior(const LatticePolytope& P, int k) {
    return Int(interior_lattice_points(dilate(P, k)).size());
}

}  // namespace

ClassificationVerdict classify_empty_interior(const LatticePolytope& P) {
    if (!P.is_full_dimensional())
        throw PreconditionError("classify_empty_interior: not full-dimensional");
    int n = P.ambient_rank;
    if (count_interior(P, n) != 0)
        throw PreconditionError("classify_empty_interior: interior of nP is nonempty");
    auto v = verdict_for(P, {FamilyTag::BasicSimplex, {}});
    if (v.family.tag == FamilyTag::Other)
        throw std::logic_error(
            "classify_empty_interior: hollow n-dilate admits no basic-simplex witness "
            "(counterexample candidate)");
    return v;
}

ClassificationVerdict classify_unique_interior(const LatticePolytope& P) {
    if (!P.is_full_dimensional() || P.ambient_rank < 2)
        throw PreconditionError("classify_unique_interior: need full dimension n >= 2");
    int n = P.ambient_rank;
    Int c = count_interior(P, n);
    if (c != 1)
        throw PreconditionError("classify_unique_interior: interior count of nP is " +
                                c.str() + ", not 1");
    for (FamilyTag tag : {FamilyTag::Pn, FamilyTag::Qn}) {
        auto v = verdict_for(P, {tag, {}});
        if (v.family.tag != FamilyTag::Other) return v;
    }
    return {CanonicalFamily{FamilyTag::Other, {}}, std::nullopt};
}

ClassificationVerdict classify_gorenstein_small_interior(const LatticePolytope& P) {
    int n = P.ambient_rank;
    if (!P.is_full_dimensional() || n < 3)
        throw PreconditionError("classify_gorenstein_small_interior: need full dimension n >= 3");
    if (!is_gorenstein(P))
        throw PreconditionError("classify_gorenstein_small_interior: P is not Gorenstein");
    if (count_interior(P, n - 1) != 0)
        throw PreconditionError("classify_gorenstein_small_interior: Int((n-1)P) is nonempty");
    if (count_interior(P, n) == 0)
        throw PreconditionError("classify_gorenstein_small_interior: Int(nP) is empty");
    for (FamilyTag tag : {FamilyTag::Pn, FamilyTag::Qn}) {
        auto v = verdict_for(P, {tag, {}});
        if (v.family.tag != FamilyTag::Other) return v;
    }
    // Rn search: a_n is bounded by the lattice point count (Rn holds a lattice
    // segment with a_n + 1 points), and candidates must match the count exactly.
    Int count = Int(lattice_points(P).size());
    Int amax = count - 1;
    std::vector<Int> params(static_cast<size_t>(n), Int(1));
    std::optional<ClassificationVerdict> found;
    std::function<bool(int, const Int&)> search = [&](int pos, const Int& lo) -> bool {
        if (pos == n) {
            CanonicalFamily fam{FamilyTag::Rn, params};
            LatticePolytope model = canonical_polytope(fam, n);
            if (Int(lattice_points(model).size()) != count) return false;
            auto w = lattice_equivalent(P, model);
            if (!w) return false;
            found = ClassificationVerdict{fam, w};
            return true;
        }
        for (Int a = lo; a <= amax; ++a) {
            params[static_cast<size_t>(pos)] = a;
            if (search(pos + 1, a)) return true;
        }
        return false;
    };
    if (search(0, Int(1))) return *found;
    return {CanonicalFamily{FamilyTag::Other, {}}, std::nullopt};
}

ClassificationVerdict classify_empty_simplex(const LatticePolytope& P) {
    int n = P.ambient_rank;
    if (!is_empty_lattice_simplex(P) || n < 2)
        throw PreconditionError("classify_empty_simplex: input is not an empty lattice simplex");
    Int c = count_interior(P, n - 1);
    if (c == 0) {
        auto v = verdict_for(P, {FamilyTag::BasicSimplex, {}});
        if (v.family.tag == FamilyTag::Other)
            throw std::logic_error(
                "classify_empty_simplex: hollow empty simplex admits no basic witness "
                "(counterexample candidate)");
        return v;
    }
    if (c == 1 && n >= 3) {
        auto v = verdict_for(P, {FamilyTag::Dn, {}});
        if (v.family.tag != FamilyTag::Other) return v;
    }
    return {CanonicalFamily{FamilyTag::Other, {}}, std::nullopt};
}

}  // namespace latpoly
