#include "latpoly/cones.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace latpoly {

namespace {

constexpr long long kConeBoxGuard = 10'000'000;

// Facets of the cone generated by `rays` (apex 0), by scanning linearly
// independent (n-1)-subsets for supporting hyperplanes.
std::vector<IntVector> cone_facets_from_rays(const std::vector<IntVector>& rays, int n) {
    std::set<IntVector> out;
    if (n == 1) {
        // Pointed full-dimensional 1-cone: a single ray direction.
        out.insert(primitive(rays[0]));
        return {out.begin(), out.end()};
    }
    int m = static_cast<int>(rays.size());
    std::vector<int> idx(static_cast<size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) idx[i] = i;
    auto advance = [&]() -> bool {
        int i = n - 2;
        while (i >= 0 && idx[i] == m - (n - 1) + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < n - 1; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };
    if (m < n - 1) return {};
    do {
        std::vector<IntVector> rows;
        for (int i = 0; i < n - 1; ++i) rows.push_back(rays[idx[i]]);
        auto u = kernel_primitive(rows, n);
        if (!u) continue;
        bool pos = false, neg = false;
        for (const auto& r : rays) {
            Int d = dot(*u, r);
            if (d > 0) pos = true;
            else if (d < 0) neg = true;
            if (pos && neg) break;
        }
        if (pos && neg) continue;
        out.insert(neg ? negate(*u) : *u);
    } while (advance());
    return {out.begin(), out.end()};
}

}  // namespace

bool cone_contains(const VertexCone& C, const IntVector& x) {
    for (const auto& u : C.cone_facets)
        if (dot(u, x) < 0) return false;
    return true;
}

VertexCone vertex_cone(const LatticePolytope& P, const IntVector& v) {
    if (!std::binary_search(P.vertices.begin(), P.vertices.end(), v))
        throw PreconditionError("vertex_cone: not a vertex");
    if (!P.is_full_dimensional())
        throw PreconditionError("vertex_cone: polytope is not full-dimensional");
    VertexCone C;
    C.apex = v;
    for (const auto& e : edge_skeleton(P)) {
        if (e.a == v) C.rays.push_back(primitive(sub(e.b, v)));
        else if (e.b == v) C.rays.push_back(primitive(sub(e.a, v)));
    }
    std::sort(C.rays.begin(), C.rays.end());
    for (const auto& f : facet_description(P))
        if (f.eval(v) == 0) C.cone_facets.push_back(f.normal);
    std::sort(C.cone_facets.begin(), C.cone_facets.end());
    return C;
}

VertexCone cone_from_rays(const std::vector<IntVector>& rays) {
    if (rays.empty()) throw PreconditionError("cone_from_rays: no rays");
    int n = static_cast<int>(rays[0].size());
    std::vector<IntVector> prim;
    for (const auto& r : rays) prim.push_back(primitive(r));
    std::sort(prim.begin(), prim.end());
    prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
    if (rank_of_rows(prim) != n)
        throw PreconditionError("cone_from_rays: rays do not span");
    VertexCone C;
    C.apex = zero_vector(n);
    C.cone_facets = cone_facets_from_rays(prim, n);
    if (rank_of_rows(C.cone_facets) != n)
        throw PreconditionError("cone_from_rays: cone is not strictly convex");
    // Keep only generators that are genuine extreme rays: tight facet normals
    // of rank n-1.
    for (const auto& r : prim) {
        std::vector<IntVector> tight;
        for (const auto& u : C.cone_facets)
            if (dot(u, r) == 0) tight.push_back(u);
        if (rank_of_rows(tight) == n - 1 || n == 1) C.rays.push_back(r);
    }
    std::sort(C.rays.begin(), C.rays.end());
    return C;
}

std::optional<GorensteinDatum> gorenstein_point(const VertexCone& C) {
    if (C.cone_facets.empty())
        throw PreconditionError("gorenstein_point: cone has no facets");
    auto sol = solve_all_ones_system(C.cone_facets);
    if (!sol) return std::nullopt;
    return GorensteinDatum{sol->x};
}

std::map<IntVector, std::optional<GorensteinDatum>> is_gorenstein_map(const LatticePolytope& P) {
    if (!P.is_full_dimensional())
        throw PreconditionError("is_gorenstein_map: polytope is not full-dimensional");
    std::map<IntVector, std::optional<GorensteinDatum>> out;
    auto facets = facet_description(P);
    for (const auto& v : P.vertices) {
        std::vector<IntVector> tight;
        for (const auto& f : facets)
            if (f.eval(v) == 0) tight.push_back(f.normal);
        auto sol = solve_all_ones_system(tight);
        out[v] = sol ? std::optional<GorensteinDatum>(GorensteinDatum{sol->x}) : std::nullopt;
    }
    return out;
}

bool is_gorenstein(const LatticePolytope& P) {
    for (const auto& [v, d] : is_gorenstein_map(P))
        if (!d) return false;
    return true;
}

namespace {

// Lattice points of the truncated cone {x in C : <u_i, x> <= bound_i},
// enumerated over a box derived from the ray decomposition.
PointSet truncated_cone_points(const VertexCone& C, const std::vector<Int>& bounds) {
    int n = C.rank();
    // x = sum lambda_j r_j with lambda_j <= min_i bound_i / <u_i, r_j>.
    std::vector<Rat> lambda_max;
    for (const auto& r : C.rays) {
        std::optional<Rat> lm;
        for (size_t i = 0; i < C.cone_facets.size(); ++i) {
            Int pr = dot(C.cone_facets[i], r);
            if (pr > 0) {
                Rat cand = Rat(bounds[i]) / Rat(pr);
                if (!lm || cand < *lm) lm = cand;
            }
        }
        if (!lm) throw PreconditionError("truncated_cone_points: unbounded ray");
        lambda_max.push_back(*lm);
    }
    IntVector lo = zero_vector(n), hi = zero_vector(n);
    for (size_t j = 0; j < C.rays.size(); ++j)
        for (int k = 0; k < n; ++k) {
            Rat contrib = lambda_max[j] * Rat(C.rays[j][k]);
            Int c_floor = boost::multiprecision::numerator(contrib) /
                          boost::multiprecision::denominator(contrib);
            // floor/ceil of the rational contribution
            Rat fr = Rat(c_floor);
            Int fl = (fr > contrib) ? c_floor - 1 : c_floor;
            Int ce = (fr < contrib) ? c_floor + 1 : c_floor;
            if (contrib < 0) lo[k] += fl;
            else hi[k] += ce;
        }
    Int vol = 1;
    for (int k = 0; k < n; ++k) {
        vol *= hi[k] - lo[k] + 1;
        if (vol > kConeBoxGuard)
            throw ResourceError("hilbert_basis: cone enumeration exceeds the resource guard");
    }
    PointSet out;
    IntVector p = lo;
    while (true) {
        bool ok = true;
        for (size_t i = 0; i < C.cone_facets.size() && ok; ++i) {
            Int d = dot(C.cone_facets[i], p);
            if (d < 0 || d > bounds[i]) ok = false;
        }
        if (ok && !is_zero(p)) out.push_back(p);
        int k = 0;
        while (k < n && p[k] == hi[k]) { p[k] = lo[k]; ++k; }
        if (k == n) break;
        ++p[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PointSet hilbert_basis(const VertexCone& C) {
    int n = C.rank();
    if (rank_of_rows(C.cone_facets) != n || rank_of_rows(C.rays) != n)
        throw PreconditionError("hilbert_basis: cone must be full-dimensional and pointed");
    // Gordan: every irreducible element lies in the zonotope of the rays, so
    // the truncated cone with bounds sum_j <u_i, r_j> contains the basis; and
    // any divisor of a point of that region stays inside it.
    std::vector<Int> bounds;
    for (const auto& u : C.cone_facets) {
        Int b = 0;
        for (const auto& r : C.rays) b += dot(u, r);
        bounds.push_back(b);
    }
    PointSet region = truncated_cone_points(C, bounds);
    std::set<IntVector> region_set(region.begin(), region.end());
    PointSet basis;
    for (const auto& p : region) {
        bool reducible = false;
        for (const auto& q : region) {
            if (q == p) continue;
            IntVector rem = sub(p, q);
            if (is_zero(rem)) continue;
            if (cone_contains(C, rem)) { reducible = true; break; }
        }
        if (!reducible) basis.push_back(p);
    }
    return basis;
}

bool semigroup_generates(const VertexCone& C, const std::vector<IntVector>& gens,
                         const IntVector& x) {
    if (is_zero(x)) return true;
    std::set<IntVector> dead;  // points known unreachable
    std::function<bool(const IntVector&)> rec = [&](const IntVector& y) -> bool {
        if (is_zero(y)) return true;
        if (dead.count(y)) return false;
        for (const auto& g : gens) {
            if (is_zero(g)) continue;
            IntVector rem = sub(y, g);
            if (!cone_contains(C, rem)) continue;
            if (rec(rem)) return true;
        }
        dead.insert(y);
        return false;
    };
    return rec(x);
}

VeryAmpleResult very_ample_at(const LatticePolytope& P, const IntVector& v) {
    VertexCone C = vertex_cone(P, v);
    std::vector<IntVector> gens;
    for (const auto& p : lattice_points(P)) {
        if (p == v) continue;
        gens.push_back(sub(p, v));
    }
    VeryAmpleResult res;
    res.ok = true;
    for (const auto& h : hilbert_basis(C)) {
        if (!semigroup_generates(C, gens, h)) {
            res.ok = false;
            res.violator = h;
            return res;
        }
    }
    return res;
}

bool is_very_ample(const LatticePolytope& P) {
    for (const auto& v : P.vertices)
        if (!very_ample_at(P, v).ok) return false;
    return true;
}

}  // namespace latpoly
