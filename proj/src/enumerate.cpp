#include "latpoly/enumerate.hpp"

#include <algorithm>
#include <set>

namespace latpoly {

namespace {

constexpr long long kBoxGuard = 10'000'000;  // lattice points scanned per call

struct Box {
    IntVector lo, hi;
};

Box bounding_box(const std::vector<IntVector>& pts) {
    Box b{pts[0], pts[0]};
    for (const auto& p : pts)
        for (size_t i = 0; i < p.size(); ++i) {
            b.lo[i] = std::min(b.lo[i], p[i]);
            b.hi[i] = std::max(b.hi[i], p[i]);
        }
    return b;
}

void check_box_guard(const Box& b) {
    Int vol = 1;
    for (size_t i = 0; i < b.lo.size(); ++i) {
        vol *= b.hi[i] - b.lo[i] + 1;
        if (vol > kBoxGuard)
            throw ResourceError("enumeration box exceeds the resource guard");
    }
}

// thr = 0: closed polytope; thr = 1: strict interior.
PointSet boxscan(const std::vector<Facet>& facets, const Box& box, const Int& thr) {
    check_box_guard(box);
    size_t n = box.lo.size();
    PointSet out;
    IntVector p = box.lo;
    while (true) {
        bool inside = true;
        for (const auto& f : facets)
            if (f.eval(p) < thr) { inside = false; break; }
        if (inside) out.push_back(p);
        size_t i = 0;
        while (i < n && p[i] == box.hi[i]) { p[i] = box.lo[i]; ++i; }
        if (i == n) break;
        ++p[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Recursive slab slicing: fix coordinates left to right, tightening the range
// of the current coordinate from every facet by interval arithmetic over the
// still-free coordinates.
void sliced_rec(const std::vector<Facet>& facets, const Box& box, const Int& thr,
                IntVector& p, size_t depth, std::vector<Int>& residual, PointSet& out) {
    size_t n = box.lo.size();
    if (depth == n) {
        for (const auto& r : residual)
            if (r < thr) return;
        out.push_back(p);
        return;
    }
    Int lo = box.lo[depth], hi = box.hi[depth];
    for (size_t f = 0; f < facets.size() && lo <= hi; ++f) {
        const IntVector& u = facets[f].normal;
        Int slack = 0;
        for (size_t j = depth + 1; j < n; ++j)
            slack += u[j] >= 0 ? u[j] * box.hi[j] : u[j] * box.lo[j];
        Int c = thr - residual[f] - slack;  // need u[depth]*x >= c
        if (u[depth] > 0) lo = std::max(lo, ceil_div(c, u[depth]));
        else if (u[depth] < 0) hi = std::min(hi, floor_div(c, u[depth]));
        else if (c > 0) return;
    }
    for (Int x = lo; x <= hi; ++x) {
        p[depth] = x;
        std::vector<Int> next = residual;
        for (size_t f = 0; f < facets.size(); ++f)
            next[f] += facets[f].normal[depth] * x;
        sliced_rec(facets, box, thr, p, depth + 1, next, out);
    }
}

PointSet sliced(const std::vector<Facet>& facets, const Box& box, const Int& thr) {
    check_box_guard(box);
    PointSet out;
    IntVector p = box.lo;
    std::vector<Int> residual;
    for (const auto& f : facets) residual.push_back(f.offset);
    sliced_rec(facets, box, thr, p, 0, residual, out);
    std::sort(out.begin(), out.end());
    return out;
}

PointSet map_to_ambient(const SpanModel& sm, const PointSet& local) {
    PointSet out;
    for (const auto& p : local) out.push_back(sm.to_ambient(p));
    std::sort(out.begin(), out.end());
    return out;
}

PointSet enumerate_lower_dim(const LatticePolytope& P, const Int& thr) {
    if (P.dim == 0) {
        if (thr > 0) return {};
        return {P.vertices[0]};
    }
    SpanModel sm = span_model(P.vertices);
    std::vector<IntVector> local;
    for (const auto& v : P.vertices) local.push_back(sm.to_local(v));
    LatticePolytope L = hull_from_points(local, sm.local_rank());
    PointSet pts = sliced(facet_description(L), bounding_box(L.vertices), thr);
    return map_to_ambient(sm, pts);
}

}  // namespace

PointSet lattice_points(const LatticePolytope& P) {
    if (!P.is_full_dimensional()) return enumerate_lower_dim(P, 0);
    return sliced(facet_description(P), bounding_box(P.vertices), 0);
}

PointSet lattice_points_boxscan(const LatticePolytope& P) {
    if (!P.is_full_dimensional()) return enumerate_lower_dim(P, 0);
    return boxscan(facet_description(P), bounding_box(P.vertices), 0);
}

PointSet interior_lattice_points(const LatticePolytope& P) {
    if (!P.is_full_dimensional())
        throw PreconditionError(
            "interior_lattice_points: polytope is not full-dimensional "
            "(use relative_interior_lattice_points)");
    return sliced(facet_description(P), bounding_box(P.vertices), 1);
}

PointSet relative_interior_lattice_points(const LatticePolytope& P) {
    if (P.is_full_dimensional()) return interior_lattice_points(P);
    return enumerate_lower_dim(P, 1);
}

LevelGenerationResult level_generation_check(const LatticePolytope& P, const Int& k) {
    if (k < 1) throw PreconditionError("level_generation_check: k must be >= 1");
    PointSet base = lattice_points(P);
    PointSet level_k = lattice_points(dilate(P, k));
    PointSet level_k1 = lattice_points(dilate(P, k + 1));
    std::set<IntVector> level_k_set(level_k.begin(), level_k.end());
    LevelGenerationResult res;
    for (const auto& c : level_k1) {
        bool reachable = false;
        for (const auto& b : base)
            if (level_k_set.count(sub(c, b))) { reachable = true; break; }
        if (!reachable) res.missing.push_back(c);
    }
    res.holds = res.missing.empty();
    return res;
}

NormalityResult normality_check(const LatticePolytope& P) {
    if (P.dim < 1) throw PreconditionError("normality_check: dim must be >= 1");
    int n = P.dim;
    Int kmax = std::max(1, n - 2);  // levels >= n-1 hold unconditionally
    NormalityResult res;
    for (Int k = 1; k <= kmax; ++k) {
        if (!level_generation_check(P, k).holds) {
            res.normal = false;
            res.first_failing_k = k;
            return res;
        }
    }
    res.normal = true;
    return res;
}

}  // namespace latpoly
