#include "latpoly/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace latpoly {

namespace {

std::vector<IntVector> dedup_sorted(std::vector<IntVector> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

int affine_dim(const std::vector<IntVector>& pts) {
    if (pts.empty()) return -1;
    std::vector<IntVector> diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    return diffs.empty() ? 0 : rank_of_rows(diffs);
}

// All facet hyperplanes of the hull of a full-dimensional point set,
// found by scanning affinely independent n-subsets.
std::vector<Facet> facets_of_points(const std::vector<IntVector>& pts, int n) {
    std::set<Facet> out;
    if (n == 1) {
        Int lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) { lo = std::min(lo, p[0]); hi = std::max(hi, p[0]); }
        out.insert(Facet{{Int(1)}, -lo});
        out.insert(Facet{{Int(-1)}, hi});
        return {out.begin(), out.end()};
    }
    int m = static_cast<int>(pts.size());
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[i] = i;
    auto advance = [&]() -> bool {
        int i = n - 1;
        while (i >= 0 && idx[i] == m - n + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };
    if (m < n) return {};
    do {
        std::vector<IntVector> diffs;
        for (int i = 1; i < n; ++i) diffs.push_back(sub(pts[idx[i]], pts[idx[0]]));
        auto u = kernel_primitive(diffs, n);
        if (!u) continue;
        Int val = dot(*u, pts[idx[0]]);
        bool above = false, below = false;
        for (const auto& p : pts) {
            Int d = dot(*u, p) - val;
            if (d > 0) above = true;
            else if (d < 0) below = true;
            if (above && below) break;
        }
        if (above && below) continue;
        if (below) out.insert(Facet{negate(*u), val});
        else out.insert(Facet{*u, -val});
    } while (advance());
    return {out.begin(), out.end()};
}

std::vector<IntVector> extreme_points(const std::vector<IntVector>& pts,
                                      const std::vector<Facet>& facets, int n) {
    std::vector<IntVector> verts;
    for (const auto& p : pts) {
        std::vector<IntVector> tight;
        for (const auto& f : facets)
            if (f.eval(p) == 0) tight.push_back(f.normal);
        if (rank_of_rows(tight) == n) verts.push_back(p);
    }
    return dedup_sorted(std::move(verts));
}

}  // namespace

IntVector SpanModel::to_local(const IntVector& ambient) const {
    IntMatrix B = transpose(IntMatrix::from_rows(basis));
    auto sol = solve_integer(B, sub(ambient, base));
    if (!sol) throw PreconditionError("SpanModel::to_local: point outside the span lattice");
    return sol->x;
}

IntVector SpanModel::to_ambient(const IntVector& local) const {
    IntVector p = base;
    for (size_t i = 0; i < basis.size(); ++i) p = add(p, scale(local[i], basis[i]));
    return p;
}

SpanModel span_model(const std::vector<IntVector>& points) {
    if (points.empty()) throw PreconditionError("span_model: empty point set");
    SpanModel sm;
    sm.base = points[0];
    std::vector<IntVector> diffs;
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    int n = static_cast<int>(points[0].size());
    std::vector<IntVector> hrows;
    if (!diffs.empty()) {
        auto hnf = hermite_normal_form(IntMatrix::from_rows(diffs));
        for (int i = 0; i < hnf.H.rows; ++i) {
            IntVector r = hnf.H.row(i);
            if (!is_zero(r)) hrows.push_back(r);
        }
    }
    if (hrows.empty()) {
        for (int i = 0; i < n; ++i) sm.complement.push_back(unit_vector(n, i));
        return sm;
    }
    // Saturate: with S = U*H*V, the rows of V^{-1} whose indices carry the
    // invariant factors span the saturation of the row lattice; the remaining
    // rows of V^{-1} complete it to a basis of Z^n.
    auto snf = smith_normal_form(IntMatrix::from_rows(hrows));
    IntMatrix Vinv = inverse(AffineUnimodularMap{snf.V, zero_vector(n)}).linear;
    int d = 0;
    for (int i = 0; i < std::min(snf.D.rows, snf.D.cols); ++i)
        if (snf.D.at(i, i) != 0) ++d;
    for (int i = 0; i < d; ++i) sm.basis.push_back(Vinv.row(i));
    for (int i = d; i < n; ++i) sm.complement.push_back(Vinv.row(i));
    return sm;
}

LatticePolytope hull_from_points(const std::vector<IntVector>& points, int ambient_rank) {
    if (points.empty()) throw PreconditionError("hull_from_points: empty point set");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != ambient_rank)
            throw PreconditionError("hull_from_points: coordinate length mismatch");
    auto pts = dedup_sorted(points);
    LatticePolytope P;
    P.ambient_rank = ambient_rank;
    P.dim = affine_dim(pts);
    if (P.dim == 0) {
        P.vertices = pts;
        return P;
    }
    if (P.dim == ambient_rank) {
        auto facets = facets_of_points(pts, ambient_rank);
        P.vertices = extreme_points(pts, facets, ambient_rank);
        return P;
    }
    // Lower-dimensional: identify the vertices in the restricted model.
    SpanModel sm = span_model(pts);
    std::vector<IntVector> local;
    for (const auto& p : pts) local.push_back(sm.to_local(p));
    LatticePolytope L = hull_from_points(local, sm.local_rank());
    std::vector<IntVector> verts;
    for (const auto& v : L.vertices) verts.push_back(sm.to_ambient(v));
    P.vertices = dedup_sorted(std::move(verts));
    return P;
}

std::vector<Facet> facet_description(const LatticePolytope& P) {
    if (!P.is_full_dimensional())
        throw PreconditionError("facet_description: polytope is not full-dimensional");
    return facets_of_points(P.vertices, P.ambient_rank);
}

std::vector<Edge> edge_skeleton(const LatticePolytope& P) {
    if (P.dim < 1) throw PreconditionError("edge_skeleton: dim < 1");
    if (!P.is_full_dimensional()) {
        SpanModel sm = span_model(P.vertices);
        std::vector<IntVector> local;
        for (const auto& v : P.vertices) local.push_back(sm.to_local(v));
        LatticePolytope L = hull_from_points(local, sm.local_rank());
        std::vector<Edge> out;
        for (const auto& e : edge_skeleton(L)) {
            IntVector a = sm.to_ambient(e.a), b = sm.to_ambient(e.b);
            if (b < a) std::swap(a, b);
            out.push_back(Edge{a, b, gcd_all(sub(b, a))});
        }
        return out;
    }
    int n = P.ambient_rank;
    std::vector<Edge> out;
    if (n == 1) {
        if (P.vertices.size() == 2)
            out.push_back(Edge{P.vertices[0], P.vertices[1],
                               gcd_all(sub(P.vertices[1], P.vertices[0]))});
        return out;
    }
    auto facets = facet_description(P);
    size_t nv = P.vertices.size();
    std::vector<std::vector<bool>> tight(nv, std::vector<bool>(facets.size()));
    for (size_t i = 0; i < nv; ++i)
        for (size_t f = 0; f < facets.size(); ++f)
            tight[i][f] = facets[f].eval(P.vertices[i]) == 0;
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = i + 1; j < nv; ++j) {
            std::vector<IntVector> common;
            for (size_t f = 0; f < facets.size(); ++f)
                if (tight[i][f] && tight[j][f]) common.push_back(facets[f].normal);
            if (rank_of_rows(common) == n - 1)
                out.push_back(Edge{P.vertices[i], P.vertices[j],
                                   gcd_all(sub(P.vertices[j], P.vertices[i]))});
        }
    return out;
}

LatticePolytope dilate(const LatticePolytope& P, const Int& k) {
    if (k < 1) throw PreconditionError("dilate: k must be >= 1");
    LatticePolytope Q;
    Q.ambient_rank = P.ambient_rank;
    Q.dim = P.dim;
    for (const auto& v : P.vertices) Q.vertices.push_back(scale(k, v));
    std::sort(Q.vertices.begin(), Q.vertices.end());
    return Q;
}

namespace {

std::multiset<Int> edge_length_multiset(const LatticePolytope& P) {
    std::multiset<Int> s;
    if (P.dim >= 1)
        for (const auto& e : edge_skeleton(P)) s.insert(e.lattice_length);
    return s;
}

std::optional<AffineUnimodularMap> equivalent_full_dim(const LatticePolytope& P,
                                                       const LatticePolytope& Q) {
    int n = P.ambient_rank;
    // Affinely independent vertex frame of P.
    std::vector<IntVector> frame{P.vertices[0]};
    std::vector<IntVector> dirs;
    for (const auto& v : P.vertices) {
        if (frame.size() == static_cast<size_t>(n) + 1) break;
        auto d = sub(v, frame[0]);
        dirs.push_back(d);
        if (rank_of_rows(dirs) == static_cast<int>(dirs.size())) frame.push_back(v);
        else dirs.pop_back();
    }
    if (frame.size() != static_cast<size_t>(n) + 1) return std::nullopt;
    IntMatrix Vmat(n, n);
    for (int c = 0; c < n; ++c) {
        IntVector d = sub(frame[c + 1], frame[0]);
        for (int r = 0; r < n; ++r) Vmat.at(r, c) = d[r];
    }
    Int detV = determinant(Vmat);
    // adj(V) = det(V) * V^{-1}, by cofactors.
    IntMatrix adjV(n, n);
    if (n == 1) adjV.at(0, 0) = 1;
    else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                IntMatrix minor(n - 1, n - 1);
                for (int r = 0, mr = 0; r < n; ++r) {
                    if (r == j) continue;
                    for (int c = 0, mc = 0; c < n; ++c) {
                        if (c == i) continue;
                        minor.at(mr, mc++) = Vmat.at(r, c);
                    }
                    ++mr;
                }
                Int cof = determinant(minor);
                if ((i + j) % 2 == 1) cof = -cof;
                adjV.at(i, j) = cof;
            }
    }

    size_t nq = Q.vertices.size();
    // Ordered (n+1)-tuples of distinct Q vertices as candidate frame images.
    std::vector<bool> used(nq, false);
    std::vector<int> tuple;
    std::optional<AffineUnimodularMap> found;
    auto try_tuple = [&](const std::vector<int>& t) -> bool {
        IntMatrix Wmat(n, n);
        for (int c = 0; c < n; ++c) {
            IntVector d = sub(Q.vertices[t[c + 1]], Q.vertices[t[0]]);
            for (int r = 0; r < n; ++r) Wmat.at(r, c) = d[r];
        }
        IntMatrix num = mat_mul(Wmat, adjV);
        IntMatrix A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (num.at(i, j) % detV != 0) return false;
                A.at(i, j) = num.at(i, j) / detV;
            }
        Int dA = determinant(A);
        if (dA != 1 && dA != -1) return false;
        AffineUnimodularMap f{A, sub(Q.vertices[t[0]], mat_vec(A, frame[0]))};
        std::vector<IntVector> image;
        for (const auto& v : P.vertices) image.push_back(apply_map(f, v));
        std::sort(image.begin(), image.end());
        if (image != Q.vertices) return false;
        found = f;
        return true;
    };
    std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
        if (depth == static_cast<size_t>(n) + 1) return try_tuple(tuple);
        for (size_t i = 0; i < nq; ++i) {
            if (used[i]) continue;
            used[i] = true;
            tuple.push_back(static_cast<int>(i));
            if (rec(depth + 1)) return true;
            tuple.pop_back();
            used[i] = false;
        }
        return false;
    };
    rec(0);
    return found;
}

}  // namespace

std::optional<AffineUnimodularMap> lattice_equivalent(const LatticePolytope& P,
                                                      const LatticePolytope& Q) {
    if (P.ambient_rank != Q.ambient_rank)
        throw PreconditionError("lattice_equivalent: ambient rank mismatch");
    if (P.dim != Q.dim) return std::nullopt;
    if (P.vertices.size() != Q.vertices.size()) return std::nullopt;
    if (edge_length_multiset(P) != edge_length_multiset(Q)) return std::nullopt;
    int n = P.ambient_rank;
    if (P.dim == n) {
        if (facet_description(P).size() != facet_description(Q).size()) return std::nullopt;
        return equivalent_full_dim(P, Q);
    }
    if (P.dim == 0) {
        // Translation between single points.
        return AffineUnimodularMap{IntMatrix::identity(n),
                                   sub(Q.vertices[0], P.vertices[0])};
    }
    // Lower-dimensional: compare restricted models, then extend the local
    // witness to an ambient affine unimodular map via basis completion.
    SpanModel sp = span_model(P.vertices);
    SpanModel sq = span_model(Q.vertices);
    std::vector<IntVector> lp, lq;
    for (const auto& v : P.vertices) lp.push_back(sp.to_local(v));
    for (const auto& v : Q.vertices) lq.push_back(sq.to_local(v));
    int d = sp.local_rank();
    auto g = lattice_equivalent(hull_from_points(lp, d), hull_from_points(lq, d));
    if (!g) return std::nullopt;
    auto complete = [](const SpanModel& sm) {
        std::vector<IntVector> rows = sm.basis;
        rows.insert(rows.end(), sm.complement.begin(), sm.complement.end());
        return rows;
    };
    std::vector<IntVector> mp = complete(sp), mq = complete(sq);
    IntMatrix MPt = transpose(IntMatrix::from_rows(mp));
    IntMatrix MQt = transpose(IntMatrix::from_rows(mq));
    IntMatrix MPt_inv = inverse(AffineUnimodularMap{MPt, zero_vector(n)}).linear;
    // Block map: local coordinates transform by g->linear, complement by identity.
    IntMatrix block = IntMatrix::identity(n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) block.at(i, j) = g->linear.at(i, j);
    IntMatrix L = mat_mul(MQt, mat_mul(block, MPt_inv));
    IntVector shift(static_cast<size_t>(n), Int(0));
    for (int i = 0; i < d; ++i) shift[i] = g->translation[i];
    IntVector t = add(sub(sq.base, mat_vec(L, sp.base)), mat_vec(MQt, shift));
    AffineUnimodularMap f{L, t};
    std::vector<IntVector> image;
    for (const auto& v : P.vertices) image.push_back(apply_map(f, v));
    std::sort(image.begin(), image.end());
    if (image != Q.vertices) return std::nullopt;
    return f;
}

}  // namespace latpoly
