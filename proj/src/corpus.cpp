#include "latpoly/corpus.hpp"

#include "latpoly/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <map>
#include <set>

namespace latpoly {

namespace {

// Cheap invariant fingerprint used to bucket candidates before the full
// equivalence search.
std::vector<long long> fingerprint(const LatticePolytope& P) {
    std::vector<long long> fp;
    fp.push_back(P.dim);
    fp.push_back((long long)P.vertices.size());
    auto edges = edge_skeleton(P);
    fp.push_back((long long)edges.size());
    std::vector<long long> lens;
    for (const auto& e : edges) lens.push_back((long long)e.lattice_length.convert_to<long long>());
    std::sort(lens.begin(), lens.end());
    for (auto l : lens) fp.push_back(l);
    fp.push_back((long long)lattice_points(P).size());
    return fp;
}

}  // namespace

std::optional<LatticePolytope> random_polytope(const CorpusSpec& spec, std::uint64_t index) {
    Rng rng(Rng::substream(spec.seed, index));
    std::vector<IntVector> pts;
    for (int i = 0; i < spec.max_vertices; ++i) {
        IntVector p(spec.rank);
        for (int j = 0; j < spec.rank; ++j)
            p[j] = Int((long long)rng.below((std::uint64_t)spec.bound + 1));
        pts.push_back(std::move(p));
    }
    LatticePolytope P = hull_from_points(pts, spec.rank);
    if (P.dim != spec.rank) return std::nullopt;
    return P;
}

std::vector<LatticePolytope> generate_corpus(const CorpusSpec& spec) {
    std::vector<LatticePolytope> out;
    if (spec.mode == CorpusMode::Random) {
        std::uint64_t index = 0;
        std::uint64_t attempts = 0;
        std::uint64_t max_attempts = 64ull * (std::uint64_t)spec.count + 1024;
        while ((long long)out.size() < spec.count) {
            if (++attempts > max_attempts)
                throw ResourceError("random corpus: too many degenerate draws");
            auto P = random_polytope(spec, index++);
            if (P) out.push_back(std::move(*P));
        }
        return out;
    }

    // Exhaustive: hulls of all subsets of {0..bound}^rank with 3..max_vertices
    // points (subsets below rank+1 points cannot be full-dimensional).
    std::vector<IntVector> grid;
    {
        int n = spec.rank;
        std::uint64_t cells = 1;
        for (int i = 0; i < n; ++i) {
            cells *= (std::uint64_t)spec.bound + 1;
            if (cells > 4096) throw ResourceError("exhaustive corpus: grid too large");
        }
        IntVector cur(n, Int(0));
        std::function<void(int)> rec = [&](int i) {
            if (i == n) { grid.push_back(cur); return; }
            for (int v = 0; v <= spec.bound; ++v) { cur[i] = v; rec(i + 1); }
        };
        rec(0);
    }
    std::set<std::vector<std::string>> seen_vertex_sets;
    std::map<std::vector<long long>, std::vector<size_t>> buckets;
    std::uint64_t subsets = 0;
    std::vector<size_t> pick;
    // enumerate all subsets of size <= max_vertices, visiting every prefix
    std::function<void(size_t, int)> enumerate_sets = [&](size_t start, int room) {
        if ((int)pick.size() >= spec.rank + 1 && (int)pick.size() <= spec.max_vertices) {
            if (++subsets > 50'000'000ULL)
                throw ResourceError("exhaustive corpus: too many subsets");
            std::vector<IntVector> pts;
            for (size_t idx : pick) pts.push_back(grid[idx]);
            LatticePolytope P = hull_from_points(pts, spec.rank);
            if (P.dim == spec.rank) {
                std::vector<std::string> key;
                for (const auto& v : P.vertices) {
                    std::string s;
                    for (const auto& c : v) s += c.str() + ",";
                    key.push_back(s);
                }
                if (seen_vertex_sets.insert(key).second) {
                    auto fp = fingerprint(P);
                    bool dup = false;
                    for (size_t oi : buckets[fp])
                        if (lattice_equivalent(out[oi], P)) { dup = true; break; }
                    if (!dup) {
                        buckets[fp].push_back(out.size());
                        out.push_back(std::move(P));
                    }
                }
            }
        }
        if (room == 0) return;
        for (size_t i = start; i < grid.size(); ++i) {
            pick.push_back(i);
            enumerate_sets(i + 1, room - 1);
            pick.pop_back();
        }
    };
    enumerate_sets(0, spec.max_vertices);
    return out;
}

AffineUnimodularMap random_unimodular_map(Rng& rng, int n) {
    IntMatrix A = IntMatrix::identity(n);
    // Random elementary row operations keep |det| = 1.
    int ops = 2 * n + 4;
    for (int k = 0; k < ops; ++k) {
        int i = (int)rng.below(n);
        int j = (int)rng.below(n);
        switch (rng.below(3)) {
            case 0:
                if (i != j) {
                    Int c = Int((long long)rng.below(3)) - 1;
                    for (int t = 0; t < n; ++t) A.at(i, t) += c * A.at(j, t);
                }
                break;
            case 1:
                if (i != j)
                    for (int t = 0; t < n; ++t) std::swap(A.at(i, t), A.at(j, t));
                break;
            default:
                for (int t = 0; t < n; ++t) A.at(i, t) = -A.at(i, t);
        }
    }
    IntVector t(n);
    for (int i = 0; i < n; ++i) t[i] = Int((long long)rng.below(5)) - 2;
    return make_affine_map(A, t);
}

LatticePolytope apply_to_polytope(const AffineUnimodularMap& f, const LatticePolytope& P) {
    std::vector<IntVector> imgs;
    for (const auto& v : P.vertices) imgs.push_back(apply_map(f, v));
    return hull_from_points(imgs, P.ambient_rank);
}

}  // namespace latpoly
