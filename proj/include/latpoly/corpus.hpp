#pragma once

#include "latpoly/polytope.hpp"

#include <cstdint>

namespace latpoly {

enum class CorpusMode { Exhaustive, Random };

struct CorpusSpec {
    CorpusMode mode = CorpusMode::Random;
    int rank = 2;
    int bound = 2;          // coordinates drawn from {0..bound}
    int max_vertices = 6;   // point-set size before hulling
    long long count = 100;  // random mode: number of emitted polytopes
    std::uint64_t seed = 0;
};

// Deterministic stream generator (splitmix64); substreams never share state.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t m) {  // uniform in [0, m)
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % m;
    }
    static std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0xd1342543de82ef95ULL * (index + 1)));
        return r.next();
    }
};

// Full-dimensional polytopes only; exhaustive mode is deduplicated up to
// lattice equivalence.
std::vector<LatticePolytope> generate_corpus(const CorpusSpec& spec);

// One seeded uniform draw (hull of max_vertices points in {0..bound}^rank);
// nullopt when the hull is lower-dimensional.
std::optional<LatticePolytope> random_polytope(const CorpusSpec& spec, std::uint64_t index);

AffineUnimodularMap random_unimodular_map(Rng& rng, int n);
LatticePolytope apply_to_polytope(const AffineUnimodularMap& f, const LatticePolytope& P);

}  // namespace latpoly
