#pragma once

#include "latpoly/classify.hpp"
#include "latpoly/corpus.hpp"

#include <initializer_list>

namespace latpoly::testing {

inline IntVector vec(std::initializer_list<long long> xs) {
    IntVector v;
    for (auto x : xs) v.push_back(Int(x));
    return v;
}

inline LatticePolytope poly(int n, std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<IntVector> pts;
    for (auto r : rows) pts.push_back(vec(r));
    return hull_from_points(pts, n);
}

inline LatticePolytope family(FamilyTag tag, int n, std::vector<Int> params = {}) {
    return canonical_polytope({tag, std::move(params)}, n);
}

// D_3 = Conv{0, e1, e2, e1+e2+2e3}, the sharpness example for most bounds here.
inline LatticePolytope d3() {
    return poly(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
}

inline IntMatrix mat(int r, int c, std::initializer_list<long long> xs) {
    IntMatrix A(r, c);
    int i = 0;
    for (auto x : xs) A.a[i++] = Int(x);
    return A;
}

}  // namespace latpoly::testing
