#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace latpoly;
using namespace latpoly::testing;

namespace {

IntMatrix random_matrix(Rng& rng, int r, int c, int lo, int hi) {
    IntMatrix A(r, c);
    for (auto& x : A.a) x = Int((long long)(lo + (long long)rng.below(hi - lo + 1)));
    return A;
}

}  // namespace

TEST_CASE("hermite normal form on fixed matrices") {
    auto id = IntMatrix::identity(2);
    auto h1 = hermite_normal_form(id);
    CHECK(h1.H == id);
    CHECK(h1.U == id);

    auto swap = mat(2, 2, {0, 1, 1, 0});
    auto h2 = hermite_normal_form(swap);
    CHECK(h2.H == id);
    CHECK(h2.U == swap);

    auto A = mat(2, 2, {2, 1, 0, 1});
    auto h3 = hermite_normal_form(A);
    CHECK(h3.H == mat(2, 2, {2, 0, 0, 1}));
    CHECK(h3.U == mat(2, 2, {1, -1, 0, 1}));
    CHECK(mat_mul(h3.U, A) == h3.H);
}

TEST_CASE("hermite normal form properties on random matrices") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + (int)rng.below(4), c = 1 + (int)rng.below(4);
        auto A = random_matrix(rng, r, c, -6, 6);
        auto h = hermite_normal_form(A);
        CHECK(mat_mul(h.U, A) == h.H);
        Int du = determinant(h.U);
        CHECK((du == 1 || du == -1));
        // echelon shape with positive pivots, reduced columns above
        int prev_col = -1;
        for (int i = 0; i < r; ++i) {
            int p = -1;
            for (int j = 0; j < c; ++j)
                if (h.H.at(i, j) != 0) { p = j; break; }
            if (p < 0) continue;
            CHECK(p > prev_col);
            prev_col = p;
            CHECK(h.H.at(i, p) > 0);
            for (int i2 = 0; i2 < i; ++i2) {
                CHECK(h.H.at(i2, p) >= 0);
                CHECK(h.H.at(i2, p) < h.H.at(i, p));
            }
        }
    }
}

TEST_CASE("smith normal form invariant factors") {
    auto id = IntMatrix::identity(3);
    auto s0 = smith_normal_form(id);
    CHECK(s0.D == id);

    auto s1 = smith_normal_form(mat(2, 2, {2, 0, 0, 3}));
    CHECK(s1.D == mat(2, 2, {1, 0, 0, 6}));

    auto s2 = smith_normal_form(mat(2, 2, {2, 0, 0, 4}));
    CHECK(s2.D == mat(2, 2, {2, 0, 0, 4}));
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng rng(42);
    for (int trial = 0; trial < 150; ++trial) {
        int r = 1 + (int)rng.below(4), c = 1 + (int)rng.below(4);
        auto A = random_matrix(rng, r, c, -5, 5);
        auto s = smith_normal_form(A);
        CHECK(mat_mul(mat_mul(s.U, A), s.V) == s.D);
        Int du = determinant(s.U), dv = determinant(s.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        Int prev = 0;
        for (int i = 0; i < std::min(r, c); ++i) {
            Int d = s.D.at(i, i);
            CHECK(d >= 0);
            if (prev != 0) CHECK((d == 0 || d % prev == 0));
            prev = d;
        }
        if (r == c) {
            Int prod = 1;
            for (int i = 0; i < r; ++i) prod *= s.D.at(i, i);
            CHECK(boost::multiprecision::abs(prod) == boost::multiprecision::abs(determinant(A)));
        }
    }
}

TEST_CASE("all-ones system") {
    auto s1 = solve_all_ones_system({vec({1, 0}), vec({0, 1})});
    REQUIRE(s1);
    CHECK(s1->x == vec({1, 1}));
    CHECK(s1->unique);

    CHECK_FALSE(solve_all_ones_system({vec({1, 0}), vec({0, 2})}));

    auto s3 = solve_all_ones_system({vec({0, 1}), vec({2, -1})});
    REQUIRE(s3);
    CHECK(s3->x == vec({1, 1}));
}

TEST_CASE("all-ones system vs box search") {
    Rng rng(43);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + (int)rng.below(2);
        std::vector<IntVector> normals;
        int m = 2 + (int)rng.below(2);
        for (int i = 0; i < m; ++i) {
            IntVector u(n);
            do {
                for (int j = 0; j < n; ++j) u[j] = Int((long long)rng.below(7)) - 3;
            } while (is_zero(u));
            normals.push_back(primitive(u));
        }
        auto sol = solve_all_ones_system(normals);
        bool found = false;
        const int B = 12;  // generous vs entries bounded by 3
        std::function<void(IntVector&, int)> scan = [&](IntVector& x, int i) {
            if (found) return;
            if (i == n) {
                for (const auto& u : normals)
                    if (dot(u, x) != 1) return;
                found = true;
                return;
            }
            for (int v = -B; v <= B && !found; ++v) { x[i] = v; scan(x, i + 1); }
        };
        IntVector x(n);
        scan(x, 0);
        CHECK(sol.has_value() == found);
        if (sol)
            for (const auto& u : normals) CHECK(dot(u, sol->x) == 1);
    }
}

TEST_CASE("primitive vectors") {
    CHECK(primitive(vec({2, 4, 6})) == vec({1, 2, 3}));
    CHECK(primitive(vec({0, 0, 5})) == vec({0, 0, 1}));
    CHECK(primitive(vec({-2, 2})) == vec({-1, 1}));
    CHECK_THROWS_AS(primitive(vec({0, 0})), PreconditionError);

    Rng rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        IntVector v(3);
        do {
            for (auto& c : v) c = Int((long long)rng.below(21)) - 10;
        } while (is_zero(v));
        Int k = Int(1 + (long long)rng.below(5));
        CHECK(primitive(scale(k, v)) == primitive(v));
    }
}

TEST_CASE("affine unimodular maps") {
    auto id = AffineUnimodularMap::identity(2);
    CHECK(apply_map(id, vec({3, 5})) == vec({3, 5}));

    auto shear = make_affine_map(mat(2, 2, {1, 1, 0, 1}), vec({0, 0}));
    CHECK(apply_map(shear, vec({0, 1})) == vec({1, 1}));

    auto shift = make_affine_map(IntMatrix::identity(2), vec({1, 0}));
    CHECK(apply_map(shift, vec({0, 0})) == vec({1, 0}));

    CHECK_THROWS_AS(make_affine_map(mat(2, 2, {2, 0, 0, 1}), vec({0, 0})), PreconditionError);

    Rng rng(45);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_unimodular_map(rng, 3);
        auto g = random_unimodular_map(rng, 3);
        IntVector p(3);
        for (auto& c : p) c = Int((long long)rng.below(9)) - 4;
        CHECK(apply_map(inverse(f), apply_map(f, p)) == p);
        CHECK(apply_map(compose(f, g), p) == apply_map(f, apply_map(g, p)));
    }
}

TEST_CASE("integer linear solving") {
    Rng rng(46);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + (int)rng.below(3);
        auto A = random_matrix(rng, n, n, -4, 4);
        IntVector x0(n);
        for (auto& c : x0) c = Int((long long)rng.below(9)) - 4;
        IntVector b = mat_vec(A, x0);
        auto sol = solve_integer(A, b);
        REQUIRE(sol);
        CHECK(mat_vec(A, sol->x) == b);
        if (determinant(A) != 0) {
            CHECK(sol->unique);
            CHECK(sol->x == x0);
        }
    }
    // unsolvable: 2x = 1
    CHECK_FALSE(solve_integer(mat(1, 1, {2}), vec({1})));
}
