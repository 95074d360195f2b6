#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "latpoly/enumerate.hpp"

#include <map>
#include <set>

using namespace latpoly;
using namespace latpoly::testing;

TEST_CASE("hull keeps exactly the extreme points") {
    auto T = poly(2, {{0, 0}, {1, 0}, {0, 1}});
    CHECK(T.vertex_count() == 3);
    CHECK(T.dim == 2);

    auto T2 = poly(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}});  // (1,1) lies on an edge
    CHECK(T2.vertices == std::vector<IntVector>{vec({0, 0}), vec({0, 2}), vec({2, 0})});

    // canonical family vertex sets round-trip unchanged
    for (auto tag : {FamilyTag::Pn, FamilyTag::Qn, FamilyTag::Dn}) {
        int n = tag == FamilyTag::Dn ? 3 : 2;
        auto P = family(tag, n);
        CHECK(hull_from_points(P.vertices, n) == P);
    }
    auto R = family(FamilyTag::Rn, 3, {Int(1), Int(1), Int(2)});
    CHECK(hull_from_points(R.vertices, 3) == R);
}

TEST_CASE("facet description") {
    auto D = poly(2, {{0, 0}, {1, 0}, {0, 1}});
    auto fs = facet_description(D);
    std::set<std::pair<IntVector, Int>> got;
    for (const auto& f : fs) got.insert({f.normal, f.offset});
    std::set<std::pair<IntVector, Int>> want = {
        {vec({1, 0}), Int(0)}, {vec({0, 1}), Int(0)}, {vec({-1, -1}), Int(1)}};
    CHECK(got == want);

    auto P2 = family(FamilyTag::Pn, 2);
    auto fs2 = facet_description(P2);
    got.clear();
    for (const auto& f : fs2) got.insert({f.normal, f.offset});
    want = {{vec({1, 0}), Int(0)}, {vec({0, 1}), Int(0)}, {vec({-1, -2}), Int(2)}};
    CHECK(got == want);

    auto Q2 = family(FamilyTag::Qn, 2);
    CHECK(facet_description(Q2).size() == 4);
}

TEST_CASE("membership agreement between facets and barycentric oracle") {
    Rng rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        CorpusSpec spec;
        spec.rank = 2 + (int)(trial % 2);
        spec.bound = 3;
        spec.max_vertices = 5;
        spec.seed = 1000 + trial;
        auto P = random_polytope(spec, 0);
        if (!P) continue;
        auto pts = lattice_points(*P);
        auto box = lattice_points_boxscan(*P);
        CHECK(pts == box);
    }
}

TEST_CASE("edge skeleton lattice lengths") {
    auto P2 = family(FamilyTag::Pn, 2);
    std::multiset<long long> lens;
    for (const auto& e : edge_skeleton(P2)) lens.insert((long long)e.lattice_length);
    CHECK(lens == std::multiset<long long>{1, 1, 2});

    auto D = d3();
    auto es = edge_skeleton(D);
    CHECK(es.size() == 6);
    for (const auto& e : es) CHECK(e.lattice_length == 1);

    auto S = family(FamilyTag::BasicSimplex, 3);
    for (int k = 1; k <= 4; ++k)
        for (const auto& e : edge_skeleton(dilate(S, Int(k))))
            CHECK(e.lattice_length == k);
}

TEST_CASE("dilation") {
    auto D = poly(2, {{0, 0}, {1, 0}, {0, 1}});
    CHECK(dilate(D, Int(2)) == poly(2, {{0, 0}, {2, 0}, {0, 2}}));
    CHECK(dilate(D, Int(1)) == D);
    CHECK(dilate(family(FamilyTag::Qn, 2), Int(3)) ==
          poly(2, {{0, 0}, {3, 0}, {0, 3}, {3, 3}}));
    CHECK(dilate(dilate(D, Int(2)), Int(3)) == dilate(D, Int(6)));
    CHECK_THROWS_AS(dilate(D, Int(0)), PreconditionError);
}

TEST_CASE("lattice equivalence on fixed pairs") {
    auto A = poly(2, {{0, 0}, {1, 0}, {0, 1}});
    auto B = poly(2, {{0, 0}, {1, 0}, {1, 1}});
    auto f = lattice_equivalent(A, B);
    REQUIRE(f);
    std::set<IntVector> img;
    for (const auto& v : A.vertices) img.insert(apply_map(*f, v));
    CHECK(img == std::set<IntVector>(B.vertices.begin(), B.vertices.end()));

    CHECK_FALSE(lattice_equivalent(family(FamilyTag::Pn, 2), family(FamilyTag::Qn, 2)));
    CHECK_FALSE(lattice_equivalent(A, dilate(A, Int(2))));
}

TEST_CASE("lattice equivalence is an equivalence relation") {
    CorpusSpec spec;
    spec.rank = 2;
    spec.bound = 2;
    spec.max_vertices = 4;
    spec.mode = CorpusMode::Exhaustive;
    auto corpus = generate_corpus(spec);
    REQUIRE(corpus.size() >= 3);
    Rng rng(52);
    for (const auto& P : corpus) {
        auto idw = lattice_equivalent(P, P);
        REQUIRE(idw);

        auto f = random_unimodular_map(rng, 2);
        auto Q = apply_to_polytope(f, P);
        auto w = lattice_equivalent(P, Q);
        REQUIRE(w);
        auto back = lattice_equivalent(Q, P);
        REQUIRE(back);

        auto g = random_unimodular_map(rng, 2);
        auto R = apply_to_polytope(g, Q);
        auto w2 = lattice_equivalent(P, R);
        REQUIRE(w2);
    }
}

TEST_CASE("equivalence witnesses preserve counting invariants") {
    Rng rng(53);
    CorpusSpec spec;
    spec.rank = 3;
    spec.bound = 2;
    spec.max_vertices = 5;
    spec.seed = 99;
    int done = 0;
    for (std::uint64_t i = 0; done < 15 && i < 200; ++i) {
        auto P = random_polytope(spec, i);
        if (!P) continue;
        ++done;
        auto Q = apply_to_polytope(random_unimodular_map(rng, 3), *P);
        REQUIRE(lattice_equivalent(*P, Q));
        CHECK(lattice_points(*P).size() == lattice_points(Q).size());
        for (int k = 1; k <= 3; ++k)
            CHECK(interior_lattice_points(dilate(*P, Int(k))).size() ==
                  interior_lattice_points(dilate(Q, Int(k))).size());
        CHECK(facet_description(*P).size() == facet_description(Q).size());
        std::multiset<long long> la, lb;
        for (const auto& e : edge_skeleton(*P)) la.insert((long long)e.lattice_length);
        for (const auto& e : edge_skeleton(Q)) lb.insert((long long)e.lattice_length);
        CHECK(la == lb);
    }
    CHECK(done == 15);
}

TEST_CASE("lower-dimensional polytopes get a saturated span model") {
    // segment from (0,0) to (2,4): direction lattice is generated by (1,2)
    std::vector<IntVector> pts = {vec({0, 0}), vec({2, 4})};
    auto m = span_model(pts);
    CHECK(m.local_rank() == 1);
    CHECK(m.to_ambient(m.to_local(vec({1, 2}))) == vec({1, 2}));

    auto seg = hull_from_points(pts, 2);
    CHECK(seg.dim == 1);
    CHECK(lattice_points(seg).size() == 3);  // (0,0),(1,2),(2,4)

    // equivalence of two lower-dimensional segments of equal lattice length
    auto seg2 = poly(2, {{5, 5}, {7, 5}});
    CHECK(lattice_equivalent(seg, seg2));
    CHECK_FALSE(lattice_equivalent(seg, poly(2, {{0, 0}, {3, 0}})));
}
