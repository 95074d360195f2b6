#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "latpoly/campaign.hpp"
#include "latpoly/io.hpp"

#include <string>

using namespace latpoly;
using namespace latpoly::testing;

TEST_CASE("polytope parsing and serialization") {
    auto P = parse_polytope("3 2\n0 0\n2 0\n0 1\n");
    CHECK(P == family(FamilyTag::Pn, 2));

    // round trip is the canonical form
    std::string canon = serialize_polytope(P);
    CHECK(canon == "3 2\n0 0\n0 1\n2 0\n");
    CHECK(serialize_polytope(parse_polytope(canon)) == canon);

    // comments and odd whitespace are accepted
    auto Q = parse_polytope("# a square\n4 2\n0 0\n1 0\n 0  1 \n1 1\n");
    CHECK(Q == family(FamilyTag::Qn, 2));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_polytope("2 2\n0 0\n"),
                         doctest::Contains("expected 2 rows, found 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_polytope("3 2\n0 0\nx 1\n0 1\n"),
                         doctest::Contains("non-integer token"), ParseError);
    CHECK_THROWS_WITH_AS(parse_polytope("3 2\n0 0\n1\n0 1\n"),
                         doctest::Contains("expected 2 coordinates"), ParseError);
    CHECK_THROWS_AS(parse_polytope(""), ParseError);
}

TEST_CASE("exhaustive corpus contents") {
    CorpusSpec spec;
    spec.mode = CorpusMode::Exhaustive;
    spec.rank = 2;
    spec.bound = 1;
    spec.max_vertices = 4;
    auto corpus = generate_corpus(spec);
    bool has_simplex = false, has_square = false;
    for (const auto& P : corpus) {
        if (lattice_equivalent(P, family(FamilyTag::BasicSimplex, 2))) has_simplex = true;
        if (lattice_equivalent(P, family(FamilyTag::Qn, 2))) has_square = true;
        // pairwise inequivalent by construction
    }
    CHECK(has_simplex);
    CHECK(has_square);
    for (size_t i = 0; i < corpus.size(); ++i)
        for (size_t j = i + 1; j < corpus.size(); ++j)
            CHECK_FALSE(lattice_equivalent(corpus[i], corpus[j]));

    CorpusSpec spec2 = spec;
    spec2.bound = 2;
    spec2.max_vertices = 3;
    bool has_p2 = false;
    for (const auto& P : generate_corpus(spec2))
        if (lattice_equivalent(P, family(FamilyTag::Pn, 2))) has_p2 = true;
    CHECK(has_p2);
}

TEST_CASE("random corpus determinism") {
    CorpusSpec spec;
    spec.rank = 3;
    spec.bound = 3;
    spec.max_vertices = 5;
    spec.count = 25;
    spec.seed = 2024;
    auto a = generate_corpus(spec);
    auto b = generate_corpus(spec);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

    spec.seed = 2025;
    auto c = generate_corpus(spec);
    bool different = false;
    for (size_t i = 0; i < std::min(a.size(), c.size()); ++i)
        if (!(a[i] == c[i])) different = true;
    CHECK(different);
}

TEST_CASE("campaigns on small corpora") {
    CorpusSpec spec;
    spec.mode = CorpusMode::Exhaustive;
    spec.rank = 2;
    spec.bound = 2;
    spec.max_vertices = 5;
    for (const auto& id : known_campaigns()) {
        if (id == "prop-pr1") continue;  // rank-3 fixtures, covered below
        auto rep = run_campaign(id, spec);
        CHECK(rep.failures.empty());
        CHECK(rep.examined >= (long long)0);
    }

    CorpusSpec spec3;
    spec3.rank = 3;
    spec3.bound = 2;
    spec3.max_vertices = 5;
    spec3.count = 25;
    spec3.seed = 5;
    auto pr1 = run_campaign("prop-pr1", spec3);
    CHECK(pr1.failures.empty());
    CHECK(pr1.hypothesis_satisfied >= 1);  // at least the q = 2 fixture

    CHECK_THROWS_AS(run_campaign("no-such-id", spec3), PreconditionError);
}

TEST_CASE("campaign reports are byte-identical across runs") {
    CorpusSpec spec;
    spec.rank = 3;
    spec.bound = 3;
    spec.max_vertices = 5;
    spec.count = 40;
    spec.seed = 77;
    for (const auto& id : {std::string("nakagawa"), std::string("prop-p1a")}) {
        auto r1 = campaign_report_json(run_campaign(id, spec));
        auto r2 = campaign_report_json(run_campaign(id, spec));
        CHECK(r1 == r2);
    }
}
