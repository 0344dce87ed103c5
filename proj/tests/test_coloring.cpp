#include <doctest.h>

#include "efl/coloring.hpp"
#include "efl/engines.hpp"
#include "efl/generators.hpp"
#include "efl/json_io.hpp"

using namespace efl;

namespace {
const char* kTri3 = "a b c\na d e\nb d f\n";
}

TEST_CASE("verify_coloring") {
    auto tri = parse_hypergraph(kTri3);
    Coloring good{{0, 1, 2, 2, 1, 0}};
    CHECK(verify_coloring(tri, good));
    Coloring clash{{0, 0, 2, 2, 1, 0}};  // a and b share edge 1
    CHECK_FALSE(verify_coloring(tri, clash));
    Coloring partial{{0, 1, 2, 2, 1, -1}};
    CHECK_THROWS_AS(verify_coloring(tri, partial), std::invalid_argument);

    auto disjoint = parse_hypergraph("a b c\nd e f\ng h i\n");
    Coloring rainbow{{0, 1, 2, 0, 1, 2, 0, 1, 2}};
    CHECK(verify_coloring(disjoint, rainbow));
}

TEST_CASE("brute_force_coloring") {
    auto tri = parse_hypergraph(kTri3);
    auto c = brute_force_coloring(tri, 3);
    REQUIRE(c.has_value());
    CHECK(verify_coloring(tri, *c));
    // Deterministic: vertex order, ascending colors -> a=0, b=1, c=2 first.
    CHECK(c->colors[0] == 0);
    CHECK(c->colors[1] == 1);
    CHECK(c->colors[2] == 2);

    auto single = parse_hypergraph("a b c\n");
    CHECK_FALSE(brute_force_coloring(single, 2).has_value());  // pigeonhole

    GenParams gp;
    gp.family = Family::Random;
    for (int n = 3; n <= 5; ++n) {
        gp.n = n;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            auto h = generate(gp, seed);
            auto col = brute_force_coloring(h, n);
            REQUIRE(col.has_value());
            CHECK(verify_coloring(h, *col));
        }
    }
}

TEST_CASE("coloring_from_point") {
    auto tri = parse_hypergraph(kTri3);
    for (auto kind : {AuxKind::G1, AuxKind::G2}) {
        auto aux = build_aux(tri, kind);
        PolyKind pk = poly_kind_for(kind);

        // Point encoding the proper coloring a=0,b=1,c=2,d=2,e=1,f=0.
        std::vector<int> colors{0, 1, 2, 2, 1, 0};
        std::vector<int> pt(aux.nvars());
        for (int i = 0; i < aux.n; ++i)
            for (int j = 0; j < aux.n; ++j) pt[aux.var(i, j)] = colors[aux.labels[i][j]];
        auto res = coloring_from_point(aux, pt, pk);
        REQUIRE(res.coloring.has_value());
        CHECK(res.coloring->colors == colors);
        CHECK(verify_coloring(tri, *res.coloring));

        // Clique repeat: rejected citing P1.
        auto bad = pt;
        bad[aux.var(0, 0)] = bad[aux.var(0, 1)];
        auto r1 = coloring_from_point(aux, bad, pk);
        CHECK_FALSE(r1.coloring.has_value());
        CHECK(r1.rejection == "P1");

        // Mismatched copies with rainbow cliques: rejected citing P2.
        auto bad2 = pt;
        bad2[aux.var(1, 0)] = 1;
        bad2[aux.var(1, 1)] = 0;
        bad2[aux.var(1, 2)] = 2;
        auto r2 = coloring_from_point(aux, bad2, pk);
        CHECK_FALSE(r2.coloring.has_value());
        CHECK(r2.rejection == "P2");
    }
}

TEST_CASE("decode soundness: every nonzero grid point decodes to a proper coloring") {
    auto tri = parse_hypergraph(kTri3);
    for (auto kind : {AuxKind::G1, AuxKind::G2}) {
        auto aux = build_aux(tri, kind);
        PolyKind pk = poly_kind_for(kind);
        int decoded = 0;
        std::vector<int> pt(9, 0);
        for (long long idx = 0; idx < 19683; ++idx) {
            long long rest = idx;
            for (int v = 8; v >= 0; --v) {
                pt[v] = static_cast<int>(rest % 3);
                rest /= 3;
            }
            auto res = coloring_from_point(aux, pt, pk);
            if (res.coloring) {
                ++decoded;
                CHECK(verify_coloring(tri, *res.coloring));
            }
        }
        CHECK(decoded > 0);
    }
}

TEST_CASE("nonvanishing_search finds a decodable point on TRI3") {
    auto tri = parse_hypergraph(kTri3);
    for (auto kind : {AuxKind::G1, AuxKind::G2}) {
        auto aux = build_aux(tri, kind);
        Orientation ident = kind == AuxKind::G1 ? orient_G1(aux) : orient_G2_pathlike(tri).second;
        auto target = flatten_degrees(in_degrees(aux.n, complete_orientation(aux, ident)));
        PolyKind pk = poly_kind_for(kind);

        auto point = nonvanishing_search(aux, pk, target);
        REQUIRE(point.has_value());
        auto res = coloring_from_point(aux, *point, pk);
        REQUIRE(res.coloring.has_value());
        CHECK(verify_coloring(tri, *res.coloring));
    }
}

TEST_CASE("nonvanishing_search: disjoint edges found immediately; target validated") {
    auto disjoint = parse_hypergraph("a b c\nd e f\ng h i\n");
    auto aux = build_aux(disjoint, AuxKind::G2);
    ExponentVec target(9, 1);  // any permutation profile; (1,1,1) per clique is not one
    // Build a proper maximal bounded target instead: 0,1,2 per clique.
    ExponentVec ok;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ok.push_back(j);
    auto point = nonvanishing_search(aux, PolyKind::P2, ok);
    REQUIRE(point.has_value());
    // First lexicographic rainbow assignment per clique.
    CHECK(*point == std::vector<int>{0, 1, 2, 0, 1, 2, 0, 1, 2});

    CHECK_THROWS_AS(nonvanishing_search(aux, PolyKind::P2, ExponentVec(9, 0)), std::invalid_argument);
    ExponentVec unbounded(9, 0);
    unbounded[0] = 9;
    CHECK_THROWS_AS(nonvanishing_search(aux, PolyKind::P2, unbounded), std::invalid_argument);
}

TEST_CASE("oracle agreement: search succeeds iff brute force succeeds (n=3 sweep)") {
    GenParams gp;
    gp.family = Family::Random;
    gp.n = 3;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto h = generate(gp, seed);
        auto aux = build_aux(h, AuxKind::G2);
        bool brute = brute_force_coloring(h, 3).has_value();
        // Pick a nonzero-coefficient candidate target when one exists.
        std::optional<ExponentVec> target;
        for (const auto& t : candidate_targets(aux).targets)
            if (coefficient_by_orientations(aux, t) != 0) { target = t; break; }
        if (target) {
            auto point = nonvanishing_search(aux, PolyKind::P2, *target);
            REQUIRE(point.has_value());  // Theorem 3 guarantees it
            auto res = coloring_from_point(aux, *point, PolyKind::P2);
            REQUIRE(res.coloring.has_value());
            CHECK(verify_coloring(h, *res.coloring));
            CHECK(brute);
        }
    }
}

TEST_CASE("extend_coloring") {
    auto tri = parse_hypergraph(kTri3);
    auto [derived, removed] = strip_degree_one(tri);
    Coloring base{{0, 1, 2}};  // a=0, b=1, d=2 on the derived hypergraph
    REQUIRE(verify_coloring(derived, base));
    auto full = extend_coloring(tri, derived, base, 3);
    CHECK(verify_coloring(tri, full));
    // a,b,d keep their colors.
    CHECK(full.colors[0] == 0);
    CHECK(full.colors[1] == 1);
    CHECK(full.colors[3] == 2);

    // Derived with empty edges: everything is recolored greedily.
    auto disjoint = parse_hypergraph("a b c\nd e f\ng h i\n");
    auto [d2, r2] = strip_degree_one(disjoint);
    Coloring empty{{}};
    auto full2 = extend_coloring(disjoint, d2, empty, 3);
    CHECK(verify_coloring(disjoint, full2));

    // Nothing removed: identity.
    Coloring same = extend_coloring(derived, derived, base, 3);
    CHECK(same == base);

    // Round-trip on random instances: strip, color the derived hypergraph,
    // extend, verify.
    GenParams gp;
    gp.family = Family::Random;
    for (int n = 3; n <= 5; ++n) {
        gp.n = n;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            auto h = generate(gp, seed);
            auto [der, rem] = strip_degree_one(h);
            auto c = brute_force_coloring(der, n);
            REQUIRE(c.has_value());
            auto ext = extend_coloring(h, der, *c, n);
            CHECK(verify_coloring(h, ext));
        }
    }
}

TEST_CASE("coloring JSON round-trip") {
    auto tri = parse_hypergraph(kTri3);
    Coloring c{{0, 1, 2, 2, 1, 0}};
    auto j = to_json(c, tri, true);
    CHECK(j["verified"] == true);
    CHECK(coloring_from_json(j, tri) == c);
}
