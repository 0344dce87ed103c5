#include <doctest.h>

#include <omp.h>

#include "efl/coloring.hpp"
#include "efl/engines.hpp"
#include "efl/generators.hpp"

using namespace efl;

// The OpenMP kernels must reproduce the serial reference bit-for-bit,
// regardless of the thread count: the partial sums are exact field elements
// combined associatively.

namespace {
const char* kTri3 = "a b c\na d e\nb d f\n";
}

TEST_CASE("formula kernel: serial == parallel across thread counts") {
    auto tri = parse_hypergraph(kTri3);
    auto aux = build_aux(tri, AuxKind::G2);
    RationalField q;
    auto eval = [&](const std::vector<Rat>& pt) { return eval_P(q, PolyKind::P2, aux, pt); };

    auto [aux2, ident] = orient_G2_pathlike(tri);
    auto target = flatten_degrees(in_degrees(aux.n, complete_orientation(aux2, ident)));
    auto grid = default_grid(q, target);
    Rat serial = coefficient_by_formula(q, eval, target, grid, false);

    int saved = omp_get_max_threads();
    for (int threads : {1, 2, saved}) {
        omp_set_num_threads(threads);
        CHECK(coefficient_by_formula(q, eval, target, grid, true) == serial);
    }
    omp_set_num_threads(saved);

    PrimeField f3(3);
    auto evalp = [&](const std::vector<PrimeField::Elem>& pt) { return eval_P(f3, PolyKind::P2, aux, pt); };
    auto gridp = default_grid(f3, target);
    CHECK(coefficient_by_formula(f3, evalp, target, gridp, true) ==
          coefficient_by_formula(f3, evalp, target, gridp, false));
}

TEST_CASE("orientation kernel: serial == parallel") {
    GenParams gp;
    gp.family = Family::NearPencil;
    gp.n = 5;
    auto h = generate(gp, 1);
    auto aux = build_aux(h, AuxKind::G1);
    auto ident = orient_G1(aux);
    auto target = flatten_degrees(in_degrees(aux.n, complete_orientation(aux, ident)));

    Int serial = coefficient_by_orientations(aux, target);
    int saved = omp_get_max_threads();
    for (int threads : {1, 2, saved}) {
        omp_set_num_threads(threads);
        CHECK(coefficient_by_orientations_parallel(aux, target) == serial);
    }
    omp_set_num_threads(saved);

    // Also across every bounded maximal target of a small instance.
    auto tri = parse_hypergraph(kTri3);
    auto auxt = build_aux(tri, AuxKind::G1);
    for (const auto& t : candidate_targets(auxt).targets)
        CHECK(coefficient_by_orientations_parallel(auxt, t) == coefficient_by_orientations(auxt, t));
}

TEST_CASE("vanishing sweep kernel: serial == parallel") {
    auto tri = parse_hypergraph(kTri3);
    for (auto kind : {AuxKind::G1, AuxKind::G2}) {
        auto aux = build_aux(tri, kind);
        if (kind == AuxKind::G1) {
            PrimeField f3(3);
            auto s = vanishing_sweep(f3, PolyKind::P1, aux, false);
            auto p = vanishing_sweep(f3, PolyKind::P1, aux, true);
            CHECK(s.points == p.points);
            CHECK(s.nonzero == p.nonzero);
            CHECK(s.mismatches == p.mismatches);
            CHECK(s.first_mismatch == p.first_mismatch);
        } else {
            RationalField q;
            auto s = vanishing_sweep(q, PolyKind::P2, aux, false);
            auto p = vanishing_sweep(q, PolyKind::P2, aux, true);
            CHECK(s.nonzero == p.nonzero);
            CHECK(s.mismatches == p.mismatches);
            CHECK(s.first_mismatch == p.first_mismatch);
        }
    }
}
