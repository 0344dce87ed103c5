#include "efl/selftest.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "efl/coloring.hpp"
#include "efl/engines.hpp"
#include "efl/generators.hpp"

namespace efl::selftest {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

// ---------------------------------------------------------------------------
// Shared instance sweep: 200 random standard-form instances per n in {3..6},
// the near-pencil of each n, and the truncated Fano plane (q=2, n=7).

struct SweepInstance {
    std::string descriptor;
    LinearHypergraph h;
};

const std::vector<SweepInstance>& sweep() {
    static const std::vector<SweepInstance> instances = [] {
        std::vector<SweepInstance> out;
        GenParams gp;
        for (int n = 3; n <= 6; ++n) {
            gp.family = Family::Random;
            gp.n = n;
            for (std::uint64_t seed = 1; seed <= 200; ++seed)
                out.push_back({"random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")",
                               generate(gp, seed)});
        }
        for (int n = 3; n <= 6; ++n) {
            gp.family = Family::NearPencil;
            gp.n = n;
            out.push_back({"near_pencil(" + std::to_string(n) + ")", generate(gp, 0)});
        }
        gp.family = Family::TruncatedProjectivePlane;
        gp.q = 2;
        out.push_back({"truncated_projective_plane(q=2)", generate(gp, 0)});
        return out;
    }();
    return instances;
}

// The n=3 instance set for the exact-engine criteria: one representative per
// isomorphism class of degree profiles (disjoint, one intersection, two
// intersections, triangle, near-pencil) plus 20 random instances.
std::vector<SweepInstance> n3_instances() {
    std::vector<SweepInstance> out;
    out.push_back({"disjoint", parse_hypergraph("a b c\nd e f\ng h i\n")});
    out.push_back({"one-intersection", parse_hypergraph("a b c\na d e\nf g h\n")});
    out.push_back({"two-intersections", parse_hypergraph("a b c\na d e\nb f g\n")});
    out.push_back({"triangle", parse_hypergraph("a b c\na d e\nb d f\n")});
    out.push_back({"near-pencil", parse_hypergraph("p a b\np c d\np e f\n")});
    GenParams gp;
    gp.family = Family::Random;
    gp.n = 3;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        out.push_back({"random(seed=" + std::to_string(seed) + ")", generate(gp, seed)});
    return out;
}

// All (bound)-bounded exponent vectors of the given total degree.
std::vector<ExponentVec> bounded_maximal_targets(int nvars, int bound, int degree) {
    std::vector<ExponentVec> out;
    ExponentVec cur(nvars, 0);
    std::function<void(int, int)> go = [&](int v, int left) {
        if (v == nvars) {
            if (left == 0) out.push_back(cur);
            return;
        }
        if (left > bound * (nvars - v)) return;
        int hi = std::min(bound, left);
        for (int d = 0; d <= hi; ++d) {
            cur[v] = d;
            go(v + 1, left - d);
        }
        cur[v] = 0;
    };
    go(0, degree);
    return out;
}

// ---------------------------------------------------------------------------
// Criteria. Each returns pass/fail plus a one-line summary.

Outcome criterion_theorem4() {
    long long instances = 0, orientations = 0;
    for (const auto& [desc, h] : sweep()) {
        ++instances;
        for (const auto& trees : enumerate_spanning_tree_choices(h, 5)) {
            auto aux = build_aux(h, trees, AuxKind::G1);
            auto o = orient_G1(aux);
            ++orientations;
            if (static_cast<int>(o.instances.size()) != aux.identifier_instance_count() ||
                !is_vandermonde_completable(aux, o))
                return {false, "failed on " + desc};
        }
    }
    std::ostringstream d;
    d << orientations << " orientations across " << instances << " instances, all completable";
    return {true, d.str()};
}

Outcome criterion_theorem6() {
    long long instances = 0;
    for (const auto& [desc, h] : sweep()) {
        ++instances;
        auto [aux, o] = orient_G2_pathlike(h);
        if (static_cast<int>(o.instances.size()) != aux.identifier_instance_count() ||
            !is_vandermonde_completable(aux, o))
            return {false, "failed on " + desc};
    }
    return {true, std::to_string(instances) + " path-like orientations, all completable"};
}

Outcome criterion_claim8() {
    std::mt19937_64 rng(2024);
    auto random_tree = [&](int k) {
        std::vector<std::pair<int, int>> edges;
        if (k <= 1) return edges;
        if (k == 2) {
            edges.emplace_back(0, 1);
            return edges;
        }
        std::vector<int> deg(k, 1), seq(k - 2);
        for (auto& s : seq) {
            s = static_cast<int>(rng() % k);
            ++deg[s];
        }
        std::set<int> leaves;
        for (int i = 0; i < k; ++i)
            if (deg[i] == 1) leaves.insert(i);
        for (int s : seq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, s);
            if (--deg[s] == 1) leaves.insert(s);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.emplace_back(a, b);
        return edges;
    };

    for (int trial = 0; trial < 500; ++trial) {
        int k = 1 + static_cast<int>(rng() % 6);
        int n = 2 + static_cast<int>(rng() % 5);
        auto tree = random_tree(k);
        std::vector<int> alpha(k, 0);
        int units = (k - 1) * (n - 1);
        while (units > 0) {
            int v = static_cast<int>(rng() % k);
            if (alpha[v] < n - 1) {
                ++alpha[v];
                --units;
            }
        }
        auto splits = orient_tree_multigraph(k, tree, alpha, n);
        std::vector<int> indeg(k, 0);
        for (const auto& s : splits) {
            indeg[s.v] += s.toward_v;
            indeg[s.u] += (n - 1) - s.toward_v;
        }
        if (indeg != alpha) return {false, "in-degree mismatch at trial " + std::to_string(trial)};
    }
    return {true, "500 random (tree, alpha, n) triples, in-degrees exact"};
}

Outcome criterion_engine_agreement() {
    long long targets_checked = 0;
    for (const auto& [desc, h] : n3_instances()) {
        for (auto kind : {AuxKind::G1, AuxKind::G2}) {
            auto aux = build_aux(h, kind);
            auto targets = bounded_maximal_targets(aux.nvars(), aux.n - 1, aux.total_edge_count());
            if (kind == AuxKind::G1) {
                PrimeField f3(3);
                auto poly = expand_P(f3, PolyKind::P1, aux);
                auto eval = [&](const std::vector<PrimeField::Elem>& pt) { return eval_P(f3, PolyKind::P1, aux, pt); };
                for (const auto& t : targets) {
                    auto by_exp = coefficient_by_expansion(f3, poly, t);
                    auto by_orient = mod_residue(coefficient_by_orientations_parallel(aux, t), 3);
                    auto by_formula = coefficient_by_formula(f3, eval, t, default_grid(f3, t), true);
                    if (by_exp != by_orient || by_exp != by_formula)
                        return {false, "P1 disagreement on " + desc};
                    ++targets_checked;
                }
            } else {
                IntegerRing z;
                RationalField q;
                auto poly = expand_P(z, PolyKind::P2, aux);
                auto eval = [&](const std::vector<Rat>& pt) { return eval_P(q, PolyKind::P2, aux, pt); };
                for (const auto& t : targets) {
                    Int by_exp = coefficient_by_expansion(z, poly, t);
                    Int by_orient = coefficient_by_orientations_parallel(aux, t);
                    Rat by_formula = coefficient_by_formula(q, eval, t, default_grid(q, t), true);
                    if (by_exp != by_orient || denominator(by_formula) != 1 || numerator(by_formula) != by_exp)
                        return {false, "P2 disagreement on " + desc};
                    ++targets_checked;
                }
            }
        }
    }
    std::ostringstream d;
    d << targets_checked << " (instance, kind, target) triples, three engines exactly equal";
    return {true, d.str()};
}

Outcome criterion_vanishing() {
    long long points = 0;
    for (const auto& [desc, h] : n3_instances()) {
        auto aux1 = build_aux(h, AuxKind::G1);
        PrimeField f3(3);
        auto r1 = vanishing_sweep(f3, PolyKind::P1, aux1, true);
        if (!r1.ok()) return {false, "P1 mismatch on " + desc + " at point " + std::to_string(r1.first_mismatch)};

        auto aux2 = build_aux(h, AuxKind::G2);
        RationalField q;
        auto r2 = vanishing_sweep(q, PolyKind::P2, aux2, true);
        if (!r2.ok()) return {false, "P2 mismatch on " + desc + " at point " + std::to_string(r2.first_mismatch)};
        points += r1.points + r2.points;
    }
    std::ostringstream d;
    d << points << " grid evaluations, nonzero exactly at (P1)&(P2) points";
    return {true, d.str()};
}

Outcome criterion_fact7() {
    std::mt19937_64 rng(77);
    PrimeField f5(5), f7(7);
    RationalField q;
    long long checks = 0;
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<PrimeField::Elem> p5, p7;
            std::vector<Rat> pq;
            for (int j = 0; j < n; ++j) {
                p5.push_back(rng() % 5);
                p7.push_back(rng() % 7);
                pq.push_back(Rat(static_cast<long long>(rng() % 41) - 20));
            }
            if (!vandermonde_check(f5, n, p5) || !vandermonde_check(f7, n, p7) || !vandermonde_check(q, n, pq))
                return {false, "Vandermonde identity failed at n=" + std::to_string(n)};
            checks += 3;
        }
    }
    return {true, std::to_string(checks) + " random points, product equals determinant"};
}

Outcome criterion_degree_identity() {
    long long graph_side = 0, expansions = 0;
    for (const auto& [desc, h] : sweep()) {
        if (h.n > 6) continue;
        auto expected = expected_total_degree(h);
        for (auto kind : {AuxKind::G1, AuxKind::G2}) {
            auto aux = build_aux(h, kind);
            if (aux.total_edge_count() != expected) return {false, "edge-count identity failed on " + desc};
            ++graph_side;
        }
    }
    for (const auto& [desc, h] : n3_instances()) {
        auto expected = expected_total_degree(h);
        {
            auto aux = build_aux(h, AuxKind::G1);
            PrimeField f3(3);
            if (expand_P(f3, PolyKind::P1, aux).degree() != expected || aux.total_edge_count() != expected)
                return {false, "P1 degree identity failed on " + desc};
        }
        {
            auto aux = build_aux(h, AuxKind::G2);
            IntegerRing z;
            if (expand_P(z, PolyKind::P2, aux).degree() != expected || aux.total_edge_count() != expected)
                return {false, "P2 degree identity failed on " + desc};
        }
        expansions += 2;
    }
    std::ostringstream d;
    d << graph_side << " graph-side identities (n<=6), " << expansions << " expansions (n=3)";
    return {true, d.str()};
}

Outcome criterion_corollary5() {
    long long monomials = 0;
    for (const auto& [desc, h] : n3_instances()) {
        auto aux = build_aux(h, AuxKind::G1);
        auto vc = enumerate_vc_monomials(aux);
        if (!vc.complete) return {false, "VC enumeration truncated on " + desc};
        for (const auto& beta : vc.monomials) {
            auto r = corollary5_check(aux, beta, 3);
            if (!(r.count > 0 && r.split_unique && r.count == r.binom_product && r.all_same_sign && r.nonzero_mod_p))
                return {false, "Corollary 5 failed on " + desc + " (n=3)"};
            ++monomials;
        }
    }

    // n = 5: ten random instances plus the near-pencil, 50 sampled monomials each.
    std::vector<SweepInstance> five;
    GenParams gp;
    gp.family = Family::Random;
    gp.n = 5;
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        five.push_back({"random(n=5,seed=" + std::to_string(seed) + ")", generate(gp, seed)});
    gp.family = Family::NearPencil;
    five.push_back({"near_pencil(5)", generate(gp, 0)});
    for (const auto& [desc, h] : five) {
        auto aux = build_aux(h, AuxKind::G1);
        auto vc = enumerate_vc_monomials(aux);
        std::size_t take = std::min<std::size_t>(50, vc.monomials.size());
        for (std::size_t i = 0; i < take; ++i) {
            auto r = corollary5_check(aux, vc.monomials[i], 5);
            if (!(r.count > 0 && r.split_unique && r.count == r.binom_product && r.all_same_sign && r.nonzero_mod_p))
                return {false, "Corollary 5 failed on " + desc + " (n=5)"};
            ++monomials;
        }
    }
    std::ostringstream d;
    d << monomials << " VC monomials: counts = prod C(n-1,t_e), uniform sign, nonzero mod n";
    return {true, d.str()};
}

Outcome criterion_coefficient_formula() {
    std::mt19937_64 rng(99);
    RationalField q;
    PrimeField f7(7);
    IntegerRing z;
    int done = 0;
    while (done < 100) {
        int nv = 1 + static_cast<int>(rng() % 4);
        SparsePoly<IntegerRing> p(nv);
        int terms = 1 + static_cast<int>(rng() % 10);
        for (int t = 0; t < terms; ++t) {
            ExponentVec e(nv, 0);
            int budget = static_cast<int>(rng() % 7);
            for (int v = 0; v < nv && budget > 0; ++v) {
                e[v] = static_cast<int>(rng() % (budget + 1));
                budget -= e[v];
            }
            p.add_term(z, e, Int(static_cast<long long>(rng() % 21) - 10));
        }
        if (p.is_zero()) continue;
        ++done;
        ExponentVec target = p.terms().rbegin()->first;  // maximal-degree stored monomial
        Int want = p.coefficient(z, target);

        auto eval_q = [&](const std::vector<Rat>& pt) {
            Rat acc(0);
            for (const auto& [e, c] : p.terms()) {
                Rat term(c);
                for (int v = 0; v < nv; ++v)
                    for (int rep = 0; rep < e[v]; ++rep) term *= pt[v];
                acc += term;
            }
            return acc;
        };
        if (coefficient_by_formula(q, eval_q, target, default_grid(q, target)) != Rat(want))
            return {false, "rational formula mismatch at trial " + std::to_string(done)};

        auto eval_p = [&](const std::vector<PrimeField::Elem>& pt) {
            PrimeField::Elem acc = 0;
            for (const auto& [e, c] : p.terms()) {
                auto term = f7.from_bigint(c);
                for (int v = 0; v < nv; ++v)
                    for (int rep = 0; rep < e[v]; ++rep) term = f7.mul(term, pt[v]);
                acc = f7.add(acc, term);
            }
            return acc;
        };
        if (coefficient_by_formula(f7, eval_p, target, default_grid(f7, target)) != f7.from_bigint(want))
            return {false, "F7 formula mismatch at trial " + std::to_string(done)};
    }
    return {true, "100 random sparse polynomials over F7 and Q, formula exact"};
}

Outcome criterion_end_to_end() {
    long long colored = 0, pipelines = 0;
    for (const auto& [desc, h] : sweep()) {
        if (h.n > 5) continue;
        auto c = brute_force_coloring(h, h.n);
        if (!c || !verify_coloring(h, *c)) return {false, "brute-force coloring failed on " + desc};
        ++colored;

        if (h.n != 3) continue;
        // Nullstellensatz pipeline wherever some bounded maximal coefficient
        // is nonzero (engine-feasible at n=3), for both kinds.
        for (auto kind : {AuxKind::G1, AuxKind::G2}) {
            auto aux = build_aux(h, kind);
            std::optional<ExponentVec> target;
            for (const auto& t : candidate_targets(aux).targets) {
                Int coeff = coefficient_by_orientations(aux, t);
                if (kind == AuxKind::G1 ? mod_residue(coeff, 3) != 0 : coeff != 0) {
                    target = t;
                    break;
                }
            }
            if (!target) continue;
            auto point = nonvanishing_search(aux, poly_kind_for(kind), *target);
            if (!point) return {false, "search exhausted despite nonzero coefficient on " + desc};
            auto decode = coloring_from_point(aux, *point, poly_kind_for(kind));
            if (!decode.coloring || !verify_coloring(h, *decode.coloring))
                return {false, "decoded coloring failed on " + desc};
            ++pipelines;
        }
    }
    std::ostringstream d;
    d << colored << " instances colored by brute force (n<=5), " << pipelines
      << " Nullstellensatz decodes verified (n=3)";
    return {true, d.str()};
}

Outcome criterion_conjecture5() {
    long long instances = 0, flagged = 0;
    std::ostringstream flags;
    for (const auto& [desc, h] : sweep()) {
        if (h.n != 3) continue;
        ++instances;
        for (auto kind : {AuxKind::G1, AuxKind::G2}) {
            bool found = false;
            for (const auto& trees : enumerate_spanning_tree_choices(h, 5)) {
                auto aux = build_aux(h, trees, kind);
                auto cands = candidate_targets(aux);
                if (!cands.complete) return {false, "candidate enumeration truncated at n=3"};
                for (const auto& t : cands.targets) {
                    Int coeff = coefficient_by_orientations(aux, t);
                    bool nonzero = kind == AuxKind::G1 ? mod_residue(coeff, 3) != 0 : coeff != 0;
                    if (nonzero) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) {
                ++flagged;
                flags << " [FLAG " << poly_kind_name(poly_kind_for(kind)) << " refutation candidate: " << desc << "]";
            }
        }
    }
    std::ostringstream d;
    d << instances << " n=3 instances, both kinds";
    if (flagged == 0) d << ", every one admits a nonzero (n-1)-bounded maximal coefficient";
    else d << ", " << flagged << " refutation candidates flagged:" << flags.str();
    // Reported, not asserted: finding a counterexample flags it but the
    // harness itself has still done its job.
    return {true, d.str()};
}

struct Spec {
    int id;
    std::string name;
    double time_limit_s;  // 0 = none
    std::function<Outcome()> fn;
};

}  // namespace

std::vector<CriterionResult> run_all(std::ostream& out) {
    std::vector<Spec> specs = {
        {1, "Theorem 4: G1 orientations Vandermonde-completable", 60, criterion_theorem4},
        {2, "Theorem 6: path-like G2 orientations completable", 60, criterion_theorem6},
        {3, "Claim 8: tree multigraph in-degrees exact", 0, criterion_claim8},
        {4, "Coefficient engines agree (n=3, both kinds)", 600, criterion_engine_agreement},
        {5, "Vanishing characterization over the color grid", 60, criterion_vanishing},
        {6, "Fact 7: Vandermonde determinant identity", 0, criterion_fact7},
        {7, "Degree identity: deg P = graph edge count", 0, criterion_degree_identity},
        {8, "Corollary 5: orientation counts per VC monomial", 0, criterion_corollary5},
        {9, "Coefficient formula on random polynomials", 0, criterion_coefficient_formula},
        {10, "End-to-end coloring at desk scale", 0, criterion_end_to_end},
        {11, "Conjecture 5 experiment (reported)", 0, criterion_conjecture5},
    };

    std::vector<CriterionResult> results;
    for (const auto& s : specs) {
        auto t0 = Clock::now();
        CriterionResult r;
        r.id = s.id;
        r.name = s.name;
        try {
            auto o = s.fn();
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (s.time_limit_s > 0 && r.seconds > s.time_limit_s) {
            r.pass = false;
            r.detail += " [exceeded " + std::to_string(static_cast<int>(s.time_limit_s)) + "s limit]";
        }
        out << "[" << std::setw(2) << r.id << "/11] " << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " — "
            << r.detail << " (" << std::fixed << std::setprecision(1) << r.seconds << "s)\n";
        out.flush();
        results.push_back(std::move(r));
    }

    int passed = 0;
    for (const auto& r : results) passed += r.pass;
    out << (passed == static_cast<int>(results.size()) ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << passed
        << "/" << results.size() << ")\n";
    return results;
}

int run_cli(std::ostream& out) {
    auto results = run_all(out);
    if (results.empty()) return 1;
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace efl::selftest
