#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "efl/auxgraph.hpp"
#include "efl/field.hpp"
#include "efl/polynomial.hpp"

namespace efl {

enum class PolyKind { P1, P2 };

inline PolyKind poly_kind_for(AuxKind k) { return k == AuxKind::G1 ? PolyKind::P1 : PolyKind::P2; }
inline std::string poly_kind_name(PolyKind k) { return k == PolyKind::P1 ? "P1" : "P2"; }

// Factored view of P1/P2 over the aux graph's variables x_{i,j}:
//   P = prod_i Q_i * prod R_{i,k}      (P1; R = (x_u - x_v)^{n-1} - 1)
//   P = prod_i Q_i * prod Phi_{i,k}    (P2; Phi = prod_{m != l} (x_u - x_{k,m}))
// Q_i and Phi expand into linear difference factors; R factors are kept whole.
struct FactorList {
    int nvars = 0;
    std::vector<std::pair<int, int>> linear;       // (a, b) meaning x_a - x_b
    std::vector<std::tuple<int, int, int>> pow_m1; // (a, b, e) meaning (x_a - x_b)^e - 1
};

inline FactorList build_factors(PolyKind kind, const AuxGraph& aux) {
    FactorList f;
    const int n = aux.n;
    f.nvars = aux.nvars();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int j2 = j + 1; j2 < n; ++j2) f.linear.emplace_back(aux.var(i, j), aux.var(i, j2));
    for (const auto& t : aux.trees) {
        for (const auto& [u, v] : t.edges) {  // u in the lower clique
            if (kind == PolyKind::P1) {
                f.pow_m1.emplace_back(aux.var(u), aux.var(v), n - 1);
            } else {
                for (int m = 0; m < n; ++m)
                    if (m != v.pos) f.linear.emplace_back(aux.var(u), aux.var(v.clique, m));
            }
        }
    }
    return f;
}

// Default cap on expanded term counts; EFL_MAX_TERMS overrides.
inline std::size_t max_expansion_terms() {
    if (const char* env = std::getenv("EFL_MAX_TERMS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 10'000'000;
}

template <class K>
typename K::Elem eval_P(const K& k, PolyKind kind, const AuxGraph& aux,
                        const std::vector<typename K::Elem>& point) {
    if (static_cast<int>(point.size()) != aux.nvars()) throw std::invalid_argument("eval_P: point arity mismatch");
    auto f = build_factors(kind, aux);
    auto acc = k.one();
    for (auto [a, b] : f.linear) {
        acc = k.mul(acc, k.sub(point[a], point[b]));
        if (k.is_zero(acc)) return acc;
    }
    for (auto [a, b, e] : f.pow_m1) {
        auto d = k.sub(point[a], point[b]);
        auto p = k.one();
        for (int rep = 0; rep < e; ++rep) p = k.mul(p, d);
        acc = k.mul(acc, k.sub(p, k.one()));
        if (k.is_zero(acc)) return acc;
    }
    return acc;
}

// Full expansion. Guarded twice: an a-priori term-count estimate and a live
// cap during multiplication; both honour EFL_MAX_TERMS.
template <class K>
SparsePoly<K> expand_P(const K& k, PolyKind kind, const AuxGraph& aux,
                       std::size_t max_terms = max_expansion_terms()) {
    auto f = build_factors(kind, aux);
    double estimate = 1.0;
    for (std::size_t i = 0; i < f.linear.size(); ++i) estimate *= 2.0;
    for (const auto& t : f.pow_m1) estimate *= static_cast<double>(std::get<2>(t) + 2);
    if (estimate > static_cast<double>(max_terms))
        throw std::runtime_error("expand_P: estimated term count exceeds budget of " + std::to_string(max_terms));

    auto poly = SparsePoly<K>::constant(k, f.nvars, k.one());
    for (auto [a, b] : f.linear) {
        SparsePoly<K> factor(f.nvars);
        ExponentVec e(f.nvars, 0);
        e[a] = 1;
        factor.add_term(k, e, k.one());
        e[a] = 0;
        e[b] = 1;
        factor.add_term(k, e, k.neg(k.one()));
        poly = poly.mul(k, factor, max_terms);
    }
    for (auto [a, b, ex] : f.pow_m1) {
        // Binomial expansion of (x_a - x_b)^ex, then the -1 term.
        SparsePoly<K> factor(f.nvars);
        Int binom = 1;
        for (int t = 0; t <= ex; ++t) {
            ExponentVec e(f.nvars, 0);
            e[a] = ex - t;
            e[b] = t;
            Int c = (t % 2 == 0) ? binom : -binom;
            factor.add_term(k, e, k.from_bigint(c));
            binom = binom * (ex - t) / (t + 1);
        }
        factor.add_term(k, ExponentVec(f.nvars, 0), k.neg(k.one()));
        poly = poly.mul(k, factor, max_terms);
    }
    return poly;
}

// Fact 7: (-1)^C(n,2) * prod_{j<j'} (x_j - x_{j'}) against the determinant of
// the n x n Vandermonde matrix, the latter computed by permutation expansion.
template <class K>
bool vandermonde_check(const K& k, int n, const std::vector<typename K::Elem>& point) {
    if (static_cast<int>(point.size()) != n) throw std::invalid_argument("vandermonde_check: arity mismatch");
    auto lhs = k.one();
    for (int j = 0; j < n; ++j)
        for (int j2 = j + 1; j2 < n; ++j2) lhs = k.mul(lhs, k.sub(point[j], point[j2]));
    if ((n * (n - 1) / 2) % 2 == 1) lhs = k.neg(lhs);

    auto rhs = k.zero();
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j;
    do {
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        auto term = k.one();
        for (int row = 0; row < n; ++row)
            for (int rep = 0; rep < perm[row]; ++rep) term = k.mul(term, point[row]);
        rhs = inversions % 2 == 0 ? k.add(rhs, term) : k.sub(rhs, term);
    } while (std::next_permutation(perm.begin(), perm.end()));

    return k.eq(lhs, rhs);
}

}  // namespace efl
