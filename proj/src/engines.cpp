#include "efl/engines.hpp"

#include <algorithm>
#include <set>

namespace efl {

namespace {

struct VcEnumerator {
    const AuxGraph& aux;
    std::size_t cap;
    long long node_budget;
    bool complete = true;
    std::vector<int> beta;
    std::set<ExponentVec, GradedLexLess> out;

    VcEnumerator(const AuxGraph& a, std::size_t c)
        : aux(a), cap(c), node_budget(static_cast<long long>(c) * 64), beta(a.nvars(), 0) {}

    bool clique_rows_ok() const {
        for (int i = 0; i < aux.n; ++i) {
            std::vector<int> row(beta.begin() + i * aux.n, beta.begin() + (i + 1) * aux.n);
            if (!clique_completable(row, aux.n)) return false;
        }
        return true;
    }

    void go(std::size_t g) {
        if (!complete) return;
        if (--node_budget < 0) {
            complete = false;
            return;
        }
        if (g == aux.identifier_edges.size()) {
            if (clique_rows_ok()) {
                if (out.size() >= cap) {
                    complete = false;
                    return;
                }
                out.insert(ExponentVec(beta.begin(), beta.end()));
            }
            return;
        }
        const auto& e = aux.identifier_edges[g];
        int vu = aux.var(e.u), vv = aux.var(e.v);
        for (int t = 0; t <= e.mult && complete; ++t) {
            beta[vu] += e.mult - t;
            beta[vv] += t;
            if (beta[vu] <= aux.n - 1 && beta[vv] <= aux.n - 1) go(g + 1);
            beta[vu] -= e.mult - t;
            beta[vv] -= t;
        }
    }
};

}  // namespace

VcMonomials enumerate_vc_monomials(const AuxGraph& aux, std::size_t cap) {
    VcEnumerator en(aux, cap);
    en.go(0);
    return {{en.out.begin(), en.out.end()}, en.complete};
}

CandidateTargets candidate_targets(const AuxGraph& aux, std::size_t cap) {
    const int n = aux.n;
    auto vc = enumerate_vc_monomials(aux, cap);
    CandidateTargets res;
    res.complete = vc.complete;
    std::set<ExponentVec, GradedLexLess> out;
    for (const auto& beta : vc.monomials) {
        // Feasible tournament in-degree permutations per clique.
        std::vector<std::vector<std::vector<int>>> feasible(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> sigma(n);
            for (int j = 0; j < n; ++j) sigma[j] = j;
            do {
                bool ok = true;
                for (int j = 0; j < n && ok; ++j) ok = beta[aux.var(i, j)] + sigma[j] <= n - 1;
                if (ok) feasible[i].push_back(sigma);
            } while (std::next_permutation(sigma.begin(), sigma.end()));
        }
        std::vector<std::size_t> pick(n, 0);
        for (;;) {
            ExponentVec alpha(beta);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) alpha[aux.var(i, j)] += feasible[i][pick[i]][j];
            if (out.size() >= cap && !out.count(alpha)) {
                res.complete = false;
                break;
            }
            out.insert(std::move(alpha));
            int pos = n - 1;
            while (pos >= 0 && pick[pos] + 1 == feasible[pos].size()) pick[pos--] = 0;
            if (pos < 0) break;
            ++pick[pos];
        }
        if (!res.complete && out.size() >= cap) break;
    }
    res.targets.assign(out.begin(), out.end());
    return res;
}

Corollary5Result corollary5_check(const AuxGraph& aux, const ExponentVec& beta, std::uint64_t p) {
    if (aux.kind != AuxKind::G1) throw std::invalid_argument("corollary5_check: aux must be of kind G1");
    if (p != static_cast<std::uint64_t>(aux.n) || !is_prime(p))
        throw std::invalid_argument("corollary5_check: requires prime p = n");
    if (static_cast<int>(beta.size()) != aux.nvars())
        throw std::invalid_argument("corollary5_check: beta arity mismatch");

    const int n = aux.n;
    std::vector<long long> binom(n, 0);
    binom[0] = 1;
    for (int i = 1; i < n; ++i) binom[i] = binom[i - 1] * (n - i) / i;

    // beta must be supported on tree copies only.
    std::vector<bool> on_tree(aux.nvars(), false);
    for (const auto& t : aux.trees)
        for (const auto& [u, v] : t.edges) on_tree[aux.var(u)] = on_tree[aux.var(v)] = true;
    for (int v = 0; v < aux.nvars(); ++v)
        if (!on_tree[v] && beta[v] != 0) return {};

    Corollary5Result res;
    res.count = 1;
    res.binom_product = 1;
    res.split_unique = true;
    res.all_same_sign = true;
    res.sign = 1;

    // Trees are vertex-disjoint, so solutions per tree combine multiplicatively.
    for (const auto& tree : aux.trees) {
        std::vector<int> indeg(aux.nvars(), 0);
        struct Sol {
            Int weight;
            int parity;
        };
        std::vector<Sol> sols;
        std::function<void(std::size_t, Int, int)> go = [&](std::size_t e, Int weight, int parity) {
            if (e == tree.edges.size()) {
                for (const auto& [u, v] : tree.edges)
                    if (indeg[aux.var(u)] != beta[aux.var(u)] || indeg[aux.var(v)] != beta[aux.var(v)]) return;
                sols.push_back({weight, parity});
                return;
            }
            auto [u, v] = tree.edges[e];
            int vu = aux.var(u), vv = aux.var(v);
            for (int t = 0; t <= n - 1; ++t) {
                indeg[vu] += n - 1 - t;
                indeg[vv] += t;
                if (indeg[vu] <= beta[vu] && indeg[vv] <= beta[vv])
                    go(e + 1, weight * binom[t], (parity + t) % 2);
                indeg[vu] -= n - 1 - t;
                indeg[vv] -= t;
            }
        };
        go(0, 1, 0);

        if (sols.empty()) return {};
        Int tree_count = 0;
        for (const auto& s : sols) tree_count += s.weight;
        res.count *= tree_count;
        if (sols.size() > 1) res.split_unique = false;
        for (const auto& s : sols)
            if (s.parity != sols[0].parity) res.all_same_sign = false;
        if (res.all_same_sign && sols[0].parity == 1) res.sign = -res.sign;
        if (res.split_unique) res.binom_product *= sols[0].weight;
    }
    if (!res.split_unique) res.binom_product = 0;
    if (!res.all_same_sign) res.sign = 0;
    res.nonzero_mod_p = mod_residue(res.count, p) != 0;
    return res;
}

}  // namespace efl
