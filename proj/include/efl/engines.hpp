#pragma once

#include <omp.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "efl/families.hpp"
#include "efl/orientation.hpp"
#include "efl/polynomial.hpp"

namespace efl {

inline ExponentVec flatten_degrees(const InDegreeVector& d) {
    ExponentVec e;
    for (const auto& row : d)
        for (int x : row) e.push_back(x);
    return e;
}

// --- Engine 1: expansion lookup -------------------------------------------

template <class K>
typename K::Elem coefficient_by_expansion(const K& k, const SparsePoly<K>& p, const ExponentVec& target) {
    return p.coefficient(k, target);
}

// --- Engine 2: signed orientation enumeration -----------------------------
//
// The coefficient of a maximal-degree monomial is the signed number of
// orientations of all aux edge instances with in-degree vector equal to the
// target. The DFS runs over identifier groups (bundles contribute binomial
// split weights); the base cliques are vertex-disjoint, so once identifier
// in-degrees are fixed the clique contributions multiply, each one an
// exhaustive signed tournament enumeration of its own.

namespace detail {

using TournamentMemo = std::map<std::vector<int>, long long>;

// Signed sum over all orientations of K_n with in-degree vector sigma; the
// sign counts edges directed towards the higher position.
inline long long tournament_signed_sum(const std::vector<int>& sigma, TournamentMemo& memo) {
    const int n = static_cast<int>(sigma.size());
    long long need = std::accumulate(sigma.begin(), sigma.end(), 0LL);
    if (need != static_cast<long long>(n) * (n - 1) / 2) return 0;
    if (auto it = memo.find(sigma); it != memo.end()) return it->second;

    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < n; ++j)
        for (int j2 = j + 1; j2 < n; ++j2) edges.emplace_back(j, j2);
    std::vector<int> rem(sigma);
    std::vector<int> inc(n, n - 1);
    long long total = 0;

    std::function<void(std::size_t, int)> go = [&](std::size_t e, int sign) {
        if (e == edges.size()) {
            total += sign;
            return;
        }
        auto [a, b] = edges[e];
        --inc[a];
        --inc[b];
        for (int head : {a, b}) {
            int tail = head == a ? b : a;
            if (rem[head] == 0) continue;
            --rem[head];
            if (rem[head] <= inc[head] && rem[tail] <= inc[tail]) go(e + 1, head == b ? -sign : sign);
            ++rem[head];
        }
        ++inc[a];
        ++inc[b];
    };
    go(0, 1);
    memo[sigma] = total;
    return total;
}

struct OrientationDFS {
    const AuxGraph& aux;
    const ExponentVec& target;
    int n;
    std::vector<std::vector<long long>> binom;  // Pascal triangle up to n-1
    std::vector<int> beta;         // identifier in-degrees assigned so far
    std::vector<int> rem_incident; // unassigned instances incident to each variable (cliques included)
    // Per-clique totals: identifier in-degrees must sum to the target surplus
    // over the tournament sum; the suffix capacities bound what is left.
    std::vector<int> clique_need, clique_beta;
    std::vector<std::vector<int>> clique_suffix;  // [group][clique]
    bool trivially_zero = false;
    TournamentMemo memo;
    Int result = 0;

    OrientationDFS(const AuxGraph& a, const ExponentVec& t) : aux(a), target(t), n(a.n) {
        binom.assign(n, std::vector<long long>(n, 0));
        for (int m = 0; m < n; ++m) {
            binom[m][0] = 1;
            for (int r = 1; r <= m; ++r) binom[m][r] = binom[m - 1][r - 1] + (r <= m - 1 ? binom[m - 1][r] : 0);
        }
        beta.assign(aux.nvars(), 0);
        rem_incident.assign(aux.nvars(), n - 1);
        for (const auto& e : aux.identifier_edges) {
            rem_incident[aux.var(e.u)] += e.mult;
            rem_incident[aux.var(e.v)] += e.mult;
        }
        clique_beta.assign(n, 0);
        clique_need.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            int s = 0;
            for (int j = 0; j < n; ++j) s += target[aux.var(i, j)];
            clique_need[i] = s - n * (n - 1) / 2;
            if (clique_need[i] < 0) trivially_zero = true;
        }
        const std::size_t groups = aux.identifier_edges.size();
        clique_suffix.assign(groups + 1, std::vector<int>(n, 0));
        for (std::size_t g = groups; g-- > 0;) {
            clique_suffix[g] = clique_suffix[g + 1];
            const auto& e = aux.identifier_edges[g];
            clique_suffix[g][e.u.clique] += e.mult;
            clique_suffix[g][e.v.clique] += e.mult;
        }
    }

    bool feasible(int var) const {
        int need = target[var] - beta[var];
        return need >= 0 && need <= rem_incident[var];
    }

    bool clique_feasible(int i, std::size_t next_group) const {
        int slack = clique_need[i] - clique_beta[i];
        return slack >= 0 && slack <= clique_suffix[next_group][i];
    }

    void finish(const Int& weight, int sign) {
        Int prod = sign;
        std::vector<int> sigma(n);
        for (int i = 0; i < n && prod != 0; ++i) {
            long long s = 0;
            for (int j = 0; j < n; ++j) {
                sigma[j] = target[aux.var(i, j)] - beta[aux.var(i, j)];
                if (sigma[j] < 0) { prod = 0; break; }
                s += sigma[j];
            }
            if (prod == 0) break;
            if (s != static_cast<long long>(n) * (n - 1) / 2) { prod = 0; break; }
            prod *= tournament_signed_sum(sigma, memo);
        }
        result += weight * prod;
    }

    void go(std::size_t g, const Int& weight, int sign) {
        if (trivially_zero) return;
        if (g == aux.identifier_edges.size()) {
            finish(weight, sign);
            return;
        }
        const auto& e = aux.identifier_edges[g];
        int vu = aux.var(e.u), vv = aux.var(e.v);
        rem_incident[vu] -= e.mult;
        rem_incident[vv] -= e.mult;
        for (int t = 0; t <= e.mult; ++t) {
            beta[vu] += e.mult - t;
            beta[vv] += t;
            clique_beta[e.u.clique] += e.mult - t;
            clique_beta[e.v.clique] += t;
            if (feasible(vu) && feasible(vv) && clique_feasible(e.u.clique, g + 1) &&
                clique_feasible(e.v.clique, g + 1))
                go(g + 1, weight * binom[e.mult][t], t % 2 ? -sign : sign);
            beta[vu] -= e.mult - t;
            beta[vv] -= t;
            clique_beta[e.u.clique] -= e.mult - t;
            clique_beta[e.v.clique] -= t;
        }
        rem_incident[vu] += e.mult;
        rem_incident[vv] += e.mult;
    }
};

struct OrientationPrefix {
    std::size_t group;
    std::vector<int> splits;  // chosen t per earlier group
};

inline void check_orientation_target(const AuxGraph& aux, const ExponentVec& target) {
    if (static_cast<int>(target.size()) != aux.nvars())
        throw std::invalid_argument("coefficient_by_orientations: target arity mismatch");
    for (int x : target)
        if (x < 0) throw std::invalid_argument("coefficient_by_orientations: negative exponent");
    if (total_degree(target) != aux.total_edge_count())
        throw std::invalid_argument(
            "coefficient_by_orientations: target is not of maximal total degree (correspondence holds "
            "only at the top degree)");
}

}  // namespace detail

inline Int coefficient_by_orientations(const AuxGraph& aux, const ExponentVec& target) {
    detail::check_orientation_target(aux, target);
    detail::OrientationDFS dfs(aux, target);
    dfs.go(0, 1, 1);
    return dfs.result;
}

// Decision-prefix parallel variant: the first few identifier groups are
// expanded into a task list, each task finishes serially and exact partial
// sums combine associatively, so the result is identical to the serial one.
inline Int coefficient_by_orientations_parallel(const AuxGraph& aux, const ExponentVec& target) {
    detail::check_orientation_target(aux, target);
    const std::size_t want = static_cast<std::size_t>(4 * std::max(1, omp_get_max_threads()));
    std::vector<detail::OrientationPrefix> tasks{{0, {}}};
    while (!tasks.empty() && tasks.size() < want && tasks[0].group < aux.identifier_edges.size()) {
        std::vector<detail::OrientationPrefix> next;
        for (const auto& task : tasks) {
            int mult = aux.identifier_edges[task.group].mult;
            for (int t = 0; t <= mult; ++t) {
                auto splits = task.splits;
                splits.push_back(t);
                next.push_back({task.group + 1, std::move(splits)});
            }
        }
        tasks = std::move(next);
    }

    std::vector<Int> partial(tasks.size(), Int(0));
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tasks.size()); ++i) {
        const auto& task = tasks[i];
        detail::OrientationDFS dfs(aux, target);
        Int weight = 1;
        int sign = 1;
        bool ok = true;
        for (std::size_t g = 0; g < task.group; ++g) {
            const auto& e = aux.identifier_edges[g];
            int t = task.splits[g];
            int vu = aux.var(e.u), vv = aux.var(e.v);
            dfs.rem_incident[vu] -= e.mult;
            dfs.rem_incident[vv] -= e.mult;
            dfs.beta[vu] += e.mult - t;
            dfs.beta[vv] += t;
            dfs.clique_beta[e.u.clique] += e.mult - t;
            dfs.clique_beta[e.v.clique] += t;
            weight *= dfs.binom[e.mult][t];
            if (t % 2) sign = -sign;
            if (!dfs.feasible(vu) || !dfs.feasible(vv) || !dfs.clique_feasible(e.u.clique, g + 1) ||
                !dfs.clique_feasible(e.v.clique, g + 1)) {
                ok = false;
                break;
            }
        }
        if (ok) dfs.go(task.group, weight, sign);
        partial[i] = dfs.result;
    }
    Int total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

// --- Engine 3: coefficient formula (quantitative Nullstellensatz) ----------
//
// coeff of prod x^d in P  =  sum over the grid of P(c) / prod phi'_v(c_v),
// with phi_v(z) = prod_{c in C_v} (z - c) and |C_v| = d_v + 1. Valid whenever
// deg P <= sum d_v; the inverse weights are precomputed per grid element.

template <class K>
struct Grid {
    std::vector<std::vector<typename K::Elem>> sets;
};

template <class K>
Grid<K> default_grid(const K& k, const ExponentVec& degrees) {
    Grid<K> g;
    for (int d : degrees) {
        std::vector<typename K::Elem> set;
        for (int c = 0; c <= d; ++c) set.push_back(k.from_int(c));
        g.sets.push_back(std::move(set));
    }
    return g;
}

template <class K, class Eval>
typename K::Elem coefficient_by_formula(const K& k, Eval&& eval, const ExponentVec& degrees,
                                        const Grid<K>& grid, bool parallel = false) {
    using Elem = typename K::Elem;
    const int nv = static_cast<int>(degrees.size());
    if (static_cast<int>(grid.sets.size()) != nv) throw std::invalid_argument("coefficient_by_formula: grid arity mismatch");
    long long points = 1;
    for (int v = 0; v < nv; ++v) {
        if (static_cast<int>(grid.sets[v].size()) != degrees[v] + 1)
            throw std::invalid_argument("coefficient_by_formula: |C_v| must equal d_v + 1");
        points *= static_cast<long long>(grid.sets[v].size());
        if (points > (1LL << 40)) throw std::runtime_error("coefficient_by_formula: grid too large");
    }

    // inv_w[v][i] = 1 / phi'_v(C_v[i]); a zero difference means a repeated element.
    std::vector<std::vector<Elem>> inv_w(nv);
    for (int v = 0; v < nv; ++v) {
        for (std::size_t i = 0; i < grid.sets[v].size(); ++i) {
            Elem d = k.one();
            for (std::size_t j = 0; j < grid.sets[v].size(); ++j) {
                if (i == j) continue;
                Elem diff = k.sub(grid.sets[v][i], grid.sets[v][j]);
                if (k.is_zero(diff)) throw std::invalid_argument("coefficient_by_formula: repeated grid element");
                d = k.mul(d, diff);
            }
            inv_w[v].push_back(k.inv(d));
        }
    }

    auto chunk_sum = [&](long long lo, long long hi) {
        std::vector<Elem> point(nv, k.zero());
        std::vector<int> digit(nv, 0);
        Elem acc = k.zero();
        for (long long idx = lo; idx < hi; ++idx) {
            long long rest = idx;
            for (int v = nv - 1; v >= 0; --v) {
                digit[v] = static_cast<int>(rest % grid.sets[v].size());
                rest /= static_cast<long long>(grid.sets[v].size());
                point[v] = grid.sets[v][digit[v]];
            }
            Elem w = eval(point);
            if (k.is_zero(w)) continue;
            for (int v = 0; v < nv; ++v) w = k.mul(w, inv_w[v][digit[v]]);
            acc = k.add(acc, w);
        }
        return acc;
    };

    if (!parallel || points < 256) return chunk_sum(0, points);

    const int chunks = std::min<long long>(points, 8LL * std::max(1, omp_get_max_threads()));
    std::vector<Elem> partial(chunks, k.zero());
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunks; ++c) {
        long long lo = points * c / chunks, hi = points * (c + 1) / chunks;
        partial[c] = chunk_sum(lo, hi);
    }
    auto acc = k.zero();
    for (const auto& p : partial) acc = k.add(acc, p);
    return acc;
}

// --- Vanishing sweep --------------------------------------------------------
//
// Exhaustive check over {0,..,n-1}^(n^2): eval_P is nonzero exactly at points
// whose digits make every clique rainbow (P1) and all copies of a vertex equal
// (P2).

struct SweepResult {
    long long points = 0;
    long long nonzero = 0;
    long long mismatches = 0;
    long long first_mismatch = -1;
    bool ok() const { return mismatches == 0; }
};

template <class K>
SweepResult vanishing_sweep(const K& k, PolyKind kind, const AuxGraph& aux, bool parallel = false) {
    const int n = aux.n;
    const int nv = aux.nvars();
    long long points = 1;
    for (int v = 0; v < nv; ++v) {
        points *= n;
        if (points > 200'000'000LL) throw std::runtime_error("vanishing_sweep: grid too large");
    }

    // Copy groups: variables carrying the same hypergraph vertex.
    std::vector<std::vector<int>> groups;
    {
        std::map<int, std::vector<int>> by_label;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) by_label[aux.labels[i][j]].push_back(aux.var(i, j));
        for (auto& [label, vars] : by_label)
            if (vars.size() > 1) groups.push_back(vars);
    }
    auto factors = build_factors(kind, aux);

    auto run_chunk = [&](long long lo, long long hi, SweepResult& r) {
        std::vector<int> digit(nv, 0);
        std::vector<typename K::Elem> point(nv, k.zero());
        for (long long idx = lo; idx < hi; ++idx) {
            long long rest = idx;
            for (int v = nv - 1; v >= 0; --v) {
                digit[v] = static_cast<int>(rest % n);
                rest /= n;
                point[v] = k.from_int(digit[v]);
            }
            bool props = true;
            for (int i = 0; i < n && props; ++i)
                for (int j = 0; j < n && props; ++j)
                    for (int j2 = j + 1; j2 < n; ++j2)
                        if (digit[aux.var(i, j)] == digit[aux.var(i, j2)]) { props = false; break; }
            for (const auto& g : groups) {
                if (!props) break;
                for (std::size_t t = 1; t < g.size(); ++t)
                    if (digit[g[t]] != digit[g[0]]) { props = false; break; }
            }

            auto acc = k.one();
            for (auto [a, b] : factors.linear) {
                acc = k.mul(acc, k.sub(point[a], point[b]));
                if (k.is_zero(acc)) break;
            }
            if (!k.is_zero(acc)) {
                for (auto [a, b, e] : factors.pow_m1) {
                    auto d = k.sub(point[a], point[b]);
                    auto p = k.one();
                    for (int rep = 0; rep < e; ++rep) p = k.mul(p, d);
                    acc = k.mul(acc, k.sub(p, k.one()));
                    if (k.is_zero(acc)) break;
                }
            }
            bool nz = !k.is_zero(acc);
            if (nz) ++r.nonzero;
            if (nz != props) {
                ++r.mismatches;
                if (r.first_mismatch < 0) r.first_mismatch = idx;
            }
        }
    };

    SweepResult res;
    res.points = points;
    if (!parallel || points < 1024) {
        run_chunk(0, points, res);
        return res;
    }

    const int chunks = std::min<long long>(points, 8LL * std::max(1, omp_get_max_threads()));
    std::vector<SweepResult> partial(chunks);
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunks; ++c)
        run_chunk(points * c / chunks, points * (c + 1) / chunks, partial[c]);
    for (const auto& p : partial) {
        res.nonzero += p.nonzero;
        res.mismatches += p.mismatches;
        if (p.first_mismatch >= 0 && (res.first_mismatch < 0 || p.first_mismatch < res.first_mismatch))
            res.first_mismatch = p.first_mismatch;
    }
    return res;
}

// --- Vandermonde-completable monomials and Corollary 5 ---------------------

// Maximal-degree exponent profiles of the identifier product (in-degree
// profiles of identifier orientations) that admit a per-clique permutation
// completion within the n-1 bound. Graded-lex order, deduplicated.
// `complete` is false when the cap truncated the enumeration.
struct VcMonomials {
    std::vector<ExponentVec> monomials;
    bool complete = true;
};
VcMonomials enumerate_vc_monomials(const AuxGraph& aux, std::size_t cap = 1'000'000);

// All maximal (n-1)-bounded targets that can carry a nonzero coefficient:
// beta + per-clique permutations, beta ranging over the VC monomials. Only a
// `complete` result can prove that no nonzero bounded coefficient exists.
struct CandidateTargets {
    std::vector<ExponentVec> targets;
    bool complete = true;
};
CandidateTargets candidate_targets(const AuxGraph& aux, std::size_t cap = 100'000);

struct Corollary5Result {
    Int count = 0;            // orientations of the identifier instances realizing beta
    Int binom_product = 0;    // prod C(n-1, t_e) for the unique split, when unique
    bool split_unique = false;
    bool all_same_sign = false;
    bool nonzero_mod_p = false;
    int sign = 0;             // common sign when uniform
};

Corollary5Result corollary5_check(const AuxGraph& aux, const ExponentVec& beta, std::uint64_t p);

}  // namespace efl
