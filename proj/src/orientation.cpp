#include "efl/orientation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace efl {

InDegreeVector in_degrees(int n, const Orientation& o) {
    InDegreeVector d(n, std::vector<int>(n, 0));
    for (const auto& inst : o.instances) ++d[inst.head.clique][inst.head.pos];
    return d;
}

int s_offset(int a, int b, int n) {
    if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("s_offset: index out of range");
    if (a == b) throw std::invalid_argument("s_offset: indices must differ");
    return a > b ? a - b : n + a - b;
}

std::vector<TreeSplit> orient_tree_multigraph(int k, const std::vector<std::pair<int, int>>& tree_edges,
                                              const std::vector<int>& alpha, int n) {
    if (static_cast<int>(alpha.size()) != k || static_cast<int>(tree_edges.size()) != std::max(0, k - 1))
        throw std::invalid_argument("orient_tree_multigraph: arity mismatch");
    long long sum = std::accumulate(alpha.begin(), alpha.end(), 0LL);
    if (sum != static_cast<long long>(std::max(0, k - 1)) * (n - 1))
        throw std::invalid_argument("orient_tree_multigraph: alpha sum != (k-1)(n-1)");
    for (int a : alpha)
        if (a < 0 || a > n - 1) throw std::invalid_argument("orient_tree_multigraph: alpha out of [0, n-1]");
    if (k <= 1) return {};

    std::vector<std::multiset<int>> adj(k);
    for (auto [a, b] : tree_edges) {
        if (a < 0 || a >= k || b < 0 || b >= k || a == b)
            throw std::invalid_argument("orient_tree_multigraph: bad tree edge");
        adj[a].insert(b);
        adj[b].insert(a);
    }

    // Peel leaves smallest-id first; each peel fixes the split of the leaf's
    // unique edge and lowers the neighbour's target by the copies it receives.
    std::vector<int> a(alpha);
    std::vector<bool> gone(k, false);
    std::set<int> leaves;
    for (int v = 0; v < k; ++v)
        if (adj[v].size() == 1) leaves.insert(v);
    if (leaves.empty()) throw std::invalid_argument("orient_tree_multigraph: not a tree");

    std::vector<TreeSplit> splits;
    for (int step = 0; step < k - 1; ++step) {
        int w = *leaves.begin();
        leaves.erase(leaves.begin());
        int u = *adj[w].begin();
        if (a[w] < 0 || a[w] > n - 1) throw std::invalid_argument("orient_tree_multigraph: infeasible targets");
        TreeSplit s;
        s.u = std::min(u, w);
        s.v = std::max(u, w);
        s.toward_v = (s.v == w) ? a[w] : (n - 1 - a[w]);
        splits.push_back(s);
        a[u] -= (n - 1 - a[w]);
        gone[w] = true;
        adj[u].erase(adj[u].find(w));
        adj[w].clear();
        if (adj[u].size() == 1 && !gone[u]) leaves.insert(u);
    }
    // The last surviving node must have no residual demand.
    for (int v = 0; v < k; ++v)
        if (!gone[v] && a[v] != 0) throw std::invalid_argument("orient_tree_multigraph: residual in-degree demand");
    std::sort(splits.begin(), splits.end(),
              [](const TreeSplit& x, const TreeSplit& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    return splits;
}

namespace {

void expand_bundle(std::vector<OrientedInstance>& out, CliqueVertex u, CliqueVertex v, int mult, int toward_v) {
    // Copies 1..toward_v head at v, the rest at u.
    for (int c = 1; c <= mult; ++c) out.push_back({u, v, c, c <= toward_v ? v : u});
}

}  // namespace

Orientation orient_G1(const AuxGraph& aux) {
    if (aux.kind != AuxKind::G1) throw std::invalid_argument("orient_G1: aux must be of kind G1");
    const int n = aux.n;
    Orientation o;

    for (const auto& tree : aux.trees) {
        // Copies of the tree's vertex sorted by clique index; node ids follow.
        std::set<CliqueVertex> nodes;
        for (const auto& [u, v] : tree.edges) {
            nodes.insert(u);
            nodes.insert(v);
        }
        std::vector<CliqueVertex> order(nodes.begin(), nodes.end());
        const int k = static_cast<int>(order.size());
        auto id_of = [&](CliqueVertex c) {
            return static_cast<int>(std::lower_bound(order.begin(), order.end(), c) - order.begin());
        };
        std::vector<std::pair<int, int>> tedges;
        for (const auto& [u, v] : tree.edges) tedges.emplace_back(id_of(u), id_of(v));

        // Targets: alpha_j = s(i_{j-1}, i_j) with i_0 = i_k, minus 1 at every
        // position but the last; the raw offsets sum to (k-1)n.
        std::vector<int> alpha(k);
        for (int j = 0; j < k; ++j) {
            int prev = order[(j + k - 1) % k].clique + 1;  // 1-based for s()
            int cur = order[j].clique + 1;
            alpha[j] = s_offset(prev, cur, n) - (j < k - 1 ? 1 : 0);
        }
        auto splits = orient_tree_multigraph(k, tedges, alpha, n);
        for (const auto& s : splits) expand_bundle(o.instances, order[s.u], order[s.v], n - 1, s.toward_v);
    }
    std::sort(o.instances.begin(), o.instances.end());
    return o;
}

bool clique_completable(const std::vector<int>& indeg, int n) {
    std::vector<int> b(indeg);
    std::sort(b.begin(), b.end(), std::greater<int>());
    for (int t = 0; t < static_cast<int>(b.size()); ++t)
        if (b[t] > n - 1 - t) return false;
    return true;
}

bool is_vandermonde_completable(const AuxGraph& aux, const Orientation& o) {
    auto d = in_degrees(aux.n, o);
    for (int i = 0; i < aux.n; ++i)
        if (!clique_completable(d[i], aux.n)) return false;
    return true;
}

Orientation complete_orientation(const AuxGraph& aux, const Orientation& o) {
    if (!is_vandermonde_completable(aux, o))
        throw std::invalid_argument("complete_orientation: identifier orientation is not completable");
    const int n = aux.n;
    Orientation full;
    full.includes_clique_edges = true;
    full.instances = o.instances;

    auto d = in_degrees(n, o);
    for (int i = 0; i < n; ++i) {
        // Largest identifier in-degree takes tournament in-degree 0; ties by
        // increasing position.
        std::vector<int> by_pos(n);
        std::iota(by_pos.begin(), by_pos.end(), 0);
        std::stable_sort(by_pos.begin(), by_pos.end(), [&](int a, int b) { return d[i][a] > d[i][b]; });
        std::vector<int> sigma(n);
        for (int r = 0; r < n; ++r) sigma[by_pos[r]] = r;
        for (int j = 0; j < n; ++j)
            for (int j2 = j + 1; j2 < n; ++j2) {
                CliqueVertex u{i, j}, v{i, j2};
                full.instances.push_back({u, v, 1, sigma[j] > sigma[j2] ? u : v});
            }
    }
    std::sort(full.instances.begin(), full.instances.end());
    return full;
}

int sign_of(const AuxGraph&, const Orientation& o) {
    long long t = 0;
    for (const auto& inst : o.instances)
        if (inst.head == inst.v) ++t;  // endpoints are normalized u < v
    return t % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Theorem 6 induction.

namespace {

struct G2Result {
    AuxGraph aux;
    Orientation orientation;
};

G2Result orient_g2_rec(const LinearHypergraph& h) {
    const int m = h.edge_count();
    AuxGraph aux = build_aux(h, default_spanning_trees(h), AuxKind::G2);
    G2Result res{aux, {}};
    if (m <= 1) return res;  // no identifier edges

    // Source copies: lower endpoints of path edges at this level.
    std::set<CliqueVertex> sources;
    for (const auto& t : aux.trees)
        for (const auto& [u, v] : t.edges) sources.insert(u);

    // The proof's bound: clique i (0-based) has at most m-1-i sources.
    {
        std::vector<int> cnt(m, 0);
        for (const auto& s : sources) ++cnt[s.clique];
        for (int i = 0; i < m; ++i)
            if (cnt[i] > m - 1 - i)
                throw std::logic_error("orient_G2_pathlike: source bound violated in clique " + std::to_string(i));
    }

    // Private vertex of each edge i >= 1: the largest-position vertex of
    // degree 1 (exists by linearity: the edge meets m-1 <= n-1 others, once each).
    auto deg = degree_by_index(h);
    std::vector<int> priv_pos(m, -1);
    for (int i = 1; i < m; ++i) {
        for (int j = h.n - 1; j >= 0; --j)
            if (deg[h.edges[i][j]] == 1) { priv_pos[i] = j; break; }
        if (priv_pos[i] < 0) throw std::logic_error("orient_G2_pathlike: no degree-1 vertex in edge " + std::to_string(i + 1));
    }

    // Sub-hypergraph: drop edge 0 and the private vertex of every other edge.
    LinearHypergraph sub;
    sub.n = h.n - 1;
    std::vector<int> sub_index(h.vertex_count(), -1);
    for (int i = 1; i < m; ++i) {
        std::vector<int> e;
        for (int j = 0; j < h.n; ++j) {
            if (j == priv_pos[i]) continue;
            int v = h.edges[i][j];
            if (sub_index[v] < 0) {
                sub_index[v] = sub.vertex_count();
                sub.vertices.push_back(h.vertices[v]);
            }
            e.push_back(sub_index[v]);
        }
        std::sort(e.begin(), e.end());
        sub.edges.push_back(std::move(e));
    }

    G2Result inner = orient_g2_rec(sub);

    // Map the inner orientation back: sub clique c is parent clique c+1 and
    // positions are matched through the vertex labels.
    auto lift = [&](CliqueVertex c) {
        int sub_vertex = inner.aux.labels[c.clique][c.pos];
        int parent_vertex = h.vertex_index(sub.vertices[sub_vertex]);
        int pos = aux.position_of(c.clique + 1, parent_vertex);
        if (parent_vertex < 0 || pos < 0) throw std::logic_error("orient_G2_pathlike: lift failed");
        return CliqueVertex{c.clique + 1, pos};
    };
    for (const auto& inst : inner.orientation.instances)
        res.orientation.instances.push_back({lift(inst.u), lift(inst.v), inst.copy, lift(inst.head)});

    std::set<std::pair<CliqueVertex, CliqueVertex>> assigned;
    for (const auto& inst : res.orientation.instances) assigned.insert({inst.u, inst.v});

    for (const auto& e : aux.identifier_edges) {
        if (assigned.count({e.u, e.v})) continue;
        CliqueVertex head;
        bool leaf_private = e.v.pos == priv_pos[e.v.clique];
        if (e.u.clique > 0) {
            // Star within the recursed cliques whose leaf is a private vertex:
            // towards the source endpoint (the centre).
            if (!leaf_private) throw std::logic_error("orient_G2_pathlike: unexpected unassigned identifier edge");
            head = e.u;
        } else {
            // Star centred in clique 0: towards the centre iff the leaf is a
            // source or the private vertex.
            head = (sources.count(e.v) || leaf_private) ? e.u : e.v;
        }
        res.orientation.instances.push_back({e.u, e.v, 1, head});
    }
    std::sort(res.orientation.instances.begin(), res.orientation.instances.end());

    if (static_cast<int>(res.orientation.instances.size()) != aux.identifier_instance_count())
        throw std::logic_error("orient_G2_pathlike: instance count mismatch");
    return res;
}

}  // namespace

std::pair<AuxGraph, Orientation> orient_G2_pathlike(const LinearHypergraph& h) {
    auto rep = validate(h);
    if (!rep.is_standard_form || !rep.is_linear)
        throw std::invalid_argument("orient_G2_pathlike: hypergraph must be linear and in standard form");
    auto res = orient_g2_rec(h);
    return {res.aux, res.orientation};
}

}  // namespace efl
