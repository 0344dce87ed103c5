#include "efl/auxgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace efl {

AuxKind aux_kind_from_string(const std::string& s) {
    if (s == "g1" || s == "G1") return AuxKind::G1;
    if (s == "g2" || s == "G2") return AuxKind::G2;
    throw std::invalid_argument("unknown aux kind '" + s + "'");
}

std::string aux_kind_name(AuxKind k) { return k == AuxKind::G1 ? "G1" : "G2"; }

int AuxGraph::identifier_instance_count() const {
    int c = 0;
    for (const auto& e : identifier_edges) c += e.mult;
    return c;
}

int AuxGraph::total_edge_count() const {
    return n * (n * (n - 1) / 2) + identifier_instance_count();
}

int AuxGraph::position_of(int clique, int vertex) const {
    const auto& row = labels[clique];
    for (int j = 0; j < n; ++j)
        if (row[j] == vertex) return j;
    return -1;
}

std::vector<std::vector<CliqueVertex>> copies_by_vertex(const LinearHypergraph& h) {
    std::vector<std::vector<CliqueVertex>> copies(h.vertex_count());
    for (int i = 0; i < h.edge_count(); ++i) {
        const auto& e = h.edges[i];  // sorted ascending = within-edge ordering
        for (int j = 0; j < static_cast<int>(e.size()); ++j) copies[e[j]].push_back({i, j});
    }
    return copies;  // per vertex, cliques appear in increasing order
}

IdentifierTreeSet default_spanning_trees(const LinearHypergraph& h) {
    IdentifierTreeSet trees;
    auto copies = copies_by_vertex(h);
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (copies[v].size() < 2) continue;
        IdentifierTree t;
        t.vertex = v;
        for (std::size_t k = 0; k + 1 < copies[v].size(); ++k)
            t.edges.emplace_back(copies[v][k], copies[v][k + 1]);
        trees.push_back(std::move(t));
    }
    return trees;
}

namespace {

// Standard Prufer decode on nodes 0..k-1; k >= 2, sequence length k-2.
std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int k) {
    std::vector<int> deg(k, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(k, false);
    int leaf = -1, ptr = 0;
    auto next_leaf = [&]() {
        while (deg[ptr] != 1 || used[ptr]) ++ptr;
        return ptr;
    };
    leaf = next_leaf();
    for (int x : seq) {
        edges.emplace_back(leaf, x);
        used[leaf] = true;
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            leaf = next_leaf();
        }
    }
    // Two unused degree-1 nodes remain.
    int a = -1, b = -1;
    for (int i = 0; i < k; ++i)
        if (!used[i] && deg[i] == 1) (a < 0 ? a : b) = i;
    edges.emplace_back(a, b);
    return edges;
}

IdentifierTree tree_from_node_edges(int vertex, const std::vector<CliqueVertex>& copies,
                                    const std::vector<std::pair<int, int>>& node_edges) {
    IdentifierTree t;
    t.vertex = vertex;
    for (auto [a, b] : node_edges) {
        CliqueVertex u = copies[a], v = copies[b];
        if (v < u) std::swap(u, v);
        t.edges.emplace_back(u, v);
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

}  // namespace

std::vector<IdentifierTreeSet> enumerate_spanning_tree_choices(const LinearHypergraph& h, std::size_t limit) {
    auto copies = copies_by_vertex(h);
    // Per-vertex tree menus in Prufer lexicographic order.
    std::vector<std::vector<IdentifierTree>> menus;
    for (int v = 0; v < h.vertex_count(); ++v) {
        int k = static_cast<int>(copies[v].size());
        if (k < 2) continue;
        std::vector<IdentifierTree> menu;
        if (k == 2) {
            menu.push_back(tree_from_node_edges(v, copies[v], {{0, 1}}));
        } else {
            std::vector<int> seq(k - 2, 0);
            for (;;) {
                menu.push_back(tree_from_node_edges(v, copies[v], prufer_decode(seq, k)));
                int pos = k - 3;
                while (pos >= 0 && seq[pos] == k - 1) seq[pos--] = 0;
                if (pos < 0) break;
                ++seq[pos];
            }
        }
        menus.push_back(std::move(menu));
    }

    std::vector<IdentifierTreeSet> out;
    if (menus.empty()) {
        out.push_back({});
        return out;
    }
    // Odometer over menus; first vertex is the most significant digit.
    std::vector<std::size_t> pick(menus.size(), 0);
    for (;;) {
        IdentifierTreeSet ts;
        for (std::size_t m = 0; m < menus.size(); ++m) ts.push_back(menus[m][pick[m]]);
        out.push_back(std::move(ts));
        if (limit && out.size() >= limit) break;
        int pos = static_cast<int>(menus.size()) - 1;
        while (pos >= 0 && pick[pos] + 1 == menus[pos].size()) pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }
    return out;
}

AuxGraph build_aux(const LinearHypergraph& h, const IdentifierTreeSet& trees, AuxKind kind) {
    auto rep = validate(h);
    if (!rep.is_standard_form || !rep.is_linear)
        throw std::invalid_argument("build_aux: hypergraph must be linear and in standard form");

    AuxGraph g;
    g.kind = kind;
    g.n = h.n;
    g.labels = h.edges;
    g.trees = trees;

    auto copies = copies_by_vertex(h);
    for (const auto& t : trees) {
        if (t.vertex < 0 || t.vertex >= h.vertex_count() || copies[t.vertex].size() != t.edges.size() + 1)
            throw std::invalid_argument("build_aux: tree inconsistent with hypergraph");
        // Acyclicity via union-find on the copies; with k-1 edges this implies spanning.
        std::vector<int> parent(copies[t.vertex].size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };
        auto node_id = [&](CliqueVertex c) {
            for (std::size_t i = 0; i < copies[t.vertex].size(); ++i)
                if (copies[t.vertex][i] == c) return static_cast<int>(i);
            throw std::invalid_argument("build_aux: tree edge endpoint is not a copy of the tree's vertex");
        };
        for (const auto& [u, v] : t.edges) {
            int a = find(node_id(u)), b = find(node_id(v));
            if (a == b) throw std::invalid_argument("build_aux: tree contains a cycle");
            parent[a] = b;
        }
        for (const auto& [u, v] : t.edges) {
            if (u.clique == v.clique) throw std::invalid_argument("build_aux: tree edge within one clique");
            if (g.labels[u.clique][u.pos] != t.vertex || g.labels[v.clique][v.pos] != t.vertex)
                throw std::invalid_argument("build_aux: tree edge endpoints not labelled by the tree's vertex");
            CliqueVertex lo = u, hi = v;
            if (hi < lo) std::swap(lo, hi);
            if (kind == AuxKind::G1) {
                g.identifier_edges.push_back({lo, hi, g.n - 1});
            } else {
                // Star centred at the copy in the lower-indexed clique.
                for (int t2 = 0; t2 < g.n; ++t2) {
                    if (t2 == hi.pos) continue;
                    g.identifier_edges.push_back({lo, {hi.clique, t2}, 1});
                }
            }
        }
    }
    std::sort(g.identifier_edges.begin(), g.identifier_edges.end());
    return g;
}

AuxGraph build_aux(const LinearHypergraph& h, AuxKind kind) {
    return build_aux(h, default_spanning_trees(h), kind);
}

long long expected_total_degree(const LinearHypergraph& h) {
    long long n = h.n;
    long long s = n * (n * (n - 1) / 2);
    for (int d : degree_by_index(h)) s += static_cast<long long>(d - 1) * (n - 1);
    return s;
}

}  // namespace efl
