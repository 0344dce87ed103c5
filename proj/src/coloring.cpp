#include "efl/coloring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "efl/field.hpp"

namespace efl {

bool verify_coloring(const LinearHypergraph& h, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != h.vertex_count() || !c.total())
        throw std::invalid_argument("verify_coloring: coloring must be total");
    for (const auto& e : h.edges) {
        std::set<int> seen;
        for (int v : e)
            if (!seen.insert(c.colors[v]).second) return false;
    }
    return true;
}

std::optional<Coloring> brute_force_coloring(const LinearHypergraph& h, int k) {
    const int nv = h.vertex_count();
    // Edges incident to each vertex, for incremental conflict checks.
    std::vector<std::vector<int>> incident(nv);
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.edges[e]) incident[v].push_back(e);

    Coloring c;
    c.colors.assign(nv, -1);
    std::function<bool(int)> go = [&](int v) {
        if (v == nv) return true;
        for (int col = 0; col < k; ++col) {
            bool ok = true;
            for (int e : incident[v]) {
                for (int u : h.edges[e])
                    if (u != v && c.colors[u] == col) { ok = false; break; }
                if (!ok) break;
            }
            if (!ok) continue;
            c.colors[v] = col;
            if (go(v + 1)) return true;
            c.colors[v] = -1;
        }
        return false;
    };
    if (go(0)) return c;
    return std::nullopt;
}

namespace {

// Shared decode logic: the point's digits, checked against (P1)/(P2).
struct PointProperties {
    bool cliques_rainbow = true;
    bool copies_consistent = true;
};

PointProperties check_properties(const AuxGraph& aux, const std::vector<int>& point) {
    PointProperties pp;
    const int n = aux.n;
    for (int i = 0; i < n && pp.cliques_rainbow; ++i)
        for (int j = 0; j < n && pp.cliques_rainbow; ++j)
            for (int j2 = j + 1; j2 < n; ++j2)
                if (point[aux.var(i, j)] == point[aux.var(i, j2)]) { pp.cliques_rainbow = false; break; }
    std::unordered_map<int, int> first;
    for (int i = 0; i < n && pp.copies_consistent; ++i)
        for (int j = 0; j < n; ++j) {
            auto [it, fresh] = first.emplace(aux.labels[i][j], point[aux.var(i, j)]);
            if (!fresh && it->second != point[aux.var(i, j)]) { pp.copies_consistent = false; break; }
        }
    return pp;
}

template <class K>
bool point_nonzero(const K& k, PolyKind kind, const AuxGraph& aux, const std::vector<int>& point) {
    std::vector<typename K::Elem> p;
    p.reserve(point.size());
    for (int d : point) p.push_back(k.from_int(d));
    return !k.is_zero(eval_P(k, kind, aux, p));
}

bool eval_nonzero(PolyKind kind, const AuxGraph& aux, const std::vector<int>& point) {
    if (kind == PolyKind::P1) return point_nonzero(PrimeField(aux.n), kind, aux, point);
    return point_nonzero(RationalField{}, kind, aux, point);
}

}  // namespace

DecodeResult coloring_from_point(const AuxGraph& aux, const std::vector<int>& point, PolyKind kind) {
    if (static_cast<int>(point.size()) != aux.nvars())
        throw std::invalid_argument("coloring_from_point: point arity mismatch");
    for (int d : point)
        if (d < 0 || d >= aux.n) throw std::invalid_argument("coloring_from_point: entries must be colors 0..n-1");

    DecodeResult res;
    if (!eval_nonzero(kind, aux, point)) {
        auto pp = check_properties(aux, point);
        res.rejection = !pp.cliques_rainbow ? "P1" : "P2";
        return res;
    }

    // Nonzero value: each vertex's copies agree, so the decode is well defined.
    int max_label = 0;
    for (const auto& row : aux.labels)
        for (int l : row) max_label = std::max(max_label, l + 1);
    Coloring c;
    c.colors.assign(max_label, -1);
    for (int i = 0; i < aux.n; ++i)
        for (int j = 0; j < aux.n; ++j) {
            int l = aux.labels[i][j];
            if (c.colors[l] >= 0 && c.colors[l] != point[aux.var(i, j)])
                throw std::logic_error("coloring_from_point: nonzero value with inconsistent copies");
            c.colors[l] = point[aux.var(i, j)];
        }
    res.coloring = std::move(c);
    return res;
}

std::optional<std::vector<int>> nonvanishing_search(const AuxGraph& aux, PolyKind kind, const ExponentVec& target) {
    if (static_cast<int>(target.size()) != aux.nvars())
        throw std::invalid_argument("nonvanishing_search: target arity mismatch");
    if (total_degree(target) != aux.total_edge_count() || !degree_bounded(target, aux.n - 1))
        throw std::invalid_argument("nonvanishing_search: target must be maximal and (n-1)-bounded");

    const int n = aux.n;
    std::vector<int> point(aux.nvars(), -1);
    // Backtracking over variables in row-major order; within a clique only
    // values distinct from the earlier positions survive (Q_i prefix pruning;
    // cross-clique factors are checked at the leaves).
    std::function<bool(int)> go = [&](int v) {
        if (v == aux.nvars()) return eval_nonzero(kind, aux, point);
        int i = v / n;
        for (int col = 0; col < n; ++col) {
            bool clash = false;
            for (int j = i * n; j < v; ++j)
                if (point[j] == col) { clash = true; break; }
            if (clash) continue;
            point[v] = col;
            if (go(v + 1)) return true;
            point[v] = -1;
        }
        return false;
    };
    if (go(0)) return point;
    return std::nullopt;
}

Coloring extend_coloring(const LinearHypergraph& h, const LinearHypergraph& derived, const Coloring& c, int n) {
    if (static_cast<int>(c.colors.size()) != derived.vertex_count() || !c.total())
        throw std::invalid_argument("extend_coloring: coloring must be total on the derived hypergraph");
    for (int col : c.colors)
        if (col >= n) throw std::invalid_argument("extend_coloring: coloring uses more than n colors");
    if (!verify_coloring(derived, c)) throw std::invalid_argument("extend_coloring: coloring is not proper");

    Coloring out;
    out.colors.assign(h.vertex_count(), -1);
    for (int v = 0; v < derived.vertex_count(); ++v) {
        int hv = h.vertex_index(derived.vertices[v]);
        if (hv < 0) throw std::invalid_argument("extend_coloring: derived vertex missing from the original");
        out.colors[hv] = c.colors[v];
    }

    auto deg = degree_by_index(h);
    for (int e = 0; e < h.edge_count(); ++e) {
        if (static_cast<int>(h.edges[e].size()) > n)
            throw std::invalid_argument("extend_coloring: edge larger than n");
        for (int v : h.edges[e]) {
            if (out.colors[v] >= 0) continue;
            if (deg[v] != 1) throw std::invalid_argument("extend_coloring: uncolored vertex of degree > 1");
            std::set<int> used;
            for (int u : h.edges[e])
                if (out.colors[u] >= 0) used.insert(out.colors[u]);
            int col = 0;
            while (used.count(col)) ++col;
            if (col >= n) throw std::invalid_argument("extend_coloring: no free color in edge");
            out.colors[v] = col;
        }
    }
    return out;
}

}  // namespace efl
