#pragma once

#include <utility>
#include <vector>

#include "efl/auxgraph.hpp"

namespace efl {

// One directed edge instance. Endpoints are normalized u < v; `copy` is
// 1-based within a multi-edge bundle (clique edges have copy 1).
struct OrientedInstance {
    CliqueVertex u, v;
    int copy = 1;
    CliqueVertex head;
    auto operator<=>(const OrientedInstance&) const = default;
};

struct Orientation {
    bool includes_clique_edges = false;
    std::vector<OrientedInstance> instances;

    bool operator==(const Orientation&) const = default;
};

using InDegreeVector = std::vector<std::vector<int>>;  // [clique][pos]

InDegreeVector in_degrees(int n, const Orientation& o);

// Cyclic clique-index offset s(a,b) from the Theorem 4 argument: a-b if a>b,
// n+a-b otherwise; always in [1, n-1]. Indices are 1-based.
int s_offset(int a, int b, int n);

// Claim 8: orient the (n-1)-fold multigraph of a tree so node `x` gets
// in-degree exactly alpha[x]. Nodes are 0..k-1 and the peel order is node-id
// order (callers encode the (clique,position)-lex order as node ids).
// Requires alpha[x] <= n-1 and sum(alpha) == (k-1)(n-1).
struct TreeSplit {
    int u, v;        // tree edge, u < v
    int toward_v;    // copies directed at v; the other n-1-toward_v point at u
};
std::vector<TreeSplit> orient_tree_multigraph(int k, const std::vector<std::pair<int, int>>& tree_edges,
                                              const std::vector<int>& alpha, int n);

// Theorem 4: a Vandermonde-completable orientation of the identifier edges of
// G1, for any choice of the identifier trees. Per vertex the Claim 8 targets
// are the s-offsets of consecutive incident cliques (cyclically), lowered by
// one at every position but the last to meet the (k-1)(n-1) total.
Orientation orient_G1(const AuxGraph& aux);

// Theorem 6: build the path-like G2 and orient its identifier edges by the
// paper's induction on the first edge and a private degree-1 vertex of every
// other edge.
std::pair<AuxGraph, Orientation> orient_G2_pathlike(const LinearHypergraph& h);

// Per-clique feasibility: sorted descending identifier in-degrees b_1>=b_2>=...
// must satisfy b_t <= n-t, equivalently #{deg >= n-j} <= j for all j (with the
// entry bound n-1 as the degenerate case).
bool clique_completable(const std::vector<int>& indeg, int n);

// True iff per-clique transitive tournaments can complete `o` keeping every
// total in-degree <= n-1. `o` must orient exactly the identifier instances.
bool is_vandermonde_completable(const AuxGraph& aux, const Orientation& o);

// Deterministic completion: in each clique the vertices sorted by identifier
// in-degree descending (ties by position) receive tournament in-degrees
// 0,1,...,n-1 in that order.
Orientation complete_orientation(const AuxGraph& aux, const Orientation& o);

// (-1)^t where t counts instances directed from the lexicographically smaller
// endpoint to the larger one.
int sign_of(const AuxGraph& aux, const Orientation& o);

}  // namespace efl
