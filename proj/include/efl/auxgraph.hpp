#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "efl/hypergraph.hpp"

namespace efl {

enum class AuxKind { G1, G2 };

AuxKind aux_kind_from_string(const std::string& s);
std::string aux_kind_name(AuxKind k);

// Vertex (i,j) of base clique i. Indices are 0-based internally; JSON and
// diagnostics use the 1-based convention.
struct CliqueVertex {
    int clique = 0;
    int pos = 0;
    auto operator<=>(const CliqueVertex&) const = default;
};

// Spanning tree on the copies of one hypergraph vertex. Copies live in
// distinct cliques, so tree edges are stored with u.clique < v.clique.
struct IdentifierTree {
    int vertex = 0;  // hypergraph vertex index
    std::vector<std::pair<CliqueVertex, CliqueVertex>> edges;

    bool operator==(const IdentifierTree&) const = default;
};

using IdentifierTreeSet = std::vector<IdentifierTree>;

struct IdentifierEdge {
    CliqueVertex u, v;  // u < v lexicographically (u in the lower clique)
    int mult = 1;
    auto operator<=>(const IdentifierEdge&) const = default;
};

// Auxiliary graph: n disjoint base cliques K_n labelled by the edges of the
// hypergraph, plus identifier edges derived from the spanning trees. In G1
// each tree edge becomes one bundle of multiplicity n-1 between the two
// copies; in G2 it becomes the (n-1)-edge star from the copy in the lower
// clique to every vertex of the higher clique except the identified copy.
struct AuxGraph {
    AuxKind kind = AuxKind::G1;
    int n = 0;
    std::vector<std::vector<int>> labels;  // labels[i][j] = hypergraph vertex index
    IdentifierTreeSet trees;
    std::vector<IdentifierEdge> identifier_edges;

    int nvars() const { return n * n; }
    int var(int clique, int pos) const { return clique * n + pos; }
    int var(CliqueVertex c) const { return c.clique * n + c.pos; }

    // Identifier instances with multiplicity.
    int identifier_instance_count() const;
    // Clique edges plus identifier instances.
    int total_edge_count() const;

    // Position of hypergraph vertex v in clique i; -1 if absent.
    int position_of(int clique, int vertex) const;

    bool operator==(const AuxGraph&) const = default;
};

// Position of every vertex inside its edges under the fixed within-edge
// ordering (ascending vertex index, i.e. global first-appearance order).
std::vector<std::vector<CliqueVertex>> copies_by_vertex(const LinearHypergraph& h);

// Path-like trees: copies of each vertex joined in a path by increasing
// clique index.
IdentifierTreeSet default_spanning_trees(const LinearHypergraph& h);

// All tree-set choices, Cartesian product over vertices (global vertex order,
// first vertex slowest) of the labelled trees on each vertex's copies in
// Prufer-sequence lexicographic order. Truncated at `limit` (0 = no limit;
// use with care, the count is a product of Cayley numbers).
std::vector<IdentifierTreeSet> enumerate_spanning_tree_choices(const LinearHypergraph& h, std::size_t limit);

AuxGraph build_aux(const LinearHypergraph& h, const IdentifierTreeSet& trees, AuxKind kind);
AuxGraph build_aux(const LinearHypergraph& h, AuxKind kind);  // default trees

// n*C(n,2) + sum_v (d(v)-1)(n-1); equals the total degree of P1/P2 and the
// aux edge count with multiplicity.
long long expected_total_degree(const LinearHypergraph& h);

}  // namespace efl
