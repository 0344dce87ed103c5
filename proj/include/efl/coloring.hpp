#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efl/auxgraph.hpp"
#include "efl/families.hpp"
#include "efl/hypergraph.hpp"

namespace efl {

// Vertex colors aligned with h.vertices; -1 marks an uncolored vertex.
struct Coloring {
    std::vector<int> colors;

    bool operator==(const Coloring&) const = default;
    bool total() const {
        for (int c : colors)
            if (c < 0) return false;
        return true;
    }
};

// True iff the colors within every edge are pairwise distinct.
bool verify_coloring(const LinearHypergraph& h, const Coloring& c);

// Deterministic backtracking: vertices in index order, colors 0..k-1 ascending.
std::optional<Coloring> brute_force_coloring(const LinearHypergraph& h, int k);

struct DecodeResult {
    std::optional<Coloring> coloring;
    std::string rejection;  // violated property when empty coloring: "P1" or "P2"
};

// Evaluate P at a {0,..,n-1} point (over F_n for P1, over Q for P2) and decode
// the per-vertex colors if it is nonzero.
DecodeResult coloring_from_point(const AuxGraph& aux, const std::vector<int>& point, PolyKind kind);

// Pruned grid search for a point where P does not vanish. The target is only
// validated (maximal degree, (n-1)-bounded); a nonzero coefficient there is
// the caller's evidence that the search cannot exhaust.
std::optional<std::vector<int>> nonvanishing_search(const AuxGraph& aux, PolyKind kind, const ExponentVec& target);

// Greedy extension of a proper coloring of strip_degree_one(h) back to h: each
// removed degree-1 vertex takes the smallest color unused in its unique edge.
Coloring extend_coloring(const LinearHypergraph& h, const LinearHypergraph& derived, const Coloring& c, int n);

}  // namespace efl
