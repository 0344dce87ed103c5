#pragma once

#include <cstdint>
#include <string>

#include "efl/hypergraph.hpp"

namespace efl {

enum class Family { Random, NearPencil, TruncatedProjectivePlane };

Family family_from_string(const std::string& s);
std::string family_name(Family f);

struct GenParams {
    Family family = Family::Random;
    int n = 0;  // random / near_pencil
    int q = 0;  // truncated_projective_plane (prime)
};

// Deterministic generators; every output is linear and standard form.
//
// random: edges sampled one at a time as n-subsets of an n^2 vertex pool,
// rejecting any edge that meets an existing one in >= 2 vertices; gives up
// after 10000 rejections for a single edge.
//
// near_pencil: one vertex common to all n edges, the rest disjoint.
//
// truncated_projective_plane: the q^2+q+1 lines of PG(2,q) over F_q (prime q),
// padded to (q^2+q+1)-uniform standard form.
LinearHypergraph generate(const GenParams& p, std::uint64_t seed);

}  // namespace efl
