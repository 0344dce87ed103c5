#pragma once

#include <json.hpp>

#include "efl/coloring.hpp"
#include "efl/hypergraph.hpp"
#include "efl/orientation.hpp"
#include "efl/polynomial.hpp"

namespace efl {

using json = nlohmann::json;

// Clique coordinates are 1-based in JSON, matching the v_{i,j} convention;
// hypergraph vertex references are 0-based indices into "vertices".

json to_json(const LinearHypergraph& h);
LinearHypergraph hypergraph_from_json(const json& j);

json to_json(const ValidationReport& r);

json to_json(const AuxGraph& g, const LinearHypergraph& h);
AuxGraph aux_from_json(const json& j);

json to_json(const Orientation& o);
Orientation orientation_from_json(const json& j);

json to_json(const Coloring& c, const LinearHypergraph& h, bool verified);
Coloring coloring_from_json(const json& j, const LinearHypergraph& h);

// Monomials as {"(i,j)": e} maps with 1-based coordinates.
json exponents_to_json(const ExponentVec& e, int n);
ExponentVec exponents_from_json(const json& j, int n);

// Loads either the line-oriented text format or the canonical JSON echo,
// sniffing on the first non-whitespace byte.
LinearHypergraph load_hypergraph(const std::string& path);
LinearHypergraph hypergraph_from_string(const std::string& content);

}  // namespace efl
