#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace efl {

// A linear hypergraph: named vertices plus edges given as sorted vertex-index
// sets. `n` is the declared uniformity / edge-count parameter. "Standard form"
// means m = n and every edge has size n.
struct LinearHypergraph {
    std::vector<std::string> vertices;   // first-appearance order
    std::vector<std::vector<int>> edges; // each sorted ascending
    int n = 0;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    int vertex_index(const std::string& name) const;  // -1 if absent

    bool operator==(const LinearHypergraph&) const = default;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Map vertex name -> degree.
using DegreeProfile = std::map<std::string, int>;

struct Violation {
    std::vector<int> edges;  // 1-based edge indices; empty for global violations
    std::string reason;
};

struct ValidationReport {
    bool is_linear = false;
    bool is_uniform = false;
    bool is_standard_form = false;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Line-oriented text format: '#' comments, blank lines ignored, optional
// leading "n=<int>" header, otherwise one edge of whitespace-separated vertex
// tokens per line.
LinearHypergraph parse_hypergraph(std::istream& in);
LinearHypergraph parse_hypergraph(const std::string& text);
std::string to_text(const LinearHypergraph& h);

ValidationReport validate(const LinearHypergraph& h);

DegreeProfile degree_profile(const LinearHypergraph& h);
std::vector<int> degree_by_index(const LinearHypergraph& h);

// Dual hypergraph: one vertex per edge of h (named "1".."m"), one edge H_v per
// vertex v of h. Linearity of h guarantees linearity of the dual.
LinearHypergraph dualize(const LinearHypergraph& h);

// Single-pass removal of all degree-1 vertices. Edge identities are kept
// (edges may shrink or become empty).
std::pair<LinearHypergraph, std::vector<std::string>> strip_degree_one(const LinearHypergraph& h);

// Pad every edge to size n with fresh "_p<k>" vertices and append fresh
// disjoint edges until m = n. Output is standard form.
LinearHypergraph uniformize(const LinearHypergraph& h, int n);

}  // namespace efl
