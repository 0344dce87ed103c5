#include "efl/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace efl {

int LinearHypergraph::vertex_index(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices[i] == name) return i;
    return -1;
}

namespace {

bool valid_token(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')) return false;
    return true;
}

// Intersection size of two sorted index vectors.
int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int s = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++s; ++ia; ++ib; }
    }
    return s;
}

}  // namespace

LinearHypergraph parse_hypergraph(std::istream& in) {
    LinearHypergraph h;
    std::unordered_map<std::string, int> index;
    std::string line;
    int lineno = 0;
    bool seen_edge = false;
    std::optional<int> header_n;

    while (std::getline(in, line)) {
        ++lineno;
        std::string s = line;
        if (auto pos = s.find('#'); pos != std::string::npos) s = s.substr(0, pos);
        std::istringstream ls(s);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;

        if (tokens[0].rfind("n=", 0) == 0) {
            if (seen_edge || header_n) throw ParseError(lineno, "header 'n=' must appear once, before all edges");
            if (tokens.size() != 1) throw ParseError(lineno, "unexpected tokens after header");
            try {
                header_n = std::stoi(tokens[0].substr(2));
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed header '" + tokens[0] + "'");
            }
            if (*header_n <= 0) throw ParseError(lineno, "n must be positive");
            continue;
        }

        std::vector<int> edge;
        std::unordered_set<std::string> seen;
        for (const auto& t : tokens) {
            if (!valid_token(t)) throw ParseError(lineno, "invalid vertex token '" + t + "'");
            if (!seen.insert(t).second) throw ParseError(lineno, "duplicate vertex '" + t + "' in edge");
            auto [it, fresh] = index.emplace(t, static_cast<int>(h.vertices.size()));
            if (fresh) h.vertices.push_back(t);
            edge.push_back(it->second);
        }
        if (edge.empty()) throw ParseError(lineno, "empty edge");
        std::sort(edge.begin(), edge.end());
        h.edges.push_back(std::move(edge));
        seen_edge = true;
    }

    if (h.edges.empty()) throw ParseError(lineno, "no edges in input");
    h.n = header_n.value_or(h.edge_count());
    return h;
}

LinearHypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}

std::string to_text(const LinearHypergraph& h) {
    std::ostringstream out;
    out << "n=" << h.n << "\n";
    for (const auto& e : h.edges) {
        for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << h.vertices[e[k]];
        out << "\n";
    }
    return out.str();
}

ValidationReport validate(const LinearHypergraph& h) {
    ValidationReport r;
    r.is_linear = true;
    for (int i = 0; i < h.edge_count(); ++i) {
        for (int k = i + 1; k < h.edge_count(); ++k) {
            int s = intersection_size(h.edges[i], h.edges[k]);
            if (s > 1) {
                r.is_linear = false;
                r.violations.push_back({{i + 1, k + 1}, "edges intersect in " + std::to_string(s) + " vertices"});
            }
        }
    }

    r.is_uniform = true;
    for (int i = 0; i < h.edge_count(); ++i) {
        if (static_cast<int>(h.edges[i].size()) != h.n) {
            r.is_uniform = false;
            r.violations.push_back({{i + 1}, "edge size " + std::to_string(h.edges[i].size()) +
                                                 " != n=" + std::to_string(h.n)});
        }
    }

    r.is_standard_form = r.is_uniform && h.edge_count() == h.n;
    if (h.edge_count() != h.n)
        r.violations.push_back({{}, "edge count " + std::to_string(h.edge_count()) + " != n=" + std::to_string(h.n)});
    return r;
}

DegreeProfile degree_profile(const LinearHypergraph& h) {
    DegreeProfile d;
    auto by_index = degree_by_index(h);
    for (int v = 0; v < h.vertex_count(); ++v) d[h.vertices[v]] = by_index[v];
    return d;
}

std::vector<int> degree_by_index(const LinearHypergraph& h) {
    std::vector<int> d(h.vertex_count(), 0);
    for (const auto& e : h.edges)
        for (int v : e) ++d[v];
    return d;
}

LinearHypergraph dualize(const LinearHypergraph& h) {
    auto rep = validate(h);
    if (!rep.is_linear) throw std::invalid_argument("dualize: input is not linear");
    LinearHypergraph d;
    for (int i = 0; i < h.edge_count(); ++i) d.vertices.push_back(std::to_string(i + 1));
    d.edges.assign(h.vertex_count(), {});
    for (int i = 0; i < h.edge_count(); ++i)
        for (int v : h.edges[i]) d.edges[v].push_back(i);
    for (auto& e : d.edges) std::sort(e.begin(), e.end());
    d.n = d.edge_count();
    return d;
}

std::pair<LinearHypergraph, std::vector<std::string>> strip_degree_one(const LinearHypergraph& h) {
    auto deg = degree_by_index(h);
    LinearHypergraph out;
    out.n = h.n;
    std::vector<int> remap(h.vertex_count(), -1);
    std::vector<std::string> removed;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (deg[v] == 1) {
            removed.push_back(h.vertices[v]);
        } else {
            remap[v] = static_cast<int>(out.vertices.size());
            out.vertices.push_back(h.vertices[v]);
        }
    }
    for (const auto& e : h.edges) {
        std::vector<int> ne;
        for (int v : e)
            if (remap[v] >= 0) ne.push_back(remap[v]);
        out.edges.push_back(std::move(ne));  // already sorted: remap is monotone
    }
    return {out, removed};
}

LinearHypergraph uniformize(const LinearHypergraph& h, int n) {
    if (n <= 0) throw std::invalid_argument("uniformize: n must be positive");
    if (h.edge_count() > n)
        throw std::invalid_argument("uniformize: edge count " + std::to_string(h.edge_count()) +
                                    " exceeds n=" + std::to_string(n));
    for (int i = 0; i < h.edge_count(); ++i)
        if (static_cast<int>(h.edges[i].size()) > n)
            throw std::invalid_argument("uniformize: edge " + std::to_string(i + 1) + " larger than n");

    LinearHypergraph out = h;
    out.n = n;
    std::unordered_set<std::string> used(h.vertices.begin(), h.vertices.end());
    int counter = 0;
    auto fresh = [&]() {
        std::string name;
        do {
            name = "_p" + std::to_string(++counter);
        } while (used.count(name));
        used.insert(name);
        out.vertices.push_back(name);
        return static_cast<int>(out.vertices.size()) - 1;
    };

    for (auto& e : out.edges)
        while (static_cast<int>(e.size()) < n) e.push_back(fresh());  // fresh indices are increasing
    while (out.edge_count() < n) {
        std::vector<int> e;
        for (int k = 0; k < n; ++k) e.push_back(fresh());
        out.edges.push_back(std::move(e));
    }
    return out;
}

}  // namespace efl
