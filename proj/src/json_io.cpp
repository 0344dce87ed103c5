#include "efl/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace efl {

namespace {

json cv_to_json(CliqueVertex c) { return json::array({c.clique + 1, c.pos + 1}); }

CliqueVertex cv_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("bad clique vertex");
    return {j[0].get<int>() - 1, j[1].get<int>() - 1};
}

}  // namespace

json to_json(const LinearHypergraph& h) {
    json j;
    j["n"] = h.n;
    j["vertices"] = h.vertices;
    j["edges"] = h.edges;
    return j;
}

LinearHypergraph hypergraph_from_json(const json& j) {
    LinearHypergraph h;
    h.n = j.at("n").get<int>();
    h.vertices = j.at("vertices").get<std::vector<std::string>>();
    h.edges = j.at("edges").get<std::vector<std::vector<int>>>();
    if (h.n <= 0) throw std::invalid_argument("hypergraph JSON: n must be positive");
    for (auto& e : h.edges) {
        std::sort(e.begin(), e.end());
        for (int v : e)
            if (v < 0 || v >= h.vertex_count()) throw std::invalid_argument("hypergraph JSON: vertex index out of range");
    }
    return h;
}

json to_json(const ValidationReport& r) {
    json j;
    j["is_linear"] = r.is_linear;
    j["is_uniform"] = r.is_uniform;
    j["is_standard_form"] = r.is_standard_form;
    j["violations"] = json::array();
    for (const auto& v : r.violations) j["violations"].push_back({{"edges", v.edges}, {"reason", v.reason}});
    return j;
}

json to_json(const AuxGraph& g, const LinearHypergraph& h) {
    json j;
    j["kind"] = aux_kind_name(g.kind);
    j["n"] = g.n;
    j["labels"] = g.labels;
    j["vertices"] = h.vertices;
    j["tree_edges"] = json::array();
    for (const auto& t : g.trees)
        for (const auto& [u, v] : t.edges)
            j["tree_edges"].push_back({{"vertex", t.vertex}, {"u", cv_to_json(u)}, {"v", cv_to_json(v)}});
    j["identifier_edges"] = json::array();
    for (const auto& e : g.identifier_edges)
        j["identifier_edges"].push_back({{"u", cv_to_json(e.u)}, {"v", cv_to_json(e.v)}, {"mult", e.mult}});
    return j;
}

AuxGraph aux_from_json(const json& j) {
    AuxGraph g;
    g.kind = aux_kind_from_string(j.at("kind").get<std::string>());
    g.n = j.at("n").get<int>();
    g.labels = j.at("labels").get<std::vector<std::vector<int>>>();
    std::map<int, IdentifierTree> trees;
    for (const auto& te : j.at("tree_edges")) {
        int v = te.at("vertex").get<int>();
        trees[v].vertex = v;
        trees[v].edges.emplace_back(cv_from_json(te.at("u")), cv_from_json(te.at("v")));
    }
    for (auto& [v, t] : trees) g.trees.push_back(std::move(t));
    for (const auto& ie : j.at("identifier_edges"))
        g.identifier_edges.push_back({cv_from_json(ie.at("u")), cv_from_json(ie.at("v")), ie.at("mult").get<int>()});
    return g;
}

json to_json(const Orientation& o) {
    json j;
    j["includes_clique_edges"] = o.includes_clique_edges;
    j["instances"] = json::array();
    for (const auto& inst : o.instances)
        j["instances"].push_back({{"u", cv_to_json(inst.u)},
                                  {"v", cv_to_json(inst.v)},
                                  {"copy", inst.copy},
                                  {"head", cv_to_json(inst.head)}});
    return j;
}

Orientation orientation_from_json(const json& j) {
    Orientation o;
    o.includes_clique_edges = j.at("includes_clique_edges").get<bool>();
    for (const auto& inst : j.at("instances"))
        o.instances.push_back({cv_from_json(inst.at("u")), cv_from_json(inst.at("v")), inst.at("copy").get<int>(),
                               cv_from_json(inst.at("head"))});
    return o;
}

json to_json(const Coloring& c, const LinearHypergraph& h, bool verified) {
    json colors = json::object();
    for (int v = 0; v < h.vertex_count(); ++v)
        if (c.colors[v] >= 0) colors[h.vertices[v]] = c.colors[v];
    return json{{"coloring", colors}, {"verified", verified}};
}

Coloring coloring_from_json(const json& j, const LinearHypergraph& h) {
    Coloring c;
    c.colors.assign(h.vertex_count(), -1);
    for (const auto& [name, col] : j.at("coloring").items()) {
        int v = h.vertex_index(name);
        if (v < 0) throw std::invalid_argument("coloring JSON: unknown vertex '" + name + "'");
        c.colors[v] = col.get<int>();
    }
    return c;
}

json exponents_to_json(const ExponentVec& e, int n) {
    json j = json::object();
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < n; ++p)
            if (e[i * n + p] != 0)
                j["(" + std::to_string(i + 1) + "," + std::to_string(p + 1) + ")"] = e[i * n + p];
    return j;
}

ExponentVec exponents_from_json(const json& j, int n) {
    ExponentVec e(n * n, 0);
    for (const auto& [key, val] : j.items()) {
        int i = 0, p = 0;
        if (std::sscanf(key.c_str(), "(%d,%d)", &i, &p) != 2 || i < 1 || i > n || p < 1 || p > n)
            throw std::invalid_argument("monomial JSON: bad variable key '" + key + "'");
        e[(i - 1) * n + (p - 1)] = val.get<int>();
    }
    return e;
}

LinearHypergraph hypergraph_from_string(const std::string& content) {
    for (char ch : content) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return hypergraph_from_json(json::parse(content));
        break;
    }
    return parse_hypergraph(content);
}

LinearHypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return hypergraph_from_string(buf.str());
}

}  // namespace efl
