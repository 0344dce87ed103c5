#include "efl/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

#include "efl/field.hpp"

namespace efl {

Family family_from_string(const std::string& s) {
    if (s == "random") return Family::Random;
    if (s == "near_pencil") return Family::NearPencil;
    if (s == "truncated_projective_plane") return Family::TruncatedProjectivePlane;
    throw std::invalid_argument("unknown family '" + s + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Random: return "random";
        case Family::NearPencil: return "near_pencil";
        case Family::TruncatedProjectivePlane: return "truncated_projective_plane";
    }
    return "?";
}

namespace {

// Rejection-sampled bounded draw; avoids the implementation-defined
// std::uniform_int_distribution so outputs are identical everywhere.
std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = g();
    } while (x >= limit);
    return x % bound;
}

LinearHypergraph from_index_edges(std::vector<std::vector<int>> edges, int pool,
                                  const std::string& prefix, int n) {
    // Vertex names by pool index; keep only used vertices, first-appearance order.
    LinearHypergraph h;
    h.n = n;
    std::vector<int> remap(pool, -1);
    for (auto& e : edges) {
        for (int& v : e) {
            if (remap[v] < 0) {
                remap[v] = h.vertex_count();
                h.vertices.push_back(prefix + std::to_string(v + 1));
            }
            v = remap[v];
        }
        std::sort(e.begin(), e.end());
        h.edges.push_back(e);
    }
    return h;
}

LinearHypergraph gen_random(int n, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("random: n must be positive");
    std::mt19937_64 rng(seed);
    const int pool = n * n;
    std::vector<std::vector<int>> edges;
    std::vector<int> scratch(pool);

    for (int e = 0; e < n; ++e) {
        int rejections = 0;
        for (;;) {
            std::iota(scratch.begin(), scratch.end(), 0);
            for (int t = 0; t < n; ++t) {
                int j = t + static_cast<int>(uniform_below(rng, pool - t));
                std::swap(scratch[t], scratch[j]);
            }
            std::vector<int> cand(scratch.begin(), scratch.begin() + n);
            std::sort(cand.begin(), cand.end());
            bool ok = true;
            for (const auto& prev : edges) {
                int inter = 0;
                for (int v : cand)
                    if (std::binary_search(prev.begin(), prev.end(), v)) ++inter;
                if (inter >= 2) { ok = false; break; }
            }
            if (ok) { edges.push_back(std::move(cand)); break; }
            if (++rejections >= 10000)
                throw std::runtime_error("random generator: gave up after 10000 rejections on edge " +
                                         std::to_string(e + 1));
        }
    }
    return from_index_edges(std::move(edges), pool, "v", n);
}

LinearHypergraph gen_near_pencil(int n) {
    if (n <= 0) throw std::invalid_argument("near_pencil: n must be positive");
    LinearHypergraph h;
    h.n = n;
    h.vertices.push_back("p");
    for (int i = 0; i < n; ++i) {
        std::vector<int> e{0};
        for (int t = 1; t < n; ++t) {
            h.vertices.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(t));
            e.push_back(h.vertex_count() - 1);
        }
        h.edges.push_back(std::move(e));
    }
    return h;
}

LinearHypergraph gen_projective(int q) {
    if (!is_prime(static_cast<std::uint64_t>(q)))
        throw std::invalid_argument("truncated_projective_plane: q must be prime");
    // Points of PG(2,q): canonical projective triples over F_q, i.e. the first
    // nonzero coordinate equals 1. Lines are kernels of the same triples.
    std::vector<std::array<int, 3>> pts;
    for (int z = 0; z < q; ++z)
        for (int y = 0; y < q; ++y) pts.push_back({1, y, z});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
    pts.push_back({0, 0, 1});

    const int n = q * q + q + 1;
    std::vector<std::vector<int>> edges;
    for (const auto& line : pts) {
        std::vector<int> e;
        for (int p = 0; p < n; ++p) {
            int dot = (line[0] * pts[p][0] + line[1] * pts[p][1] + line[2] * pts[p][2]) % q;
            if (dot == 0) e.push_back(p);
        }
        edges.push_back(std::move(e));
    }
    auto h = from_index_edges(std::move(edges), n, "P", n);
    return uniformize(h, n);
}

}  // namespace

LinearHypergraph generate(const GenParams& p, std::uint64_t seed) {
    LinearHypergraph h;
    switch (p.family) {
        case Family::Random: h = gen_random(p.n, seed); break;
        case Family::NearPencil: h = gen_near_pencil(p.n); break;
        case Family::TruncatedProjectivePlane: h = gen_projective(p.q); break;
    }
    h = uniformize(h, h.n);  // no-op for already-standard output
    auto rep = validate(h);
    if (!rep.ok()) throw std::logic_error("generator produced a non-standard hypergraph");
    return h;
}

}  // namespace efl
