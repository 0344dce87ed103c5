#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "efl/field.hpp"

namespace efl {

// Exponent vector over a fixed variable universe. Entry k is the exponent of
// variable k; the clique-vertex layout maps (i,j) to i*n+j.
using ExponentVec = std::vector<int>;

inline int total_degree(const ExponentVec& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

inline bool degree_bounded(const ExponentVec& e, int bound) {
    for (int x : e)
        if (x > bound) return false;
    return true;
}

// Graded lexicographic order: total degree first, then lex on the flat index.
struct GradedLexLess {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial over a field/ring context K. Zero coefficients
// are never stored; the term map iterates in graded-lex order.
template <class K>
class SparsePoly {
public:
    using Elem = typename K::Elem;
    using TermMap = std::map<ExponentVec, Elem, GradedLexLess>;

    explicit SparsePoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
    }

    void add_term(const K& k, const ExponentVec& e, const Elem& c) {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("SparsePoly: exponent arity mismatch");
        if (k.is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = k.add(it->second, c);
            if (k.is_zero(it->second)) terms_.erase(it);
        }
    }

    static SparsePoly constant(const K& k, int nvars, const Elem& c) {
        SparsePoly p(nvars);
        p.add_term(k, ExponentVec(nvars, 0), c);
        return p;
    }

    static SparsePoly monomial(const K& k, int nvars, const ExponentVec& e, const Elem& c) {
        SparsePoly p(nvars);
        p.add_term(k, e, c);
        return p;
    }

    Elem coefficient(const K& k, const ExponentVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? k.zero() : it->second;
    }

    // Product with a hard cap on the intermediate term count.
    SparsePoly mul(const K& k, const SparsePoly& o, std::size_t max_terms) const {
        SparsePoly r(nvars_);
        ExponentVec e(nvars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                for (int v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
                r.add_term(k, e, k.mul(ca, cb));
                if (r.terms_.size() > max_terms)
                    throw std::runtime_error("SparsePoly: term budget exceeded (" + std::to_string(max_terms) + ")");
            }
        }
        return r;
    }

    Elem eval(const K& k, const std::vector<Elem>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("SparsePoly: point arity mismatch");
        Elem acc = k.zero();
        for (const auto& [e, c] : terms_) {
            Elem t = c;
            for (int v = 0; v < nvars_; ++v)
                for (int rep = 0; rep < e[v]; ++rep) t = k.mul(t, point[v]);
            acc = k.add(acc, t);
        }
        return acc;
    }

    // Coefficients are stored canonically, so raw element comparison suffices.
    bool operator==(const SparsePoly& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || !(a->second == b->second)) return false;
        return true;
    }

private:
    int nvars_;
    TermMap terms_;
};

}  // namespace efl
