// oracles.hpp - brute-force reference implementations used only by tests.
//
// Nothing here shares code paths with the library beyond the Graph type:
// isomorphism by trying every permutation, cycles by trying every vertex
// subset in every cyclic order, classes by grouping all labeled graphs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "swr/graph.hpp"

namespace swr::oracle {

// Upper-triangle adjacency bits, (0,1),(0,2),(1,2),(0,3),...
inline std::uint64_t edge_code(const Graph& g, const std::vector<std::size_t>& perm) {
    std::uint64_t code = 0;
    std::size_t bit = 0;
    const std::size_t n = g.order();
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit)
            if (g.has_edge(inv[i], inv[j])) code |= std::uint64_t{1} << bit;
    return code;
}

// Smallest edge code over all relabelings; order <= 8 keeps this cheap.
inline std::uint64_t brute_canonical_code(const Graph& g) {
    std::vector<std::size_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, edge_code(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<std::size_t> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Number of isomorphism classes among all labeled graphs of the given order
// with maximum degree <= max_degree.
inline std::size_t labeled_class_count(std::size_t order, std::size_t max_degree) {
    const std::size_t pairs = order * (order - (order ? 1 : 0)) / 2;
    std::set<std::uint64_t> classes;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        Graph g(order);
        std::size_t bit = 0;
        for (std::size_t j = 1; j < order; ++j)
            for (std::size_t i = 0; i < j; ++i, ++bit)
                if ((code >> bit) & 1) g.add_edge(i, j);
        bool ok = true;
        for (std::size_t v = 0; v < order && ok; ++v) ok = g.degree(v) <= max_degree;
        if (ok) classes.insert(brute_canonical_code(g));
    }
    return classes.size();
}

// classes_by_max_degree(order)[d] = number of classes with maximum degree
// exactly d. One pass over all labeled graphs.
inline std::vector<std::size_t> classes_by_max_degree(std::size_t order) {
    const std::size_t pairs = order * (order - (order ? 1 : 0)) / 2;
    std::set<std::pair<std::uint64_t, std::size_t>> classes;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        Graph g(order);
        std::size_t bit = 0;
        for (std::size_t j = 1; j < order; ++j)
            for (std::size_t i = 0; i < j; ++i, ++bit)
                if ((code >> bit) & 1) g.add_edge(i, j);
        std::size_t d = 0;
        for (std::size_t v = 0; v < order; ++v) d = std::max(d, g.degree(v));
        classes.insert({brute_canonical_code(g), d});
    }
    std::vector<std::size_t> out(order ? order : 1, 0);
    for (const auto& c : classes) ++out[c.second];
    return out;
}

// Does some set of `len` vertices, in some cyclic order, form a cycle?
inline bool brute_has_cycle(const Graph& g, std::size_t len) {
    const std::size_t n = g.order();
    if (len < 3 || len > n) return false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != len) continue;
        std::vector<std::size_t> vs;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        // Fix the first vertex, permute the rest.
        do {
            bool ok = true;
            for (std::size_t i = 0; i < len && ok; ++i) ok = g.has_edge(vs[i], vs[(i + 1) % len]);
            if (ok) return true;
        } while (std::next_permutation(vs.begin() + 1, vs.end()));
    }
    return false;
}

inline std::vector<std::size_t> brute_spectrum(const Graph& g) {
    std::vector<std::size_t> out;
    for (std::size_t len = 3; len <= g.order(); ++len)
        if (brute_has_cycle(g, len)) out.push_back(len);
    return out;
}

// Wheel W_rim as a subgraph: some hub whose neighbourhood holds a C_rim.
inline bool brute_has_wheel(const Graph& g, std::size_t rim) {
    for (std::size_t hub = 0; hub < g.order(); ++hub) {
        Graph local = induced_subgraph(g, g.neighbors(hub));
        if (brute_has_cycle(local, rim)) return true;
    }
    return false;
}

inline Graph random_graph(std::size_t order, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(order);
    for (std::size_t u = 0; u < order; ++u)
        for (std::size_t v = u + 1; v < order; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace swr::oracle
