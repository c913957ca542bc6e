// graph.hpp - simple undirected graph on dense vertex indices 0..order-1.
//
// Adjacency is stored as bit-packed rows (one 64-bit word per 64 vertices),
// so neighbourhood intersections and complement are word operations.
#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace swr {

using Vertex = std::size_t;
using VertexList = std::vector<Vertex>;

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order)
        : order_(order), words_((order + 63) / 64), bits_(order * words_, 0) {}

    std::size_t order() const noexcept { return order_; }
    std::size_t words_per_row() const noexcept { return words_; }

    std::size_t size() const noexcept {
        std::size_t twice = 0;
        for (std::uint64_t w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
        return twice / 2;
    }

    bool has_edge(Vertex u, Vertex v) const {
        check(u);
        check(v);
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("graph: self-loop " + std::to_string(u));
        bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    void remove_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
        bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    }

    std::span<const std::uint64_t> row(Vertex v) const {
        check(v);
        return {bits_.data() + v * words_, words_};
    }

    // Neighbourhood of v as a single word; only valid when order() <= 64.
    std::uint64_t row64(Vertex v) const noexcept {
        return words_ == 0 ? 0 : bits_[v * words_];
    }

    std::size_t degree(Vertex v) const {
        std::size_t d = 0;
        for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
        return d;
    }

    VertexList neighbors(Vertex v) const {
        VertexList out;
        auto r = row(v);
        for (std::size_t w = 0; w < words_; ++w) {
            for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1)
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        }
        return out;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < order_; ++u)
            for (Vertex v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check(Vertex v) const {
        if (v >= order_)
            throw std::out_of_range("graph: vertex " + std::to_string(v) + " not in [0," +
                                    std::to_string(order_) + ")");
    }

    std::size_t order_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// ---------------------------------------------------------------------------
// Named families. Labelings are part of the contract: star centre is 0,
// wheel rim is 0..m-1 in cyclic order and the hub is m.

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph path(std::size_t n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

inline Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle: length must be at least 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph star(std::size_t leaves) {
    if (leaves < 1) throw std::invalid_argument("star: needs at least one leaf");
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline Graph wheel(std::size_t rim) {
    if (rim < 3) throw std::invalid_argument("wheel: rim length must be at least 3");
    Graph g(rim + 1);
    for (Vertex v = 0; v < rim; ++v) {
        g.add_edge(v, (v + 1) % rim);
        g.add_edge(v, rim);
    }
    return g;
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

inline Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// ---------------------------------------------------------------------------
// Operations

inline Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    Graph h(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

// b's vertices are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    const std::size_t shift = a.order();
    Graph g(shift + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + shift, v + shift);
    return g;
}

// Vertices of the result are the members of `subset` in increasing order.
inline Graph induced_subgraph(const Graph& g, VertexList subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (Vertex v : subset)
        if (v >= g.order())
            throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) +
                                    " out of range");
    Graph h(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (g.has_edge(subset[i], subset[j])) h.add_edge(i, j);
    return h;
}

// Relabel so that vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw std::invalid_argument("relabel: size mismatch");
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

}  // namespace swr
