// structure.hpp - degree, connectivity, block and cycle-length queries.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "swr/cycle_search.hpp"
#include "swr/graph.hpp"

namespace swr {

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

inline std::size_t max_degree(const Graph& g) {
    std::size_t d = 0;
    for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

// Zero for the graph on no vertices.
inline std::size_t min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    std::size_t d = g.order();
    for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

// Components ordered by their smallest vertex; each lists vertices ascending.
inline std::vector<VertexList> components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<VertexList> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexList comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

struct Bipartition {
    VertexList x;  // contains the smallest vertex of every component
    VertexList y;
};

inline std::optional<Bipartition> is_bipartite(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? b.x : b.y).push_back(v);
    return b;
}

struct BlockDecomposition {
    std::vector<VertexList> blocks;  // each sorted; isolated vertices are singleton blocks
    VertexList cut_vertices;         // sorted
};

inline BlockDecomposition block_decomposition(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> disc(n, 0), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    BlockDecomposition out;
    std::size_t timer = 0;

    std::function<void(Vertex, Vertex, bool)> visit = [&](Vertex v, Vertex parent, bool root) {
        disc[v] = low[v] = ++timer;
        std::size_t children = 0;
        for (Vertex w : g.neighbors(v)) {
            if (!root && w == parent) continue;
            if (disc[w] == 0) {
                ++children;
                edge_stack.emplace_back(v, w);
                visit(w, v, false);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (!root) is_cut[v] = 1;
                    VertexList block;
                    while (true) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(a);
                        block.push_back(b);
                        if (a == v && b == w) break;
                    }
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    out.blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (root && children >= 2) is_cut[v] = 1;
        if (root && children == 0) out.blocks.push_back({v});
    };

    for (Vertex v = 0; v < n; ++v)
        if (disc[v] == 0) visit(v, v, true);
    std::sort(out.blocks.begin(), out.blocks.end());
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

inline std::vector<VertexList> blocks(const Graph& g) { return block_decomposition(g).blocks; }
inline VertexList cut_vertices(const Graph& g) { return block_decomposition(g).cut_vertices; }

// A graph on fewer than three vertices is not 2-connected.
inline bool is_two_connected(const Graph& g) {
    if (g.order() < 3) return false;
    if (components(g).size() != 1) return false;
    return cut_vertices(g).empty();
}

inline std::optional<std::size_t> girth(const Graph& g) {
    const std::size_t n = g.order();
    std::optional<std::size_t> best;
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), n + 1);
        dist[r] = 0;
        parent[r] = r;
        std::queue<Vertex> q;
        q.push(r);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            if (best && 2 * dist[v] + 1 >= *best) break;
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] > n) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w) {
                    std::size_t len = dist[v] + dist[w] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

// Longest cycle, searched block by block from the longest possible length
// downward.
inline std::optional<std::size_t> circumference(const Graph& g, const SearchLimits& limits = {}) {
    std::optional<std::size_t> best;
    for (const VertexList& block : blocks(g)) {
        if (block.size() < 3) continue;
        if (best && block.size() <= *best) continue;
        Graph piece = induced_subgraph(g, block);
        const std::size_t floor = best ? *best + 1 : 3;
        for (std::size_t len = block.size(); len >= floor; --len) {
            if (has_cycle_of_length(piece, len, limits)) {
                best = len;
                break;
            }
        }
    }
    return best;
}

}  // namespace swr
