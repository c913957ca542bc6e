// cycle_search.hpp - exact search for a cycle of a prescribed length.
//
// Every cycle is found from its smallest vertex (the anchor), using only
// larger vertices. Per anchor the candidate pool is reduced to the anchor's
// component of the 2-core, then two counting bounds are applied before any
// backtracking: the pool must hold at least L vertices, and a greedy vertex
// cover of the pool must have at least ceil(L/2) vertices (a cycle C_L needs
// that many cover vertices). The backtracking itself prunes by BFS distance
// back to the anchor, by flood-fill reachability of the unvisited pool, and
// memoises dead (visited-set, endpoint) states.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "swr/graph.hpp"

namespace swr {

struct SearchLimits {
    // Backtracking nodes per call; running out is an error, never "absent".
    std::uint64_t node_budget = 100'000'000;
};

class budget_exhausted : public std::runtime_error {
public:
    explicit budget_exhausted(std::uint64_t budget)
        : std::runtime_error("cycle search exceeded node budget of " + std::to_string(budget)) {}
};

namespace detail {

class CycleFinder {
public:
    CycleFinder(const Graph& g, std::size_t length, const SearchLimits& limits)
        : g_(g), length_(length), limits_(limits) {}

    std::optional<VertexList> run() {
        const std::size_t n = g_.order();
        if (length_ > n) return std::nullopt;
        std::vector<char> in_core = two_core(std::vector<char>(n, 1));
        for (Vertex s = 0; s < n; ++s) {
            if (!in_core[s]) continue;
            std::vector<char> pool(n, 0);
            for (Vertex v = s; v < n; ++v) pool[v] = in_core[v];
            pool = two_core(std::move(pool));
            if (!pool[s]) continue;
            VertexList comp = component_of(s, pool);
            if (comp.size() < length_) continue;
            if (comp.size() > 64)
                throw std::length_error("cycle search: component of " +
                                        std::to_string(comp.size()) +
                                        " vertices exceeds the 64-vertex limit");
            if (auto found = search_anchor(comp)) return found;
        }
        return std::nullopt;
    }

private:
    // Iteratively drops vertices with fewer than two neighbours inside the pool.
    std::vector<char> two_core(std::vector<char> pool) const {
        const std::size_t n = g_.order();
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < n; ++v) {
                if (!pool[v]) continue;
                std::size_t d = 0;
                for (Vertex w : g_.neighbors(v))
                    if (pool[w] && ++d >= 2) break;
                if (d < 2) {
                    pool[v] = 0;
                    changed = true;
                }
            }
        }
        return pool;
    }

    VertexList component_of(Vertex s, const std::vector<char>& pool) const {
        std::vector<char> seen(g_.order(), 0);
        VertexList stack{s}, comp;
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g_.neighbors(v))
                if (pool[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        return comp;
    }

    static std::size_t greedy_cover_size(std::vector<std::uint64_t> adj, std::size_t stop_at) {
        std::size_t cover = 0;
        while (cover < stop_at) {
            int best = -1, best_deg = 0;
            for (std::size_t v = 0; v < adj.size(); ++v) {
                int d = std::popcount(adj[v]);
                if (d > best_deg) {
                    best_deg = d;
                    best = static_cast<int>(v);
                }
            }
            if (best < 0) break;
            const std::uint64_t keep = ~(std::uint64_t{1} << best);
            for (auto& row : adj) row &= keep;
            adj[static_cast<std::size_t>(best)] = 0;
            ++cover;
        }
        return cover;
    }

    std::optional<VertexList> search_anchor(const VertexList& comp) {
        k_ = comp.size();
        adj_.assign(k_, 0);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = i + 1; j < k_; ++j)
                if (g_.has_edge(comp[i], comp[j])) {
                    adj_[i] |= std::uint64_t{1} << j;
                    adj_[j] |= std::uint64_t{1} << i;
                }
        const std::size_t half = (length_ + 1) / 2;
        if (greedy_cover_size(adj_, half) < half) return std::nullopt;

        full_ = k_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k_) - 1;
        dist_.assign(k_, k_ + 1);
        dist_[0] = 0;
        std::vector<std::size_t> queue{0};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t v = queue[head];
            for (std::uint64_t b = adj_[v]; b; b &= b - 1) {
                auto w = static_cast<std::size_t>(std::countr_zero(b));
                if (dist_[w] > k_) {
                    dist_[w] = dist_[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dense_memo_.clear();
        sparse_memo_.clear();
        path_.assign(1, 0);
        if (!dfs(0, std::uint64_t{1}, 1)) return std::nullopt;
        VertexList out;
        out.reserve(path_.size());
        for (std::size_t local : path_) out.push_back(comp[local]);
        return out;
    }

    static constexpr std::size_t kDenseMemoLimit = 20;

    bool is_dead(std::uint64_t visited, std::size_t cur) const {
        if (k_ <= kDenseMemoLimit) {
            if (dense_memo_.empty()) return false;
            std::size_t idx = static_cast<std::size_t>(visited >> 1) * k_ + cur;
            return (dense_memo_[idx / 64] >> (idx % 64)) & 1u;
        }
        return sparse_memo_.count(State{visited, cur}) != 0;
    }

    void mark_dead(std::uint64_t visited, std::size_t cur) {
        if (k_ <= kDenseMemoLimit) {
            if (dense_memo_.empty()) dense_memo_.assign(((std::size_t{1} << (k_ - 1)) * k_ + 63) / 64, 0);
            std::size_t idx = static_cast<std::size_t>(visited >> 1) * k_ + cur;
            dense_memo_[idx / 64] |= std::uint64_t{1} << (idx % 64);
        } else if (sparse_memo_.size() < kSparseMemoCap) {
            sparse_memo_.insert(State{visited, cur});
        }
    }

    std::uint64_t flood(std::size_t from, std::uint64_t open) const {
        std::uint64_t reach = 0, frontier = adj_[from] & open;
        while (frontier) {
            reach |= frontier;
            std::uint64_t next = 0;
            for (std::uint64_t b = frontier; b; b &= b - 1)
                next |= adj_[static_cast<std::size_t>(std::countr_zero(b))];
            frontier = next & open & ~reach;
        }
        return reach;
    }

    bool dfs(std::size_t cur, std::uint64_t visited, std::size_t depth) {
        if (++nodes_ > limits_.node_budget) throw budget_exhausted(limits_.node_budget);
        if (depth == length_) return (adj_[cur] & 1u) != 0;
        const std::size_t remaining = length_ - depth;
        if (dist_[cur] > remaining + 1) return false;
        if (is_dead(visited, cur)) return false;
        const std::uint64_t open = full_ & ~visited;
        const std::uint64_t reach = flood(cur, open);
        if (static_cast<std::size_t>(std::popcount(reach)) < remaining || (reach & adj_[0]) == 0) {
            mark_dead(visited, cur);
            return false;
        }
        for (std::uint64_t b = adj_[cur] & open; b; b &= b - 1) {
            auto next = static_cast<std::size_t>(std::countr_zero(b));
            if (dist_[next] > remaining) continue;
            path_.push_back(next);
            if (dfs(next, visited | (std::uint64_t{1} << next), depth + 1)) return true;
            path_.pop_back();
        }
        mark_dead(visited, cur);
        return false;
    }

    struct State {
        std::uint64_t visited;
        std::size_t cur;
        bool operator==(const State&) const = default;
    };
    struct StateHash {
        std::size_t operator()(const State& s) const noexcept {
            return std::hash<std::uint64_t>{}(s.visited * 0x9E3779B97F4A7C15ull + s.cur);
        }
    };
    static constexpr std::size_t kSparseMemoCap = std::size_t{1} << 22;

    const Graph& g_;
    std::size_t length_;
    SearchLimits limits_;
    std::uint64_t nodes_ = 0;

    std::size_t k_ = 0;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::size_t> dist_;
    std::vector<std::size_t> path_;
    std::vector<std::uint64_t> dense_memo_;
    std::unordered_set<State, StateHash> sparse_memo_;
};

}  // namespace detail

// A cycle on exactly `length` distinct vertices, listed in cyclic order
// starting from its smallest vertex, or nullopt when none exists.
inline std::optional<VertexList> has_cycle_of_length(const Graph& g, std::size_t length,
                                                     const SearchLimits& limits = {}) {
    if (length < 3) throw std::invalid_argument("has_cycle_of_length: length must be at least 3");
    return detail::CycleFinder(g, length, limits).run();
}

}  // namespace swr
