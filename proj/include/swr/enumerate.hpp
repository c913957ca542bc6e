// enumerate.hpp - isomorph-free generation of graphs with a degree cap.
//
// Canonical augmentation by vertex addition. A child C = P + v (v joined to
// a subset S of the parent's vertices, in increasing bitmask order over the
// vertices that still have spare degree) is accepted iff
//   1. v maximises the invariant (degree, sum of neighbour degrees),
//   2. deleting the designated vertex of C (the invariant-maximal vertex at
//      the last canonical position) leaves a graph isomorphic to P, and
//   3. no isomorphic child of the same parent was accepted before.
// Each isomorphism class then has exactly one accepted parent class and one
// accepted child per parent, so the depth-first order of accepted graphs is
// a deterministic function of (order, max_degree).
#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "swr/canonical.hpp"
#include "swr/graph.hpp"

namespace swr {

class DegreeBoundedEnumerator {
public:
    DegreeBoundedEnumerator(std::size_t order, std::size_t max_degree)
        : order_(order), max_degree_(max_degree) {
        if (order > 64) throw std::length_error("enumerate: order exceeds 64");
    }

    std::size_t order() const noexcept { return order_; }
    std::size_t max_degree() const noexcept { return max_degree_; }

    // Calls visit(g) for every accepted graph of the target order below
    // `node` (node itself when it already has the target order). Stops early
    // and returns false once visit returns false.
    template <class Visit>
    bool for_each_below(const Graph& node, Visit&& visit) const {
        if (node.order() == order_) return visit(node);
        bool keep_going = true;
        children(node, [&](Graph child) {
            keep_going = for_each_below(child, visit);
            return keep_going;
        });
        return keep_going;
    }

    template <class Visit>
    bool for_each(Visit&& visit) const { return for_each_below(Graph(0), std::forward<Visit>(visit)); }

    std::vector<Graph> all() const {
        std::vector<Graph> out;
        for_each([&](const Graph& g) {
            out.push_back(g);
            return true;
        });
        return out;
    }

    // Accepted nodes of the search tree, expanded level by level until there
    // are at least `min_units` of them or the target order is reached. Their
    // order matches the serial depth-first order.
    std::vector<Graph> frontier(std::size_t min_units) const {
        std::vector<Graph> level{Graph(0)};
        while (level.front().order() < order_ && level.size() < min_units) {
            std::vector<Graph> next;
            for (const Graph& g : level)
                children(g, [&](Graph child) {
                    next.push_back(std::move(child));
                    return true;
                });
            if (next.empty()) break;
            level = std::move(next);
        }
        return level;
    }

    // Emits accepted children of `parent` in order; on_child returns false to stop.
    template <class OnChild>
    void children(const Graph& parent, OnChild&& on_child) const {
        const std::size_t p = parent.order();
        VertexList spare;
        for (Vertex v = 0; v < p; ++v)
            if (parent.degree(v) < max_degree_) spare.push_back(v);
        if (spare.size() > 62) throw std::length_error("enumerate: too many augmentation choices");

        std::optional<std::vector<std::uint64_t>> parent_rows;
        std::set<std::vector<std::uint64_t>> accepted;
        const std::uint64_t limit = std::uint64_t{1} << spare.size();
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            const auto chosen = static_cast<std::size_t>(std::popcount(mask));
            if (chosen > max_degree_) continue;
            Graph child(p + 1);
            for (auto [a, b] : parent.edges()) child.add_edge(a, b);
            for (std::uint64_t b = mask; b; b &= b - 1)
                child.add_edge(spare[static_cast<std::size_t>(std::countr_zero(b))], p);

            std::vector<std::uint64_t> inv = invariant(child);
            const std::uint64_t top = *std::max_element(inv.begin(), inv.end());
            if (inv[p] != top) continue;

            CanonicalForm cf = canonical_form(child);
            Vertex designated = p;
            for (std::size_t i = cf.labeling.size(); i-- > 0;)
                if (inv[cf.labeling[i]] == top) {
                    designated = cf.labeling[i];
                    break;
                }
            if (designated != p) {
                if (!parent_rows) parent_rows = canonical_form(parent).rows;
                VertexList rest;
                for (Vertex v = 0; v <= p; ++v)
                    if (v != designated) rest.push_back(v);
                if (canonical_form(induced_subgraph(child, rest)).rows != *parent_rows) continue;
            }
            if (!accepted.insert(cf.rows).second) continue;
            if (!on_child(std::move(child))) return;
        }
    }

private:
    static std::vector<std::uint64_t> invariant(const Graph& g) {
        const std::size_t n = g.order();
        std::vector<std::uint64_t> deg(n), out(n);
        for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
        for (Vertex v = 0; v < n; ++v) {
            std::uint64_t sum = 0;
            for (std::uint64_t b = g.row64(v); b; b &= b - 1)
                sum += deg[static_cast<std::size_t>(std::countr_zero(b))];
            out[v] = (deg[v] << 16) | sum;
        }
        return out;
    }

    std::size_t order_;
    std::size_t max_degree_;
};

// One representative per isomorphism class of graphs on `order` vertices
// with maximum degree <= max_degree, in the enumerator's deterministic order.
inline std::vector<Graph> enumerate_degree_bounded(std::size_t order, std::size_t max_degree) {
    return DegreeBoundedEnumerator(order, max_degree).all();
}

inline unsigned default_thread_count() {
    unsigned t = std::thread::hardware_concurrency();
    return t == 0 ? 1 : t;
}

struct ScanResult {
    // Graphs examined in serial order up to and including the hit (all
    // graphs when there is no hit).
    std::uint64_t scanned = 0;
    std::optional<Graph> hit;
};

// First graph (in serial enumeration order) satisfying `pred`. Subtrees of a
// fixed frontier are scanned by `threads` workers; the reported hit and
// count do not depend on the worker count. Exceptions from `pred` abort the
// scan and are rethrown.
template <class Pred>
ScanResult find_first(const DegreeBoundedEnumerator& en, Pred pred, unsigned threads) {
    constexpr std::size_t kUnits = 64;
    const std::vector<Graph> units = en.frontier(kUnits);
    struct UnitResult {
        std::uint64_t scanned = 0;
        std::optional<Graph> hit;
    };
    std::vector<UnitResult> results(units.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{units.size()};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load()) {
            const std::size_t u = next.fetch_add(1);
            if (u >= units.size() || u > best.load()) return;
            try {
                UnitResult& r = results[u];
                en.for_each_below(units[u], [&](const Graph& g) {
                    ++r.scanned;
                    if (pred(g)) {
                        r.hit = g;
                        return false;
                    }
                    return !failed.load() && u <= best.load();
                });
                if (r.hit) {
                    std::size_t cur = best.load();
                    while (u < cur && !best.compare_exchange_weak(cur, u)) {}
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };

    threads = std::max(1u, threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    ScanResult out;
    const std::size_t winner = best.load();
    for (std::size_t u = 0; u < units.size() && u <= winner; ++u) out.scanned += results[u].scanned;
    if (winner < units.size()) out.hit = results[winner].hit;
    return out;
}

}  // namespace swr
