// canonical.hpp - canonical labeling for graphs of order <= 64.
//
// Individualisation-refinement: the ordered partition is refined to an
// equitable one, then the first non-singleton cell is split vertex by
// vertex. Each discrete leaf gives a relabeled adjacency matrix; the
// canonical form is the lexicographically largest one over the whole search
// tree. Two sound prunings keep symmetric graphs cheap:
//   * a leaf equal to the first (or best) leaf exposes an automorphism, and
//     the search backjumps to where the two paths diverged;
//   * automorphisms found against the first leaf fix the common prefix, so
//     their orbits prune sibling choices along the first path.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "swr/graph.hpp"

namespace swr {

struct CanonicalForm {
    // rows[i] bit j set iff canonical vertices i and j are adjacent.
    std::vector<std::uint64_t> rows;
    // labeling[i] = original vertex placed at canonical position i.
    VertexList labeling;
};

namespace detail {

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()), adj_(g.order()) {
        if (n_ > 64) throw std::length_error("canonical_form: order exceeds 64");
        for (Vertex v = 0; v < n_; ++v) adj_[v] = g.row64(v);
    }

    CanonicalForm run() {
        CanonicalForm out;
        if (n_ == 0) return out;
        Cells root;
        root.push_back(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1);
        refine(root);
        std::vector<std::size_t> trail;
        search(root, trail, true);
        out.rows = best_rows_;
        out.labeling.assign(best_lab_.begin(), best_lab_.end());
        return out;
    }

private:
    using Cells = std::vector<std::uint64_t>;

    struct Orbits {
        std::vector<std::size_t> parent;
        explicit Orbits(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
        std::size_t find(std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        }
        void unite(std::size_t a, std::size_t b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    };

    // Repeatedly split every cell by neighbour counts into a splitter cell,
    // restarting from the first splitter after any split. The procedure only
    // looks at the ordered partition, so it commutes with relabeling.
    void refine(Cells& cells) const {
        std::size_t s = 0;
        while (s < cells.size()) {
            const std::uint64_t splitter = cells[s];
            bool split_any = false;
            Cells next;
            next.reserve(n_);
            for (std::uint64_t cell : cells) {
                if (std::popcount(cell) == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::uint64_t by_count[65] = {};
                int distinct = 0;
                for (std::uint64_t b = cell; b; b &= b - 1) {
                    auto v = static_cast<std::size_t>(std::countr_zero(b));
                    auto c = std::popcount(adj_[v] & splitter);
                    if (by_count[c] == 0) ++distinct;
                    by_count[c] |= std::uint64_t{1} << v;
                }
                if (distinct == 1) {
                    next.push_back(cell);
                    continue;
                }
                split_any = true;
                for (int c = 0; c <= 64; ++c)
                    if (by_count[c]) next.push_back(by_count[c]);
            }
            cells.swap(next);
            s = split_any ? 0 : s + 1;
        }
    }

    void leaf(const Cells& cells, const std::vector<std::size_t>& trail) {
        std::vector<std::size_t> lab(n_), pos(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            lab[i] = static_cast<std::size_t>(std::countr_zero(cells[i]));
            pos[lab[i]] = i;
        }
        std::vector<std::uint64_t> rows(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::uint64_t b = adj_[lab[i]]; b; b &= b - 1)
                rows[i] |= std::uint64_t{1} << pos[static_cast<std::size_t>(std::countr_zero(b))];

        if (first_lab_.empty()) {
            first_lab_ = best_lab_ = lab;
            first_rows_ = best_rows_ = rows;
            first_trail_ = best_trail_ = trail;
            level_orbits_.assign(trail.size() + 1, Orbits(n_));
            return;
        }
        if (rows == first_rows_) {
            const std::size_t k = common_prefix(trail, first_trail_);
            for (std::size_t d = 0; d <= k && d < level_orbits_.size(); ++d)
                for (std::size_t i = 0; i < n_; ++i) level_orbits_[d].unite(first_lab_[i], lab[i]);
            backjump_ = static_cast<long>(k);
            return;
        }
        if (rows == best_rows_) {
            backjump_ = static_cast<long>(common_prefix(trail, best_trail_));
            return;
        }
        if (rows > best_rows_) {
            best_rows_ = std::move(rows);
            best_lab_ = std::move(lab);
            best_trail_ = trail;
        }
    }

    static std::size_t common_prefix(const std::vector<std::size_t>& a,
                                     const std::vector<std::size_t>& b) {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        return k;
    }

    void search(const Cells& cells, std::vector<std::size_t>& trail, bool on_first_path) {
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (std::popcount(cells[i]) > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            leaf(cells, trail);
            return;
        }
        const std::size_t depth = trail.size();
        std::vector<std::size_t> explored;
        bool first_child = true;
        for (std::uint64_t b = cells[target]; b; b &= b - 1) {
            auto w = static_cast<std::size_t>(std::countr_zero(b));
            if (on_first_path && !first_child && depth < level_orbits_.size()) {
                Orbits& orb = level_orbits_[depth];
                const std::size_t rep = orb.find(w);
                bool seen = false;
                for (std::size_t e : explored)
                    if (orb.find(e) == rep) {
                        seen = true;
                        break;
                    }
                if (seen) continue;
            }
            explored.push_back(w);
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i == target) {
                    child.push_back(std::uint64_t{1} << w);
                    child.push_back(cells[i] & ~(std::uint64_t{1} << w));
                } else {
                    child.push_back(cells[i]);
                }
            }
            refine(child);
            trail.push_back(w);
            search(child, trail, on_first_path && first_child);
            trail.pop_back();
            first_child = false;
            if (backjump_ >= 0) {
                if (static_cast<std::size_t>(backjump_) < depth) return;
                backjump_ = -1;
            }
        }
    }

    std::size_t n_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::size_t> first_lab_, best_lab_;
    std::vector<std::uint64_t> first_rows_, best_rows_;
    std::vector<std::size_t> first_trail_, best_trail_;
    std::vector<Orbits> level_orbits_;
    long backjump_ = -1;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) { return detail::Canonizer(g).run(); }

inline Graph canonical_graph(const Graph& g) {
    CanonicalForm cf = canonical_form(g);
    Graph h(g.order());
    for (std::size_t i = 0; i < cf.rows.size(); ++i)
        for (std::uint64_t b = cf.rows[i] & ~((std::uint64_t{2} << i) - 1); b; b &= b - 1)
            h.add_edge(i, static_cast<std::size_t>(std::countr_zero(b)));
    return h;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a).rows == canonical_form(b).rows;
}

}  // namespace swr
