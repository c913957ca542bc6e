// construct.hpp - regular graphs with bounded components and the
// star/wheel lower-bound witness.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "swr/graph.hpp"

namespace swr {

// Vertex i adjacent to i±1, ..., i±offsets (mod order).
inline Graph circulant(std::size_t order, std::size_t offsets) {
    if (order < 2 * offsets + 1)
        throw std::invalid_argument("circulant: order " + std::to_string(order) +
                                    " must be at least 2*offsets+1 = " +
                                    std::to_string(2 * offsets + 1));
    Graph g(order);
    for (Vertex i = 0; i < order; ++i)
        for (std::size_t d = 1; d <= offsets; ++d) g.add_edge(i, (i + d) % order);
    return g;
}

inline void require_regular_parity(std::size_t k, std::size_t n, const char* who) {
    if (k % 2 == 1 && n % 2 == 1)
        throw std::invalid_argument(std::string(who) + ": degree " + std::to_string(k) +
                                    " and order " + std::to_string(n) +
                                    " are both odd; k or n must be even");
}

// k-regular graph of order n for k+1 <= n <= 2k+1: a circulant for even k,
// the complement of an (n-1-k)-regular circulant for odd k.
inline Graph regular_small(std::size_t k, std::size_t n) {
    if (n < k + 1 || n > 2 * k + 1)
        throw std::invalid_argument("regular_small: order " + std::to_string(n) +
                                    " outside [k+1, 2k+1] = [" + std::to_string(k + 1) + ", " +
                                    std::to_string(2 * k + 1) + "]");
    require_regular_parity(k, n, "regular_small");
    if (k % 2 == 0) return circulant(n, k / 2);
    return complement(circulant(n, (n - 1 - k) / 2));
}

// Component orders used by regular_bounded_components, in assembly order.
inline std::vector<std::size_t> regular_component_orders(std::size_t k, std::size_t n) {
    if (n < k + 1)
        throw std::invalid_argument("regular_bounded_components: order " + std::to_string(n) +
                                    " must be at least k+1 = " + std::to_string(k + 1));
    require_regular_parity(k, n, "regular_bounded_components");
    if (n <= 2 * k + 1) return {n};

    std::vector<std::size_t> parts;
    if (k % 2 == 0) {
        const std::size_t big = 2 * k + 1, q = n / big, r = n % big;
        if (r == 0) {
            parts.assign(q, big);
        } else if (r >= k + 1) {
            parts.assign(q, big);
            parts.push_back(r);
        } else {  // 1 <= r <= k
            parts.assign(q - 1, big);
            parts.push_back(k + 1);
            parts.push_back(k + r);
        }
    } else {
        const std::size_t big = 2 * k, q = n / big, r = n % big;
        if (r % 2 != 0) throw std::logic_error("regular_bounded_components: odd remainder");
        if (r == 0) {
            parts.assign(q, big);
        } else if (r >= k + 1) {
            parts.assign(q, big);
            parts.push_back(r);
        } else {  // 2 <= r <= k-1
            parts.assign(q - 1, big);
            parts.push_back(k + 1);
            parts.push_back(k + r - 1);
        }
    }
    return parts;
}

// k-regular graph of order n whose every component has order <= 2k+1.
inline Graph regular_bounded_components(std::size_t k, std::size_t n) {
    Graph g;
    for (std::size_t part : regular_component_orders(k, n))
        g = disjoint_union(g, regular_small(k, part));
    return g;
}

// 1 iff both n and m/2 are even.
inline unsigned theta(std::size_t n, std::size_t m) {
    if (m % 2 != 0) throw std::invalid_argument("theta: m must be even");
    return (n % 2 == 0 && (m / 2) % 2 == 0) ? 1u : 0u;
}

inline void require_lower_bound_range(std::size_t n, std::size_t m) {
    if (m % 2 != 0) throw std::invalid_argument("lower bound construction: m must be even");
    if (m < 6) throw std::invalid_argument("lower bound construction: requires 6 <= m");
    if (m + 2 > 2 * n)
        throw std::invalid_argument("lower bound construction: requires m <= 2n-2 (m=" +
                                    std::to_string(m) + ", 2n-2=" +
                                    std::to_string(2 * n >= 2 ? 2 * n - 2 : 0) + ")");
}

// Order of the (m/2-1)-regular graph H inside the witness.
inline std::size_t witness_regular_order(std::size_t n, std::size_t m) {
    return n + m / 2 - theta(n, m) - 1;
}

// complement(H) on vertices 0..|H|-1 followed by K_n, where H is the
// (m/2-1)-regular graph with components of order <= m-1. No vertex reaches
// degree n and the complement has no W_m.
inline Graph lower_bound_witness(std::size_t n, std::size_t m) {
    require_lower_bound_range(n, m);
    const std::size_t k = m / 2 - 1;
    const std::size_t h_order = witness_regular_order(n, m);
    if (k % 2 != 0 && h_order % 2 != 0)
        throw std::logic_error("lower_bound_witness: neither m/2-1 nor the order of H is even");
    const Graph h = regular_bounded_components(k, h_order);
    return disjoint_union(complement(h), complete(n));
}

}  // namespace swr
