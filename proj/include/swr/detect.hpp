// detect.hpp - star and wheel subgraph detectors and cycle-spectrum queries.
//
// "Contains" always means subgraph, not induced subgraph.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swr/cycle_search.hpp"
#include "swr/graph.hpp"
#include "swr/structure.hpp"

namespace swr {

struct StarWitness {
    Vertex center = 0;
    VertexList leaves;
    bool operator==(const StarWitness&) const = default;
};

struct WheelWitness {
    Vertex hub = 0;
    VertexList rim;  // cyclic order
    bool operator==(const WheelWitness&) const = default;
};

struct NoneFound {
    bool operator==(const NoneFound&) const = default;
};

using Certificate = std::variant<NoneFound, StarWitness, WheelWitness>;

// Smallest vertex of degree >= leaves, with its `leaves` smallest neighbours.
inline std::optional<StarWitness> contains_star(const Graph& g, std::size_t leaves) {
    if (leaves < 1) throw std::invalid_argument("contains_star: leaf count must be at least 1");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) < leaves) continue;
        VertexList nb = g.neighbors(v);
        nb.resize(leaves);
        return StarWitness{v, std::move(nb)};
    }
    return std::nullopt;
}

// Hubs are tried in increasing index; a hub needs at least `rim` neighbours.
inline std::optional<WheelWitness> contains_wheel(const Graph& g, std::size_t rim,
                                                  const SearchLimits& limits = {}) {
    if (rim < 3) throw std::invalid_argument("contains_wheel: rim length must be at least 3");
    for (Vertex hub = 0; hub < g.order(); ++hub) {
        if (g.degree(hub) < rim) continue;
        VertexList nb = g.neighbors(hub);
        Graph local = induced_subgraph(g, nb);
        if (auto c = has_cycle_of_length(local, rim, limits)) {
            VertexList mapped;
            mapped.reserve(c->size());
            for (Vertex i : *c) mapped.push_back(nb[i]);
            return WheelWitness{hub, std::move(mapped)};
        }
    }
    return std::nullopt;
}

// Sorted list of every L in 3..order for which g has a cycle of length L.
inline std::vector<std::size_t> cycle_spectrum(const Graph& g, const SearchLimits& limits = {}) {
    std::vector<std::size_t> out;
    for (std::size_t len = 3; len <= g.order(); ++len)
        if (has_cycle_of_length(g, len, limits)) out.push_back(len);
    return out;
}

inline bool is_pancyclic(const Graph& g, const SearchLimits& limits = {}) {
    if (g.order() < 3) return false;
    return cycle_spectrum(g, limits).size() == g.order() - 2;
}

// Vacuously true for forests.
inline bool is_weakly_pancyclic(const Graph& g, const SearchLimits& limits = {}) {
    auto spectrum = cycle_spectrum(g, limits);
    if (spectrum.empty()) return true;
    return spectrum.back() - spectrum.front() + 1 == spectrum.size();
}

// ---------------------------------------------------------------------------
// Self-checks: a certificate must stand on its own against the graph.

inline bool is_valid_cycle(const Graph& g, const VertexList& cyc) {
    if (cyc.size() < 3) return false;
    VertexList sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Vertex v : cyc)
        if (v >= g.order()) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    return true;
}

inline bool validate(const Graph& g, const StarWitness& w, std::size_t leaves) {
    if (w.center >= g.order() || w.leaves.size() != leaves) return false;
    VertexList sorted = w.leaves;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Vertex v : w.leaves)
        if (v >= g.order() || v == w.center || !g.has_edge(w.center, v)) return false;
    return true;
}

inline bool validate(const Graph& g, const WheelWitness& w, std::size_t rim) {
    if (w.hub >= g.order() || w.rim.size() != rim || !is_valid_cycle(g, w.rim)) return false;
    for (Vertex v : w.rim)
        if (v == w.hub || !g.has_edge(w.hub, v)) return false;
    return true;
}

inline std::string join_vertices(const VertexList& vs, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(vs[i]);
    }
    return out;
}

inline std::string describe(const Certificate& c) {
    struct Visitor {
        std::string operator()(const NoneFound&) const { return "none"; }
        std::string operator()(const StarWitness& s) const {
            return "star center=" + std::to_string(s.center) + " leaves=" + join_vertices(s.leaves);
        }
        std::string operator()(const WheelWitness& w) const {
            return "wheel hub=" + std::to_string(w.hub) + " rim=" + join_vertices(w.rim);
        }
    };
    return std::visit(Visitor{}, c);
}

}  // namespace swr
