// ramsey.hpp - R(K_{1,n}, W_m): the closed-form table, goodness
// certificates, and exact computation by exhaustive enumeration.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "swr/construct.hpp"
#include "swr/detect.hpp"
#include "swr/enumerate.hpp"
#include "swr/graph.hpp"
#include "swr/graph6.hpp"

namespace swr {

enum class BoundStatus { exact, lower_only };

enum class BoundSource {
    ThHa,         // m >= 2n
    ThHaBaAs,     // odd m <= 2n-1
    ThSuBa,       // m = 4
    ThExactly,    // even m, n+2 <= m <= 2n-2
    M6M8Remark,   // m in {6, 8}, exact by the cited literature
    ThLower,      // remaining even m: lower bound only
};

inline const char* to_string(BoundStatus s) {
    return s == BoundStatus::exact ? "exact" : "lower-only";
}

inline const char* to_string(BoundSource s) {
    switch (s) {
        case BoundSource::ThHa: return "ThHa";
        case BoundSource::ThHaBaAs: return "ThHaBaAs";
        case BoundSource::ThSuBa: return "ThSuBa";
        case BoundSource::ThExactly: return "ThExactly";
        case BoundSource::M6M8Remark: return "M6M8Remark";
        case BoundSource::ThLower: return "ThLower";
    }
    return "?";
}

struct Bound {
    std::size_t value = 0;
    BoundStatus status = BoundStatus::exact;
    BoundSource source = BoundSource::ThHa;
    bool operator==(const Bound&) const = default;
};

struct FormulaCase {
    BoundSource source;
    std::size_t value;
};

// Every case of the table that applies to (n, m), in precedence order.
inline std::vector<FormulaCase> applicable_cases(std::size_t n, std::size_t m) {
    if (n < 2) throw std::invalid_argument("formula: requires n >= 2");
    if (m < 3) throw std::invalid_argument("formula: requires m >= 3");
    std::vector<FormulaCase> out;
    const bool m_even = m % 2 == 0;
    if (m >= 2 * n) out.push_back({BoundSource::ThHa, (n % 2 == 0 && m_even) ? n + m - 1 : n + m});
    if (!m_even && m <= 2 * n - 1) out.push_back({BoundSource::ThHaBaAs, 3 * n + 1});
    if (m == 4) out.push_back({BoundSource::ThSuBa, n % 2 == 0 ? 2 * n + 1 : 2 * n + 3});
    if (m_even && m >= 6 && m + 2 <= 2 * n) {
        const std::size_t v = 2 * n + m / 2 - theta(n, m);
        if (m >= n + 2) out.push_back({BoundSource::ThExactly, v});
        if (m == 6 || m == 8) out.push_back({BoundSource::M6M8Remark, v});
        out.push_back({BoundSource::ThLower, v});
    }
    return out;
}

inline Bound formula(std::size_t n, std::size_t m) {
    const std::vector<FormulaCase> cases = applicable_cases(n, m);
    if (cases.empty()) throw std::logic_error("formula: no case covers this pair");
    for (const FormulaCase& c : cases)
        if (c.value != cases.front().value)
            throw std::logic_error("formula: overlapping cases disagree at n=" + std::to_string(n) +
                                   " m=" + std::to_string(m));
    const FormulaCase& primary = cases.front();
    return {primary.value,
            primary.source == BoundSource::ThLower ? BoundStatus::lower_only : BoundStatus::exact,
            primary.source};
}

// ---------------------------------------------------------------------------

struct GoodnessResult {
    bool good = false;
    // StarWitness in g, or WheelWitness in complement(g), when not good.
    Certificate violation = NoneFound{};
};

// Good means: no K_{1,n} in g and no W_m in its complement.
inline GoodnessResult is_good_coloring(const Graph& g, std::size_t n, std::size_t m,
                                       const SearchLimits& limits = {}) {
    if (n < 1) throw std::invalid_argument("is_good_coloring: requires n >= 1");
    if (m < 3) throw std::invalid_argument("is_good_coloring: requires m >= 3");
    if (auto s = contains_star(g, n)) return {false, *s};
    if (auto w = contains_wheel(complement(g), m, limits)) return {false, *w};
    return {true, NoneFound{}};
}

struct ArrowsResult {
    bool holds = false;
    std::optional<Graph> counterexample;  // first good graph in enumeration order
    std::uint64_t scanned = 0;
};

inline void require_ramsey_params(std::size_t n, std::size_t m) {
    if (n < 2) throw std::invalid_argument("requires n >= 2");
    if (m < 3) throw std::invalid_argument("requires m >= 3");
}

// Every graph of the given order contains K_{1,n} or has W_m in its
// complement. Only graphs with maximum degree <= n-1 need checking.
inline ArrowsResult arrows(std::size_t order, std::size_t n, std::size_t m, unsigned threads = 1,
                           const SearchLimits& limits = {}) {
    require_ramsey_params(n, m);
    DegreeBoundedEnumerator en(order, n - 1);
    ScanResult scan = find_first(
        en,
        [&](const Graph& g) { return !contains_wheel(complement(g), m, limits).has_value(); },
        threads);
    return {!scan.hit.has_value(), std::move(scan.hit), scan.scanned};
}

// ---------------------------------------------------------------------------

struct OrderResult {
    std::size_t order = 0;
    bool holds = false;
    std::uint64_t scanned = 0;
    std::optional<Graph> good_graph;
    bool from_construction = false;
    std::chrono::milliseconds elapsed{0};
};

struct SearchReport {
    std::size_t n = 0, m = 0;
    bool decided = false;
    // The Ramsey number when decided; otherwise the ceiling that was reached.
    std::size_t order = 0;
    std::vector<OrderResult> scans;  // in the order they were run
    std::optional<Graph> witness;    // a good graph of the largest order found
    std::uint64_t graphs_enumerated = 0;
    std::chrono::milliseconds elapsed{0};
};

struct SearchOptions {
    std::size_t max_order = 12;
    unsigned threads = 1;
    SearchLimits limits{};
};

namespace detail {

// A good graph of exactly `order` vertices obtained from the lower-bound
// construction (restricted to its first `order` vertices), when it applies.
inline std::optional<Graph> construction_good_graph(std::size_t order, std::size_t n,
                                                    std::size_t m, const SearchLimits& limits) {
    if (m % 2 != 0 || m < 6 || m + 2 > 2 * n) return std::nullopt;
    Graph w = lower_bound_witness(n, m);
    if (w.order() < order) return std::nullopt;
    VertexList keep;
    for (Vertex v = 0; v < order; ++v) keep.push_back(v);
    Graph g = induced_subgraph(w, keep);
    if (!is_good_coloring(g, n, m, limits).good) return std::nullopt;
    return g;
}

inline OrderResult decide_order(std::size_t order, std::size_t n, std::size_t m,
                                const SearchOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    OrderResult r;
    r.order = order;
    if (auto g = construction_good_graph(order, n, m, opt.limits)) {
        r.good_graph = std::move(g);
        r.from_construction = true;
    } else {
        ArrowsResult a = arrows(order, n, m, opt.threads, opt.limits);
        r.holds = a.holds;
        r.scanned = a.scanned;
        r.good_graph = std::move(a.counterexample);
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return r;
}

}  // namespace detail

// Smallest order N <= max_order for which arrows(N) holds. Scanning starts at
// formula(n,m)-1 (clamped to max_order); if arrows already holds there the
// scan walks down until a good graph appears, otherwise it walks up.
inline SearchReport compute_ramsey(std::size_t n, std::size_t m, const SearchOptions& opt = {}) {
    require_ramsey_params(n, m);
    const auto start = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.n = n;
    rep.m = m;
    auto record = [&](OrderResult r) {
        rep.graphs_enumerated += r.scanned;
        if (r.good_graph && (!rep.witness || rep.witness->order() < r.good_graph->order()))
            rep.witness = r.good_graph;
        rep.scans.push_back(std::move(r));
        return rep.scans.back().holds;
    };

    std::size_t at = formula(n, m).value - 1;
    at = std::max<std::size_t>(1, std::min(at, opt.max_order));
    if (record(detail::decide_order(at, n, m, opt))) {
        std::size_t lowest = at;
        while (lowest > 1 && record(detail::decide_order(lowest - 1, n, m, opt))) --lowest;
        rep.decided = true;
        rep.order = lowest;
    } else {
        rep.order = opt.max_order;
        for (std::size_t next = at + 1; next <= opt.max_order; ++next)
            if (record(detail::decide_order(next, n, m, opt))) {
                rep.decided = true;
                rep.order = next;
                break;
            }
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return rep;
}

// Line-oriented report. One line per scanned order,
//   <n> <m> <N> <outcome> <count> <elapsed_ms> [graph6 of good graph]
// with outcome arrows-holds | good-graph-found | good-graph-constructed,
// then a final line
//   result <n> <m> <N> decided|ceiling-reached
// Elapsed times print as "-" unless requested, so the default output is
// byte-stable.
inline std::string format_report(const SearchReport& rep, bool with_timing = false) {
    std::ostringstream out;
    auto ms = [&](std::chrono::milliseconds d) {
        return with_timing ? std::to_string(d.count()) : std::string("-");
    };
    for (const OrderResult& r : rep.scans) {
        out << rep.n << ' ' << rep.m << ' ' << r.order << ' '
            << (r.holds ? "arrows-holds" : r.from_construction ? "good-graph-constructed" : "good-graph-found")
            << ' ' << r.scanned << ' ' << ms(r.elapsed);
        if (r.good_graph) out << ' ' << (r.good_graph->order() <= kGraph6MaxOrder ? to_graph6(*r.good_graph) : "-");
        out << '\n';
    }
    out << "result " << rep.n << ' ' << rep.m << ' ' << rep.order << ' '
        << (rep.decided ? "decided" : "ceiling-reached");
    if (with_timing) out << ' ' << rep.elapsed.count();
    out << '\n';
    return out.str();
}

}  // namespace swr
