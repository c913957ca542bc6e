// theorems.hpp - executable hypothesis => conclusion checks for classical
// cycle theorems, the lower-bound construction check, and a corpus fuzzer.
//
// Degree conditions with halves or thirds are compared in cleared-denominator
// integer form.
#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "swr/construct.hpp"
#include "swr/detect.hpp"
#include "swr/enumerate.hpp"
#include "swr/graph.hpp"
#include "swr/graph6.hpp"
#include "swr/structure.hpp"

namespace swr {

enum class VerdictStatus { hypothesis_not_met, conclusion_holds, counterexample };

inline const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::hypothesis_not_met: return "hypothesis-not-met";
        case VerdictStatus::conclusion_holds: return "conclusion-holds";
        case VerdictStatus::counterexample: return "counterexample";
    }
    return "?";
}

struct Verdict {
    VerdictStatus status = VerdictStatus::hypothesis_not_met;
    std::string detail;      // reason, or the violated clause for counterexamples
    VertexList witness;      // cycle supporting the conclusion, when there is one
    std::optional<Graph> counterexample;

    static Verdict not_met(std::string why) { return {VerdictStatus::hypothesis_not_met, std::move(why), {}, {}}; }
    static Verdict holds(std::string what, VertexList w = {}) {
        return {VerdictStatus::conclusion_holds, std::move(what), std::move(w), {}};
    }
    static Verdict violated(const Graph& g, std::string clause) {
        return {VerdictStatus::counterexample, std::move(clause), {}, g};
    }
};

// 2-connected G has circumference >= min(2 delta, order).
inline Verdict check_dirac(const Graph& g, const SearchLimits& limits = {}) {
    if (!is_two_connected(g)) return Verdict::not_met("not 2-connected");
    const std::size_t need = std::min(2 * min_degree(g), g.order());
    const std::size_t c = circumference(g, limits).value_or(0);
    if (c < need)
        return Verdict::violated(g, "circumference " + std::to_string(c) + " < min(2*delta, nu) = " +
                                        std::to_string(need));
    return Verdict::holds("circumference " + std::to_string(c) + " >= " + std::to_string(need),
                          *has_cycle_of_length(g, c, limits));
}

// Non-bipartite G with 3*delta >= order+2 is weakly pancyclic with girth 3 or 4.
inline Verdict check_brandt(const Graph& g, const SearchLimits& limits = {}) {
    if (is_bipartite(g)) return Verdict::not_met("bipartite");
    if (3 * min_degree(g) < g.order() + 2) return Verdict::not_met("3*delta < nu+2");
    const auto gi = girth(g);
    if (!gi || *gi > 4) return Verdict::violated(g, "girth not in {3,4}");
    if (!is_weakly_pancyclic(g, limits)) return Verdict::violated(g, "not weakly pancyclic");
    return Verdict::holds("weakly pancyclic, girth " + std::to_string(*gi));
}

// Bipartite G with sides X, Y, 2 <= |X| <= |Y|, every x in X having
// d(x) >= max(|X|, |Y|/2 + 1), has a cycle through all of X.
inline Verdict check_jackson(const Graph& g, const VertexList& x, const VertexList& y,
                             const SearchLimits& limits = {}) {
    const std::size_t n = g.order();
    std::vector<int> side(n, -1);
    for (Vertex v : x) {
        if (v >= n || side[v] != -1) return Verdict::not_met("X is not a vertex subset");
        side[v] = 0;
    }
    for (Vertex v : y) {
        if (v >= n || side[v] != -1) return Verdict::not_met("X and Y overlap");
        side[v] = 1;
    }
    if (x.size() + y.size() != n) return Verdict::not_met("X and Y do not cover V");
    for (auto [a, b] : g.edges())
        if (side[a] == side[b]) return Verdict::not_met("edge inside a side");
    if (x.size() < 2 || x.size() > y.size()) return Verdict::not_met("needs 2 <= |X| <= |Y|");
    for (Vertex v : x) {
        const std::size_t d = g.degree(v);
        if (d < x.size() || 2 * d < y.size() + 2) return Verdict::not_met("degree condition fails");
    }
    const std::size_t len = 2 * x.size();
    auto cyc = has_cycle_of_length(g, len, limits);
    if (!cyc) return Verdict::violated(g, "no cycle of length 2|X| = " + std::to_string(len));
    // In a bipartite graph a cycle of length 2|X| alternates sides, so it
    // holds exactly |X| vertices of X; check that explicitly anyway.
    for (Vertex v : x)
        if (std::find(cyc->begin(), cyc->end(), v) == cyc->end())
            return Verdict::violated(g, "cycle misses a vertex of X");
    return Verdict::holds("cycle through X of length " + std::to_string(len), std::move(*cyc));
}

// Mechanical check of the lower-bound construction for (n, m): its order,
// no K_{1,n}, no W_m in the complement, and components of H below order m.
inline Verdict verify_construction(std::size_t n, std::size_t m, const SearchLimits& limits = {}) {
    require_lower_bound_range(n, m);
    const Graph g = lower_bound_witness(n, m);
    const std::size_t expected = 2 * n + m / 2 - theta(n, m) - 1;
    if (g.order() != expected)
        return Verdict::violated(g, "order " + std::to_string(g.order()) + " != 2n+m/2-theta-1 = " +
                                        std::to_string(expected));
    if (auto s = contains_star(g, n)) return Verdict::violated(g, "contains " + describe(*s));
    if (auto w = contains_wheel(complement(g), m, limits))
        return Verdict::violated(g, "complement contains " + describe(*w));
    VertexList h_vertices;
    for (Vertex v = 0; v < witness_regular_order(n, m); ++v) h_vertices.push_back(v);
    const Graph h = complement(induced_subgraph(g, h_vertices));
    for (const VertexList& c : components(h))
        if (c.size() + 1 > m)
            return Verdict::violated(g, "component of H of order " + std::to_string(c.size()) +
                                            " >= m");
    return Verdict::holds("order " + std::to_string(expected) +
                          ", no K_{1,n}, complement has no W_m, H components < m");
}

// ---------------------------------------------------------------------------
// Fuzzing

struct Tally {
    std::uint64_t not_met = 0, holds = 0, counterexamples = 0;
    void add(VerdictStatus s) {
        if (s == VerdictStatus::hypothesis_not_met) ++not_met;
        else if (s == VerdictStatus::conclusion_holds) ++holds;
        else ++counterexamples;
    }
    Tally& operator+=(const Tally& o) {
        not_met += o.not_met;
        holds += o.holds;
        counterexamples += o.counterexamples;
        return *this;
    }
    bool operator==(const Tally&) const = default;
};

struct FuzzFailure {
    std::string theorem;
    std::string clause;
    std::string graph6;
    std::size_t corpus_index = 0;
};

struct FuzzSummary {
    std::uint64_t graphs = 0;
    std::vector<std::pair<std::string, Tally>> tallies;  // one entry per theorem, fixed order
    std::optional<FuzzFailure> failure;
};

struct FuzzOptions {
    unsigned threads = 1;
    SearchLimits limits{};
    // Adds the claim "2-connected G has c(G) >= 2 delta", which is false
    // (K_3 already breaks it); exercises the failure path end to end.
    bool inject_false_theorem = false;
};

// Every bipartition of a bipartite graph: each component may be flipped, the
// component of vertex 0 fixed. Both orientations of each are returned.
inline std::vector<std::pair<VertexList, VertexList>> all_bipartitions(const Graph& g) {
    std::vector<std::pair<VertexList, VertexList>> out;
    auto base = is_bipartite(g);
    if (!base || g.order() == 0) return out;
    std::vector<int> side(g.order(), 1);
    for (Vertex v : base->x) side[v] = 0;
    const auto comps = components(g);
    if (comps.size() > 20) throw std::length_error("all_bipartitions: too many components");
    for (std::uint64_t flip = 0; flip < (std::uint64_t{1} << (comps.size() - 1)); ++flip) {
        VertexList x, y;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const bool f = c > 0 && ((flip >> (c - 1)) & 1);
            for (Vertex v : comps[c]) ((side[v] == 0) != f ? x : y).push_back(v);
        }
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        out.emplace_back(x, y);
        out.emplace_back(y, x);
    }
    return out;
}

namespace detail {

struct ItemOutcome {
    std::vector<Tally> tallies;
    std::optional<FuzzFailure> failure;
};

inline std::vector<std::string> fuzz_theorem_names(const FuzzOptions& opt) {
    std::vector<std::string> names{"dirac", "brandt", "jackson"};
    if (opt.inject_false_theorem) names.push_back("false-dirac");
    return names;
}

inline ItemOutcome fuzz_one(const Graph& g, std::size_t index, const FuzzOptions& opt) {
    ItemOutcome out;
    out.tallies.resize(fuzz_theorem_names(opt).size());
    auto note = [&](std::size_t t, const char* name, const Verdict& v) {
        out.tallies[t].add(v.status);
        if (v.status == VerdictStatus::counterexample && !out.failure)
            out.failure = FuzzFailure{name, v.detail, to_graph6(g), index};
    };
    note(0, "dirac", check_dirac(g, opt.limits));
    note(1, "brandt", check_brandt(g, opt.limits));
    for (const auto& [x, y] : all_bipartitions(g)) note(2, "jackson", check_jackson(g, x, y, opt.limits));
    if (opt.inject_false_theorem) {
        Verdict v = Verdict::not_met("not 2-connected");
        if (is_two_connected(g)) {
            const std::size_t c = circumference(g, opt.limits).value_or(0);
            v = c >= 2 * min_degree(g) ? Verdict::holds("c >= 2 delta")
                                       : Verdict::violated(g, "circumference " + std::to_string(c) +
                                                                  " < 2*delta");
        }
        note(3, "false-dirac", v);
    }
    return out;
}

}  // namespace detail

// Runs every check over the corpus. The first counterexample (by corpus
// index) ends the run; tallies then cover the items up to and including it.
inline FuzzSummary fuzz(const std::vector<Graph>& corpus, const FuzzOptions& opt = {}) {
    const auto names = detail::fuzz_theorem_names(opt);
    std::vector<detail::ItemOutcome> outcomes(corpus.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_bad{corpus.size()};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= corpus.size() || i > first_bad.load()) return;
            try {
                outcomes[i] = detail::fuzz_one(corpus[i], i, opt);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                first_bad = 0;
                return;
            }
            if (outcomes[i].failure) {
                std::size_t cur = first_bad.load();
                while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {}
            }
        }
    };
    const unsigned threads = std::max(1u, opt.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    FuzzSummary s;
    for (const auto& name : names) s.tallies.emplace_back(name, Tally{});
    const std::size_t end = std::min(corpus.size(), first_bad.load() + 1);
    for (std::size_t i = 0; i < end; ++i) {
        ++s.graphs;
        for (std::size_t t = 0; t < names.size(); ++t) s.tallies[t].second += outcomes[i].tallies[t];
    }
    if (first_bad.load() < corpus.size()) s.failure = outcomes[first_bad.load()].failure;
    return s;
}

// Corpus of all graphs with order min_order..max_order (and degree cap).
inline std::vector<Graph> enumeration_corpus(std::size_t max_order, std::size_t max_degree,
                                             std::size_t min_order = 1) {
    std::vector<Graph> corpus;
    for (std::size_t order = min_order; order <= max_order; ++order)
        DegreeBoundedEnumerator(order, max_degree).for_each([&](const Graph& g) {
            corpus.push_back(g);
            return true;
        });
    return corpus;
}

inline std::string format_summary(const FuzzSummary& s) {
    std::ostringstream out;
    out << "graphs " << s.graphs << '\n';
    std::uint64_t bad = 0;
    for (const auto& [name, t] : s.tallies) {
        out << "theorem " << name << " hypothesis-not-met=" << t.not_met
            << " conclusion-holds=" << t.holds << " counterexamples=" << t.counterexamples << '\n';
        bad += t.counterexamples;
    }
    if (s.failure)
        out << "counterexample " << s.failure->theorem << ' ' << s.failure->graph6 << ' '
            << s.failure->clause << '\n';
    out << "total-counterexamples " << bad << '\n';
    return out.str();
}

}  // namespace swr
