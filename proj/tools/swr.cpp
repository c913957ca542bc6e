// swr - command-line front end for the star/wheel Ramsey toolkit.
//
// Exit codes: 0 success/verified, 1 property failed or undecided,
// 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swr/swr.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

unsigned resolve_threads(std::optional<unsigned> flag) {
    if (flag) return std::max(1u, *flag);
    if (const char* env = std::getenv("SWR_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return swr::default_thread_count();
}

// Reads non-empty graph6 lines; throws graph6_error on the first bad one.
std::vector<swr::Graph> read_graph6_lines(std::istream& in) {
    std::vector<swr::Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        out.push_back(swr::from_graph6(line));
    }
    return out;
}

std::string format_spectrum(const std::vector<std::size_t>& lengths) {
    if (lengths.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < lengths.size();) {
        std::size_t j = i;
        while (j + 1 < lengths.size() && lengths[j + 1] == lengths[j] + 1) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(lengths[i]);
        if (j > i) out += ".." + std::to_string(lengths[j]);
        i = j + 1;
    }
    return out;
}

std::string opt_len(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_formula(std::size_t n, std::size_t m) {
    const swr::Bound b = swr::formula(n, m);
    std::cout << b.value << ' ' << swr::to_string(b.status) << ' ' << swr::to_string(b.source) << '\n';
    return kOk;
}

int cmd_construct(const std::vector<std::size_t>& witness, const std::vector<std::size_t>& regular) {
    if (witness.empty() == regular.empty()) {
        std::cerr << "construct: give exactly one of --witness <n> <m> or --regular <k> <order>\n";
        return kUsage;
    }
    const swr::Graph g = witness.empty() ? swr::regular_bounded_components(regular[0], regular[1])
                                         : swr::lower_bound_witness(witness[0], witness[1]);
    std::cout << swr::to_graph6(g) << '\n';
    return kOk;
}

int cmd_certify(std::size_t n, std::size_t m) {
    if (n < 1 || m < 3) {
        std::cerr << "certify: requires n >= 1 and m >= 3\n";
        return kUsage;
    }
    bool all_good = true;
    std::string line;
    while (std::getline(std::cin, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const swr::Graph g = swr::from_graph6(line);
        const swr::GoodnessResult r = swr::is_good_coloring(g, n, m);
        if (r.good) {
            std::cout << "good\n";
        } else {
            all_good = false;
            std::cout << "bad " << swr::describe(r.violation) << '\n';
        }
    }
    return all_good ? kOk : kFailed;
}

int cmd_search(std::size_t n, std::size_t m, std::size_t max_order, std::optional<unsigned> threads,
               bool timing) {
    swr::SearchOptions opt;
    opt.max_order = max_order;
    opt.threads = resolve_threads(threads);
    const swr::SearchReport rep = swr::compute_ramsey(n, m, opt);
    std::cout << swr::format_report(rep, timing);
    return rep.decided ? kOk : kFailed;
}

int cmd_analyze() {
    std::string line;
    while (std::getline(std::cin, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const swr::Graph g = swr::from_graph6(line);
        std::cout << "nu=" << g.order() << " edges=" << g.size() << " delta=" << swr::min_degree(g)
                  << " Delta=" << swr::max_degree(g) << " components=" << swr::components(g).size()
                  << " blocks=" << swr::blocks(g).size() << " girth=" << opt_len(swr::girth(g))
                  << " circ=" << opt_len(swr::circumference(g))
                  << " spectrum=" << format_spectrum(swr::cycle_spectrum(g)) << '\n';
    }
    return kOk;
}

int cmd_fuzz(std::size_t max_order, std::optional<std::size_t> max_degree, const std::string& corpus_file,
             std::optional<unsigned> threads, bool inject) {
    std::vector<swr::Graph> corpus;
    if (!corpus_file.empty()) {
        std::ifstream in(corpus_file);
        if (!in) {
            std::cerr << "fuzz: cannot open " << corpus_file << '\n';
            return kUsage;
        }
        corpus = read_graph6_lines(in);
    } else {
        if (max_order > 10) {
            std::cerr << "fuzz: --max-order above 10 is not supported\n";
            return kUsage;
        }
        corpus = swr::enumeration_corpus(max_order, max_degree.value_or(max_order));
    }
    swr::FuzzOptions opt;
    opt.threads = resolve_threads(threads);
    opt.inject_false_theorem = inject;
    const swr::FuzzSummary s = swr::fuzz(corpus, opt);
    std::cout << swr::format_summary(s);
    return s.failure ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Star versus wheel Ramsey numbers: formulas, constructions, certificates, search"};
    app.require_subcommand(1);

    std::size_t n = 0, m = 0;

    auto* formula = app.add_subcommand("formula", "Closed-form value of R(K_{1,n}, W_m)");
    formula->add_option("n", n, "star leaves")->required();
    formula->add_option("m", m, "wheel rim length")->required();

    std::vector<std::size_t> witness, regular;
    auto* construct = app.add_subcommand("construct", "Emit a constructed graph as graph6");
    construct->add_option("--witness", witness, "lower-bound witness for <n> <m>")->expected(2);
    construct->add_option("--regular", regular, "k-regular graph of <order> with small components")
        ->expected(2);

    auto* certify = app.add_subcommand("certify", "Check graph6 lines on stdin for goodness");
    certify->add_option("n", n)->required();
    certify->add_option("m", m)->required();

    std::size_t max_order = 12;
    std::optional<unsigned> threads;
    bool timing = false;
    auto* search = app.add_subcommand("search", "Compute R(K_{1,n}, W_m) by exhaustive search");
    search->add_option("n", n)->required();
    search->add_option("m", m)->required();
    search->add_option("--max-order", max_order, "largest order to scan")->capture_default_str();
    search->add_option("--threads", threads, "worker threads (default: SWR_THREADS or all cores)");
    search->add_flag("--timing", timing, "print elapsed milliseconds instead of '-'");

    auto* analyze = app.add_subcommand("analyze", "Structural summary of graph6 lines on stdin");

    std::size_t fuzz_order = 0;
    std::optional<std::size_t> fuzz_degree;
    std::string corpus_file;
    bool inject = false;
    auto* fuzz = app.add_subcommand("fuzz", "Run the theorem oracles over a corpus");
    fuzz->add_option("--max-order", fuzz_order, "enumerate all graphs up to this order");
    fuzz->add_option("--max-degree", fuzz_degree, "degree cap for the enumerated corpus");
    fuzz->add_option("--corpus", corpus_file, "graph6 file to use instead of enumeration");
    fuzz->add_option("--threads", threads, "worker threads");
    fuzz->add_flag("--inject-false-theorem", inject, "add a deliberately false check (test hook)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*formula) return cmd_formula(n, m);
        if (*construct) return cmd_construct(witness, regular);
        if (*certify) return cmd_certify(n, m);
        if (*search) return cmd_search(n, m, max_order, threads, timing);
        if (*analyze) return cmd_analyze();
        if (*fuzz) return cmd_fuzz(fuzz_order, fuzz_degree, corpus_file, threads, inject);
    } catch (const swr::graph6_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const swr::budget_exhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
