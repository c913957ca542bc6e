#include <gtest/gtest.h>

#include "swr/graph6.hpp"
#include "swr/theorems.hpp"

using namespace swr;

TEST(Dirac, Examples) {
    const Verdict k5 = check_dirac(complete(5));
    EXPECT_EQ(k5.status, VerdictStatus::conclusion_holds);
    EXPECT_EQ(k5.witness.size(), 5u);
    EXPECT_EQ(check_dirac(path(5)).status, VerdictStatus::hypothesis_not_met);
    EXPECT_EQ(check_dirac(complete_bipartite(2, 5)).status, VerdictStatus::conclusion_holds);
    EXPECT_EQ(check_dirac(cycle(7)).status, VerdictStatus::conclusion_holds);
}

TEST(Brandt, Examples) {
    EXPECT_EQ(check_brandt(complete(4)).status, VerdictStatus::conclusion_holds);
    EXPECT_EQ(check_brandt(complete_bipartite(3, 3)).status, VerdictStatus::hypothesis_not_met);
    EXPECT_EQ(check_brandt(cycle(5)).status, VerdictStatus::hypothesis_not_met);
    EXPECT_EQ(check_brandt(wheel(5)).status, VerdictStatus::conclusion_holds);  // 3*3 >= 6+2
}

TEST(Jackson, Examples) {
    const Graph k33 = complete_bipartite(3, 3);
    const Verdict v = check_jackson(k33, {0, 1, 2}, {3, 4, 5});
    EXPECT_EQ(v.status, VerdictStatus::conclusion_holds);
    EXPECT_EQ(v.witness.size(), 6u);
    EXPECT_EQ(check_jackson(complete_bipartite(2, 2), {0, 1}, {2, 3}).status,
              VerdictStatus::conclusion_holds);
    // |Y| = 4 needs d(x) >= 3 for every x.
    EXPECT_EQ(check_jackson(complete_bipartite(2, 4), {0, 1}, {2, 3, 4, 5}).status,
              VerdictStatus::conclusion_holds);
    EXPECT_EQ(check_jackson(cycle(6), {0, 2, 4}, {1, 3, 5}).status, VerdictStatus::hypothesis_not_met);
    EXPECT_EQ(check_jackson(k33, {0, 3}, {1, 2, 4, 5}).status, VerdictStatus::hypothesis_not_met);
    EXPECT_EQ(check_jackson(k33, {0}, {1, 2, 3, 4, 5}).status, VerdictStatus::hypothesis_not_met);
}

TEST(Construction, Verified) {
    EXPECT_EQ(verify_construction(4, 6).status, VerdictStatus::conclusion_holds);
    EXPECT_EQ(verify_construction(6, 8).status, VerdictStatus::conclusion_holds);
    EXPECT_THROW(verify_construction(3, 6), std::invalid_argument);
}

TEST(Bipartitions, BothOrientationsPerComponentFlip) {
    const auto parts = all_bipartitions(disjoint_union(path(2), path(2)));
    EXPECT_EQ(parts.size(), 4u);
    EXPECT_TRUE(all_bipartitions(cycle(5)).empty());
}

TEST(Fuzz, EmptyCorpus) {
    const FuzzSummary s = fuzz({});
    EXPECT_EQ(s.graphs, 0u);
    EXPECT_FALSE(s.failure);
    ASSERT_EQ(s.tallies.size(), 3u);
    for (const auto& [name, t] : s.tallies) { EXPECT_EQ(t, Tally{}); }
    EXPECT_EQ(format_summary(s),
              "graphs 0\n"
              "theorem dirac hypothesis-not-met=0 conclusion-holds=0 counterexamples=0\n"
              "theorem brandt hypothesis-not-met=0 conclusion-holds=0 counterexamples=0\n"
              "theorem jackson hypothesis-not-met=0 conclusion-holds=0 counterexamples=0\n"
              "total-counterexamples 0\n");
}

TEST(Fuzz, SmallCorpusAllHold) {
    const auto corpus = enumeration_corpus(6, 5);
    ASSERT_EQ(corpus.size(), 1u + 2 + 4 + 11 + 34 + 156);
    const FuzzSummary s = fuzz(corpus);
    EXPECT_FALSE(s.failure);
    EXPECT_EQ(s.graphs, corpus.size());
    for (const auto& [name, t] : s.tallies) {
        EXPECT_EQ(t.counterexamples, 0u) << name;
        EXPECT_GT(t.holds, 0u) << name;
    }
    FuzzOptions par;
    par.threads = 3;
    const FuzzSummary p = fuzz(corpus, par);
    EXPECT_EQ(format_summary(p), format_summary(s));
}

TEST(Fuzz, InjectedFalseTheoremIsCaught) {
    FuzzOptions opt;
    opt.inject_false_theorem = true;
    const auto corpus = enumeration_corpus(5, 4);
    const FuzzSummary s = fuzz(corpus, opt);
    ASSERT_TRUE(s.failure);
    EXPECT_EQ(s.failure->theorem, "false-dirac");
    // K_3 is the first 2-connected graph in the corpus.
    EXPECT_EQ(s.failure->graph6, to_graph6(complete(3)));
    EXPECT_EQ(s.graphs, s.failure->corpus_index + 1);
    opt.threads = 4;
    EXPECT_EQ(format_summary(fuzz(corpus, opt)), format_summary(s));
}
