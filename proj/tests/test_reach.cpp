#include "rpbs/reach.hpp"

#include <gtest/gtest.h>

using namespace rpbs;

TEST(Cyclicity, SmallCases) {
  EXPECT_TRUE(cyclicity_check(RepParams(1, 4), 0).cyclic);
  for (int p = 1; p <= 3; ++p) EXPECT_TRUE(cyclicity_check(RepParams(p, 6), 2).cyclic) << p;
  const auto w0 = cyclicity_check(RepParams(3, 0), 0);
  EXPECT_TRUE(w0.cyclic);
  EXPECT_EQ(w0.witness_words.size(), 4u);
}

TEST(Cyclicity, WordSearchIsNeeded) {
  const RepParams P(2, 4);
  const State start(alpha(1, 1));
  EXPECT_TRUE(act(Generator::BMinus, start, P).is_zero());
  EXPECT_EQ(apply_word({Generator::BMinus, Generator::FMinus}, start, P), State(kVacuum, 4));
}

TEST(Cyclicity, WitnessesReachVacuum) {
  for (int p = 1; p <= 3; ++p) {
    const RepParams P(p, 6);
    const auto r = cyclicity_check(P, 2);
    ASSERT_TRUE(r.cyclic);
    for (const auto& [ket, w] : r.witness_words) {
      for (auto g : w) EXPECT_FALSE(is_creator(g));
      EXPECT_NE(apply_word(w, State(ket), P).coefficient(kVacuum), 0) << to_string(ket);
    }
    EXPECT_EQ(r.witness_words.size(), enumerate_basis(RepParams(p, 4)).size());
  }
}

TEST(Cyclicity, SpanningWordsGenerateBlocks) {
  const RepParams P(2, 6);
  const auto r = cyclicity_check(P, 2);
  ASSERT_TRUE(r.cyclic);
  for (const auto& [mn, words] : r.spanning_words) {
    EXPECT_EQ(static_cast<int>(words.size()), block_dim(2, mn.first, mn.second));
    for (const auto& w : words) {
      for (auto g : w) EXPECT_TRUE(is_creator(g));
      const State s = apply_word(w, State(kVacuum), P);
      EXPECT_FALSE(s.is_zero());
      for (const auto& [k, c] : s.terms()) EXPECT_EQ(std::make_pair(k.m, k.n), mn);
    }
  }
}
