#include "rpbs/metric.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace rpbs;

namespace {

ExactMatrix mat(std::size_t n, std::initializer_list<long long> v) {
  ExactMatrix m(n, n);
  std::size_t i = 0;
  for (long long x : v) m(i / n, i % n) = x, ++i;
  return m;
}

Word adjoint(Word w) {
  std::reverse(w.begin(), w.end());
  for (auto& g : w) g = dagger(g);
  return w;
}

// <0| w1^dagger w2 |0> read off the vacuum component: uses only the generator action.
Rational vacuum_expectation(const Word& w1, const Word& w2, const RepParams& params) {
  Word w = adjoint(w1);
  w.insert(w.end(), w2.begin(), w2.end());
  return apply_word(w, State(kVacuum), params).coefficient(kVacuum);
}

Word random_creation_word(int max_len) {
  Word w(static_cast<std::size_t>(draw::uniform(0, max_len)));
  for (auto& g : w) g = draw::uniform(0, 1) ? Generator::BPlus : Generator::FPlus;
  return w;
}

}  // namespace

TEST(Gram, SmallExamples) {
  for (int p = 1; p <= 5; ++p) {
    const Metric M(RepParams(p, 3));
    EXPECT_EQ(M.inner(kVacuum, kVacuum), 1);
    EXPECT_EQ(M.inner(alpha(1, 0), alpha(1, 0)), p);
    const State bvac = act(Generator::BPlus, kVacuum, M.params());
    EXPECT_EQ(M.inner(bvac, bvac), p);
    Rational base = 1;
    for (int n = 0; n <= p; ++n) {
      EXPECT_EQ(M.inner(alpha(0, n), alpha(0, n)), base) << "p=" << p << " n=" << n;
      base *= Rational((n + 1) * (p - n));
    }
  }
}

TEST(Gram, FrozenBlocksAtP2) {
  const Metric M(RepParams(2, 3));
  EXPECT_EQ(M.block(1, 1).matrix, mat(2, {4, 2, 2, 2}));
  EXPECT_EQ(M.block(2, 1).matrix, mat(2, {8, 4, 4, 6}));
  EXPECT_EQ(M.block(1, 0).matrix, mat(1, {2}));
  EXPECT_EQ(M.block(0, 2).matrix, mat(1, {4}));
  EXPECT_EQ(gram_block(RepParams(2, 1), 1, 1).matrix, mat(2, {4, 2, 2, 2}));
}

TEST(Gram, DistinctBlocksAreOrthogonal) {
  const Metric M(RepParams(3, 3));
  EXPECT_EQ(M.inner(alpha(1, 1), alpha(1, 2)), 0);
  EXPECT_EQ(M.inner(alpha(2, 0), alpha(1, 0)), 0);
  EXPECT_EQ(M.inner(beta(1, 1), alpha(0, 1)), 0);
}

TEST(Gram, PositiveDefiniteAndSymmetric) {
  for (int p = 1; p <= 4; ++p) {
    const Metric M(RepParams(p, 6));
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= p; ++n) {
        const auto& g = M.block(m, n);
        EXPECT_TRUE(g.matrix.is_symmetric());
        for (const auto& minor : leading_minors(g.matrix)) EXPECT_GT(minor, 0) << p << " " << m << " " << n;
      }
  }
}

TEST(Gram, RouteIndependence) {
  for (int trial = 0; trial < 300; ++trial) {
    const int p = draw::uniform(1, 4);
    const RepParams P(p, 10);
    const Metric M(RepParams(p, 5));
    const Word w1 = random_creation_word(5), w2 = random_creation_word(5);
    const State s1 = apply_word(w1, State(kVacuum), M.params());
    const State s2 = apply_word(w2, State(kVacuum), M.params());
    EXPECT_EQ(M.inner(s1, s2), vacuum_expectation(w1, w2, P)) << to_string(w1) << " | " << to_string(w2);
  }
}

TEST(Gram, SymmetricOnRandomStates) {
  const Metric M(RepParams(3, 4));
  for (int trial = 0; trial < 100; ++trial) {
    const State u = draw::random_state(M.params(), 4), v = draw::random_state(M.params(), 4);
    EXPECT_EQ(M.inner(u, v), M.inner(v, u));
    EXPECT_GE(M.inner(u, u), 0);
  }
}

TEST(Adjointness, ExhaustiveSmallWindows) {
  for (int p = 1; p <= 4; ++p) {
    const auto r = adjointness_check(RepParams(p, 6));
    EXPECT_TRUE(r.passed) << p;
    EXPECT_GT(r.pairs_checked, 0u);
  }
  const Metric M(RepParams(2, 3));
  const State fvac = act(Generator::FPlus, kVacuum, M.params());
  EXPECT_EQ(M.inner(fvac, State(kVacuum)), 0);
  EXPECT_TRUE(act(Generator::FMinus, kVacuum, M.params()).is_zero());
}

TEST(Orthonormalize, Examples) {
  const auto one = orthonormalize(mat(1, {1}));
  EXPECT_DOUBLE_EQ(one.lower(0, 0), 1.0);

  const Metric M(RepParams(2, 2));
  const auto o = orthonormalize(M, 1, 1);
  const Eigen::MatrixXd g = M.block(1, 1).matrix.to_double();
  EXPECT_LT((o.lower * o.lower.transpose() - g).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(o.exact.diag, (std::vector<Rational>{4, 1}));
}

TEST(Orthonormalize, NegativeMinorIsReported) {
  try {
    orthonormalize(mat(2, {1, 2, 2, 1}));
    FAIL() << "expected PositivityFailure";
  } catch (const PositivityFailure& e) {
    EXPECT_EQ(e.order, 2u);
    EXPECT_EQ(e.value, -3);
  }
}
