#include "rpbs/spectra.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace rpbs;

namespace {

ExactMatrix mat2(Rational a, Rational b, Rational c, Rational d) {
  ExactMatrix m(2, 2);
  m(0, 0) = a, m(0, 1) = b, m(1, 0) = c, m(1, 1) = d;
  return m;
}

// Diagonal oracle: w_b m + w_f n over the K-block kets, ascending.
std::vector<double> diagonal_oracle(int p, int K, double wb, double wf) {
  std::vector<double> out;
  for (int n = 0; n <= std::min(K, p); ++n) {
    const int m = K - n;
    for (int i = 0; i < block_dim(p, m, n); ++i) out.push_back(wb * m + wf * n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HamiltonianParams params(double wb, double wf, double lambda) {
  HamiltonianParams h;
  h.omega_b = wb;
  h.omega_f = wf;
  h.lambda = lambda;
  return h;
}

}  // namespace

TEST(TOperator, FrozenBlocks) {
  const auto t = named_operator(NamedOperator::T);
  EXPECT_EQ(materialize(t, RepParams(2, 5), block_kets(2, 1, 1)), mat2(-2, 0, 4, 2));
  EXPECT_EQ(materialize(t, RepParams(3, 5), block_kets(3, 1, 1)), mat2(rat(-5, 2), rat(5, 6), rat(15, 2), rat(5, 2)));
}

TEST(TOperator, LadderReport) {
  for (int p = 2; p <= 3; ++p) {
    const auto r = t_ladder_report(RepParams(p, 7));
    EXPECT_TRUE(r.block_preserving) << r.detail;
    EXPECT_TRUE(r.interchanges_all_2d) << r.detail;
    EXPECT_GT(r.two_dim_blocks, 0u);
    for (const auto& b : r.blocks) {
      if (b.matrix.rows() == 1) {
        EXPECT_TRUE(b.matrix.is_zero());
      }
    }
  }
  const auto p1 = t_ladder_report(RepParams(1, 6));
  EXPECT_TRUE(p1.block_preserving);
  EXPECT_EQ(p1.two_dim_blocks, 0u);
}

TEST(Materialize, Examples) {
  const RepParams P(3, 6);
  const auto fp = gen(Generator::FPlus);
  EXPECT_TRUE(materialize(fp, P, block_kets(3, 2, 3)).is_zero());
  EXPECT_THROW(materialize(fp, P, block_kets(3, 2, 1)), BlockEscape);
  const auto number = named_operator(NamedOperator::Nb) + named_operator(NamedOperator::Nf);
  for (int K = 0; K <= 4; ++K) {
    const auto kets = k_block_kets(P, K);
    EXPECT_EQ(materialize(number, P, kets), Rational(K) * ExactMatrix::identity(kets.size()));
  }
}

TEST(KBlock, Dimension) {
  for (int p = 1; p <= 4; ++p)
    for (int K = 0; K <= 6; ++K) {
      std::size_t expect = 0;
      for (int n = 0; n <= std::min(K, p); ++n) ++expect;
      for (int n = 1; n <= std::min(p - 1, K - 1); ++n) ++expect;
      EXPECT_EQ(k_block_kets(RepParams(p, 6), K).size(), expect);
    }
}

TEST(Hamiltonian, ExpandedForm) {
  const Rational wb = rat(3, 2), wf = rat(1, 3), lam = rat(-2, 5);
  const auto bp = gen(Generator::BPlus), bm = gen(Generator::BMinus), fp = gen(Generator::FPlus),
             fm = gen(Generator::FMinus);
  const LaurentPoly half(rat(1, 2));
  const FAElement expanded = half * LaurentPoly(wb) * anticommutator(bp, bm) +
                             half * LaurentPoly(wf) * commutator(fp, fm) +
                             LaurentPoly((wf - wb) / 2) * LaurentPoly::p() * FAElement::unit() +
                             half * LaurentPoly(lam) * (anticommutator(bm, fp) + anticommutator(bp, fm));
  EXPECT_EQ(hamiltonian_exact(wb, wf, lam), expanded);
}

TEST(Hamiltonian, VacuumAndConservation) {
  const auto H = hamiltonian_exact(rat(3, 2), rat(7, 3), rat(1, 5));
  const auto number = named_operator(NamedOperator::Nb) + named_operator(NamedOperator::Nf);
  for (int p = 1; p <= 4; ++p) {
    const RepParams P(p, 8);
    EXPECT_TRUE(evaluate(H, kVacuum, P).is_zero());
    for (int K = 0; K <= 5; ++K) {
      const auto kets = k_block_kets(P, K);
      EXPECT_NO_THROW(materialize(H, P, kets));
      EXPECT_TRUE(materialize(commutator(H, number), P, kets).is_zero()) << "p=" << p << " K=" << K;
    }
  }
}

TEST(Spectrum, DiagonalOracleAtZeroCoupling) {
  const auto s = spectrum(2, params(1.0, 1.5, 0.0), 2);
  EXPECT_EQ(s.eigenvalues, (std::vector<double>{2.0, 2.5, 2.5, 3.0}));
  for (int p = 1; p <= 4; ++p)
    for (int K = 0; K <= 5; ++K)
      for (auto [wb, wf] : {std::pair{1.0, 1.0}, {1.0, 1.5}, {0.3, 2.7}}) {
        EXPECT_EQ(spectrum(p, params(wb, wf, 0.0), K).eigenvalues, diagonal_oracle(p, K, wb, wf));
      }
  EXPECT_EQ(spectrum(3, params(1.0, 1.0, 0.4), 0).eigenvalues, std::vector<double>{0.0});
}

TEST(Spectrum, HermitianInOrthonormalBasis) {
  for (int trial = 0; trial < 60; ++trial) {
    const int p = draw::uniform(1, 4), K = draw::uniform(0, 6);
    const auto h = params(draw::uniform(-20, 20) / 7.0, draw::uniform(-20, 20) / 3.0,
                          draw::uniform(-30, 30) / 11.0);
    const Metric M(RepParams(p, K + 1));
    const auto ob = orthonormal_hamiltonian(M, hamiltonian(h), K);
    EXPECT_LT(ob.asymmetry, 1e-12) << "p=" << p << " K=" << K;
  }
}

TEST(Spectrum, WeylBoundForSmallCoupling) {
  const double lam = 1e-6;
  for (int p = 1; p <= 4; ++p)
    for (int K = 1; K <= 5; ++K) {
      const auto coupling = spectrum(p, params(0.0, 0.0, 1.0), K).eigenvalues;
      const double norm = std::max(std::abs(coupling.front()), std::abs(coupling.back()));
      const auto e0 = spectrum(p, params(1.0, 1.3, 0.0), K).eigenvalues;
      const auto e1 = spectrum(p, params(1.0, 1.3, lam), K).eigenvalues;
      for (std::size_t i = 0; i < e0.size(); ++i) EXPECT_LE(std::abs(e1[i] - e0[i]), lam * norm + 1e-12);
    }
}

TEST(Spectrum, LinearInCouplingWhenResonant) {
  // w_b = w_f: H = K id + lambda V on the K-block, so eigenvalues move linearly.
  const double lam = 1e-6;
  for (int p = 2; p <= 4; ++p)
    for (int K = 1; K <= 5; ++K) {
      const auto e0 = spectrum(p, params(1.0, 1.0, 0.0), K).eigenvalues;
      const auto e1 = spectrum(p, params(1.0, 1.0, lam), K).eigenvalues;
      const auto e2 = spectrum(p, params(1.0, 1.0, 2 * lam), K).eigenvalues;
      for (std::size_t i = 0; i < e0.size(); ++i) EXPECT_NEAR(e2[i] - e0[i], 2 * (e1[i] - e0[i]), 1e-12);
    }
}

TEST(Evolve, NormPreserved) {
  std::vector<double> times;
  for (int i = 0; i <= 500; ++i) times.push_back(0.1 * i);
  for (int p = 1; p <= 4; ++p)
    for (int K = 1; K <= 4; ++K) {
      const Metric M(RepParams(p, K + 1));
      const auto kets = k_block_kets(M.params(), K);
      State init;
      for (std::size_t i = 0; i < kets.size(); ++i) init.add(kets[i], rat(static_cast<long long>(i) + 1, 3));
      const auto tr = evolve(M, params(1.0, 1.7, 0.35), K, init, times);
      for (double n : tr.norms) EXPECT_NEAR(n, 1.0, 1e-10);
    }
}

TEST(Evolve, StationaryAtZeroCoupling) {
  const Metric M(RepParams(3, 4));
  const std::vector<double> times{0.0, 0.5, 3.0, 17.25, 50.0};
  for (const auto& k : k_block_kets(M.params(), 3)) {
    if (k.tag != Tag::Alpha) continue;
    const auto tr = evolve(M, params(1.0, 1.5, 0.0), 3, State(k, 5), times);
    const auto idx = static_cast<std::size_t>(std::find(tr.kets.begin(), tr.kets.end(), k) - tr.kets.begin());
    for (const auto& amp : tr.amplitudes) EXPECT_NEAR(std::norm(amp[idx]), 1.0, 1e-12);
  }
}

TEST(Evolve, PopulationStaysInBlockAndMoves) {
  const Metric M(RepParams(2, 4));
  std::vector<double> times;
  for (int i = 0; i <= 100; ++i) times.push_back(0.25 * i);
  const auto tr = evolve(M, params(1.0, 1.0, 0.5), 3, State(alpha(3, 0)), times);
  for (const auto& k : tr.kets) EXPECT_EQ(k.m + k.n, 3);
  double left = 0.0;
  for (const auto& amp : tr.amplitudes) left = std::max(left, 1.0 - std::norm(amp[0]));
  EXPECT_GT(left, 0.1);
  EXPECT_THROW(evolve(M, params(1, 1, 0.5), 3, State(alpha(1, 1)), times), std::invalid_argument);
}
