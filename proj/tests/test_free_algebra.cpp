#include "rpbs/free_algebra.hpp"
#include "rpbs/relations.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace rpbs;

namespace {

const FAElement bp = gen(Generator::BPlus), bm = gen(Generator::BMinus), fp = gen(Generator::FPlus),
                fm = gen(Generator::FMinus);

}  // namespace

TEST(Laurent, ArithmeticAndEvaluation) {
  const LaurentPoly p = LaurentPoly::p();
  const LaurentPoly inv = LaurentPoly(1) / p;
  EXPECT_EQ(p * inv, LaurentPoly(1));
  EXPECT_EQ((p + LaurentPoly(rat(1, 2))).evaluate(3), rat(7, 2));
  EXPECT_EQ((LaurentPoly(2) * inv).evaluate(4), rat(1, 2));
  EXPECT_THROW(LaurentPoly(1) / (p + LaurentPoly(1)), std::domain_error);
  EXPECT_EQ(to_string(LaurentPoly(rat(1, 2)) * inv), "1/2/p");
  EXPECT_EQ(to_string(LaurentPoly::p_power(2, 3) - LaurentPoly(1)), "3*p^2 - 1");
}

TEST(Word, Examples) {
  EXPECT_EQ(word({}), FAElement::unit());
  const auto w = word({Generator::BPlus, Generator::FPlus});
  ASSERT_EQ(w.terms().size(), 1u);
  EXPECT_EQ(w.terms().begin()->first, (Word{Generator::BPlus, Generator::FPlus}));
  for (int p = 1; p <= 4; ++p) {
    const RepParams P(p, 2);
    EXPECT_EQ(evaluate(word({Generator::BMinus, Generator::BPlus}), kVacuum, P), State(kVacuum, p));
  }
}

TEST(Brackets, Examples) {
  const FAElement u = draw::random_element();
  EXPECT_TRUE(commutator(u, u).is_zero());
  EXPECT_EQ(anticommutator(bp, fp), LaurentPoly(2) * named_operator(NamedOperator::RPlus));
  const auto e = commutator(anticommutator(fm, bp), bm) + LaurentPoly(2) * fm;
  for (int p = 1; p <= 4; ++p) EXPECT_TRUE(check_identity(e, RepParams(p, 6)).holds);
}

TEST(AlgebraLaws, RandomElements) {
  for (int trial = 0; trial < 150; ++trial) {
    const auto x = draw::random_element(), y = draw::random_element(), z = draw::random_element();
    const LaurentPoly a = draw::random_scalar();
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x + y) * z, x * z + y * z);
    EXPECT_EQ(commutator(x, y), -commutator(y, x));
    EXPECT_EQ(anticommutator(x, y), anticommutator(y, x));
    EXPECT_EQ(commutator(a * x + y, z), a * commutator(x, z) + commutator(y, z));
    EXPECT_EQ(anticommutator(x, a * y + z), a * anticommutator(x, y) + anticommutator(x, z));
    EXPECT_EQ(FAElement::unit() * x, x);
    EXPECT_TRUE((x - x).is_zero());
  }
}

TEST(Evaluate, RightmostGeneratorActsFirst) {
  const RepParams P(2, 4);
  const State a = evaluate(word({Generator::FMinus, Generator::FPlus}), alpha(1, 0), P);
  const State b = act(Generator::FMinus, act(Generator::FPlus, alpha(1, 0), P), P);
  EXPECT_EQ(a, b);
  EXPECT_EQ(evaluate(fp * bp, kVacuum, P), State(alpha(1, 1)));
  EXPECT_EQ(evaluate(bp * fp, kVacuum, P), State(alpha(1, 1), -1) + State(beta(1, 1), 2));
}

TEST(Evaluate, UnitAndLemmaExamples) {
  const RepParams P(3, 6);
  const State s = State(alpha(2, 1), rat(3, 4)) + State(beta(1, 2), -2);
  EXPECT_EQ(evaluate(FAElement::unit(), s, P), s);
  const auto rp = named_operator(NamedOperator::RPlus);
  EXPECT_TRUE(evaluate(LaurentPoly(2) * rp * rp, kVacuum, P).is_zero());
  const auto e = anticommutator(rp, fm) - bp;
  for (const auto& k : enumerate_basis(RepParams(3, 5))) EXPECT_TRUE(evaluate(e, k, P).is_zero());
}

TEST(NamedOperators, Examples) {
  EXPECT_TRUE(evaluate(named_operator(NamedOperator::Nb), kVacuum, RepParams(2, 2)).is_zero());
  EXPECT_EQ(named_operator_from_string("Ns"), NamedOperator::Ns);
  EXPECT_FALSE(named_operator_from_string("Nx").has_value());
  // N_s measures the alpha/beta split: 1/2 on alpha kets of V_{1,1} at p=2.
  const RepParams P(2, 4);
  const auto ns = named_operator(NamedOperator::Ns);
  EXPECT_EQ(evaluate(ns, alpha(0, 0), P), State(alpha(0, 0), rat(1, 2)));
}

TEST(Catalog, CountsAndNames) {
  const auto tri = trilinear_relations();
  EXPECT_EQ(tri.size(), 32u);
  EXPECT_EQ(std::count_if(tri.begin(), tri.end(), [](auto& e) { return e.group == RelationGroup::MixedTrilinear; }), 24);
  EXPECT_EQ(std::count_if(tri.begin(), tri.end(), [](auto& e) { return e.group == RelationGroup::PureTrilinear; }), 8);
  const auto cat = relation_catalog();
  EXPECT_EQ(cat.size(), 36u);
  std::set<std::string> names;
  for (const auto& e : cat) names.insert(e.name);
  EXPECT_EQ(names.size(), cat.size());
  // a few pure relations such as [b+,{b+,b+}] vanish already in the free algebra
  for (const auto& e : tri) EXPECT_TRUE(e.element.is_zero() || e.element.longest_word() == 3u) << e.name;
  EXPECT_TRUE(commutator(bp, anticommutator(bp, bp)).is_zero());
}

TEST(Catalog, HoldsForSmallP) {
  for (int p = 1; p <= 4; ++p) {
    const RepParams P(p, 8);
    for (const auto& e : relation_catalog()) {
      const auto r = check_identity(e.element, P);
      EXPECT_TRUE(r.holds) << e.name << " p=" << p;
    }
  }
}

TEST(Catalog, CorruptedRelationIsCaught) {
  const auto bad = commutator(bm, anticommutator(bp, bm)) - LaurentPoly(3) * bm;
  const auto r = check_identity(bad, RepParams(2, 6));
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_FALSE(r.counterexample->image.is_zero());
}

TEST(Lemmas, ExponentOneDegeneracies) {
  EXPECT_TRUE(lemma_instance(LemmaFamily::BMinusFPlusPower, 1).element.is_zero());
  const auto rp = named_operator(NamedOperator::RPlus);
  EXPECT_EQ(lemma_instance(LemmaFamily::BPlusFPlusPower, 1).element, bp * fp + fp * bp - LaurentPoly(2) * rp);
  EXPECT_TRUE(lemma_instance(LemmaFamily::BPlusFPlusPower, 1).element.is_zero());
}

TEST(Lemmas, AllFamiliesHold) {
  for (int p = 1; p <= 4; ++p) {
    const RepParams P(p, 9);
    for (const auto& e : lemma_identities(6)) EXPECT_TRUE(check_identity(e.element, P).holds) << e.name << " p=" << p;
    for (const auto& e : auxiliary_identities()) EXPECT_TRUE(check_identity(e.element, P).holds) << e.name;
  }
}

TEST(Lemmas, CheckIdentityRefusesNarrowWindow) {
  EXPECT_THROW(check_identity(power(bp, 4), RepParams(2, 3)), std::invalid_argument);
}

TEST(Redundancy, DifferenceOfTwoRelationsIsThird) {
  const auto e1 = anticommutator(anticommutator(fp, bp), fm) - LaurentPoly(2) * bp;
  const auto e2 = anticommutator(anticommutator(bp, fm), fp) - LaurentPoly(2) * bp;
  const auto e3 = commutator(commutator(fm, fp), bp);
  EXPECT_EQ(e1 - e2, e3);
  EXPECT_NE(e1 + e2, e3);
}

TEST(MaxRise, PrefixMaximum) {
  EXPECT_EQ(max_rise(bp * bp * bm), 1);
  EXPECT_EQ(max_rise(bm * bp * bp), 2);
  EXPECT_EQ(max_rise(fp * fm), 0);
  EXPECT_EQ(max_rise(FAElement()), 0);
}
