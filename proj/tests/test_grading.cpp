#include "rpbs/grading.hpp"
#include "rpbs/relations.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace rpbs;

TEST(DegreeKet, Examples) {
  EXPECT_EQ(degree_ket(kVacuum), (Degree{0, 0}));
  EXPECT_EQ(degree_ket(beta(3, 2)), (Degree{1, 0}));
  EXPECT_EQ(degree_ket(alpha(1, 1)), (Degree{1, 1}));
  EXPECT_EQ(degree_ket(beta(1, 1)), (Degree{1, 1}));
}

TEST(DegreeElement, Examples) {
  const auto bf = gen(Generator::BPlus) * gen(Generator::FPlus);
  EXPECT_EQ(std::get<Degree>(degree_element(bf, kMainGrading)), (Degree{1, 1}));
  EXPECT_EQ(std::get<Degree>(degree_element(bf, kAltGrading)), (Degree{0, 1}));
  EXPECT_THROW(degree_element(FAElement(), kMainGrading), std::invalid_argument);
  const auto mixed = gen(Generator::BPlus) + gen(Generator::FPlus);
  const auto verdict = degree_element(mixed, kMainGrading);
  ASSERT_TRUE(std::holds_alternative<NonHomogeneous>(verdict));
  EXPECT_EQ(std::get<NonHomogeneous>(verdict).conflicting.size(), 2u);
}

TEST(DegreeElement, CatalogHomogeneousUnderBoth) {
  for (const auto& e : relation_catalog()) {
    if (e.element.is_zero()) continue;
    EXPECT_TRUE(is_homogeneous(e.element, kMainGrading)) << e.name;
    EXPECT_TRUE(is_homogeneous(e.element, kAltGrading)) << e.name;
  }
  EXPECT_EQ(std::get<Degree>(degree_element(named_operator(NamedOperator::T), kMainGrading)), (Degree{0, 0}));
}

TEST(DegreeElement, MonoidMorphism) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = word(draw::random_word(4)), y = word(draw::random_word(4));
    for (const auto* g : {&kMainGrading, &kAltGrading}) {
      const auto dx = std::get<Degree>(degree_element(x, *g));
      const auto dy = std::get<Degree>(degree_element(y, *g));
      EXPECT_EQ(std::get<Degree>(degree_element(x * y, *g)), dx + dy);
    }
  }
}

TEST(GradedModule, MainHoldsAltFails) {
  const RepParams P(2, 6);
  const auto main = check_graded_module(kMainGrading, P);
  EXPECT_TRUE(main.graded);
  EXPECT_GT(main.actions_checked, 0u);
  const auto alt = check_graded_module(kAltGrading, P);
  ASSERT_FALSE(alt.graded);
  const auto& c = *alt.counterexample;
  EXPECT_EQ(c.generator, Generator::FPlus);
  EXPECT_EQ(c.source, kVacuum);
  EXPECT_EQ(c.target, alpha(0, 1));
  EXPECT_EQ(c.actual, (Degree{0, 1}));
  EXPECT_EQ(c.expected, (Degree{1, 1}));
}

TEST(GradedModule, MainHoldsForSeveralP) {
  for (int p = 1; p <= 4; ++p) EXPECT_TRUE(check_graded_module(kMainGrading, RepParams(p, 5)).graded);
}

TEST(GradedModule, ModArithmetic) {
  const Degree d = degree_ket(alpha(1, 0)) + kMainGrading(Generator::BMinus);
  EXPECT_EQ(d, (Degree{0, 0}));
  EXPECT_EQ(d, degree_ket(kVacuum));
}
