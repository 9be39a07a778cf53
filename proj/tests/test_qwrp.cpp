#include "qsei/qwrp.hpp"

#include "qsei/errors.hpp"
#include "support/coinvariant_oracle.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace qsei {
namespace {

AlgebraElement mono(int m, int p, int r) { return AlgebraElement(NormalMonomial{m, p, r}); }

TEST(Qwrp, GeneratorsEven) {
  const GeneratorSet g = generators(Weights::make(2, 3));
  EXPECT_EQ(g.a, mono(0, 2, 1));
  EXPECT_EQ(g.c, mono(3, 0, 1));
  EXPECT_FALSE(g.b.has_value());
  EXPECT_EQ(star(g.a), g.a);
}

TEST(Qwrp, GeneratorsOdd) {
  const GeneratorSet g = generators(Weights::make(1, 1));
  EXPECT_EQ(g.a, mono(0, 2, 1));
  ASSERT_TRUE(g.b.has_value());
  EXPECT_EQ(*g.b, mono(1, 1, 1));
  EXPECT_EQ(g.c, mono(2, 0, 1));
}

TEST(Qwrp, GeneratorsAreCoinvariant) {
  for (int k = -5; k <= 6; ++k)
    for (int l = 1; l <= 6; ++l) {
      if (std::gcd(k, l) != 1) continue;
      const Weights w = Weights::make(k, l);
      const GeneratorSet g = generators(w);
      EXPECT_TRUE(is_coinvariant(w, g.a));
      EXPECT_TRUE(is_coinvariant(w, g.c));
      if (g.b) EXPECT_TRUE(is_coinvariant(w, *g.b));
    }
}

TEST(Qwrp, RelationCounts) {
  EXPECT_EQ(relations(Parity::even, 3).size(), 4u);
  EXPECT_EQ(relations(Parity::odd, 3).size(), 11u);
}

TEST(Qwrp, RelationExamples) {
  const auto disc = verify_relations(Weights::canonical(Parity::even, 1));
  EXPECT_TRUE(disc.all_pass());
  const GeneratorSet g1 = generators(Weights::canonical(Parity::even, 1));
  EXPECT_EQ(mul(g1.c, star(g1.c)), AlgebraElement(1) - g1.a);
  EXPECT_EQ(mul(star(g1.c), g1.c), AlgebraElement(1) - qpow(-2) * g1.a);

  const GeneratorSet o1 = generators(Weights::canonical(Parity::odd, 1));
  EXPECT_EQ(mul(*o1.b, star(*o1.b)), qpow(2) * mul(o1.a, AlgebraElement(1) - o1.a));

  const GeneratorSet o2 = generators(Weights::canonical(Parity::odd, 2));
  EXPECT_EQ(mul(*o2.b, *o2.b), qpow(6) * mul(o2.a, o2.c));
}

TEST(Qwrp, AllRelationsHold) {
  for (int l : {1, 3, 5, 7}) EXPECT_TRUE(verify_relations(Weights::canonical(Parity::even, l)).all_pass()) << l;
  for (int l = 1; l <= 5; ++l) EXPECT_TRUE(verify_relations(Weights::canonical(Parity::odd, l)).all_pass()) << l;
}

TEST(Qwrp, RelationsDependOnlyOnParity) {
  for (int k : {-4, 4, 6}) {
    const Weights w = Weights::make(k, 1);
    EXPECT_TRUE(verify_relations(w).all_pass()) << k;
  }
  for (int k : {-1, 3, 5}) {
    const Weights w = Weights::make(k, 2);
    EXPECT_TRUE(verify_relations(w).all_pass()) << k;
  }
}

TEST(Qwrp, BrokenRelationIsDetected) {
  // a relation with a wrong q exponent must not verify
  const GeneratorSet g = generators(Weights::canonical(Parity::even, 3));
  RelationSide lhs{0, {Factor::of(Letter::a), Factor::of(Letter::c)}};
  RelationSide rhs{-4, {Factor::of(Letter::c), Factor::of(Letter::a)}};
  EXPECT_NE(evaluate(lhs, g), evaluate(rhs, g));
}

TEST(Qwrp, FactorizeExamples) {
  const Weights w23 = Weights::make(2, 3);
  const GeneratorWord c = factorize(w23, {3, 0, 1});
  EXPECT_EQ(c.c_power, 1);
  EXPECT_EQ(c.a_power, 0);
  EXPECT_EQ(c.lambda, LaurentPoly(1));

  for (const Weights& w : {w23, Weights::make(1, 1), Weights::make(3, 2)}) {
    const GeneratorWord a = factorize(w, {0, 2, 1});
    EXPECT_EQ(a.a_power, 1);
    EXPECT_EQ(a.b_power + a.c_power, 0);
    EXPECT_EQ(a.lambda, LaurentPoly(1));
  }

  const GeneratorWord o = factorize(Weights::make(1, 1), {2, 0, 1});
  EXPECT_EQ(o.n, 2);
  EXPECT_EQ(o.t, 1);
  EXPECT_EQ(o.b_power, 0);
  EXPECT_EQ(o.a_power, 0);
  EXPECT_EQ(o.c_power, 1);
  EXPECT_EQ(o.lambda, LaurentPoly(1));
}

TEST(Qwrp, FactorizeRejects) {
  const Weights w = Weights::make(2, 3);
  EXPECT_THROW(factorize(w, {1, 0, 0}), precondition_error);
  EXPECT_THROW(factorize(w, {-3, 0, -1}), precondition_error);
}

TEST(Qwrp, LambdaIsComputedNotAssumed) {
  // b^2 moves z1 past z0: b^2 = q^-1 z0^2 z1^2 xi^2
  const Weights w = Weights::make(1, 1);
  const GeneratorWord bb = factorize(w, {2, 2, 2});
  EXPECT_EQ(bb.b_power, 2);
  EXPECT_EQ(bb.c_power, 0);
  EXPECT_EQ(bb.lambda, qpow(1));
  EXPECT_EQ(bb.lambda * value(bb, generators(w)), mono(2, 2, 2));
}

class FactorizeBox : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FactorizeBox, SoundAndComplete) {
  const auto [k, l] = GetParam();
  const Weights w = Weights::make(k, l);
  const GeneratorSet g = generators(w);
  const testing::Box box{3 * l, 6, 6};
  const auto expected = testing::degree_zero_monomials(k, l, box);
  ASSERT_FALSE(expected.empty());
  for (const NormalMonomial& m : expected) {
    const GeneratorWord word = factorize(w, m);
    ASSERT_TRUE(word.lambda.is_qpower()) << to_string(m);
    ASSERT_EQ(word.lambda * value(word, g), AlgebraElement(m)) << to_string(m);

    // the conjugate family, through the involution
    const NormalMonomial conj = star(m).terms().begin()->first;
    const GeneratorWord cw = factorize_with_conjugates(w, conj);
    ASSERT_TRUE(cw.conjugated || conj.m == 0);
    ASSERT_TRUE(cw.lambda.is_qpower());
    ASSERT_EQ(cw.lambda * value(cw, g), AlgebraElement(conj)) << to_string(conj);
  }
  EXPECT_EQ(testing::generator_word_monomials(k, l, box), expected);
}

INSTANTIATE_TEST_SUITE_P(Weights, FactorizeBox,
                         ::testing::Values(std::pair{2, 1}, std::pair{2, 3}, std::pair{4, 3}, std::pair{1, 1},
                                           std::pair{1, 2}, std::pair{3, 2}, std::pair{1, 3}));

}  // namespace
}  // namespace qsei
