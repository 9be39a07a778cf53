#include "qsei/grading.hpp"

#include "qsei/errors.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace qsei {
namespace {

using namespace gen;
using testing::Random;

TEST(Grading, Weights) {
  const Weights e = Weights::make(2, 3);
  EXPECT_EQ(e.parity, Parity::even);
  EXPECT_EQ(e.s, 1);
  const Weights o = Weights::make(3, 2);
  EXPECT_EQ(o.parity, Parity::odd);
  EXPECT_EQ(o.s, 2);
  EXPECT_EQ(Weights::make(-1, 2).parity, Parity::odd);
  EXPECT_EQ(Weights::make(-1, 2).s, 0);
  EXPECT_THROW(Weights::make(2, 4), precondition_error);
  EXPECT_THROW(Weights::make(1, 0), precondition_error);
  EXPECT_EQ(Weights::canonical(Parity::odd, 4).k, 1);
  EXPECT_THROW(Weights::canonical(Parity::even, 4), precondition_error);
}

TEST(Grading, Parity) {
  EXPECT_EQ(parse_parity("even"), Parity::even);
  EXPECT_EQ(parse_parity("+"), Parity::even);
  EXPECT_EQ(parse_parity("odd"), Parity::odd);
  EXPECT_EQ(parse_parity("-"), Parity::odd);
  EXPECT_THROW(parse_parity("neither"), precondition_error);
}

TEST(Grading, Degree) {
  const Weights w = Weights::make(2, 3);
  EXPECT_EQ(degree(w, {1, 0, 0}), 2);
  EXPECT_EQ(degree(w, {3, 0, 1}), 0);
  EXPECT_EQ(degree(w, {-1, 0, 0}), -2);
  for (int k : {1, 2, 3, 5})
    for (int l : {1, 2, 7})
      if (std::gcd(k, l) == 1) EXPECT_EQ(degree(Weights::make(k, l), {0, 2, 1}), 0);
}

TEST(Grading, CoinvariantPart) {
  const Weights w = Weights::make(2, 3);
  EXPECT_EQ(coinvariant_part(w, A() + z0()), A());
  EXPECT_EQ(coinvariant_part(w, AlgebraElement(1)), AlgebraElement(1));
  EXPECT_TRUE(coinvariant_part(w, z0()).is_zero());
  EXPECT_TRUE(is_coinvariant(w, A()));
  EXPECT_FALSE(is_coinvariant(w, A() + z0()));
}

TEST(GradingProperty, AdditiveStarAndSubalgebra) {
  Random rng(20);
  const std::vector<Weights> weights{Weights::make(2, 1), Weights::make(2, 3), Weights::make(1, 2),
                                     Weights::make(3, 2), Weights::make(-3, 4)};
  for (int i = 0; i < 500; ++i) {
    const Weights& w = weights[static_cast<std::size_t>(i) % weights.size()];
    const NormalMonomial a = rng.monomial(), b = rng.monomial();
    for (const auto& [t, c] : mul(a, b).terms()) ASSERT_EQ(degree(w, t), degree(w, a) + degree(w, b));
    for (const auto& [t, c] : star(a).terms()) ASSERT_EQ(degree(w, t), -degree(w, a));
  }

  // products of coinvariant words stay coinvariant
  for (const Weights& w : weights) {
    std::vector<NormalMonomial> zero;
    for (int m = -4; m <= 4; ++m)
      for (int p = 0; p <= 4; ++p)
        for (int r = -4; r <= 4; ++r)
          if (degree(w, {m, p, r}) == 0) zero.push_back({m, p, r});
    for (const auto& a : zero)
      for (const auto& b : zero) ASSERT_TRUE(is_coinvariant(w, mul(a, b)));
  }
}

}  // namespace
}  // namespace qsei
