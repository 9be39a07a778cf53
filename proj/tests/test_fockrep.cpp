#include "qsei/fockrep.hpp"

#include "qsei/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

namespace qsei {
namespace {

using cd = std::complex<double>;

TEST(Fockrep, GeneratorExamples) {
  const RepInstance e{Parity::even, 3, 2, 0.5, 32};
  const Operator a = rep_generator(e, Letter::a);
  EXPECT_DOUBLE_EQ(a.entry(0, 0).real(), std::pow(0.5, 4));
  EXPECT_TRUE(rep_generator(e, Letter::c).apply(0).isZero(0.0));

  const RepInstance o{Parity::odd, 2, 1, 0.5, 32};
  EXPECT_TRUE(rep_generator(o, Letter::c).apply(1).isZero(0.0));
  EXPECT_TRUE(rep_generator(o, Letter::c).apply(0).isZero(0.0));
  EXPECT_THROW(rep_generator(e, Letter::b), precondition_error);
}

TEST(Fockrep, WeightsMatchFormulas) {
  const double q = 0.5;
  const int l = 2, r = 1;
  const RepInstance o{Parity::odd, l, r, q, 40};
  const Operator b = rep_generator(o, Letter::b), c = rep_generator(o, Letter::c);
  for (int n = 2; n < 40; ++n) {
    double prod_l = 1.0, prod_2l = 1.0;
    for (int m = 1; m <= 2 * l; ++m) {
      const double f = std::sqrt(1.0 - std::pow(q, 2 * (l * n + r - m)));
      prod_2l *= f;
      if (m <= l) prod_l *= f;
    }
    EXPECT_NEAR(b.entry(n - 1, n).real(), std::pow(q, l * n + r) * prod_l, 1e-15);
    EXPECT_NEAR(c.entry(n - 2, n).real(), prod_2l, 1e-15);
  }
}

TEST(Fockrep, NegativeRadicandIsAnError) {
  EXPECT_THROW(shift_weight(3, 1, 0, 0.5, 3), std::logic_error);
  EXPECT_NO_THROW(shift_weight(3, 3, 0, 0.5, 2));
}

TEST(Fockrep, InstanceValidation) {
  EXPECT_THROW((RepInstance{Parity::even, 3, 4, 0.5, 16}.validate()), precondition_error);
  EXPECT_THROW((RepInstance{Parity::even, 3, 1, 1.5, 16}.validate()), precondition_error);
  EXPECT_THROW((RepInstance{Parity::even, 3, 0, 0.5, 16}.validate()), precondition_error);
}

TEST(Fockrep, SpectrumOfAIsDistinctInUnitInterval) {
  for (Parity parity : {Parity::even, Parity::odd})
    for (int l = 1; l <= 4; ++l) {
      std::set<double> seen;
      for (int r = 1; r <= l; ++r) {
        const Operator a = rep_generator(RepInstance{parity, l, r, 0.9, 64}, Letter::a);
        for (int n = 0; n < 64; ++n) {
          const double v = a.entry(n, n).real();
          ASSERT_GT(v, 0.0);
          ASSERT_LT(v, 1.0);
          ASSERT_TRUE(seen.insert(v).second) << "repeated eigenvalue " << v;
        }
      }
    }
}

TEST(Fockrep, Banded) {
  for (Letter x : {Letter::a, Letter::b, Letter::c, Letter::c_star}) {
    const auto [lower, upper] = bandwidths(rep_generator(RepInstance{Parity::odd, 3, 2, 0.5, 50}, x));
    EXPECT_LE(std::max(lower, upper), 2);
  }
}

TEST(Fockrep, Scalar) {
  const ScalarRep e0 = rep_scalar(0.0, Parity::even);
  EXPECT_EQ(e0.a, cd(0.0));
  EXPECT_NEAR(std::abs(e0.c - cd(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rep_scalar(0.5, Parity::even).c - cd(-1.0)), 0.0, 1e-15);
  const ScalarRep o0 = rep_scalar(0.0, Parity::odd);
  EXPECT_EQ(o0.a, cd(0.0));
  EXPECT_EQ(o0.b, cd(0.0));
  EXPECT_NEAR(std::abs(o0.c - cd(1.0)), 0.0, 1e-15);
  for (Parity parity : {Parity::even, Parity::odd})
    for (double theta : {0.0, 0.3, 0.5, 0.77})
      for (const auto& e : scalar_relation_residuals(theta, parity, 3)) EXPECT_TRUE(e.pass) << e.relation;
}

TEST(Fockrep, SigmaExamples) {
  const Operator xi = rep_sigma(NormalMonomial{0, 0, 1}, 0.5, 16, 16);
  for (int n = 0; n < 16; ++n) EXPECT_EQ(xi.entry(n, n), cd(1.0));
  const Operator z1 = rep_sigma(NormalMonomial{0, 1, 0}, 0.5, 16, 16);
  EXPECT_EQ(z1.entry(0, 0), cd(0.5));
  const Operator z0 = rep_sigma(NormalMonomial{1, 0, 0}, 0.5, 16, 16);
  EXPECT_TRUE(z0.apply(0).isZero(0.0));
  EXPECT_THROW(rep_sigma(NormalMonomial{-1, 0, 0}, 0.5, 16, 16), precondition_error);
}

TEST(Fockrep, SigmaWordsAreProductsOfLetters) {
  // dense Z0 e_n = sqrt(1 - q^{2n}) e_{n-1}, Z1 e_n = q^{n+1} e_n
  const double q = 0.6;
  const int dim = 40;
  Eigen::MatrixXd Z0 = Eigen::MatrixXd::Zero(dim, dim), Z1 = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    Z1(n, n) = std::pow(q, n + 1);
    if (n > 0) Z0(n - 1, n) = std::sqrt(1.0 - std::pow(q, 2 * n));
  }
  for (int m = 0; m <= 4; ++m)
    for (int p = 0; p <= 3; ++p) {
      Eigen::MatrixXd want = Eigen::MatrixXd::Identity(dim, dim);
      for (int i = 0; i < m; ++i) want = want * Z0;
      for (int i = 0; i < p; ++i) want = want * Z1;
      const Eigen::MatrixXd got = rep_sigma(NormalMonomial{m, p, 2}, q, dim, dim).dense().real();
      EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-14) << m << " " << p;
    }
  // z0 z0* = 1 - z1^2 xi
  const Operator z0 = rep_sigma(NormalMonomial{1, 0, 0}, q, dim, dim - 2);
  const Operator lhs = z0 * z0.adjoint();
  const Operator rhs = rep_sigma(AlgebraElement(1) - gen::A(), q, dim, dim - 2);
  EXPECT_LT(interior_residual(lhs, rhs), 1e-14);
}

TEST(Fockrep, KernelConditions) {
  for (Parity parity : {Parity::even, Parity::odd})
    for (int l = 1; l <= 5; ++l)
      for (int r = 1; r <= l; ++r) EXPECT_TRUE(kernel_conditions_hold(RepInstance{parity, l, r, 0.5, 64}));
}

TEST(Fockrep, RelationResiduals) {
  for (Parity parity : {Parity::even, Parity::odd})
    for (int l = 1; l <= 5; ++l)
      for (int r = 1; r <= l; ++r)
        for (const auto& e : relation_residuals(RepInstance{parity, l, r, 0.5, 256}))
          EXPECT_TRUE(e.pass) << e.instance << " " << e.relation << " " << e.residual;
}

TEST(Fockrep, ResidualsDetectWrongRelation) {
  const RepInstance inst{Parity::even, 2, 1, 0.5, 64};
  const RelationSide lhs{0, {Factor::of(Letter::a), Factor::of(Letter::c)}};
  const RelationSide rhs{-2, {Factor::of(Letter::c), Factor::of(Letter::a)}};
  EXPECT_GT(interior_residual(evaluate(lhs, inst), evaluate(rhs, inst)), 1e-3);
}

TEST(Fockrep, IntertwinerExamples) {
  const auto even = intertwiner_check(Weights::canonical(Parity::even, 3), 0.5, 240);
  ASSERT_EQ(even.front().relation, "a");
  EXPECT_LT(even.front().residual, 1e-15);
  for (const auto& e : intertwiner_check(Weights::canonical(Parity::odd, 2), 0.5, 240))
    if (e.relation == "b") EXPECT_LT(e.residual, 1e-12);
}

TEST(Fockrep, IntertwinerAllGenerators) {
  for (int l = 1; l <= 5; ++l) {
    for (const auto& e : intertwiner_check(Weights::canonical(Parity::odd, l), 0.5, 128))
      EXPECT_TRUE(e.pass) << e.instance << " " << e.relation << " " << e.residual;
    if (l % 2 == 1)
      for (const auto& e : intertwiner_check(Weights::canonical(Parity::even, l), 0.5, 128))
        EXPECT_TRUE(e.pass) << e.instance << " " << e.relation << " " << e.residual;
  }
}

TEST(Fockrep, IntertwinerForOtherWeights) {
  // s = 2 here; xi acts trivially, so only the parity matters
  for (const auto& e : intertwiner_check(Weights::make(4, 3), 0.5, 64)) EXPECT_TRUE(e.pass) << e.relation;
  for (const auto& e : intertwiner_check(Weights::make(3, 2), 0.5, 64)) EXPECT_TRUE(e.pass) << e.relation;
}

TEST(Fockrep, FaithfulnessExamples) {
  EXPECT_TRUE(faithfulness_probe({{0, 0, 0}, {0, 1, 0}, {0, 2, 0}}, 0.5, 64).independent);
  const auto dup = faithfulness_probe({{0, 2, 1}, {0, 2, 1}}, 0.5, 64);
  EXPECT_FALSE(dup.independent);
  EXPECT_EQ(dup.rank, 1);
  EXPECT_TRUE(faithfulness_probe({{1, 0, 0}, {1, 1, 0}, {1, 2, 0}}, 0.5, 64).independent);
  EXPECT_THROW(faithfulness_probe(std::vector<NormalMonomial>(40), 0.5, 64), precondition_error);
}

TEST(Fockrep, XiIsInvisibleToSigma) {
  // words differing only in the xi exponent have the same image
  const auto r = faithfulness_probe({{0, 1, 0}, {0, 1, 1}}, 0.5, 64);
  EXPECT_FALSE(r.independent);
}

}  // namespace
}  // namespace qsei
