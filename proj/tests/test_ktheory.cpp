#include "qsei/ktheory.hpp"

#include "qsei/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace qsei {
namespace {

using Mat = IntMatrix<KInt>;

TEST(Ktheory, CoisometryShifts) {
  for (const auto& lift : coisometry_lift(Parity::even, 3, 0.5, 64)) {
    EXPECT_TRUE(lift.shift.apply(0).isZero(0.0));
    for (int n = 1; n < 64; ++n) EXPECT_EQ(lift.shift.entry(n - 1, n), std::complex<double>(1.0));
  }
  for (const auto& lift : coisometry_lift(Parity::odd, 2, 0.5, 64)) {
    EXPECT_TRUE(lift.shift.apply(0).isZero(0.0));
    EXPECT_TRUE(lift.shift.apply(1).isZero(0.0));
    EXPECT_EQ(lift.shift.entry(0, 2), std::complex<double>(1.0));
  }
}

TEST(Ktheory, CoisometryFormulaMatchesShift) {
  const auto lifts = coisometry_lift(Parity::even, 3, 0.5, 128);
  EXPECT_LT(lifts.front().deviation, 1e-10);
  for (Parity parity : {Parity::even, Parity::odd})
    for (int l = 1; l <= 5; ++l)
      for (const auto& lift : coisometry_lift(parity, l, 0.5, 256)) EXPECT_LT(lift.deviation, 1e-10);
  EXPECT_THROW(coisometry_lift(Parity::even, 3, 0.5, 11), precondition_error);
}

TEST(Ktheory, IndexMapExamples) {
  const IndexMap e3 = index_map(Parity::even, 3, 0.5, 64);
  EXPECT_EQ(e3.matrix, Mat::Ones(3, 1));
  EXPECT_TRUE(e3.stable());
  const IndexMap o2 = index_map(Parity::odd, 2, 0.5, 64);
  EXPECT_EQ(o2.matrix, Mat::Constant(2, 1, 2));
  EXPECT_TRUE(o2.stable());
  EXPECT_EQ(index_map(Parity::even, 1, 0.5, 64).matrix, Mat::Ones(1, 1));
}

TEST(Ktheory, IndexMapAllL) {
  for (Parity parity : {Parity::even, Parity::odd})
    for (int l = 1; l <= 5; ++l) {
      const IndexMap d = index_map(parity, l, 0.5, 8 * l);
      EXPECT_EQ(d.matrix, Mat::Constant(l, 1, parity == Parity::even ? 1 : 2));
      EXPECT_TRUE(d.stable());
      EXPECT_EQ(d.symbolic, std::vector<int>(l, parity == Parity::even ? 1 : 2));
    }
}

TEST(Ktheory, AssembleExamples) {
  KGroups k = assemble_kgroups(Mat::Ones(3, 1));
  EXPECT_EQ(to_string(k.k0), "Z^3");
  EXPECT_EQ(to_string(k.k1), "0");
  k = assemble_kgroups(Mat::Constant(2, 1, 2));
  EXPECT_EQ(to_string(k.k0), "Z_2 + Z^2");
  EXPECT_EQ(to_string(k.k1), "0");
  k = assemble_kgroups(Mat::Ones(1, 1));
  EXPECT_EQ(to_string(k.k0), "Z");
  EXPECT_EQ(k.k0, expected_kgroups(Parity::even, 1).k0);
  k = assemble_kgroups(Mat::Constant(1, 1, 2));
  EXPECT_EQ(to_string(k.k0), "Z_2 + Z");
  EXPECT_EQ(k.k0, expected_kgroups(Parity::odd, 1).k0);

  // a zero index map is not hidden
  k = assemble_kgroups(Mat::Zero(2, 1));
  EXPECT_FALSE(k.delta_injective);
  EXPECT_EQ(k.k1.free_rank, 1);
  EXPECT_EQ(k.k0.free_rank, 3);
}

TEST(Ktheory, ExactnessBookkeeping) {
  for (Parity parity : {Parity::even, Parity::odd})
    for (int l = 1; l <= 5; ++l) {
      const Mat d = Mat::Constant(l, 1, parity == Parity::even ? 1 : 2);
      const KGroups k = assemble_kgroups(d);
      EXPECT_EQ(k.k0.free_rank - cokernel<KInt>(d).free_rank, 1);
      EXPECT_EQ(k.k0, expected_kgroups(parity, l).k0);
      EXPECT_EQ(k.k1, expected_kgroups(parity, l).k1);
    }
}

TEST(Ktheory, PullbackThresholdMatchesDirectEvaluation) {
  // |prod_{m=1}^{3} (1 - q^{2(3n+1-m)})^{1/2} - 1| in long double
  const long double q = 0.5L;
  const double eps = 1e-10;
  const int dim = 128;
  int expected = -1;
  for (int n = dim - 1; n >= 1; --n) {
    long double prod = 1.0L;
    for (int m = 1; m <= 3; ++m) prod *= std::sqrt(1.0L - std::pow(q, 2 * (3 * n + 1 - m)));
    if (std::fabs(prod - 1.0L) >= eps) break;
    expected = n;
  }
  const PullbackReport rep = pullback_check(Parity::even, 3, 0.5, dim, eps);
  ASSERT_EQ(rep.lift_differences.size(), 3u);
  const DecayEntry& r1 = rep.lift_differences.front();
  EXPECT_EQ(r1.threshold_index, expected);
  EXPECT_LE(r1.threshold_index, 35);
  EXPECT_LT(r1.max_beyond, 1e-10);
  EXPECT_TRUE(r1.monotone);
  EXPECT_TRUE(rep.pass());
}

TEST(Ktheory, PullbackDecaysEverywhere) {
  for (Parity parity : {Parity::even, Parity::odd})
    for (int l = 1; l <= 5; ++l) {
      const PullbackReport rep = pullback_check(parity, l, 0.5, 128);
      EXPECT_TRUE(rep.pass()) << to_string(parity) << " l=" << l;
      EXPECT_EQ(rep.symbol_differences.size(), static_cast<std::size_t>(l * (l - 1) / 2));
    }
}

TEST(Ktheory, CokernelCoordinates) {
  EXPECT_EQ(cokernel_coordinates(Parity::even, {3, 5, -1}), (std::vector<KInt>{2, -4}));
  EXPECT_EQ(cokernel_coordinates(Parity::odd, {-3, 5}), (std::vector<KInt>{1, 8}));
  EXPECT_TRUE(cokernel_coordinates(Parity::even, {7}).empty());
}

TEST(Ktheory, CokernelMapIsIsomorphism) {
  for (Parity parity : {Parity::even, Parity::odd})
    for (int l = 1; l <= 5; ++l) {
      const CokernelMapCheck c = check_cokernel_map(parity, l, 3);
      EXPECT_TRUE(c.well_defined && c.injective && c.surjective && c.homomorphism)
          << to_string(parity) << " l=" << l;
    }
}

}  // namespace
}  // namespace qsei
