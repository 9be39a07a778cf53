// K-groups of C(RP_q(l;+-)) from the extension
//
//   0 -> K^{(+) l} -> C(RP_q(l;+-)) -> C(S^1) -> 0
//
// With K_0(K) = Z, K_1(K) = 0 and K_i(C(S^1)) = Z the six-term sequence
// collapses to
//
//   0 -> K_1 -> Z --delta--> Z^l -> K_0 -> Z -> 0,
//
// so K_1 = ker(delta) and, since the right end splits, K_0 = coker(delta) + Z.
// delta sends the class of the quotient unitary p(c) to the class of the
// defect projection 1 - d* d of a coisometry lift d of p(c).

#pragma once

#include "qsei/fockrep.hpp"
#include "qsei/smith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qsei {

using KInt = std::int64_t;

struct CoisometryLift {
  int r = 1;
  int step = 1;        ///< 1 for U_r, 2 for V_r
  Operator shift;      ///< e_n -> e_{n-step}, killing e_0 .. e_{step-1}
  Operator formula;    ///< pi_r(c) prod_m (1 - q^{-2m} pi_r(a))^{-1/2}
  double deviation = 0.0;  ///< interior max column norm of shift - formula
};

/// Requires N >= 4l.  On the basis vectors killed by pi_r(c) the inverse
/// square-root factor is never used (it may be singular there) and is set to 0.
std::vector<CoisometryLift> coisometry_lift(Parity parity, int l, double q, int dim);

struct IndexMap {
  Parity parity = Parity::even;
  int l = 1;
  IntMatrix<KInt> matrix;           ///< l x 1, entry r-1 = defect rank of the lift on H_r
  std::vector<int> symbolic;        ///< number of e_n killed by the bare shift, per r
  std::vector<int> doubled;         ///< defect ranks recomputed at 2N
  bool stable() const;              ///< numeric == doubled == symbolic
};

/// Numeric rank tolerance for defect projections.
inline constexpr double kRankTolerance = 1e-8;

IndexMap index_map(Parity parity, int l, double q, int dim, double tol = kRankTolerance);

struct KGroups {
  AbelianGroup<KInt> k0;
  AbelianGroup<KInt> k1;
  std::vector<KInt> smith_diagonal;
  /// false when delta = 0, in which case K_1 = Z is reported rather than hidden
  bool delta_injective = true;
};

KGroups assemble_kgroups(const IndexMap& delta);
KGroups assemble_kgroups(const IntMatrix<KInt>& delta);

/// Expected groups: K_0 = Z^l (even) or Z_2 + Z^l (odd), K_1 = 0.
KGroups expected_kgroups(Parity parity, int l);

std::string to_string(const AbelianGroup<KInt>& g);

struct DecayEntry {
  std::string label;          ///< "r=2" or "r=1 vs r=3"
  int threshold_index = -1;   ///< first n with |entry| < eps for all later n; -1 if never
  double max_beyond = 0.0;    ///< largest |entry| from threshold_index on
  bool monotone = true;       ///< |entry| nonincreasing along the band
};

struct PullbackReport {
  Parity parity = Parity::even;
  int l = 1;
  double eps = 0.0;
  std::vector<DecayEntry> lift_differences;    ///< pi_r(c) - shift, per r
  std::vector<DecayEntry> symbol_differences;  ///< pi_r(c) - pi_s(c), per pair r < s
  bool pass() const;
};

PullbackReport pullback_check(Parity parity, int l, double q, int dim, double eps = kDefaultTolerance);

/// Explicit coset invariants of Z^l / im(delta):
///   even: (n_2 - n_1, ..., n_l - n_1)
///   odd:  (n_1 mod 2, n_2 - n_1, ..., n_l - n_1)
std::vector<KInt> cokernel_coordinates(Parity parity, const std::vector<KInt>& v);

struct CokernelMapCheck {
  bool well_defined = false;  ///< constant on cosets of im(delta) inside the box
  bool injective = false;     ///< equal images only for vectors differing by im(delta)
  bool surjective = false;    ///< every target point in the probe range is hit
  bool homomorphism = false;
  std::size_t box_points = 0;
  std::size_t classes = 0;
};

/// Enumerates the box [-radius, radius]^l.
CokernelMapCheck check_cokernel_map(Parity parity, int l, int radius = 3);

}  // namespace qsei
