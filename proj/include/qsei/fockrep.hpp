// Truncated bounded *-representations.
//
// Infinite-dimensional representations pi_r, r = 1..l, of O(RP^2_q(l;+-)) on
// l^2(N) with basis e_n:
//
//   a   e_n = q^{2(ln+r)} e_n
//   c+  e_n = prod_{m=1}^{l}  (1 - q^{2(ln+r-m)})^{1/2} e_{n-1},  c+ e_0 = 0
//   b   e_n = q^{ln+r} prod_{m=1}^{l} (1 - q^{2(ln+r-m)})^{1/2} e_{n-1},  b e_0 = 0
//   c-  e_n = prod_{m=1}^{2l} (1 - q^{2(ln+r-m)})^{1/2} e_{n-2},  c- e_0 = c- e_1 = 0
//
// one-dimensional representations a, b -> 0, c -> exp(2 pi i theta), and the
// representation pi_{0,+} of O(Sigma^3_q):
//
//   z0^m z1^p xi^s e_n = q^{p(n+1)} prod_{t=0}^{m-1} (1 - q^{2(n-t)})^{1/2} e_{n-m}
//
// which vanishes when m > n.

#pragma once

#include "qsei/operator.hpp"
#include "qsei/qwrp.hpp"

#include <complex>
#include <string>
#include <vector>

namespace qsei {

inline constexpr double kDefaultQ = 0.5;
inline constexpr int kDefaultDim = 256;
inline constexpr double kDefaultTolerance = 1e-10;

struct RepInstance {
  Parity parity = Parity::even;
  int l = 1;
  int r = 1;
  double q = kDefaultQ;
  int dim = kDefaultDim;

  /// Checks 1 <= r <= l, 0 < q < 1, dim >= 1.
  void validate() const;
  /// Columns free of truncation artifacts in products: dim - 2l.
  int interior_window() const { return std::max(0, dim - 2 * l); }
};

/// prod_{m=1}^{count} (1 - q^{2(ln+r-m)})^{1/2}; a negative radicand is a
/// transcription bug and throws std::logic_error.
double shift_weight(int l, int r, int n, double q, int count);

/// pi_r of a generator letter; starred letters are adjoints.
Operator rep_generator(const RepInstance& inst, Letter g);

struct ScalarRep {
  std::complex<double> a;
  std::complex<double> b;  ///< zero, odd parity only
  std::complex<double> c;
};

ScalarRep rep_scalar(double theta, Parity parity);

/// pi_{0,+} on span{e_0..e_{dim-1}}; only z0-family words (m >= 0).
Operator rep_sigma(const NormalMonomial& word, double q, int dim, int interior_window);
Operator rep_sigma(const AlgebraElement& x, double q, int dim, int interior_window);

struct ResidualEntry {
  std::string instance;  ///< e.g. "odd l=2 r=1"
  std::string relation;  ///< relation id or generator name
  double residual = 0.0;
  double tolerance = kDefaultTolerance;
  bool pass = false;
};

/// Numeric value of a relation side given letter images.
Operator evaluate(const RelationSide& side, const RepInstance& inst);

/// Every relation of the parity on pi_r, residual over the interior window.
std::vector<ResidualEntry> relation_residuals(const RepInstance& inst, double tol = kDefaultTolerance);

/// Every relation in a one-dimensional representation (exact, tolerance tol).
std::vector<ResidualEntry> scalar_relation_residuals(double theta, Parity parity, int l, double q = kDefaultQ,
                                                     double tol = kDefaultTolerance);

/// c+ e_0 = 0 (even) or c- e_0 = c- e_1 = 0 and b e_0 = 0 (odd), exactly.
bool kernel_conditions_hold(const RepInstance& inst);

/// For each generator x: max over interior n of
/// || phi(pi_r(x) e_n^r) - pi_{0,+}(j(x)) phi(e_n^r) ||, phi(e_n^r) = e_{ln+r-1}.
/// The per-r truncation is `dim`, pi_{0,+} acts on l * dim.
std::vector<ResidualEntry> intertwiner_check(const Weights& w, double q, int dim, double tol = kDefaultTolerance);

struct FaithfulnessResult {
  bool independent = false;
  int rank = 0;
  int size = 0;
  double smallest_singular_value = 0.0;
};

/// Linear independence of the (norm-scaled) truncated images of the words.
FaithfulnessResult faithfulness_probe(const std::vector<NormalMonomial>& words, double q, int dim,
                                      double tol = 1e-8);

}  // namespace qsei
