#include "qsei/ktheory.hpp"

#include "qsei/errors.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace qsei {

namespace {

using cd = std::complex<double>;

int step_of(Parity parity) { return parity == Parity::even ? 1 : 2; }
int factor_count(Parity parity, int l) { return parity == Parity::even ? l : 2 * l; }

void require_dim(int l, int dim) {
  if (dim < 4 * l) throw precondition_error("truncation N must be at least 4l");
}

CoisometryLift lift_for(Parity parity, int l, int r, double q, int dim) {
  const RepInstance inst{parity, l, r, q, dim};
  inst.validate();
  const int step = step_of(parity);
  const int count = factor_count(parity, l);
  const int window = inst.interior_window();

  std::vector<cd> ones(dim, 1.0);
  for (int n = 0; n < std::min(step, dim); ++n) ones[n] = 0.0;

  const Operator c = rep_generator(inst, Letter::c);
  const Operator a = rep_generator(inst, Letter::a);
  std::vector<cd> inv_sqrt(dim, 0.0);
  for (int n = 0; n < dim; ++n) {
    const bool killed = c.apply(n).isZero(0.0);
    if (killed) continue;
    double prod = 1.0;
    for (int m = 1; m <= count; ++m) prod *= 1.0 - std::pow(q, -2 * m) * a.entry(n, n).real();
    if (!(prod > 0.0))
      throw std::logic_error("coisometry lift: singular factor on a column not annihilated by c (n=" +
                             std::to_string(n) + ")");
    inv_sqrt[n] = 1.0 / std::sqrt(prod);
  }

  CoisometryLift lift;
  lift.r = r;
  lift.step = step;
  lift.shift = Operator::weighted_shift(ones, step, window);
  lift.formula = c * Operator::diagonal(inv_sqrt, window);
  lift.deviation = interior_residual(lift.shift, lift.formula);
  return lift;
}

int defect_rank(const Operator& d, double tol) {
  const Operator defect = Operator::identity(d.dim(), d.interior_window()) - d.adjoint() * d;
  return numeric_rank(defect.dense(), tol);
}

}  // namespace

std::vector<CoisometryLift> coisometry_lift(Parity parity, int l, double q, int dim) {
  require_dim(l, dim);
  std::vector<CoisometryLift> out;
  for (int r = 1; r <= l; ++r) out.push_back(lift_for(parity, l, r, q, dim));
  return out;
}

bool IndexMap::stable() const {
  for (int i = 0; i < l; ++i)
    if (matrix(i, 0) != symbolic[i] || matrix(i, 0) != doubled[i]) return false;
  return true;
}

IndexMap index_map(Parity parity, int l, double q, int dim, double tol) {
  require_dim(l, dim);
  IndexMap out;
  out.parity = parity;
  out.l = l;
  out.matrix = IntMatrix<KInt>::Zero(l, 1);
  for (int r = 1; r <= l; ++r) {
    const CoisometryLift lift = lift_for(parity, l, r, q, dim);
    out.matrix(r - 1, 0) = defect_rank(lift.formula, tol);
    out.doubled.push_back(defect_rank(lift_for(parity, l, r, q, 2 * dim).formula, tol));
    // the bare shift kills exactly e_0 .. e_{step-1}
    int killed = 0;
    for (int n = 0; n < dim; ++n) killed += lift.shift.apply(n).isZero(0.0) ? 1 : 0;
    out.symbolic.push_back(killed);
  }
  return out;
}

KGroups assemble_kgroups(const IntMatrix<KInt>& delta) {
  const auto snf = smith_normal_form<KInt>(delta);
  KGroups k;
  k.smith_diagonal = snf.diagonal;
  const int rank = static_cast<int>(snf.diagonal.size());
  k.delta_injective = rank == static_cast<int>(delta.cols());
  // K_1 = ker(delta)
  k.k1.free_rank = static_cast<int>(delta.cols()) - rank;
  // K_0 = coker(delta) + Z
  k.k0 = cokernel<KInt>(delta);
  k.k0.free_rank += 1;
  return k;
}

KGroups assemble_kgroups(const IndexMap& delta) { return assemble_kgroups(delta.matrix); }

KGroups expected_kgroups(Parity parity, int l) {
  KGroups k;
  k.k0.free_rank = l;
  if (parity == Parity::odd) k.k0.torsion = {2};
  k.smith_diagonal = {parity == Parity::even ? 1 : 2};
  return k;
}

std::string to_string(const AbelianGroup<KInt>& g) {
  std::ostringstream os;
  bool any = false;
  for (KInt t : g.torsion) {
    if (any) os << " + ";
    os << "Z_" << t;
    any = true;
  }
  if (g.free_rank > 0) {
    if (any) os << " + ";
    os << "Z";
    if (g.free_rank > 1) os << "^" << g.free_rank;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

namespace {

// |x_n| along a band, n = first..dim-1
DecayEntry decay_of(std::string label, const std::vector<double>& mags, int first, double eps) {
  DecayEntry e;
  e.label = std::move(label);
  const int dim = static_cast<int>(mags.size());
  int threshold = dim;
  for (int n = dim - 1; n >= first && mags[n] < eps; --n) threshold = n;
  e.threshold_index = threshold < dim ? threshold : -1;
  if (e.threshold_index >= 0)
    for (int n = threshold; n < dim; ++n) e.max_beyond = std::max(e.max_beyond, mags[n]);
  for (int n = first + 1; n < dim; ++n)
    if (mags[n] > mags[n - 1]) e.monotone = false;
  return e;
}

}  // namespace

bool PullbackReport::pass() const {
  for (const auto& e : lift_differences)
    if (e.threshold_index < 0 || !e.monotone || e.max_beyond >= eps) return false;
  for (const auto& e : symbol_differences)
    if (e.threshold_index < 0 || e.max_beyond >= eps) return false;
  return true;
}

PullbackReport pullback_check(Parity parity, int l, double q, int dim, double eps) {
  require_dim(l, dim);
  PullbackReport rep;
  rep.parity = parity;
  rep.l = l;
  rep.eps = eps;
  const int step = step_of(parity);

  // band entries of pi_r(c): e_n -> w_n e_{n-step}
  std::vector<std::vector<double>> band(l, std::vector<double>(dim, 0.0));
  for (int r = 1; r <= l; ++r) {
    const RepInstance inst{parity, l, r, q, dim};
    const Operator c = rep_generator(inst, Letter::c);
    const auto lift = lift_for(parity, l, r, q, dim);
    const Operator diff = c - lift.shift;
    std::vector<double> mags(dim, 0.0);
    for (int n = step; n < dim; ++n) {
      mags[n] = std::abs(diff.entry(n - step, n));
      band[r - 1][n] = c.entry(n - step, n).real();
    }
    rep.lift_differences.push_back(decay_of("r=" + std::to_string(r), mags, step, eps));
  }
  for (int r = 1; r <= l; ++r)
    for (int s = r + 1; s <= l; ++s) {
      std::vector<double> mags(dim, 0.0);
      for (int n = step; n < dim; ++n) mags[n] = std::abs(band[r - 1][n] - band[s - 1][n]);
      DecayEntry e = decay_of("r=" + std::to_string(r) + " vs r=" + std::to_string(s), mags, step, eps);
      e.monotone = true;  // only asserted for lift differences
      rep.symbol_differences.push_back(e);
    }
  return rep;
}

std::vector<KInt> cokernel_coordinates(Parity parity, const std::vector<KInt>& v) {
  std::vector<KInt> out;
  if (v.empty()) return out;
  if (parity == Parity::odd) out.push_back(((v[0] % 2) + 2) % 2);
  for (std::size_t i = 1; i < v.size(); ++i) out.push_back(v[i] - v[0]);
  return out;
}

CokernelMapCheck check_cokernel_map(Parity parity, int l, int radius) {
  const KInt d = parity == Parity::even ? 1 : 2;
  std::vector<std::vector<KInt>> box;
  std::vector<KInt> v(l, -radius);
  for (;;) {
    box.push_back(v);
    int i = 0;
    while (i < l && v[i] == radius) v[i++] = -radius;
    if (i == l) break;
    ++v[i];
  }

  auto in_image = [&](const std::vector<KInt>& x, const std::vector<KInt>& y) {
    // x - y in Z (d, d, ..., d)
    const KInt diff0 = x[0] - y[0];
    if (diff0 % d != 0) return false;
    for (int i = 1; i < l; ++i)
      if (x[i] - y[i] != diff0) return false;
    return true;
  };

  CokernelMapCheck res;
  res.box_points = box.size();
  res.well_defined = true;
  res.injective = true;
  res.homomorphism = true;

  std::map<std::vector<KInt>, std::vector<KInt>> first_preimage;
  for (const auto& x : box) {
    const auto fx = cokernel_coordinates(parity, x);
    auto [it, inserted] = first_preimage.try_emplace(fx, x);
    if (!inserted && !in_image(x, it->second)) res.injective = false;

    // shifting by an image vector stays in the same class
    for (KInt m = -2; m <= 2; ++m) {
      std::vector<KInt> y = x;
      for (auto& c : y) c += m * d;
      if (cokernel_coordinates(parity, y) != fx) res.well_defined = false;
    }
  }
  res.classes = first_preimage.size();

  // additivity on a sample of pairs (odd coordinates compare mod 2)
  for (std::size_t i = 0; i < box.size(); i += 7)
    for (std::size_t j = 0; j < box.size(); j += 11) {
      std::vector<KInt> sum(l);
      for (int t = 0; t < l; ++t) sum[t] = box[i][t] + box[j][t];
      auto fs = cokernel_coordinates(parity, sum);
      auto fa = cokernel_coordinates(parity, box[i]);
      auto fb = cokernel_coordinates(parity, box[j]);
      for (std::size_t t = 0; t < fs.size(); ++t) {
        KInt expect = fa[t] + fb[t];
        if (parity == Parity::odd && t == 0) expect %= 2;
        if (fs[t] != expect) res.homomorphism = false;
      }
    }

  // every target point with coordinates in [-(radius-1), radius-1] has a preimage
  const int reach = radius - 1;
  const int free_dims = l - 1;
  res.surjective = true;
  std::vector<KInt> t(free_dims, -reach);
  const int torsion_classes = parity == Parity::odd ? 2 : 1;
  for (;;) {
    for (int cls = 0; cls < torsion_classes; ++cls) {
      std::vector<KInt> target;
      if (parity == Parity::odd) target.push_back(cls);
      target.insert(target.end(), t.begin(), t.end());
      if (!first_preimage.count(target)) res.surjective = false;
    }
    int i = 0;
    while (i < free_dims && t[i] == reach) t[i++] = -reach;
    if (i == free_dims) break;
    ++t[i];
  }
  return res;
}

}  // namespace qsei
