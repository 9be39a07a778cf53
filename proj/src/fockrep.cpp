#include "qsei/fockrep.hpp"

#include "qsei/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qsei {

namespace {

using cd = std::complex<double>;

std::string instance_label(const RepInstance& inst) {
  std::ostringstream os;
  os << to_string(inst.parity) << " l=" << inst.l << " r=" << inst.r;
  return os.str();
}

std::vector<cd> diagonal_of_a(const RepInstance& inst) {
  std::vector<cd> d(inst.dim);
  for (int n = 0; n < inst.dim; ++n) d[n] = std::pow(inst.q, 2 * (inst.l * n + inst.r));
  return d;
}

}  // namespace

void RepInstance::validate() const {
  if (l < 1) throw precondition_error("l must be positive");
  if (r < 1 || r > l) throw precondition_error("representation label r must lie in 1..l");
  if (!(q > 0.0 && q < 1.0)) throw precondition_error("q must lie in (0,1)");
  if (dim < 1) throw precondition_error("truncation dimension must be positive");
}

double shift_weight(int l, int r, int n, double q, int count) {
  double w = 1.0;
  for (int m = 1; m <= count; ++m) {
    const double radicand = 1.0 - std::pow(q, 2 * (l * n + r - m));
    if (radicand < 0.0)
      throw std::logic_error("negative radicand in shift weight (l=" + std::to_string(l) + ", r=" +
                             std::to_string(r) + ", n=" + std::to_string(n) + ")");
    w *= std::sqrt(radicand);
  }
  return w;
}

Operator rep_generator(const RepInstance& inst, Letter g) {
  inst.validate();
  const int window = inst.interior_window();
  switch (g) {
    case Letter::a:
    case Letter::a_star:
      return Operator::diagonal(diagonal_of_a(inst), window);
    case Letter::b:
    case Letter::b_star: {
      if (inst.parity != Parity::odd) throw precondition_error("generator b exists only in odd parity");
      std::vector<cd> w(inst.dim, 0.0);
      for (int n = 1; n < inst.dim; ++n)
        w[n] = std::pow(inst.q, inst.l * n + inst.r) * shift_weight(inst.l, inst.r, n, inst.q, inst.l);
      auto op = Operator::weighted_shift(w, 1, window);
      return g == Letter::b ? op : op.adjoint();
    }
    case Letter::c:
    case Letter::c_star: {
      const bool even = inst.parity == Parity::even;
      const int step = even ? 1 : 2;
      const int count = even ? inst.l : 2 * inst.l;
      std::vector<cd> w(inst.dim, 0.0);
      for (int n = step; n < inst.dim; ++n) w[n] = shift_weight(inst.l, inst.r, n, inst.q, count);
      auto op = Operator::weighted_shift(w, step, window);
      return g == Letter::c ? op : op.adjoint();
    }
  }
  throw std::logic_error("unknown generator");
}

ScalarRep rep_scalar(double theta, Parity parity) {
  (void)parity;
  return {0.0, 0.0, std::polar(1.0, 2.0 * std::numbers::pi * theta)};
}

Operator rep_sigma(const NormalMonomial& word, double q, int dim, int interior_window) {
  if (word.m < 0) throw precondition_error("rep_sigma expects a z0-family word (m >= 0)");
  std::vector<cd> w(dim, 0.0);
  for (int n = word.m; n < dim; ++n) {
    double v = std::pow(q, word.p * (n + 1));
    for (int t = 0; t < word.m; ++t) v *= std::sqrt(1.0 - std::pow(q, 2 * (n - t)));
    w[n] = v;
  }
  return Operator::weighted_shift(w, word.m, interior_window);
}

Operator rep_sigma(const AlgebraElement& x, double q, int dim, int interior_window) {
  Operator out = Operator::zero(dim, interior_window);
  for (const auto& [w, c] : x.terms()) out = out + cd(eval(c, q)) * rep_sigma(w, q, dim, interior_window);
  return out;
}

Operator evaluate(const RelationSide& side, const RepInstance& inst) {
  const int window = inst.interior_window();
  Operator acc = cd(std::pow(inst.q, side.q_exp)) * Operator::identity(inst.dim, window);
  const auto a_diag = diagonal_of_a(inst);
  for (const Factor& f : side.factors) {
    if (f.kind == Factor::Kind::letter) {
      acc = acc * rep_generator(inst, f.letter);
    } else {
      std::vector<cd> d(inst.dim);
      const double s = std::pow(inst.q, f.q_exp);
      for (int n = 0; n < inst.dim; ++n) d[n] = 1.0 - s * a_diag[n];
      acc = acc * Operator::diagonal(d, window);
    }
  }
  return acc;
}

std::vector<ResidualEntry> relation_residuals(const RepInstance& inst, double tol) {
  inst.validate();
  std::vector<ResidualEntry> out;
  for (const Relation& rel : relations(inst.parity, inst.l)) {
    ResidualEntry e;
    e.instance = instance_label(inst);
    e.relation = rel.id;
    e.residual = interior_residual(evaluate(rel.lhs, inst), evaluate(rel.rhs, inst));
    e.tolerance = tol;
    e.pass = e.residual < tol;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ResidualEntry> scalar_relation_residuals(double theta, Parity parity, int l, double q, double tol) {
  const ScalarRep rep = rep_scalar(theta, parity);
  auto image = [&](Letter x) -> cd {
    switch (x) {
      case Letter::a:
      case Letter::a_star: return rep.a;
      case Letter::b: return rep.b;
      case Letter::b_star: return std::conj(rep.b);
      case Letter::c: return rep.c;
      case Letter::c_star: return std::conj(rep.c);
    }
    return 0.0;
  };
  auto value = [&](const RelationSide& side) {
    cd acc = 1.0;
    for (const Factor& f : side.factors)
      acc *= f.kind == Factor::Kind::letter ? image(f.letter) : 1.0 - std::pow(q, f.q_exp) * rep.a;
    return acc * std::pow(q, side.q_exp);
  };
  std::vector<ResidualEntry> out;
  for (const Relation& rel : relations(parity, l)) {
    ResidualEntry e;
    e.instance = std::string(to_string(parity)) + " l=" + std::to_string(l) + " theta=" + std::to_string(theta);
    e.relation = rel.id;
    e.residual = std::abs(value(rel.lhs) - value(rel.rhs));
    e.tolerance = tol;
    e.pass = e.residual < tol;
    out.push_back(std::move(e));
  }
  return out;
}

bool kernel_conditions_hold(const RepInstance& inst) {
  const Operator c = rep_generator(inst, Letter::c);
  if (inst.parity == Parity::even) return c.apply(0).isZero(0.0);
  const Operator b = rep_generator(inst, Letter::b);
  return c.apply(0).isZero(0.0) && (inst.dim < 2 || c.apply(1).isZero(0.0)) && b.apply(0).isZero(0.0);
}

std::vector<ResidualEntry> intertwiner_check(const Weights& w, double q, int dim, double tol) {
  const int l = w.l;
  const int big = l * dim;
  const GeneratorSet g = generators(w);

  // phi as a permutation from (block r, index n) ordering onto e_{ln+r-1}
  std::vector<Eigen::Triplet<cd>> perm;
  for (int r = 1; r <= l; ++r)
    for (int n = 0; n < dim; ++n) perm.emplace_back(l * n + r - 1, (r - 1) * dim + n, 1.0);
  Operator::Sparse phi(big, big);
  phi.setFromTriplets(perm.begin(), perm.end());

  std::vector<Letter> letters{Letter::a, Letter::c};
  if (w.parity == Parity::odd) letters.insert(letters.begin() + 1, Letter::b);

  std::vector<ResidualEntry> out;
  for (Letter x : letters) {
    std::vector<Eigen::Triplet<cd>> blocks;
    for (int r = 1; r <= l; ++r) {
      const Operator pr = rep_generator(RepInstance{w.parity, l, r, q, dim}, x);
      for (int col = 0; col < dim; ++col)
        for (Operator::Sparse::InnerIterator it(pr.matrix(), col); it; ++it)
          blocks.emplace_back((r - 1) * dim + it.row(), (r - 1) * dim + col, it.value());
    }
    Operator::Sparse direct_sum(big, big);
    direct_sum.setFromTriplets(blocks.begin(), blocks.end());

    const Operator sigma = rep_sigma(g.image(x), q, big, big);
    const Operator::Sparse diff = Operator::Sparse(phi * direct_sum) - Operator::Sparse(sigma.matrix() * phi);

    double worst = 0.0;
    const int window = std::max(0, dim - 2 * l);
    for (int r = 1; r <= l; ++r)
      for (int n = 0; n < window; ++n)
        worst = std::max(worst, static_cast<double>(diff.col((r - 1) * dim + n).norm()));

    ResidualEntry e;
    e.instance = std::string(to_string(w.parity)) + " l=" + std::to_string(l);
    e.relation = letter_name(x, w.parity);
    e.residual = worst;
    e.tolerance = tol;
    e.pass = worst < tol;
    out.push_back(std::move(e));
  }
  return out;
}

FaithfulnessResult faithfulness_probe(const std::vector<NormalMonomial>& words, double q, int dim, double tol) {
  if (2 * words.size() > static_cast<std::size_t>(dim))
    throw precondition_error("faithfulness probe needs at most dim/2 words");
  FaithfulnessResult res;
  res.size = static_cast<int>(words.size());
  if (words.empty()) {
    res.independent = true;
    return res;
  }
  Eigen::MatrixXd images(static_cast<Eigen::Index>(dim) * dim, res.size);
  for (int i = 0; i < res.size; ++i) {
    const Eigen::MatrixXcd m = rep_sigma(words[i], q, dim, dim).dense();
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size()).real();
    const double norm = v.norm();
    if (norm > 0) v /= norm;
    images.col(i) = v;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(images);
  const auto& s = svd.singularValues();
  res.smallest_singular_value = s(s.size() - 1);
  res.rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) res.rank += s(i) > tol * s(0) ? 1 : 0;
  res.independent = res.rank == res.size;
  return res;
}

}  // namespace qsei
