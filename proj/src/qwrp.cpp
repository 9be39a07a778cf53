#include "qsei/qwrp.hpp"

#include "qsei/errors.hpp"

#include <sstream>

namespace qsei {

std::string letter_name(Letter x, Parity parity) {
  const char* c = parity == Parity::even ? "c+" : "c-";
  switch (x) {
    case Letter::a: return "a";
    case Letter::a_star: return "a*";
    case Letter::b: return "b";
    case Letter::b_star: return "b*";
    case Letter::c: return c;
    case Letter::c_star: return std::string(c) + "*";
  }
  return "?";
}

std::string relation_tag(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

namespace {

RelationSide word(int q_exp, std::initializer_list<Letter> letters) {
  RelationSide s{q_exp, {}};
  for (Letter x : letters) s.factors.push_back(Factor::of(x));
  return s;
}

// Appends (1 - q^{step*m} a) for m = lo..hi.
void append_products(RelationSide& s, int lo, int hi, int step) {
  for (int m = lo; m <= hi; ++m) s.factors.push_back(Factor::one_minus(step * m));
}

}  // namespace

std::vector<Relation> relations(Parity parity, int l) {
  using L = Letter;
  std::vector<Relation> out;
  out.push_back({"a*=a", word(0, {L::a_star}), word(0, {L::a})});

  if (parity == Parity::even) {
    out.push_back({"ac", word(0, {L::a, L::c}), word(-2 * l, {L::c, L::a})});
    Relation cc{"cc*", word(0, {L::c, L::c_star}), {}};
    append_products(cc.rhs, 0, l - 1, 2);
    out.push_back(cc);
    Relation c_c{"c*c", word(0, {L::c_star, L::c}), {}};
    append_products(c_c.rhs, 1, l, -2);
    out.push_back(c_c);
    return out;
  }

  out.push_back({"ab", word(0, {L::a, L::b}), word(-2 * l, {L::b, L::a})});
  out.push_back({"ac", word(0, {L::a, L::c}), word(-4 * l, {L::c, L::a})});
  out.push_back({"b^2", word(0, {L::b, L::b}), word(3 * l, {L::a, L::c})});
  out.push_back({"bc", word(0, {L::b, L::c}), word(-2 * l, {L::c, L::b})});

  Relation bbs{"bb*", word(0, {L::b, L::b_star}), word(2 * l, {L::a})};
  append_products(bbs.rhs, 0, l - 1, 2);
  out.push_back(bbs);

  Relation bsb{"b*b", word(0, {L::b_star, L::b}), word(0, {L::a})};
  append_products(bsb.rhs, 1, l, -2);
  out.push_back(bsb);

  Relation bsc{"b*c", word(0, {L::b_star, L::c}), {-l, {}}};
  append_products(bsc.rhs, 1, l, -2);
  bsc.rhs.factors.push_back(Factor::of(L::b));
  out.push_back(bsc);

  Relation cbs{"cb*", word(0, {L::c, L::b_star}), word(l, {L::b})};
  append_products(cbs.rhs, 0, l - 1, 2);
  out.push_back(cbs);

  Relation cc{"cc*", word(0, {L::c, L::c_star}), {}};
  append_products(cc.rhs, 0, 2 * l - 1, 2);
  out.push_back(cc);

  Relation c_c{"c*c", word(0, {L::c_star, L::c}), {}};
  append_products(c_c.rhs, 1, 2 * l, -2);
  out.push_back(c_c);
  return out;
}

std::string to_string(const RelationSide& side, Parity parity) {
  std::ostringstream os;
  bool any = false;
  if (side.q_exp != 0) {
    os << "q^" << side.q_exp;
    any = true;
  }
  for (const Factor& f : side.factors) {
    if (any) os << ' ';
    any = true;
    if (f.kind == Factor::Kind::letter) {
      os << letter_name(f.letter, parity);
    } else if (f.q_exp == 0) {
      os << "(1 - a)";
    } else {
      os << "(1 - q^" << f.q_exp << " a)";
    }
  }
  if (!any) os << '1';
  return os.str();
}

AlgebraElement GeneratorSet::image(Letter x) const {
  switch (x) {
    case Letter::a: return a;
    case Letter::a_star: return star(a);
    case Letter::b:
    case Letter::b_star:
      if (!b) throw precondition_error("generator b exists only for odd weights");
      return x == Letter::b ? *b : star(*b);
    case Letter::c: return c;
    case Letter::c_star: return star(c);
  }
  return {};
}

GeneratorSet generators(const Weights& w) {
  GeneratorSet g;
  g.weights = w;
  g.a = gen::A();
  if (w.parity == Parity::even) {
    g.c = AlgebraElement(NormalMonomial{w.l, 0, w.s});
  } else {
    g.b = AlgebraElement(NormalMonomial{w.l, 1, w.s});
    g.c = AlgebraElement(NormalMonomial{2 * w.l, 0, w.k});
  }
  return g;
}

AlgebraElement evaluate(const RelationSide& side, const GeneratorSet& g) {
  AlgebraElement acc(NormalMonomial::identity(), qpow(side.q_exp));
  for (const Factor& f : side.factors) {
    if (f.kind == Factor::Kind::letter)
      acc = mul(acc, g.image(f.letter));
    else
      acc = mul(acc, AlgebraElement(1) - qpow(f.q_exp) * g.a);
  }
  return acc;
}

bool RelationReport::all_pass() const { return passed() == checks.size(); }

std::size_t RelationReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

RelationReport verify_relations(const Weights& w) {
  const GeneratorSet g = generators(w);
  RelationReport report;
  report.weights = w;
  report.tag = relation_tag(w.parity);
  for (const Relation& rel : relations(w.parity, w.l)) {
    RelationCheck check;
    check.id = rel.id;
    check.lhs_text = to_string(rel.lhs, w.parity);
    check.rhs_text = to_string(rel.rhs, w.parity);
    check.lhs = evaluate(rel.lhs, g);
    check.rhs = evaluate(rel.rhs, g);
    check.pass = check.lhs == check.rhs;
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::string to_string(const GeneratorWord& w) {
  std::ostringstream os;
  bool any = false;
  auto put = [&](const char* name, int e) {
    if (e == 0) return;
    if (any) os << ' ';
    os << name;
    if (e != 1) os << '^' << e;
    any = true;
  };
  if (w.parity == Parity::even) {
    put("c+", w.c_power);
    put("a", w.a_power);
  } else {
    put("b", w.b_power);
    put("a", w.a_power);
    put("c-", w.c_power);
  }
  if (!any) os << '1';
  if (w.conjugated) return "(" + os.str() + ")*";
  return os.str();
}

AlgebraElement value(const GeneratorWord& w, const GeneratorSet& g) {
  AlgebraElement v = w.parity == Parity::even
                         ? mul(power(g.c, w.c_power), power(g.a, w.a_power))
                         : mul(mul(power(*g.b, w.b_power), power(g.a, w.a_power)), power(g.c, w.c_power));
  return w.conjugated ? star(v) : v;
}

GeneratorWord factorize(const Weights& w, const NormalMonomial& mono) {
  if (mono.m < 0)
    throw precondition_error("factorize expects a z0-family word (m >= 0); conjugate z0* words first");
  if (degree(w, mono) != 0)
    throw precondition_error(to_string(mono) + " has degree " + std::to_string(degree(w, mono)) +
                             ", not coinvariant");
  // degree 0 and gcd(k,l) = 1 force l | m
  if (mono.m % w.l != 0) throw precondition_error(to_string(mono) + ": z0 power is not a multiple of l");

  GeneratorWord word;
  word.parity = w.parity;
  word.n = mono.m / w.l;
  const int excess = mono.r - w.s * word.n;
  if (w.parity == Parity::even) {
    if (mono.p % 2 != 0 || excess < 0)
      throw precondition_error(to_string(mono) + " lies outside the even coinvariant family");
    word.c_power = word.n;
    word.a_power = excess;
  } else {
    word.t = excess < 0 ? -excess : 0;
    if (word.n - 2 * word.t < 0)
      throw precondition_error(to_string(mono) + " lies outside the odd coinvariant family");
    word.b_power = word.n - 2 * word.t;
    word.a_power = excess + word.t;
    word.c_power = word.t;
  }

  const AlgebraElement v = value(word, generators(w));
  if (v.size() != 1 || v.terms().begin()->first != mono || !v.terms().begin()->second.is_unit())
    throw std::logic_error("factorize: generator word " + to_string(word) + " does not reduce to " +
                           to_string(mono));
  word.lambda = v.terms().begin()->second.unit_inverse();
  return word;
}

GeneratorWord factorize_with_conjugates(const Weights& w, const NormalMonomial& mono) {
  if (mono.m >= 0) return factorize(w, mono);
  // star(mono) = mu * mono' with mono' in the z0 family and mu = q^e real,
  // so mono = mu * star(mono') = mu * lambda' * star(word)
  const AlgebraElement s = star(mono);
  const auto& [conj, mu] = *s.terms().begin();
  GeneratorWord word = factorize(w, conj);
  word.lambda = mu * word.lambda;
  word.conjugated = true;
  return word;
}

}  // namespace qsei
