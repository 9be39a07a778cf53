#include "qsei/sigma3.hpp"

#include <ostream>
#include <sstream>
#include <vector>

namespace qsei {

namespace {

// Coefficients (by power of A) of prod_{j in [lo, hi]} (1 - q^{step*j} A).
std::vector<LaurentPoly> one_minus_product(int lo, int hi, int step) {
  std::vector<LaurentPoly> poly{LaurentPoly(1)};
  for (int j = lo; j <= hi; ++j) {
    std::vector<LaurentPoly> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= poly[i].shifted(step * j);
    }
    poly = std::move(next);
  }
  return poly;
}

struct Zeta0Term {
  int m;        // resulting signed z0 power
  int a_power;  // power of A = z1^2 xi standing to the right
  LaurentPoly coeff;
};

// Normal form of X(m1) X(m2), X(m) = z0^m or z0*^-m.
std::vector<Zeta0Term> zeta0_product(int m1, int m2) {
  if (m1 == 0 || m2 == 0 || (m1 > 0) == (m2 > 0)) return {{m1 + m2, 0, LaurentPoly(1)}};

  int rest = 0;
  std::vector<LaurentPoly> poly;
  bool poly_on_left = false;
  if (m1 > 0) {
    // z0^a z0*^b
    const int a = m1, b = -m2;
    poly = one_minus_product(0, std::min(a, b) - 1, 2);
    rest = a - b;
    poly_on_left = b > a;
  } else {
    // z0*^b z0^a
    const int b = -m1, a = m2;
    poly = one_minus_product(1, std::min(a, b), -2);
    rest = a - b;
    poly_on_left = a > b;
  }

  std::vector<Zeta0Term> out;
  out.reserve(poly.size());
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (poly[j].is_zero()) continue;
    // A X(m) = q^{-2m} X(m) A
    const int shift = poly_on_left ? -2 * rest * static_cast<int>(j) : 0;
    out.push_back({rest, static_cast<int>(j), poly[j].shifted(shift)});
  }
  return out;
}

void append_power(std::ostream& os, const char* name, int e, bool& any) {
  if (e == 0) return;
  if (any) os << ' ';
  os << name;
  if (e != 1) os << '^' << e;
  any = true;
}

}  // namespace

std::string to_string(const NormalMonomial& w) {
  std::ostringstream os;
  bool any = false;
  if (w.m >= 0)
    append_power(os, "z0", w.m, any);
  else
    append_power(os, "z0s", -w.m, any);
  append_power(os, "z1", w.p, any);
  append_power(os, "xi", w.r, any);
  if (!any) os << '1';
  return os.str();
}

AlgebraElement::AlgebraElement(long long constant) {
  if (constant != 0) terms_.emplace(NormalMonomial::identity(), LaurentPoly(constant));
}

AlgebraElement::AlgebraElement(const NormalMonomial& w, LaurentPoly coeff) {
  if (!coeff.is_zero()) terms_.emplace(w, std::move(coeff));
}

LaurentPoly AlgebraElement::coefficient(const NormalMonomial& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void AlgebraElement::add_term(const NormalMonomial& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return mul(a, b); }

AlgebraElement mul(const NormalMonomial& a, const NormalMonomial& b) {
  // z1^p1 X(m2) = q^{-p1 m2} X(m2) z1^p1
  const int commute = -a.p * b.m;
  AlgebraElement out;
  for (const auto& t : zeta0_product(a.m, b.m)) {
    out.add_term({t.m, 2 * t.a_power + a.p + b.p, t.a_power + a.r + b.r}, t.coeff.shifted(commute));
  }
  return out;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [wa, ca] : x.terms()) {
    for (const auto& [wb, cb] : y.terms()) {
      const LaurentPoly c = ca * cb;
      const AlgebraElement prod = mul(wa, wb);
      for (const auto& [w, cw] : prod.terms()) out.add_term(w, c * cw);
    }
  }
  return out;
}

AlgebraElement power(const AlgebraElement& x, int n) {
  AlgebraElement out(1);
  for (int i = 0; i < n; ++i) out = mul(out, x);
  return out;
}

AlgebraElement star(const NormalMonomial& w) {
  // (z0^m z1^p xi^r)* = xi^-r (z1 xi)^p z0*^m = q^{pm} z0*^m z1^p xi^{p-r}
  return AlgebraElement(NormalMonomial{-w.m, w.p, w.p - w.r}, qpow(w.p * w.m));
}

AlgebraElement star(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [w, c] : x.terms()) {
    const AlgebraElement sx = star(w);
    const auto& [sw, sc] = *sx.terms().begin();
    out.add_term(sw, sc * c);
  }
  return out;
}

AlgebraElement powers_oracle(int m, int n, bool conjugate_first) {
  const AlgebraElement A = gen::A();
  AlgebraElement prod(1);
  if (!conjugate_first) {
    // z0^m z0*^n
    const int top = std::min(m, n);
    for (int j = 0; j < top; ++j) prod = mul(prod, AlgebraElement(1) - qpow(2 * j) * A);
    if (m > n) return mul(power(gen::z0(), m - n), prod);
    return mul(prod, power(gen::z0s(), n - m));
  }
  // z0*^n z0^m
  const int top = std::min(m, n);
  for (int j = 1; j <= top; ++j) prod = mul(prod, AlgebraElement(1) - qpow(-2 * j) * A);
  if (n > m) return mul(power(gen::z0s(), n - m), prod);
  return mul(prod, power(gen::z0(), m - n));
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    const bool single = c.size() == 1;
    const bool negative = single && c.terms().begin()->second < 0;
    const LaurentPoly mag = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    if (w.is_identity()) {
      os << mag.to_string();
    } else if (mag == LaurentPoly(1)) {
      os << to_string(w);
    } else if (single) {
      os << mag.to_string() << ' ' << to_string(w);
    } else {
      os << '(' << mag.to_string() << ") " << to_string(w);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) { return os << to_string(x); }

}  // namespace qsei
