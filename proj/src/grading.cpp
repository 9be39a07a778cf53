#include "qsei/grading.hpp"

#include "qsei/errors.hpp"

#include <numeric>
#include <string>

namespace qsei {

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
  if (text == "even" || text == "+") return Parity::even;
  if (text == "odd" || text == "-") return Parity::odd;
  throw precondition_error("parity must be 'even' or 'odd', got '" + std::string(text) + "'");
}

Weights Weights::make(int k, int l) {
  if (l < 1) throw precondition_error("weight l must be positive, got " + std::to_string(l));
  if (std::gcd(k, l) != 1)
    throw precondition_error("weights (" + std::to_string(k) + "," + std::to_string(l) + ") are not coprime");
  Weights w;
  w.k = k;
  w.l = l;
  if (k % 2 == 0) {
    w.parity = Parity::even;
    w.s = k / 2;
  } else {
    w.parity = Parity::odd;
    w.s = (k + 1) / 2;
  }
  return w;
}

Weights Weights::canonical(Parity parity, int l) { return make(parity == Parity::even ? 2 : 1, l); }

int degree(const Weights& w, const NormalMonomial& mono) { return w.k * mono.m + (mono.p - 2 * mono.r) * w.l; }

AlgebraElement coinvariant_part(const Weights& w, const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [mono, c] : x.terms())
    if (degree(w, mono) == 0) out.add_term(mono, c);
  return out;
}

}  // namespace qsei
