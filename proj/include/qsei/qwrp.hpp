// Coinvariant subalgebras O(RP^2_q(l;+-)) of O(Sigma^3_q).
//
// For weights (k, l) the coinvariants are generated by
//   even k = 2s:      a = z1^2 xi,  c+ = z0^l xi^s
//   odd  k = 2s - 1:  a = z1^2 xi,  b = z0^l z1 xi^s,  c- = z0^{2l} xi^k
// and the defining relations depend on the parity of k only.
//
// The relation table below is the single source used both for exact
// verification inside sigma3 and for numeric checks on representations.
// Products (1 - q^e a) are kept factored so numeric evaluation never expands
// them into large cancelling coefficients.

#pragma once

#include "qsei/grading.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsei {

enum class Letter { a, a_star, b, b_star, c, c_star };

std::string letter_name(Letter x, Parity parity);

/// Either a generator letter or a linear factor (1 - q^e a).
struct Factor {
  enum class Kind { letter, one_minus } kind = Kind::letter;
  Letter letter = Letter::a;
  int q_exp = 0;

  static Factor of(Letter x) { return {Kind::letter, x, 0}; }
  static Factor one_minus(int e) { return {Kind::one_minus, Letter::a, e}; }
};

/// q^{q_exp} * factors[0] * factors[1] * ...; an empty product is 1.
struct RelationSide {
  int q_exp = 0;
  std::vector<Factor> factors;
};

struct Relation {
  std::string id;  ///< short stable key, e.g. "cc*" or "b^2"
  RelationSide lhs;
  RelationSide rhs;
};

/// Equation tag of a relation family: "even" or "odd".
std::string relation_tag(Parity parity);

/// The 4 even or 11 odd defining relations for a given l.
std::vector<Relation> relations(Parity parity, int l);

std::string to_string(const RelationSide& side, Parity parity);

struct GeneratorSet {
  Weights weights;
  AlgebraElement a;
  std::optional<AlgebraElement> b;  ///< odd parity only
  AlgebraElement c;

  Parity parity() const { return weights.parity; }
  int l() const { return weights.l; }
  /// Image of a letter in O(Sigma^3_q); starred letters go through the involution.
  AlgebraElement image(Letter x) const;
};

GeneratorSet generators(const Weights& w);

/// Evaluates a relation side inside sigma3.
AlgebraElement evaluate(const RelationSide& side, const GeneratorSet& g);

struct RelationCheck {
  std::string id;
  std::string lhs_text;
  std::string rhs_text;
  AlgebraElement lhs;
  AlgebraElement rhs;
  bool pass = false;
};

struct RelationReport {
  Weights weights;
  std::string tag;
  std::vector<RelationCheck> checks;

  bool all_pass() const;
  std::size_t passed() const;
};

RelationReport verify_relations(const Weights& w);

/// A coinvariant PBW word written through the generators:
///   even: c+^n a^j,   odd: b^{n-2t} a^{r-sn+t} c-^t
/// together with the scalar lambda for which mono = lambda * word.
struct GeneratorWord {
  Parity parity = Parity::even;
  int n = 0;
  int t = 0;
  int b_power = 0;
  int a_power = 0;
  int c_power = 0;
  LaurentPoly lambda{1};
  /// mono = lambda * star(word) for z0*-family monomials
  bool conjugated = false;
};

std::string to_string(const GeneratorWord& w);

/// Normal form of the word (without lambda), multiplied in the order above.
AlgebraElement value(const GeneratorWord& w, const GeneratorSet& g);

/// Requires degree(w, mono) == 0 and mono.m >= 0.
GeneratorWord factorize(const Weights& w, const NormalMonomial& mono);

/// Also accepts z0*-family monomials: star(mono) is factorized and the word
/// is returned with conjugated = true.
GeneratorWord factorize_with_conjugates(const Weights& w, const NormalMonomial& mono);

}  // namespace qsei
