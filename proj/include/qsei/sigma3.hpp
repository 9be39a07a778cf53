// The coordinate *-algebra of the quantum Seifert manifold Sigma^3_q.
//
// Generators z0, z0*, z1 and a central unitary xi subject to
//
//   z0 z1 = q z1 z0,   z0 z0* + z1^2 xi = 1,
//   z0 z0* = z0* z0 + (q^-2 - 1) z1^2 xi,   z1* = z1 xi.
//
// Every element is a Z[q,q^-1]-combination of the PBW words
// z0^m z1^p xi^r (m >= 0) and z0*^|m| z1^p xi^r (m < 0), p >= 0, r in Z.

#pragma once

#include "qsei/laurent.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace qsei {

struct NormalMonomial {
  int m = 0;  ///< z0^m for m >= 0, z0*^-m for m < 0
  int p = 0;  ///< power of z1, never negative
  int r = 0;  ///< power of xi

  static constexpr NormalMonomial identity() { return {}; }
  constexpr bool is_identity() const { return m == 0 && p == 0 && r == 0; }

  friend constexpr auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;
};

std::string to_string(const NormalMonomial& w);

class AlgebraElement {
 public:
  using storage_type = std::map<NormalMonomial, LaurentPoly>;

  AlgebraElement() = default;
  AlgebraElement(long long constant);  // NOLINT(google-explicit-constructor)
  AlgebraElement(const NormalMonomial& w, LaurentPoly coeff = LaurentPoly(1));

  const storage_type& terms() const& { return terms_; }
  // safe in range-for over a temporary
  storage_type terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coefficient(const NormalMonomial& w) const;

  /// Adds c * w, dropping the term if it cancels.
  void add_term(const NormalMonomial& w, const LaurentPoly& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const LaurentPoly& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= LaurentPoly(-1); }
  friend AlgebraElement operator*(const LaurentPoly& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  storage_type terms_;
};

/// Normal-form product.
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
/// Product of two PBW words.
AlgebraElement mul(const NormalMonomial& a, const NormalMonomial& b);
/// x^n for n >= 0.
AlgebraElement power(const AlgebraElement& x, int n);

/// The involution; coefficients are real so conjugation fixes them.
AlgebraElement star(const AlgebraElement& x);
AlgebraElement star(const NormalMonomial& w);

/// Right-hand side of the closed product formulas for z0^m z0*^n
/// (conjugate_first = false) or z0*^n z0^m (conjugate_first = true),
/// assembled factor by factor from (1 - q^{2j} A), A = z1^2 xi.
AlgebraElement powers_oracle(int m, int n, bool conjugate_first);

// Generators.
namespace gen {
inline AlgebraElement z0() { return AlgebraElement(NormalMonomial{1, 0, 0}); }
inline AlgebraElement z0s() { return AlgebraElement(NormalMonomial{-1, 0, 0}); }
inline AlgebraElement z1() { return AlgebraElement(NormalMonomial{0, 1, 0}); }
inline AlgebraElement z1s() { return AlgebraElement(NormalMonomial{0, 1, 1}); }
inline AlgebraElement xi() { return AlgebraElement(NormalMonomial{0, 0, 1}); }
inline AlgebraElement xis() { return AlgebraElement(NormalMonomial{0, 0, -1}); }
/// The quasi-central element A = z1^2 xi.
inline AlgebraElement A() { return AlgebraElement(NormalMonomial{0, 2, 1}); }
}  // namespace gen

/// Terms in lexicographic (m, p, r) order, e.g. "1 - z1^2 xi".
std::string to_string(const AlgebraElement& x);
std::ostream& operator<<(std::ostream& os, const AlgebraElement& x);

}  // namespace qsei
