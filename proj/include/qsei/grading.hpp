// Z-grading of O(Sigma^3_q) induced by the circle coaction with weights (k, l):
// z0 -> z0 (x) u^k, z1 -> z1 (x) u^l, xi -> xi (x) u^{-2l}.

#pragma once

#include "qsei/sigma3.hpp"

#include <string_view>

namespace qsei {

enum class Parity { even, odd };

std::string_view to_string(Parity p);
/// Accepts "even"/"+" and "odd"/"-".
Parity parse_parity(std::string_view text);

struct Weights {
  int k = 0;
  int l = 1;
  Parity parity = Parity::even;
  /// k = 2s (even) or k = 2s - 1 (odd).
  int s = 0;

  /// Validates gcd(k, l) = 1 and l >= 1.
  static Weights make(int k, int l);
  /// The representative weights k = 2 (even) or k = 1 (odd).
  static Weights canonical(Parity parity, int l);
};

/// Degree k m + (p - 2r) l; a z0* letter carries degree -k.
int degree(const Weights& w, const NormalMonomial& mono);

/// Projection onto the degree-0 (coinvariant) terms.
AlgebraElement coinvariant_part(const Weights& w, const AlgebraElement& x);

inline bool is_coinvariant(const Weights& w, const AlgebraElement& x) {
  return coinvariant_part(w, x) == x;
}

}  // namespace qsei
