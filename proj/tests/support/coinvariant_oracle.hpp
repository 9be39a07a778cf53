// Brute-force descriptions of the degree-0 monomials in a box:
//   (1) direct filtering of basis words by degree,
//   (2) values of generator words b^i a^j c^t (even: c^i a^j) normalized by
//       letter rewriting, keeping those that are unit multiples of one word.
// Generator images are written out here rather than taken from the library.

#pragma once

#include "qsei/grading.hpp"
#include "support/word_oracle.hpp"

#include <set>

namespace qsei::testing {

struct Box {
  int m_max;  ///< 0 <= m <= m_max
  int p_max;  ///< 0 <= p <= p_max
  int r_abs;  ///< |r| <= r_abs

  bool contains(const NormalMonomial& w) const {
    return w.m >= 0 && w.m <= m_max && w.p >= 0 && w.p <= p_max && w.r >= -r_abs && w.r <= r_abs;
  }
};

inline std::set<NormalMonomial> degree_zero_monomials(int k, int l, const Box& box) {
  std::set<NormalMonomial> out;
  for (int m = 0; m <= box.m_max; ++m)
    for (int p = 0; p <= box.p_max; ++p)
      for (int r = -box.r_abs; r <= box.r_abs; ++r)
        if (k * m + (p - 2 * r) * l == 0) out.insert({m, p, r});
  return out;
}

inline std::set<NormalMonomial> generator_word_monomials(int k, int l, const Box& box) {
  const bool even = k % 2 == 0;
  const int s = even ? k / 2 : (k + 1) / 2;
  const Word a = letters({0, 2, 1});
  const Word b = letters({l, 1, s});
  const Word c = even ? letters({l, 0, s}) : letters({2 * l, 0, k});

  auto repeat = [](const Word& w, int n) {
    Word out;
    for (int i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
  };

  std::set<NormalMonomial> out;
  const int n_max = box.m_max / l;
  for (int i = 0; i <= (even ? 0 : n_max); ++i)
    for (int j = 0; j <= box.p_max; ++j)
      for (int t = 0; t <= n_max; ++t) {
        Word w = repeat(b, i);
        const Word wa = repeat(a, j), wc = repeat(c, t);
        if (even) {
          w = wc;
          w.insert(w.end(), wa.begin(), wa.end());
        } else {
          w.insert(w.end(), wa.begin(), wa.end());
          w.insert(w.end(), wc.begin(), wc.end());
        }
        const AlgebraElement v = oracle_word(w);
        if (v.size() != 1) continue;
        const auto& [mono, coeff] = *v.terms().begin();
        if (coeff.is_unit() && box.contains(mono)) out.insert(mono);
      }
  return out;
}

}  // namespace qsei::testing
