// Exact arithmetic in Z[q, q^-1].
//
// A Laurent polynomial is stored sparsely as an ordered map exponent ->
// coefficient.  Zero coefficients are never stored, so structural equality of
// the maps is equality of polynomials.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsei {

using BigInt = boost::multiprecision::cpp_int;

template <typename Int>
class BasicLaurentPoly {
 public:
  using coefficient_type = Int;
  using storage_type = std::map<int, Int>;

  BasicLaurentPoly() = default;
  BasicLaurentPoly(long long constant) { set(0, Int(constant)); }  // NOLINT(google-explicit-constructor)

  /// The monomial q^e.
  static BasicLaurentPoly qpow(int e) {
    BasicLaurentPoly p;
    p.terms_.emplace(e, Int(1));
    return p;
  }

  static BasicLaurentPoly monomial(const Int& c, int e) {
    BasicLaurentPoly p;
    p.set(e, c);
    return p;
  }

  const storage_type& terms() const& { return terms_; }
  // safe in range-for over a temporary
  storage_type terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// True for +-q^e, the units of the ring.
  bool is_unit() const {
    using std::abs;
    return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
  }
  bool is_qpower() const {
    return terms_.size() == 1 && terms_.begin()->second == 1;
  }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Int coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  BasicLaurentPoly& operator+=(const BasicLaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }
  BasicLaurentPoly& operator-=(const BasicLaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, -c);
    return *this;
  }
  BasicLaurentPoly& operator*=(const BasicLaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend BasicLaurentPoly operator+(BasicLaurentPoly a, const BasicLaurentPoly& b) { return a += b; }
  friend BasicLaurentPoly operator-(BasicLaurentPoly a, const BasicLaurentPoly& b) { return a -= b; }
  friend BasicLaurentPoly operator-(BasicLaurentPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend BasicLaurentPoly operator*(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    BasicLaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.accumulate(ea + eb, ca * cb);
    return out;
  }
  friend bool operator==(const BasicLaurentPoly&, const BasicLaurentPoly&) = default;

  /// Multiply by q^e in place of a full product.
  BasicLaurentPoly shifted(int e) const {
    if (e == 0) return *this;
    BasicLaurentPoly out;
    for (const auto& [x, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), x + e, c);
    return out;
  }

  /// Invert a unit +-q^e.
  BasicLaurentPoly unit_inverse() const {
    if (!is_unit()) throw std::domain_error("LaurentPoly: only +-q^e is invertible");
    return monomial(terms_.begin()->second, -terms_.begin()->first);
  }

  std::string to_string() const;

 private:
  void set(int e, const Int& c) {
    if (c != 0) terms_[e] = c;
  }
  void accumulate(int e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  storage_type terms_;
};

using LaurentPoly = BasicLaurentPoly<BigInt>;

inline LaurentPoly qpow(int e) { return LaurentPoly::qpow(e); }

/// Numeric value at a deformation parameter 0 < q < 1, summed in ascending
/// exponent order.
template <typename Int>
double eval(const BasicLaurentPoly<Int>& p, double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("eval: q must lie in (0,1)");
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) sum += static_cast<double>(c) * std::pow(q, e);
  return sum;
}

// Renders e.g. "q^-2 - 1" or "3 q - 2 q^4"; the zero polynomial is "0".
template <typename Int>
std::string BasicLaurentPoly<Int>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << " ";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

template <typename Int>
std::ostream& operator<<(std::ostream& os, const BasicLaurentPoly<Int>& p) {
  return os << p.to_string();
}

}  // namespace qsei
