// ASCII expression language for elements of O(Sigma^3_q).
//
//   expr     = term { ("+" | "-") term } ;
//   term     = [ "-" ] product ;
//   product  = factor { [ "*" ] factor } ;
//   factor   = primary [ "^" exponent ] ;
//   primary  = symbol | integer | "(" expr ")" ;
//   exponent = [ "-" ] digits ;
//   symbol   = "z0" | "z0s" | "z1" | "z1s" | "xi" | "xis" | "q" ;
//
// Whitespace is ignored and "*" between factors is optional, so "z0 z0s",
// "z0*z0s" and "z0z0s" are the same product.  z1s and xis are sugar for
// z1 xi and xi^-1.

#pragma once

#include "qsei/sigma3.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qsei {

enum class Symbol { z0, z0s, z1, z1s, xi, xis, q };

std::string_view symbol_name(Symbol s);

struct Expr {
  enum class Kind { integer, symbol, power, product, sum, negate };

  Kind kind = Kind::integer;
  BigInt value = 0;            ///< integer literal (non-negative)
  Symbol symbol = Symbol::q;
  int exponent = 0;            ///< power only
  std::vector<Expr> children;  ///< power: {base}; negate: {operand}; product/sum: operands

  static Expr integer(BigInt v);
  static Expr sym(Symbol s);
  static Expr power(Expr base, int exponent);
  static Expr product(std::vector<Expr> factors);
  static Expr sum(std::vector<Expr> terms);
  static Expr negate(Expr operand);

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Largest accepted |exponent|.
inline constexpr int kMaxExponent = 4096;

/// Throws parse_error (with byte offset) on malformed input.
Expr parse(std::string_view text);

/// Evaluates in sigma3.  Negative powers are allowed on units (q, xi, xis,
/// and products of them); anything else throws precondition_error.
AlgebraElement lower(const Expr& e);

inline AlgebraElement parse_element(std::string_view text) { return lower(parse(text)); }

/// Prints with the fewest parentheses that preserve the tree.
std::string to_string(const Expr& e);

}  // namespace qsei
