#include "qsei/parser.hpp"

#include "qsei/errors.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace qsei {

std::string_view symbol_name(Symbol s) {
  switch (s) {
    case Symbol::z0: return "z0";
    case Symbol::z0s: return "z0s";
    case Symbol::z1: return "z1";
    case Symbol::z1s: return "z1s";
    case Symbol::xi: return "xi";
    case Symbol::xis: return "xis";
    case Symbol::q: return "q";
  }
  return "?";
}

Expr Expr::integer(BigInt v) {
  Expr e;
  e.kind = Kind::integer;
  e.value = std::move(v);
  return e;
}

Expr Expr::sym(Symbol s) {
  Expr e;
  e.kind = Kind::symbol;
  e.symbol = s;
  return e;
}

Expr Expr::power(Expr base, int exponent) {
  Expr e;
  e.kind = Kind::power;
  e.exponent = exponent;
  e.children.push_back(std::move(base));
  return e;
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.size() == 1) return std::move(factors.front());
  Expr e;
  e.kind = Kind::product;
  e.children = std::move(factors);
  return e;
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.size() == 1) return std::move(terms.front());
  Expr e;
  e.kind = Kind::sum;
  e.children = std::move(terms);
  return e;
}

Expr Expr::negate(Expr operand) {
  Expr e;
  e.kind = Kind::negate;
  e.children.push_back(std::move(operand));
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    if (skip_ws() == text_.size()) throw parse_error("empty expression", pos_);
    Expr e = expr();
    if (skip_ws() != text_.size()) throw parse_error("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  std::size_t skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Expr expr() {
    std::vector<Expr> terms;
    terms.push_back(term());
    for (;;) {
      if (accept('+'))
        terms.push_back(term());
      else if (accept('-'))
        terms.push_back(Expr::negate(term()));
      else
        break;
    }
    return Expr::sum(std::move(terms));
  }

  Expr term() {
    if (accept('-')) return Expr::negate(product());
    return product();
  }

  bool starts_factor() {
    const char c = peek();
    return c == '(' || c == 'z' || c == 'x' || c == 'q' || std::isdigit(static_cast<unsigned char>(c));
  }

  Expr product() {
    std::vector<Expr> factors;
    factors.push_back(factor());
    for (;;) {
      if (accept('*')) {
        factors.push_back(factor());
      } else if (starts_factor()) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    return Expr::product(std::move(factors));
  }

  Expr factor() {
    Expr base = primary();
    if (!accept('^')) return base;
    return Expr::power(std::move(base), exponent());
  }

  int exponent() {
    const bool negative = accept('-');
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxExponent) throw parse_error("exponent out of range", start);
      ++pos_;
    }
    if (pos_ == start) throw parse_error("expected exponent digits", start);
    return static_cast<int>(negative ? -v : v);
  }

  Expr primary() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '\0') throw parse_error("unexpected end of input", start);
    if (accept('(')) {
      Expr inner = expr();
      if (!accept(')')) throw parse_error("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
      return Expr::integer(BigInt(digits));
    }
    // longest symbol match
    static constexpr std::array<std::pair<std::string_view, Symbol>, 7> table{{{"z0s", Symbol::z0s},
                                                                                {"z1s", Symbol::z1s},
                                                                                {"xis", Symbol::xis},
                                                                                {"z0", Symbol::z0},
                                                                                {"z1", Symbol::z1},
                                                                                {"xi", Symbol::xi},
                                                                                {"q", Symbol::q}}};
    for (const auto& [name, sym] : table) {
      if (text_.substr(pos_, name.size()) == name) {
        pos_ += name.size();
        return Expr::sym(sym);
      }
    }
    throw parse_error("unknown symbol starting with '" + std::string(1, c) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

AlgebraElement lower_symbol(Symbol s) {
  switch (s) {
    case Symbol::z0: return gen::z0();
    case Symbol::z0s: return gen::z0s();
    case Symbol::z1: return gen::z1();
    case Symbol::z1s: return gen::z1s();
    case Symbol::xi: return gen::xi();
    case Symbol::xis: return gen::xis();
    case Symbol::q: return AlgebraElement(NormalMonomial::identity(), qpow(1));
  }
  return {};
}

// Inverse of +-q^e xi^r; other elements are not units.
AlgebraElement unit_inverse(const AlgebraElement& x) {
  if (x.size() == 1) {
    const auto& [w, c] = *x.terms().begin();
    if (w.m == 0 && w.p == 0 && c.is_unit()) return AlgebraElement(NormalMonomial{0, 0, -w.r}, c.unit_inverse());
  }
  throw precondition_error("negative power of a non-invertible element: " + to_string(x));
}

bool atomic(const Expr& e) { return e.kind == Expr::Kind::integer || e.kind == Expr::Kind::symbol; }

std::string wrap(const Expr& e) { return "(" + to_string(e) + ")"; }

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

AlgebraElement lower(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::integer: return AlgebraElement(NormalMonomial::identity(), LaurentPoly::monomial(e.value, 0));
    case Expr::Kind::symbol: return lower_symbol(e.symbol);
    case Expr::Kind::power: {
      AlgebraElement base = lower(e.children.front());
      if (e.exponent < 0) base = unit_inverse(base);
      return power(base, e.exponent < 0 ? -e.exponent : e.exponent);
    }
    case Expr::Kind::product: {
      AlgebraElement acc(1);
      for (const Expr& f : e.children) acc = mul(acc, lower(f));
      return acc;
    }
    case Expr::Kind::sum: {
      AlgebraElement acc;
      for (const Expr& t : e.children) acc += lower(t);
      return acc;
    }
    case Expr::Kind::negate: return -lower(e.children.front());
  }
  return {};
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::integer: return e.value.str();
    case Expr::Kind::symbol: return std::string(symbol_name(e.symbol));
    case Expr::Kind::power: {
      const Expr& base = e.children.front();
      return (atomic(base) ? to_string(base) : wrap(base)) + "^" + std::to_string(e.exponent);
    }
    case Expr::Kind::product: {
      std::string out;
      for (const Expr& f : e.children) {
        if (!out.empty()) out += ' ';
        const bool paren = f.kind == Expr::Kind::sum || f.kind == Expr::Kind::negate || f.kind == Expr::Kind::product;
        out += paren ? wrap(f) : to_string(f);
      }
      return out;
    }
    case Expr::Kind::sum: {
      std::string out;
      bool first = true;
      for (const Expr& t : e.children) {
        if (t.kind == Expr::Kind::negate) {
          const Expr& inner = t.children.front();
          const bool paren = inner.kind == Expr::Kind::sum || inner.kind == Expr::Kind::negate;
          out += first ? "-" : " - ";
          out += paren ? wrap(inner) : to_string(inner);
        } else {
          if (!first) out += " + ";
          out += t.kind == Expr::Kind::sum ? wrap(t) : to_string(t);
        }
        first = false;
      }
      return out;
    }
    case Expr::Kind::negate: {
      const Expr& inner = e.children.front();
      const bool paren = inner.kind == Expr::Kind::sum || inner.kind == Expr::Kind::negate;
      return "-" + (paren ? wrap(inner) : to_string(inner));
    }
  }
  return {};
}

}  // namespace qsei
