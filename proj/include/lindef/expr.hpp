#ifndef LINDEF_EXPR_HPP
#define LINDEF_EXPR_HPP

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "scalar.hpp"

namespace lindef {

// Polynomial with exact coefficients, keyed by exponent vector.
template <class K>
using Poly = std::map<Expo, K, GrevlexLess>;

template <class K>
void poly_add_term(Poly<K>& p, const Expo& e, const K& c) {
  if (is_zero(c)) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) p.erase(it);
  }
}

template <class K>
Poly<K> poly_mul(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> c;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) poly_add_term(c, expo_mul(ea, eb), K(ca * cb));
  return c;
}

template <class K>
Poly<K> poly_scale(Poly<K> p, const K& c) {
  if (is_zero(c)) return {};
  for (auto& [e, v] : p) v *= c;
  return p;
}

template <class K>
Poly<K> poly_add(Poly<K> a, const Poly<K>& b) {
  for (const auto& [e, c] : b) poly_add_term(a, e, c);
  return a;
}

template <class K>
Poly<K> poly_sub(Poly<K> a, const Poly<K>& b) {
  for (const auto& [e, c] : b) poly_add_term(a, e, K(K(0) - c));
  return a;
}

template <class K>
Poly<K> poly_neg(const Poly<K>& p) {
  return poly_sub(Poly<K>{}, p);
}

// -1 for the zero polynomial; homogeneity is checked separately.
template <class K>
int poly_deg(const Poly<K>& p) {
  int d = -1;
  for (const auto& [e, c] : p) d = std::max(d, expo_deg(e));
  return d;
}

template <class K>
bool poly_homogeneous(const Poly<K>& p) {
  int d = -1;
  for (const auto& [e, c] : p) {
    if (d < 0) d = expo_deg(e);
    else if (expo_deg(e) != d) return false;
  }
  return true;
}

template <class K>
std::string poly_str(const Poly<K>& p, const std::vector<std::string>& names) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : p) {
    std::string cs = scalar_str(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string ms = monomial_str(e, names);
    if (cs == "1" && ms != "1") s += ms;
    else if (ms == "1") s += cs;
    else s += cs + "*" + ms;
  }
  return s;
}

// Recursive-descent parser for polynomial expressions:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := ident | rational | '(' expr ')'
// Rational literals allow "n/d". No implicit multiplication.
template <class K>
class ExprParser {
 public:
  ExprParser(const std::string& src, const std::map<std::string, int>& varIndex, int nvars)
      : s_(src), vars_(varIndex), n_(nvars) {}

  Poly<K> parse() {
    Poly<K> p = expr();
    skipWs();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) +
                                " in '" + s_ + "': " + why);
  }
  void skipWs() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skipWs();
    if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
    return false;
  }
  char peek() {
    skipWs();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly<K> expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly<K> p = term();
    if (neg) p = poly_neg(p);
    for (;;) {
      if (eat('+')) p = poly_add(std::move(p), term());
      else if (eat('-')) p = poly_sub(std::move(p), term());
      else return p;
    }
  }

  Poly<K> term() {
    Poly<K> p = factor();
    while (eat('*')) p = poly_mul(p, factor());
    return p;
  }

  Poly<K> factor() {
    Poly<K> p = atom();
    if (eat('^')) {
      skipWs();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("exponent must be a nonnegative integer");
      int e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        e = e * 10 + (s_[pos_++] - '0');
      Poly<K> r;
      poly_add_term(r, Expo(n_, 0), K(1));
      for (int i = 0; i < e; ++i) r = poly_mul(r, p);
      p = std::move(r);
    }
    return p;
  }

  Poly<K> atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly<K> p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        id += s_[pos_++];
      auto it = vars_.find(id);
      if (it == vars_.end()) fail("unknown variable '" + id + "'");
      Expo e(n_, 0);
      e[it->second] = 1;
      Poly<K> p;
      poly_add_term(p, e, K(1));
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        num += s_[pos_++];
      std::string lit = num;
      size_t save = pos_;
      skipWs();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skipWs();
        std::string den;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
          den += s_[pos_++];
        if (den.empty() || den == "0") { pos_ = save; }
        else lit = num + "/" + den;
      }
      Poly<K> p;
      poly_add_term(p, Expo(n_, 0), scalarFromRatLit(lit));
      return p;
    }
    fail("unexpected character");
  }

  K scalarFromRatLit(const std::string& lit) {
    Rat q = rat_parse(lit);
    if constexpr (std::is_same_v<K, Rat>) {
      return q;
    } else {
      Fp f;
      if (!fp_of_rat(q, f))
        throw std::invalid_argument("literal '" + lit + "' has denominator divisible by p");
      return f;
    }
  }

  const std::string& s_;
  std::map<std::string, int> vars_;
  int n_;
  size_t pos_ = 0;
};

template <class K>
Poly<K> parse_poly(const std::string& src, const std::vector<std::string>& varNames) {
  std::map<std::string, int> idx;
  for (size_t i = 0; i < varNames.size(); ++i) idx[varNames[i]] = static_cast<int>(i);
  return ExprParser<K>(src, idx, static_cast<int>(varNames.size())).parse();
}

}  // namespace lindef

#endif
