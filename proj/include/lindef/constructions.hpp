#ifndef LINDEF_CONSTRUCTIONS_HPP
#define LINDEF_CONSTRUCTIONS_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lindef/algebra.hpp"

namespace lindef {

// ---------------------------------------------------------------------
// h-polynomials and Hilbert functions.

struct HPolynomial {
  std::vector<long long> h;  // h[0], h[1], ...

  int degree() const {
    int d = static_cast<int>(h.size()) - 1;
    while (d > 0 && h[d] == 0) --d;
    return d;
  }
  long long at(int i) const {
    return (i >= 0 && i < static_cast<int>(h.size())) ? h[i] : 0;
  }
  long long evalMinusOne() const {
    long long v = 0;
    for (size_t i = 0; i < h.size(); ++i) v += (i % 2 ? -h[i] : h[i]);
    return v;
  }
  void trim() {
    while (h.size() > 1 && h.back() == 0) h.pop_back();
  }
  std::string str() const {
    std::string s;
    for (size_t i = 0; i < h.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(h[i]);
    }
    return s;
  }
  friend bool operator==(const HPolynomial& a, const HPolynomial& b) {
    int n = std::max(a.degree(), b.degree());
    for (int i = 0; i <= n; ++i)
      if (a.at(i) != b.at(i)) return false;
    return true;
  }
};

// Product of two bivariate-free polynomial coefficient lists.
inline std::vector<long long> poly_coeff_mul(const std::vector<long long>& a,
                                             const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline HPolynomial h_poly_segre(int m, int n) {
  if (m < 1 || n < m) throw std::invalid_argument("h_poly_segre: need 1 <= m <= n");
  HPolynomial p;
  for (int i = 0; i < m; ++i)
    p.h.push_back(static_cast<long long>(binom(m - 1, i)) *
                  static_cast<long long>(binom(n - 1, i)));
  p.trim();
  return p;
}

inline HPolynomial h_poly_veronese(int n, int c) {
  if (n < 1 || c < 1) throw std::invalid_argument("h_poly_veronese: need n, c >= 1");
  HPolynomial p;
  for (int i = 0; i < n; ++i) {
    long long hi = 0;
    for (int j = 0; j <= i; ++j) {
      long long t = static_cast<long long>(binom(n - 1 + j * c, n - 1)) *
                    static_cast<long long>(binom(n, i - j));
      hi += ((i - j) % 2 ? -t : t);
    }
    p.h.push_back(hi);
  }
  p.trim();
  return p;
}

// Full Hilbert functions of the graded (non-artinian) rings; independent
// of the closed-form h-vectors above, used as cross-check oracles.
inline long long hf_segre(int m, int n, int i) {
  return static_cast<long long>(binom(m - 1 + i, m - 1)) *
         static_cast<long long>(binom(n - 1 + i, n - 1));
}
inline long long hf_veronese(int n, int c, int i) {
  return static_cast<long long>(binom(n - 1 + i * c, n - 1));
}

// Numerator of HS(t)*(1-t)^dim from the first few Hilbert function values:
// h_k = sum_j (-1)^j C(dim, j) HF(k - j).
inline HPolynomial h_from_hilbert_function(const std::vector<long long>& hf, int dim) {
  HPolynomial p;
  for (size_t k = 0; k < hf.size(); ++k) {
    long long v = 0;
    for (int j = 0; j <= static_cast<int>(std::min<size_t>(k, dim)); ++j) {
      long long t = static_cast<long long>(binom(dim, j)) * hf[k - j];
      v += (j % 2 ? -t : t);
    }
    p.h.push_back(v);
  }
  p.trim();
  return p;
}

template <class K>
std::vector<int> hilbert(const Algebra<K>& A) {
  std::vector<int> out;
  int top = A.artinian() ? A.topDegree() : A.truncation();
  for (int d = 0; d <= top; ++d) out.push_back(A.dim(d));
  return out;
}

template <class K>
std::vector<int> hilbert(const AlgebraPtr<K>& A) { return hilbert(*A); }

// ---------------------------------------------------------------------
// Quadratic-dual style obstruction: the ring can only be a Golod
// quotient of a complete intersection if 1 - h(-t)/(1-t)^codim has
// non-negative coefficients, and (when not a complete intersection)
// the (1+t)-free factor g of h satisfies g(-1) < 0.

struct ObstructionReport {
  std::vector<mpz_class> series;  // coefficients 0..window-1 of 1 - h(-t)/(1-t)^codim
  std::optional<int> firstNegativeIndex;
  int sFactor = 0;            // h(t) = (1+t)^s g(t), g(-1) != 0
  mpz_class gAtMinusOne;
  bool nonCompleteIntersection = false;
  std::string verdict;        // "BR-obstructed" | "no-obstruction"
};

inline mpz_class binom_mpz(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline ObstructionReport br_obstruction(const HPolynomial& h, int codim, int window = 20) {
  if (window < 1) throw std::invalid_argument("br_obstruction: window >= 1");
  ObstructionReport rep;
  // series of h(-t)/(1-t)^codim: conv of h_j(-1)^j with C(codim-1+k, k)
  for (int k = 0; k < window; ++k) {
    mpz_class v = 0;
    for (int j = 0; j <= std::min(k, h.degree()); ++j) {
      mpz_class t = mpz_class(static_cast<long>(h.at(j))) * binom_mpz(codim - 1 + k - j, k - j);
      v += (j % 2 ? -t : t);
    }
    mpz_class s = (k == 0 ? mpz_class(1) : mpz_class(0)) - v;
    if (s < 0 && !rep.firstNegativeIndex) rep.firstNegativeIndex = k;
    rep.series.push_back(s);
  }
  // h = (1+t)^s g: divide by (1+t) while the value at -1 vanishes
  std::vector<mpz_class> g;
  for (int i = 0; i <= h.degree(); ++i) g.push_back(mpz_class(static_cast<long>(h.at(i))));
  auto evalAtMinusOne = [](const std::vector<mpz_class>& p) {
    mpz_class v = 0;
    for (size_t i = 0; i < p.size(); ++i) v += (i % 2 ? -p[i] : p[i]);
    return v;
  };
  while (g.size() > 1 && evalAtMinusOne(g) == 0) {
    // synthetic division by (t + 1)
    std::vector<mpz_class> q(g.size() - 1);
    mpz_class carry = g.back();
    for (int i = static_cast<int>(g.size()) - 2; i >= 0; --i) {
      q[i] = carry;
      carry = g[i] - carry;
    }
    g = std::move(q);
    ++rep.sFactor;
  }
  rep.gAtMinusOne = evalAtMinusOne(g);
  // More minimal relations than the embedding dimension rules out a
  // complete intersection; the degree-2 count is forced by the h-vector.
  long long e = h.at(1);
  long long quadRels = (e * (e + 1)) / 2 - h.at(2);
  rep.nonCompleteIntersection = quadRels > e;
  bool obstructed = rep.firstNegativeIndex.has_value() ||
                    (rep.nonCompleteIntersection && rep.gAtMinusOne >= 0);
  rep.verdict = obstructed ? "BR-obstructed" : "no-obstruction";
  return rep;
}

// ---------------------------------------------------------------------
// Named constructions.

template <class K>
AlgebraPtr<K> make_presentation(const std::vector<std::string>& vars,
                                const std::vector<std::string>& rels, int truncation,
                                const std::string& label) {
  std::vector<Poly<K>> ps;
  for (const auto& r : rels) ps.push_back(parse_poly<K>(r, vars));
  return std::make_shared<PresentationAlgebra<K>>(vars, ps, truncation, label);
}

template <class K>
AlgebraPtr<K> quotient_by_linear_forms(const AlgebraPtr<K>& A,
                                       const std::vector<std::string>& forms,
                                       const std::string& label) {
  std::vector<std::vector<K>> fs;
  for (const auto& s : forms) {
    Elem<K> e = elem_parse(*A, s);
    if (e.deg != 1) throw std::invalid_argument("quotient form is not linear: " + s);
    fs.push_back(e.v);
  }
  return std::make_shared<LinearQuotientAlgebra<K>>(A, fs, label);
}

template <class K>
AlgebraPtr<K> veronese_artinian(int n, int c, std::string label = "") {
  if (n < 1 || c < 2) throw std::invalid_argument("veronese_artinian: need n >= 1, c >= 2");
  if (label.empty())
    label = "veronese(" + std::to_string(n) + "," + std::to_string(c) + ")";
  return std::make_shared<CappedMonomialAlgebra<K>>(n, c, label);
}

// 2-minor relations of a matrix of linear forms, in the given variables.
template <class K>
std::vector<Poly<K>> two_minor_relations(const std::vector<std::vector<Poly<K>>>& M) {
  std::vector<Poly<K>> rels;
  size_t m = M.size(), n = m ? M[0].size() : 0;
  for (size_t r = 0; r < m; ++r)
    for (size_t s = r + 1; s < m; ++s)
      for (size_t c = 0; c < n; ++c)
        for (size_t d = c + 1; d < n; ++d) {
          Poly<K> p = poly_sub(poly_mul(M[r][c], M[s][d]), poly_mul(M[r][d], M[s][c]));
          if (!p.empty()) rels.push_back(std::move(p));
        }
  return rels;
}

template <class K>
AlgebraPtr<K> segre_artinian_builtin(int m, int n) {
  std::vector<std::vector<std::string>> rows;
  int nv = 0;
  if (m == 3 && n == 6) {
    nv = 10;
    rows = {{"0", "a1", "a2+a6", "a3+a7", "a4+a8", "a5+a9"},
            {"a1", "a2", "a3", "a4", "a5", "a10"},
            {"a6", "a7", "a8", "a9", "a10", "0"}};
  } else if (m == 4 && n == 5) {
    nv = 12;
    rows = {{"0", "a1", "a2+a5", "a3+a6+a9", "a4+a7+a10"},
            {"a1", "a2", "a3", "a4", "a8+a11"},
            {"a5", "a6", "a7", "a8", "a12"},
            {"a9", "a10", "a11", "a12", "0"}};
  } else {
    throw std::invalid_argument("segre_artinian_builtin: only (3,6) and (4,5)");
  }
  std::vector<std::string> vars;
  for (int i = 1; i <= nv; ++i) vars.push_back("a" + std::to_string(i));
  std::vector<std::vector<Poly<K>>> M;
  for (const auto& r : rows) {
    M.emplace_back();
    for (const auto& e : r) M.back().push_back(parse_poly<K>(e, vars));
  }
  auto A = std::make_shared<PresentationAlgebra<K>>(
      vars, two_minor_relations(M), 8,
      "segre(" + std::to_string(m) + "," + std::to_string(n) + ")");
  return A;
}

// Artinian (or partial) reduction of the 2-minor presentation of the
// m x n generic-matrix algebra by the linear forms J, given in the
// variables z11..zmn. Pivot variables of J are eliminated; survivors
// are renamed a1, a2, ... in dictionary order.
template <class K>
AlgebraPtr<K> segre_artinian(int m, int n, const std::vector<std::string>& J,
                             int truncation = 8) {
  if (m < 1 || n < m) throw std::invalid_argument("segre_artinian: need 1 <= m <= n");
  std::vector<std::string> zs;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      zs.push_back("z" + std::to_string(i) + std::to_string(j));
  int nz = m * n;
  Mat<K> jm(static_cast<int>(J.size()), nz);
  for (size_t r = 0; r < J.size(); ++r) {
    Poly<K> p = parse_poly<K>(J[r], zs);
    for (const auto& [e, c] : p) {
      if (expo_deg(e) != 1) throw std::invalid_argument("segre_artinian: J form not linear: " + J[r]);
      for (int v = 0; v < nz; ++v)
        if (e[v] == 1) jm.at(static_cast<int>(r), v) = c;
    }
  }
  Rref<K> jr = rref(jm);
  if (jr.rank != static_cast<int>(J.size()))
    throw std::invalid_argument("segre_artinian: J forms are linearly dependent");
  std::vector<char> isPiv(nz, 0);
  for (int c : jr.pivots) isPiv[c] = 1;
  std::vector<std::string> vars;
  std::vector<int> zToSurvivor(nz, -1);
  for (int v = 0; v < nz; ++v)
    if (!isPiv[v]) {
      zToSurvivor[v] = static_cast<int>(vars.size());
      vars.push_back("a" + std::to_string(vars.size() + 1));
    }
  int na = static_cast<int>(vars.size());
  // substitution: each z as a linear Poly in the a-variables
  auto aPoly = [&](int survivor, const K& c) {
    Poly<K> p;
    Expo e(na, 0);
    e[survivor] = 1;
    poly_add_term(p, e, c);
    return p;
  };
  std::vector<Poly<K>> zSub(nz);
  for (int v = 0; v < nz; ++v)
    if (!isPiv[v]) zSub[v] = aPoly(zToSurvivor[v], K(1));
  for (int r = 0; r < jr.rank; ++r) {
    int pv = jr.pivots[r];
    Poly<K> p;
    for (int v = pv + 1; v < nz; ++v)
      if (!isPiv[v] && !is_zero(jr.m.at(r, v)))
        p = poly_add(std::move(p), aPoly(zToSurvivor[v], K(K(0) - jr.m.at(r, v))));
    zSub[pv] = std::move(p);
  }
  std::vector<std::vector<Poly<K>>> M(m, std::vector<Poly<K>>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = zSub[i * n + j];
  auto A = std::make_shared<PresentationAlgebra<K>>(
      vars, two_minor_relations(M), truncation,
      "segre(" + std::to_string(m) + "," + std::to_string(n) + ")/J");
  // Reduction by a full-length regular sequence preserves the h-vector;
  // equality with the closed form certifies J was regular.
  if (static_cast<int>(J.size()) == m + n - 1 && A->artinian()) {
    HPolynomial expect = h_poly_segre(m, n);
    HPolynomial got;
    for (int d : hilbert(*A)) got.h.push_back(d);
    got.trim();
    if (!(got == expect))
      throw std::invalid_argument("segre_artinian: J fails the regular-sequence Hilbert check");
  }
  return A;
}

// The reductions used throughout: anti-diagonal sums z_{i,j} ~ z_{i',j'}
// for i + j = i' + j', eliminating row 1 and the last column.
inline std::vector<std::string> segre_default_J(int m, int n) {
  auto z = [](int i, int j) { return "z" + std::to_string(i) + std::to_string(j); };
  std::vector<std::string> J;
  for (int j = 1; j <= n; ++j) {
    std::string f = z(1, j);
    for (int i = 2; i <= m; ++i)
      if (j - i + 1 >= 1) f += "-" + z(i, j - i + 1);
    J.push_back(f);
  }
  for (int i = 2; i <= m; ++i) {
    std::string f = z(i, n);
    for (int t = i + 1; t <= m; ++t)
      if (n - t + i >= 1) f += "-" + z(t, n - t + i);
    J.push_back(f);
  }
  return J;
}

// ---------------------------------------------------------------------
// Built-in algebras by name. The *w names are the further quotients by
// the linear forms used alongside the bundled witnesses.

template <class K>
AlgebraPtr<K> builtin_algebra(const std::string& name, int truncation = -1) {
  static std::map<std::string, AlgebraPtr<K>> cache;
  std::string key = name + (truncation >= 0 ? "@" + std::to_string(truncation) : "");
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  AlgebraPtr<K> A;
  auto quolin = [&](const std::string& base, const std::vector<std::string>& fs) {
    return quotient_by_linear_forms(builtin_algebra<K>(base), fs, name);
  };
  if (name == "kx2") {
    A = make_presentation<K>({"x"}, {"x^2"}, 8, name);
  } else if (name == "kxy2") {
    A = make_presentation<K>({"x", "y"}, {"x^2", "y^2"}, 8, name);
  } else if (name == "roos") {
    A = make_presentation<K>({"x", "y", "z", "u"},
                             {"x^2", "x*y", "y^2", "z^2", "z*u", "u^2"}, 8, name);
  } else if (name == "conca") {
    A = make_presentation<K>({"x", "y", "z", "u"},
                             {"x^2+y*z", "x*y-y*u", "x*z", "x*u", "y^2"},
                             truncation >= 0 ? truncation : 6, name);
  } else if (name == "s36") {
    A = segre_artinian_builtin<K>(3, 6);
  } else if (name == "s45") {
    A = segre_artinian_builtin<K>(4, 5);
  } else if (name == "v72") {
    A = veronese_artinian<K>(7, 2, name);
  } else if (name == "v53") {
    A = veronese_artinian<K>(5, 3, name);
  } else if (name == "v54") {
    A = veronese_artinian<K>(5, 4, name);
  } else if (name == "v45") {
    A = veronese_artinian<K>(4, 5, name);
  } else if (name == "s45w") {
    A = quolin("s45", {"a12"});
  } else if (name == "v72w") {
    A = quolin("v72", {"a21"});
  } else if (name == "v53w") {
    A = quolin("v53", {"a30"});
  } else if (name == "v54w") {
    A = quolin("v54", {"a60", "a61", "a62", "a63", "a64", "a65"});
  } else if (name == "v45w") {
    A = quolin("v45", {"a52"});
  } else {
    throw std::invalid_argument("unknown builtin algebra: " + name);
  }
  cache.emplace(key, A);
  return A;
}

}  // namespace lindef

#endif
