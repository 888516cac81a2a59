#ifndef LINDEF_MONOMIAL_HPP
#define LINDEF_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace lindef {

// Exponent vector; length = number of variables.
using Expo = std::vector<int>;

inline int expo_deg(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline Expo expo_mul(const Expo& a, const Expo& b) {
  Expo c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

// Ascending graded reverse lexicographic order: lower degree first; at
// equal degree, a < b iff the last nonzero entry of a-b is positive.
// With variables x1 > x2 > ... > xn this lists monomials from the grevlex
// smallest upward, e.g. for n=3, d=2: x3^2, x2x3, x1x3, x2^2, x1x2, x1^2.
inline bool grevlex_less(const Expo& a, const Expo& b) {
  int da = expo_deg(a), db = expo_deg(b);
  if (da != db) return da < db;
  for (size_t i = a.size(); i-- > 0;) {
    int d = a[i] - b[i];
    if (d != 0) return d > 0;
  }
  return false;
}

struct GrevlexLess {
  bool operator()(const Expo& a, const Expo& b) const { return grevlex_less(a, b); }
};

// All exponent vectors of total degree d in n variables, ascending grevlex.
inline std::vector<Expo> monomials_of_degree(int n, int d) {
  std::vector<Expo> out;
  Expo cur(n, 0);
  // enumerate all compositions, then sort canonically
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      cur[pos] = k;
      self(self, pos + 1, rem - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), grevlex_less);
  return out;
}

inline std::string monomial_str(const Expo& e, const std::vector<std::string>& names) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace lindef

#endif
