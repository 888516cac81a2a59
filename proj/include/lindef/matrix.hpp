#ifndef LINDEF_MATRIX_HPP
#define LINDEF_MATRIX_HPP

#include <cassert>
#include <vector>

#include "scalar.hpp"

namespace lindef {

template <class K>
struct Mat {
  int nr = 0, nc = 0;
  std::vector<K> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : nr(r), nc(c), a(static_cast<size_t>(r) * c, K(0)) {}

  K& at(int i, int j) { return a[static_cast<size_t>(i) * nc + j]; }
  const K& at(int i, int j) const { return a[static_cast<size_t>(i) * nc + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  std::vector<K> row(int i) const {
    return std::vector<K>(a.begin() + static_cast<size_t>(i) * nc,
                          a.begin() + static_cast<size_t>(i + 1) * nc);
  }
  void setRow(int i, const std::vector<K>& v) {
    assert(static_cast<int>(v.size()) == nc);
    std::copy(v.begin(), v.end(), a.begin() + static_cast<size_t>(i) * nc);
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.nr == y.nr && x.nc == y.nc && x.a == y.a;
  }
};

template <class K>
Mat<K> mat_from_rows(const std::vector<std::vector<K>>& rows, int nc) {
  Mat<K> m(static_cast<int>(rows.size()), nc);
  for (int i = 0; i < m.nr; ++i) m.setRow(i, rows[i]);
  return m;
}

template <class K>
std::vector<K> mat_vec(const Mat<K>& m, const std::vector<K>& x) {
  assert(static_cast<int>(x.size()) == m.nc);
  std::vector<K> y(m.nr, K(0));
  for (int i = 0; i < m.nr; ++i)
    for (int j = 0; j < m.nc; ++j)
      if (!is_zero(m.at(i, j)) && !is_zero(x[j])) y[i] += m.at(i, j) * x[j];
  return y;
}

template <class K>
Mat<K> mat_mul(const Mat<K>& x, const Mat<K>& y) {
  assert(x.nc == y.nr);
  Mat<K> z(x.nr, y.nc);
  for (int i = 0; i < x.nr; ++i)
    for (int l = 0; l < x.nc; ++l) {
      if (is_zero(x.at(i, l))) continue;
      for (int j = 0; j < y.nc; ++j)
        if (!is_zero(y.at(l, j))) z.at(i, j) += x.at(i, l) * y.at(l, j);
    }
  return z;
}

template <class K>
struct Rref {
  Mat<K> m;                 // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of row i
  int rank = 0;
};

// Generic Gauss-Jordan over a field. Used for F_p; correct but
// coefficient-swelling for Rat, which has the Bareiss path below.
template <class K>
Rref<K> rref_field(Mat<K> m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.nc && r < m.nr; ++c) {
    int p = -1;
    for (int i = r; i < m.nr; ++i)
      if (!is_zero(m.at(i, c))) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.nc; ++j) std::swap(m.at(p, j), m.at(r, j));
    K inv = K(1) / m.at(r, c);
    for (int j = c; j < m.nc; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.nr; ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      K f = m.at(i, c);
      for (int j = c; j < m.nc; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Rref<K> out;
  out.rank = r;
  out.pivots = pivots;
  out.m = Mat<K>(r, m.nc);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.nc; ++j) out.m.at(i, j) = m.at(i, j);
  return out;
}

template <class K>
Rref<K> rref(const Mat<K>& m) { return rref_field(m); }

// Fraction-free Gauss-Jordan (Bareiss one-step). Rows are cleared with
//   a_ij <- (piv*a_ij - a_ic*p_j) / prev
// where prev is the previous pivot; every division is exact, entries stay
// minors of the integer input, and after the last step all pivot entries
// share one value, so one final division per row yields the rational RREF.
inline Rref<Rat> rref_bareiss(const Mat<Rat>& m) {
  int nr = m.nr, nc = m.nc;
  std::vector<std::vector<mpz_class>> z(nr, std::vector<mpz_class>(nc));
  for (int i = 0; i < nr; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (int j = 0; j < nc; ++j) {
      Rat q = m.at(i, j) * Rat(l);
      z[i][j] = q.get_num();  // denominator is 1 by choice of l
    }
  }
  mpz_class prev = 1, t;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int p = -1;
    for (int i = r; i < nr; ++i)
      if (sgn(z[i][c]) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) std::swap(z[p], z[r]);
    const mpz_class piv = z[r][c];
    for (int i = 0; i < nr; ++i) {
      if (i == r) continue;
      mpz_srcptr f = z[i][c].get_mpz_t();
      bool fz = mpz_sgn(f) == 0;
      for (int j = 0; j < nc; ++j) {
        mpz_ptr aij = z[i][j].get_mpz_t();
        if (j == c) continue;  // handled after the loop
        mpz_mul(aij, aij, piv.get_mpz_t());
        if (!fz && sgn(z[r][j]) != 0) mpz_submul(aij, f, z[r][j].get_mpz_t());
        if (prev != 1) mpz_divexact(aij, aij, prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  Rref<Rat> out;
  out.rank = r;
  out.pivots = pivots;
  out.m = Mat<Rat>(r, nc);
  for (int i = 0; i < r; ++i) {
    const mpz_class& piv = z[i][pivots[i]];
    for (int j = 0; j < nc; ++j) {
      if (sgn(z[i][j]) == 0) continue;
      Rat q(z[i][j], piv);
      q.canonicalize();
      out.m.at(i, j) = q;
    }
  }
  return out;
}

template <>
inline Rref<Rat> rref(const Mat<Rat>& m) { return rref_bareiss(m); }

template <class K>
int rank(const Mat<K>& m) { return rref(m).rank; }

// Basis (as rows) of {x : m x = 0}.
template <class K>
Mat<K> kernel(const Mat<K>& m) {
  Rref<K> r = rref(m);
  std::vector<char> isPiv(m.nc, 0);
  for (int c : r.pivots) isPiv[c] = 1;
  Mat<K> k(m.nc - r.rank, m.nc);
  int row = 0;
  for (int f = 0; f < m.nc; ++f) {
    if (isPiv[f]) continue;
    k.at(row, f) = K(1);
    for (int i = 0; i < r.rank; ++i) k.at(row, r.pivots[i]) = -r.m.at(i, f);
    ++row;
  }
  return k;
}

// One solution of m x = b, free coordinates set to zero.
template <class K>
bool solve(const Mat<K>& m, const std::vector<K>& b, std::vector<K>& x) {
  assert(static_cast<int>(b.size()) == m.nr);
  Mat<K> aug(m.nr, m.nc + 1);
  for (int i = 0; i < m.nr; ++i) {
    for (int j = 0; j < m.nc; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.nc) = b[i];
  }
  Rref<K> r = rref(aug);
  for (int c : r.pivots)
    if (c == m.nc) return false;
  x.assign(m.nc, K(0));
  for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.m.at(i, m.nc);
  return true;
}

// Incremental RREF: rows arrive one at a time, stay fully reduced, and
// insertion can stop early once the rank hits a target. Rows are kept
// sorted by pivot column so toMat() is the canonical RREF.
template <class K>
class RrefAccum {
 public:
  explicit RrefAccum(int ambient) : n_(ambient), pivOfCol_(ambient, -1) {}

  int ambient() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v against the current rows; returns the pivot column of the
  // remainder, or -1 if v reduces to zero. v is left reduced (not monic).
  int reduceInPlace(std::vector<K>& v) const {
    int lead = -1;
    for (int c = 0; c < n_; ++c) {
      if (is_zero(v[c])) continue;
      int r = pivOfCol_[c];
      if (r < 0) {
        if (lead < 0) lead = c;
        continue;
      }
      K f = v[c];
      const std::vector<K>& w = rows_[r];
      for (int j = c; j < n_; ++j)
        if (!is_zero(w[j])) v[j] -= f * w[j];
    }
    return lead;
  }

  bool insert(std::vector<K> v) {
    int lead = reduceInPlace(v);
    if (lead < 0) return false;
    K inv = K(1) / v[lead];
    for (int j = lead; j < n_; ++j)
      if (!is_zero(v[j])) v[j] *= inv;
    for (auto& w : rows_) {
      if (is_zero(w[lead])) continue;
      K f = w[lead];
      for (int j = lead; j < n_; ++j)
        if (!is_zero(v[j])) w[j] -= f * v[j];
    }
    int pos = 0;
    while (pos < rank() && pivs_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivs_.insert(pivs_.begin() + pos, lead);
    for (int r = 0; r < rank(); ++r) pivOfCol_[pivs_[r]] = r;
    return true;
  }

  const std::vector<int>& pivots() const { return pivs_; }
  int pivotRow(int col) const { return pivOfCol_[col]; }
  const std::vector<K>& rowAt(int r) const { return rows_[r]; }

  Mat<K> toMat() const { return mat_from_rows(rows_, n_); }

 private:
  int n_;
  std::vector<std::vector<K>> rows_;
  std::vector<int> pivs_;
  std::vector<int> pivOfCol_;
};

// Reduce a rational matrix mod the active prime. False on an unlucky
// prime (some denominator divisible by p).
inline bool mat_mod_p(const Mat<Rat>& m, Mat<Fp>& out) {
  out = Mat<Fp>(m.nr, m.nc);
  for (int i = 0; i < m.nr; ++i)
    for (int j = 0; j < m.nc; ++j)
      if (!fp_of_rat(m.at(i, j), out.at(i, j))) return false;
  return true;
}

inline bool vec_mod_p(const std::vector<Rat>& v, std::vector<Fp>& out) {
  out.assign(v.size(), Fp());
  for (size_t i = 0; i < v.size(); ++i)
    if (!fp_of_rat(v[i], out[i])) return false;
  return true;
}

}  // namespace lindef

#endif
