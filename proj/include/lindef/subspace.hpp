#ifndef LINDEF_SUBSPACE_HPP
#define LINDEF_SUBSPACE_HPP

#include <vector>

#include "matrix.hpp"

namespace lindef {

// Subspace of K^n held as its reduced row echelon basis. RREF is a
// canonical form, so equality of subspaces is row-by-row equality.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : n_(ambient) { basis_.nc = ambient; }

  static Subspace fromRows(int ambient, const std::vector<std::vector<K>>& rows) {
    Subspace s(ambient);
    Rref<K> r = rref(mat_from_rows(rows, ambient));
    s.basis_ = r.m;
    s.pivots_ = r.pivots;
    return s;
  }
  static Subspace fromMat(const Mat<K>& m) {
    Subspace s(m.nc);
    Rref<K> r = rref(m);
    s.basis_ = r.m;
    s.pivots_ = r.pivots;
    return s;
  }
  static Subspace full(int ambient) { return fromMat(Mat<K>::identity(ambient)); }

  int ambient() const { return n_; }
  int dim() const { return basis_.nr; }
  const Mat<K>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Remainder of v after reduction against the basis; zero iff v lies here.
  std::vector<K> reduce(std::vector<K> v) const {
    for (int i = 0; i < basis_.nr; ++i) {
      const K& f = v[pivots_[i]];
      if (is_zero(f)) continue;
      K c = f;  // pivot entries are 1
      for (int j = pivots_[i]; j < n_; ++j)
        if (!is_zero(basis_.at(i, j))) v[j] -= c * basis_.at(i, j);
    }
    return v;
  }

  bool contains(const std::vector<K>& v) const {
    std::vector<K> r = reduce(v);
    for (const K& x : r)
      if (!is_zero(x)) return false;
    return true;
  }
  bool contains(const Subspace& o) const {
    for (int i = 0; i < o.basis_.nr; ++i)
      if (!contains(o.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.n_ == y.n_ && x.basis_ == y.basis_;
  }

  Subspace sum(const Subspace& o) const {
    assert(n_ == o.n_);
    Mat<K> m(dim() + o.dim(), n_);
    for (int i = 0; i < dim(); ++i) m.setRow(i, basis_.row(i));
    for (int i = 0; i < o.dim(); ++i) m.setRow(dim() + i, o.basis_.row(i));
    return fromMat(m);
  }

  // Zassenhaus-style: solve a^T B_u = b^T B_v over the coefficient pair.
  Subspace intersect(const Subspace& o) const {
    assert(n_ == o.n_);
    int ru = dim(), rv = o.dim();
    if (ru == 0 || rv == 0) return Subspace(n_);
    Mat<K> m(n_, ru + rv);
    for (int j = 0; j < ru; ++j)
      for (int c = 0; c < n_; ++c) m.at(c, j) = basis_.at(j, c);
    for (int j = 0; j < rv; ++j)
      for (int c = 0; c < n_; ++c) m.at(c, ru + j) = -o.basis_.at(j, c);
    Mat<K> ker = kernel(m);
    std::vector<std::vector<K>> ws;
    for (int i = 0; i < ker.nr; ++i) {
      std::vector<K> w(n_, K(0));
      for (int j = 0; j < ru; ++j) {
        if (is_zero(ker.at(i, j))) continue;
        for (int c = 0; c < n_; ++c)
          if (!is_zero(basis_.at(j, c))) w[c] += ker.at(i, j) * basis_.at(j, c);
      }
      ws.push_back(std::move(w));
    }
    return fromRows(n_, ws);
  }

 private:
  int n_ = 0;
  Mat<K> basis_;
  std::vector<int> pivots_;
};

}  // namespace lindef

#endif
