#ifndef LINDEF_ALGEBRA_HPP
#define LINDEF_ALGEBRA_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "expr.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "subspace.hpp"

namespace lindef {

// Standard graded algebra over K, held degreewise up to a truncation
// bound. Degrees are exact through truncation(); if some piece vanishes
// the grading is artinian and every higher piece is known to be zero.
//
// The multiplication interface is vector-first: applyVar multiplies a
// coordinate vector by a variable, applyBasisMul by a basis element.
// Dense multiplication matrices are assembled by callers on demand.
template <class K>
class Algebra {
 public:
  virtual ~Algebra() = default;

  const std::string& label() const { return label_; }
  const std::vector<std::string>& varNames() const { return names_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  int truncation() const { return D_; }
  bool artinian() const { return artinian_; }

  // Largest degree with a nonzero piece; only meaningful when artinian.
  int topDegree() const {
    int t = 0;
    for (int d = 0; d <= D_; ++d)
      if (dims_[d] > 0) t = d;
    return t;
  }

  int dim(int d) const {
    if (d < 0) return 0;
    if (d <= D_) return dims_[d];
    if (artinian_) return 0;
    throw std::out_of_range(label_ + ": degree " + std::to_string(d) +
                            " beyond truncation " + std::to_string(D_));
  }
  bool degreeKnown(int d) const { return d <= D_ || artinian_; }

  std::vector<int> hilbert() const {
    int hi = artinian_ ? topDegree() : D_;
    std::vector<int> h;
    for (int d = 0; d <= hi; ++d) h.push_back(dims_[d]);
    return h;
  }

  virtual std::vector<K> applyVar(int v, int i, const std::vector<K>& w) const = 0;
  virtual std::vector<K> applyBasisMul(int j, int s, int i, const std::vector<K>& w) const = 0;
  virtual std::string basisLabel(int d, int s) const = 0;
  // Variable index underlying degree-one basis element s.
  virtual int varOfDegreeOneBasis(int s) const = 0;

  // Set when Koszulness of cyclic modules on variable-subset ideals is
  // taken as known for this algebra (Veronese constructions).
  bool stronglyKoszulTrusted = false;

 protected:
  std::string label_;
  std::vector<std::string> names_;
  std::vector<int> dims_;  // 0..D_
  int D_ = 0;
  bool artinian_ = false;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

// Homogeneous element: degree + coordinate vector in that piece.
template <class K>
struct Elem {
  int deg = -1;  // -1 encodes zero of unknown degree
  std::vector<K> v;

  bool isZero() const {
    for (const K& x : v)
      if (!is_zero(x)) return false;
    return true;
  }
};

template <class K>
Elem<K> elem_unit(const Algebra<K>& A) {
  (void)A;
  return Elem<K>{0, {K(1)}};
}

template <class K>
Elem<K> elem_from_poly(const Algebra<K>& A, const Poly<K>& p) {
  if (p.empty()) return Elem<K>{-1, {}};
  if (!poly_homogeneous(p))
    throw std::invalid_argument("element is not homogeneous");
  int d = poly_deg(p);
  if (!A.degreeKnown(d))
    throw std::out_of_range("element degree beyond truncation");
  Elem<K> e{d, std::vector<K>(A.dim(d), K(0))};
  for (const auto& [mono, c] : p) {
    std::vector<K> w{K(1)};
    int at = 0;
    for (size_t v = 0; v < mono.size(); ++v)
      for (int k = 0; k < mono[v]; ++k) {
        w = A.applyVar(static_cast<int>(v), at, w);
        ++at;
      }
    for (int s = 0; s < A.dim(d); ++s)
      if (!is_zero(w[s])) e.v[s] += c * w[s];
  }
  return e;
}

template <class K>
Elem<K> elem_parse(const Algebra<K>& A, const std::string& src) {
  return elem_from_poly(A, parse_poly<K>(src, A.varNames()));
}

template <class K>
Elem<K> elem_mul(const Algebra<K>& A, const Elem<K>& a, const Elem<K>& b) {
  if (a.deg < 0 || b.deg < 0) return Elem<K>{-1, {}};
  int d = a.deg + b.deg;
  Elem<K> c{d, std::vector<K>(A.dim(d), K(0))};
  for (size_t s = 0; s < a.v.size(); ++s) {
    if (is_zero(a.v[s])) continue;
    std::vector<K> w = A.applyBasisMul(a.deg, static_cast<int>(s), b.deg, b.v);
    for (size_t t = 0; t < w.size(); ++t)
      if (!is_zero(w[t])) c.v[t] += a.v[s] * w[t];
  }
  return c;
}

template <class K>
std::string elem_str(const Algebra<K>& A, const Elem<K>& e) {
  if (e.deg < 0 || e.isZero()) return "0";
  std::string s;
  for (size_t i = 0; i < e.v.size(); ++i) {
    if (is_zero(e.v[i])) continue;
    std::string cs = scalar_str(e.v[i]);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string bl = A.basisLabel(e.deg, static_cast<int>(i));
    if (cs == "1" && bl != "1") s += bl;
    else if (bl == "1") s += cs;
    else s += cs + "*" + bl;
  }
  return s;
}

template <class K>
Elem<K> elem_unit(const AlgebraPtr<K>& A) { return elem_unit(*A); }
template <class K>
Elem<K> elem_from_poly(const AlgebraPtr<K>& A, const Poly<K>& p) { return elem_from_poly(*A, p); }
template <class K>
Elem<K> elem_parse(const AlgebraPtr<K>& A, const std::string& src) { return elem_parse(*A, src); }
template <class K>
Elem<K> elem_mul(const AlgebraPtr<K>& A, const Elem<K>& a, const Elem<K>& b) { return elem_mul(*A, a, b); }
template <class K>
std::string elem_str(const AlgebraPtr<K>& A, const Elem<K>& e) { return elem_str(*A, e); }

// ---------------------------------------------------------------------
// Quotient of a polynomial ring by homogeneous relations, built one
// degree at a time: the ideal piece in degree d is spanned by variable
// shifts of its RREF basis in degree d-1 plus the degree-d relations.
// Coset bases are the non-pivot monomials; pivot monomials carry their
// reduction to coset coordinates.
template <class K>
class PresentationAlgebra : public Algebra<K> {
 public:
  PresentationAlgebra(std::vector<std::string> names, const std::vector<Poly<K>>& relations,
                      int truncation, std::string label = "presentation",
                      bool stopAtZero = true) {
    this->names_ = std::move(names);
    this->label_ = std::move(label);
    int n = this->nvars();
    for (const auto& r : relations) {
      if (r.empty()) continue;
      if (!poly_homogeneous(r))
        throw std::invalid_argument(this->label_ + ": inhomogeneous relation");
      relsByDeg_[poly_deg(r)].push_back(r);
    }
    this->D_ = truncation;
    for (int d = 0; d <= truncation; ++d) {
      buildDegree(d, n);
      if (stopAtZero && this->dims_[d] == 0) {
        this->D_ = d;
        break;
      }
    }
    for (int d = 0; d <= this->D_; ++d)
      if (this->dims_[d] == 0) this->artinian_ = true;
  }

  std::vector<K> applyVar(int v, int i, const std::vector<K>& w) const override {
    int dout = this->dim(i + 1);
    std::vector<K> out(dout, K(0));
    if (dout == 0) return out;
    const Deg& lo = deg_[i];
    const Deg& hi = deg_[i + 1];
    for (size_t s = 0; s < w.size(); ++s) {
      if (is_zero(w[s])) continue;
      Expo e = lo.monos[lo.basisCols[s]];
      ++e[v];
      int col = hi.monoIdx.at(e);
      int b = hi.colToBasis[col];
      if (b >= 0) {
        out[b] += w[s];
      } else {
        const std::vector<K>& red = hi.pivRed.at(col);
        for (int t = 0; t < dout; ++t)
          if (!is_zero(red[t])) out[t] += w[s] * red[t];
      }
    }
    return out;
  }

  std::vector<K> applyBasisMul(int j, int s, int i, const std::vector<K>& w) const override {
    if (j == 0) return w;
    const Expo& e = deg_[j].monos[deg_[j].basisCols[s]];
    std::vector<K> cur = w;
    int at = i;
    for (size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) {
        cur = applyVar(static_cast<int>(v), at, cur);
        ++at;
      }
    return cur;
  }

  std::string basisLabel(int d, int s) const override {
    return monomial_str(deg_[d].monos[deg_[d].basisCols[s]], this->names_);
  }

  int varOfDegreeOneBasis(int s) const override {
    const Expo& e = deg_[1].monos[deg_[1].basisCols[s]];
    for (size_t v = 0; v < e.size(); ++v)
      if (e[v] == 1) return static_cast<int>(v);
    return -1;
  }

  // Dimension of the defining ideal's piece in degree d.
  int idealDim(int d) const {
    if (d < 0) return 0;
    if (d <= this->D_) return static_cast<int>(deg_[d].monos.size()) - this->dims_[d];
    throw std::out_of_range("idealDim beyond truncation");
  }

 private:
  struct Deg {
    std::vector<Expo> monos;
    std::map<Expo, int, GrevlexLess> monoIdx;
    std::vector<int> basisCols;
    std::vector<int> colToBasis;
    std::map<int, std::vector<K>> pivRed;
    std::vector<std::vector<K>> idealRows;  // RREF basis of the ideal piece
    std::vector<int> idealPivots;
  };

  void buildDegree(int d, int n) {
    deg_.emplace_back();
    Deg& cur = deg_.back();
    cur.monos = monomials_of_degree(n, d);
    int nc = static_cast<int>(cur.monos.size());
    for (int c = 0; c < nc; ++c) cur.monoIdx[cur.monos[c]] = c;

    std::vector<std::vector<K>> rows;
    if (d > 0) {
      const Deg& prev = deg_[d - 1];
      for (const auto& prow : prev.idealRows)
        for (int v = 0; v < n; ++v) {
          std::vector<K> r(nc, K(0));
          for (size_t c = 0; c < prow.size(); ++c) {
            if (is_zero(prow[c])) continue;
            Expo e = prev.monos[c];
            ++e[v];
            r[cur.monoIdx.at(e)] = prow[c];
          }
          rows.push_back(std::move(r));
        }
    }
    auto it = relsByDeg_.find(d);
    if (it != relsByDeg_.end())
      for (const auto& p : it->second) {
        std::vector<K> r(nc, K(0));
        for (const auto& [e, c] : p) r[cur.monoIdx.at(e)] = c;
        rows.push_back(std::move(r));
      }

    // Large rational eliminations first try to certify a full piece mod
    // p: full column rank mod p forces full rational rank. Only a "the
    // piece is everything" conclusion is drawn from the modular pass.
    long long cost = static_cast<long long>(rows.size()) * nc * nc;
    if constexpr (std::is_same_v<K, Rat>) {
      if (cost > 50'000'000 && fullRankModP(rows, nc)) {
        cur.basisCols.clear();
        cur.colToBasis.assign(nc, -1);
        this->dims_.push_back(0);
        return;
      }
    }

    RrefAccum<K> acc(nc);
    for (auto& r : rows) {
      acc.insert(std::move(r));
      if (acc.rank() == nc) break;
    }
    Mat<K> rr = acc.toMat();
    cur.idealPivots = acc.pivots();
    std::vector<char> isPiv(nc, 0);
    for (int c : cur.idealPivots) isPiv[c] = 1;
    cur.colToBasis.assign(nc, -1);
    for (int c = 0; c < nc; ++c)
      if (!isPiv[c]) {
        cur.colToBasis[c] = static_cast<int>(cur.basisCols.size());
        cur.basisCols.push_back(c);
      }
    int dimd = static_cast<int>(cur.basisCols.size());
    for (int i = 0; i < rr.nr; ++i) {
      cur.idealRows.push_back(rr.row(i));
      std::vector<K> red(dimd, K(0));
      for (int b = 0; b < dimd; ++b) red[b] = K(0) - rr.at(i, cur.basisCols[b]);
      cur.pivRed[cur.idealPivots[i]] = std::move(red);
    }
    this->dims_.push_back(dimd);
  }

  static bool fullRankModP(const std::vector<std::vector<Rat>>& rows, int nc) {
    RrefAccum<Fp> acc(nc);
    for (const auto& r : rows) {
      std::vector<Fp> fr;
      if (!vec_mod_p(r, fr)) return false;  // unlucky prime: no conclusion
      acc.insert(std::move(fr));
      if (acc.rank() == nc) return true;
    }
    return false;
  }

  std::map<int, std::vector<Poly<K>>> relsByDeg_;
  std::vector<Deg> deg_;
};

// ---------------------------------------------------------------------
// Artinian algebra with a fixed monomial basis per degree and product
// given by exponent addition, truncated by a componentwise exponent cap.
// Models the artinian Veronese reductions: own degree d corresponds to
// underlying monomials of degree d*c with every exponent below c.
template <class K>
class CappedMonomialAlgebra : public Algebra<K> {
 public:
  // n underlying variables, section degree c. Algebra variables are the
  // non-pure-power degree-c monomials in ascending grevlex order.
  CappedMonomialAlgebra(int n, int c, std::string label) : n_(n), c_(c) {
    this->label_ = std::move(label);
    for (const Expo& e : monomials_of_degree(n, c)) {
      bool pure = false;
      for (int i = 0; i < n; ++i)
        if (e[i] == c) pure = true;
      if (!pure) varExpo_.push_back(e);
    }
    for (size_t i = 0; i < varExpo_.size(); ++i)
      this->names_.push_back("a" + std::to_string(i + 1));
    for (int d = 0;; ++d) {
      std::vector<Expo> bs;
      for (const Expo& e : monomials_of_degree(n, d * c)) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
          if (e[i] >= c) ok = false;
        if (ok) bs.push_back(e);
      }
      this->dims_.push_back(static_cast<int>(bs.size()));
      basis_.push_back(bs);
      idx_.emplace_back();
      for (size_t s = 0; s < bs.size(); ++s) idx_.back()[bs[s]] = static_cast<int>(s);
      if (bs.empty()) {
        this->D_ = d;
        break;
      }
    }
    this->artinian_ = true;
    this->stronglyKoszulTrusted = true;
  }

  int underlyingVars() const { return n_; }
  int sectionDegree() const { return c_; }
  const Expo& varExpo(int v) const { return varExpo_[v]; }

  std::vector<K> applyVar(int v, int i, const std::vector<K>& w) const override {
    return applyExpo(varExpo_[v], i, w);
  }
  std::vector<K> applyBasisMul(int j, int s, int i, const std::vector<K>& w) const override {
    if (j == 0) return w;
    return applyExpo(basis_[j][s], i, w);
  }

  std::string basisLabel(int d, int s) const override {
    std::vector<std::string> xs;
    for (int i = 0; i < n_; ++i) xs.push_back("x" + std::to_string(i + 1));
    return monomial_str(basis_[d][s], xs);
  }
  int varOfDegreeOneBasis(int s) const override { return s; }

 private:
  std::vector<K> applyExpo(const Expo& mul, int i, const std::vector<K>& w) const {
    int dnew = i + expo_deg(mul) / c_;
    std::vector<K> out(this->dim(dnew), K(0));
    if (out.empty()) return out;
    const auto& tgt = idx_[dnew];
    for (size_t s = 0; s < w.size(); ++s) {
      if (is_zero(w[s])) continue;
      Expo e = expo_mul(basis_[i][s], mul);
      bool ok = true;
      for (int t = 0; t < n_; ++t)
        if (e[t] >= c_) ok = false;
      if (!ok) continue;
      out[tgt.at(e)] += w[s];
    }
    return out;
  }

  int n_, c_;
  std::vector<Expo> varExpo_;
  std::vector<std::vector<Expo>> basis_;
  std::vector<std::map<Expo, int, GrevlexLess>> idx_;
};

// ---------------------------------------------------------------------
// Quotient of an algebra by an ideal generated by linear forms. Each
// piece is the parent piece modulo span{form * parent_(d-1)}; coset
// coordinates are the non-pivot parent basis positions.
template <class K>
class LinearQuotientAlgebra : public Algebra<K> {
 public:
  LinearQuotientAlgebra(AlgebraPtr<K> parent, const std::vector<std::vector<K>>& forms,
                        std::string label) : parent_(std::move(parent)) {
    this->label_ = std::move(label);
    const Algebra<K>& P = *parent_;
    this->D_ = P.truncation();
    if (P.artinian()) this->D_ = P.topDegree() + 1;
    for (int d = 0; d <= this->D_; ++d) {
      pieces_.emplace_back();
      Deg& cur = pieces_.back();
      int amb = P.dim(d);
      RrefAccum<K> acc(amb);
      if (d > 0 && amb > 0) {
        for (const auto& f : forms) {
          for (int u = 0; u < P.dim(d - 1); ++u) {
            std::vector<K> e(P.dim(d - 1), K(0));
            e[u] = K(1);
            std::vector<K> prod(amb, K(0));
            // Form coordinates are in the degree-one basis, not variable order.
            for (size_t v = 0; v < f.size(); ++v) {
              if (is_zero(f[v])) continue;
              std::vector<K> t = P.applyBasisMul(1, static_cast<int>(v), d - 1, e);
              for (int x = 0; x < amb; ++x)
                if (!is_zero(t[x])) prod[x] += f[v] * t[x];
            }
            acc.insert(std::move(prod));
            if (acc.rank() == amb) break;
          }
          if (acc.rank() == amb) break;
        }
      }
      cur.rows = acc.toMat();
      cur.pivots = acc.pivots();
      std::vector<char> isPiv(amb, 0);
      for (int c : cur.pivots) isPiv[c] = 1;
      cur.colToBasis.assign(amb, -1);
      for (int c = 0; c < amb; ++c)
        if (!isPiv[c]) {
          cur.colToBasis[c] = static_cast<int>(cur.cosetIdx.size());
          cur.cosetIdx.push_back(c);
        }
      this->dims_.push_back(static_cast<int>(cur.cosetIdx.size()));
    }
    for (int d = 0; d <= this->D_; ++d)
      if (this->dims_[d] == 0) this->artinian_ = true;
    for (int c : pieces_[1].cosetIdx)
      this->names_.push_back(P.varNames()[P.varOfDegreeOneBasis(c)]);
    bool varsOnly = true;
    for (const auto& f : forms) {
      int nz = 0;
      for (const K& x : f)
        if (!is_zero(x)) ++nz;
      if (nz != 1) varsOnly = false;
    }
    this->stronglyKoszulTrusted = P.stronglyKoszulTrusted && varsOnly;
  }

  const Algebra<K>& parent() const { return *parent_; }

  std::vector<K> embed(int d, const std::vector<K>& w) const {
    std::vector<K> out(parent_->dim(d), K(0));
    for (size_t s = 0; s < w.size(); ++s) out[pieces_[d].cosetIdx[s]] = w[s];
    return out;
  }

  std::vector<K> reduce(int d, std::vector<K> pv) const {
    const Deg& p = pieces_[d];
    for (int i = 0; i < p.rows.nr; ++i) {
      const K& f = pv[p.pivots[i]];
      if (is_zero(f)) continue;
      K c = f;
      for (int j = p.pivots[i]; j < p.rows.nc; ++j)
        if (!is_zero(p.rows.at(i, j))) pv[j] -= c * p.rows.at(i, j);
    }
    std::vector<K> out(this->dims_[d], K(0));
    for (size_t b = 0; b < out.size(); ++b) out[b] = pv[p.cosetIdx[b]];
    return out;
  }

  std::vector<K> applyVar(int v, int i, const std::vector<K>& w) const override {
    if (this->dim(i + 1) == 0) return {};
    int pv = parent_->varOfDegreeOneBasis(pieces_[1].cosetIdx[v]);
    return reduce(i + 1, parent_->applyVar(pv, i, embed(i, w)));
  }

  std::vector<K> applyBasisMul(int j, int s, int i, const std::vector<K>& w) const override {
    if (j == 0) return w;
    if (this->dim(i + j) == 0) return {};
    return reduce(i + j, parent_->applyBasisMul(j, pieces_[j].cosetIdx[s], i, embed(i, w)));
  }

  std::string basisLabel(int d, int s) const override {
    return parent_->basisLabel(d, pieces_[d].cosetIdx[s]);
  }
  int varOfDegreeOneBasis(int s) const override { return s; }

 private:
  struct Deg {
    Mat<K> rows;  // RREF of the killed subspace, in parent coordinates
    std::vector<int> pivots;
    std::vector<int> cosetIdx;
    std::vector<int> colToBasis;
  };
  AlgebraPtr<K> parent_;
  std::vector<Deg> pieces_;
};

}  // namespace lindef

#endif
