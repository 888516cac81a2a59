#ifndef LINDEF_IDEAL_HPP
#define LINDEF_IDEAL_HPP

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "subspace.hpp"

namespace lindef {

// Graded free module over an algebra: generator t contributes a copy of
// the algebra shifted so the generator sits in degree gdeg[t]. Piece
// coordinates are the generators' algebra pieces laid out in order.
template <class K>
struct FreeModule {
  AlgebraPtr<K> A;
  std::vector<int> gdeg;

  int rank() const { return static_cast<int>(gdeg.size()); }

  bool pieceKnown(int d) const {
    for (int g : gdeg)
      if (!A->degreeKnown(d - g)) return false;
    return true;
  }
  int pieceDim(int d) const {
    int s = 0;
    for (int g : gdeg) s += A->dim(d - g);
    return s;
  }
  int offset(int t, int d) const {
    int s = 0;
    for (int u = 0; u < t; ++u) s += A->dim(d - gdeg[u]);
    return s;
  }

  std::vector<K> applyVar(int v, int d, const std::vector<K>& w) const {
    std::vector<K> out(pieceDim(d + 1), K(0));
    for (int t = 0; t < rank(); ++t) {
      int din = A->dim(d - gdeg[t]);
      if (din == 0) continue;
      std::vector<K> blk(w.begin() + offset(t, d), w.begin() + offset(t, d) + din);
      std::vector<K> img = A->applyVar(v, d - gdeg[t], blk);
      int o = offset(t, d + 1);
      for (size_t x = 0; x < img.size(); ++x)
        if (!is_zero(img[x])) out[o + x] += img[x];
    }
    return out;
  }

  // [basis element u of A_j] * w, piece d -> piece d+j.
  std::vector<K> applyBasisMul(int j, int u, int d, const std::vector<K>& w) const {
    if (j == 0) return w;
    std::vector<K> out(pieceDim(d + j), K(0));
    for (int t = 0; t < rank(); ++t) {
      int din = A->dim(d - gdeg[t]);
      if (din == 0) continue;
      std::vector<K> blk(w.begin() + offset(t, d), w.begin() + offset(t, d) + din);
      std::vector<K> img = A->applyBasisMul(j, u, d - gdeg[t], blk);
      int o = offset(t, d + j);
      for (size_t x = 0; x < img.size(); ++x)
        if (!is_zero(img[x])) out[o + x] += img[x];
    }
    return out;
  }

  friend bool operator==(const FreeModule& x, const FreeModule& y) {
    return x.A.get() == y.A.get() && x.gdeg == y.gdeg;
  }
};

template <class K>
FreeModule<K> free_rank1(AlgebraPtr<K> A, int shift = 0) {
  return FreeModule<K>{std::move(A), {shift}};
}

// Result of comparing graded objects degree by degree.
struct DegreeCompare {
  bool equal = false;
  int through = -1;       // degrees <= through were compared
  bool complete = false;  // true when the comparison covers all degrees
};

// Graded submodule of a free module, stored as one row span per degree.
// Construction paths (closure accumulators, kernels) produce independent
// rows, so dimensions are row counts; canonical RREF subspaces are built
// lazily for membership and equality tests.
template <class K>
class Submodule {
 public:
  Submodule() = default;

  static Submodule zero(const FreeModule<K>& F) {
    Submodule s;
    s.F_ = F;
    s.lo_ = 0;
    s.computeRange();
    for (int d = s.lo_; d <= s.hiStored_; ++d) {
      Mat<K> m;
      m.nc = F.pieceDim(d);
      s.spans_.push_back(m);
    }
    return s;
  }

  // Pieces supplied degree by degree (rows independent).
  static Submodule fromPieces(const FreeModule<K>& F, int lo, int hi, bool exactAll,
                              const std::function<Mat<K>(int)>& pieceAt) {
    Submodule s;
    s.F_ = F;
    s.lo_ = lo;
    s.computeRange();
    s.hiStored_ = std::min(s.hiStored_, hi);
    s.exactAll_ = s.exactAll_ && exactAll && s.hiStored_ >= s.trueHi_;
    for (int d = s.lo_; d <= s.hiStored_; ++d) s.spans_.push_back(pieceAt(d));
    return s;
  }

  // Degreewise closure of the given generators: piece(d) is spanned by
  // variable shifts of piece(d-1) plus the degree-d generators.
  static Submodule close(const FreeModule<K>& F,
                         const std::vector<std::pair<int, std::vector<K>>>& gens) {
    Submodule s;
    s.F_ = F;
    s.lo_ = gens.empty() ? 0 : gens[0].first;
    for (const auto& [d, v] : gens) s.lo_ = std::min(s.lo_, d);
    s.computeRange();
    int e = F.A->nvars();
    std::vector<std::vector<K>> prevRows;
    for (int d = s.lo_; d <= s.hiStored_; ++d) {
      RrefAccum<K> acc(F.pieceDim(d));
      for (const auto& r : prevRows)
        for (int v = 0; v < e; ++v) acc.insert(F.applyVar(v, d - 1, r));
      for (const auto& [gd, gv] : gens)
        if (gd == d) acc.insert(gv);
      prevRows.clear();
      Mat<K> m = acc.toMat();
      for (int i = 0; i < m.nr; ++i) prevRows.push_back(m.row(i));
      s.spans_.push_back(std::move(m));
    }
    return s;
  }

  // Kernel of the map Ffrom -> Fto sending generator t to cols[t], an
  // element of Fto in degree Ffrom.gdeg[t]. With mod set, the kernel of
  // the composite into Fto/mod. maxDeg >= 0 limits the degrees computed.
  static Submodule kernelOfMap(const FreeModule<K>& Ffrom, const FreeModule<K>& Fto,
                               const std::vector<std::vector<K>>& cols,
                               const Submodule* mod = nullptr, int maxDeg = -1) {
    int lo = Ffrom.gdeg.empty() ? 0 : Ffrom.gdeg[0];
    for (int g : Ffrom.gdeg) lo = std::min(lo, g);
    int hi = maxDeg >= 0 ? maxDeg : 1 << 29;
    if (mod && !mod->exactAllDegrees()) hi = std::min(hi, mod->hiStored());
    if (!Fto.A->artinian() && !Fto.gdeg.empty()) {
      int h = lo - 1;
      while (h < hi && Fto.pieceKnown(h + 1)) ++h;
      hi = std::min(hi, h);
    }
    bool exact = !mod || mod->exactAllDegrees();
    return fromPieces(Ffrom, lo, hi, exact, [&](int d) {
      return kernelPiece(Ffrom, Fto, cols, d, mod);
    });
  }

  static Mat<K> kernelPiece(const FreeModule<K>& Ffrom, const FreeModule<K>& Fto,
                            const std::vector<std::vector<K>>& cols, int d,
                            const Submodule* mod = nullptr) {
    int nc = Ffrom.pieceDim(d), nr = Fto.pieceDim(d);
    Mat<K> m(nr, nc);
    for (int t = 0; t < Ffrom.rank(); ++t) {
      int g = Ffrom.gdeg[t];
      int din = Ffrom.A->dim(d - g);
      int o = Ffrom.offset(t, d);
      for (int u = 0; u < din; ++u) {
        std::vector<K> img = Fto.applyBasisMul(d - g, u, g, cols[t]);
        if (mod && mod->dim(d) > 0) img = mod->canonical(d).reduce(std::move(img));
        for (int x = 0; x < nr; ++x) m.at(x, o + u) = img[x];
      }
    }
    return kernel(m);
  }

  const FreeModule<K>& free() const { return F_; }
  int lo() const { return lo_; }
  int hiStored() const { return hiStored_; }
  bool exactAllDegrees() const { return exactAll_; }

  int dim(int d) const {
    if (d < lo_ || d > hiStored_) return 0;
    return spans_[d - lo_].nr;
  }

  Mat<K> span(int d) const {
    if (d < lo_ || d > hiStored_) {
      Mat<K> m;
      m.nc = F_.pieceKnown(d) ? F_.pieceDim(d) : 0;
      return m;
    }
    return spans_[d - lo_];
  }

  const Subspace<K>& canonical(int d) const {
    auto it = canon_.find(d);
    if (it != canon_.end()) return it->second;
    Subspace<K> sp = Subspace<K>::fromMat(span(d));
    return canon_.emplace(d, std::move(sp)).first->second;
  }

  bool member(int d, const std::vector<K>& v) const {
    if (d > hiStored_ && !exactAll_)
      throw std::out_of_range("membership beyond stored range");
    if (d < lo_ || d > hiStored_) {
      for (const K& x : v)
        if (!is_zero(x)) return false;
      return true;
    }
    return canonical(d).contains(v);
  }

  bool isZero() const {
    for (const auto& m : spans_)
      if (m.nr > 0) return false;
    return true;
  }

  DegreeCompare compare(const Submodule& o) const {
    DegreeCompare r;
    if (!(F_ == o.F_)) return r;
    r.through = std::min(hiStored_, o.hiStored_);
    r.complete = exactAll_ && o.exactAll_;
    r.equal = true;
    for (int d = std::min(lo_, o.lo_); d <= r.through; ++d) {
      if (dim(d) != o.dim(d)) { r.equal = false; return r; }
      if (dim(d) > 0 && !(canonical(d) == o.canonical(d))) { r.equal = false; return r; }
    }
    return r;
  }

  bool containsSub(const Submodule& o) const {
    for (int d = o.lo(); d <= std::min(hiStored_, o.hiStored()); ++d) {
      if (o.dim(d) == 0) continue;
      if (d < lo_) return false;
      if (!canonical(d).contains(o.canonical(d))) return false;
    }
    return true;
  }

  Submodule sumWith(const Submodule& o) const {
    return fromPieces(F_, std::min(lo_, o.lo_), std::min(hiStored_, o.hiStored_),
                      exactAll_ && o.exactAll_, [&](int d) {
                        RrefAccum<K> acc(F_.pieceDim(d));
                        Mat<K> a = span(d), b = o.span(d);
                        for (int i = 0; i < a.nr; ++i) acc.insert(a.row(i));
                        for (int i = 0; i < b.nr; ++i) acc.insert(b.row(i));
                        return acc.toMat();
                      });
  }

  Submodule intersectWith(const Submodule& o) const {
    return fromPieces(F_, std::max(lo_, o.lo_), std::min(hiStored_, o.hiStored_),
                      exactAll_ && o.exactAll_, [&](int d) {
                        return canonical(d).intersect(o.canonical(d)).basis();
                      });
  }

  // Minimal generators: degree-d span rows surviving reduction against
  // the variable closure of the previous piece.
  const std::vector<std::pair<int, std::vector<K>>>& minGens() const {
    if (mg_) return *mg_;
    mg_.emplace();
    int e = F_.A->nvars();
    for (int d = lo_; d <= hiStored_; ++d) {
      if (dim(d) == 0) continue;
      RrefAccum<K> acc(F_.pieceDim(d));
      Mat<K> prev = span(d - 1);
      for (int i = 0; i < prev.nr; ++i) {
        std::vector<K> r = prev.row(i);
        for (int v = 0; v < e; ++v) acc.insert(F_.applyVar(v, d - 1, r));
      }
      Mat<K> cur = span(d);
      for (int i = 0; i < cur.nr; ++i) {
        std::vector<K> r = cur.row(i);
        if (acc.insert(r)) mg_->emplace_back(d, cur.row(i));
      }
    }
    return *mg_;
  }

  std::vector<int> minGenDegrees() const {
    std::vector<int> ds;
    for (const auto& [d, v] : minGens()) ds.push_back(d);
    return ds;
  }

 private:
  void computeRange() {
    const Algebra<K>& A = *F_.A;
    if (F_.gdeg.empty()) {
      exactAll_ = true;
      trueHi_ = lo_ - 1;
      hiStored_ = trueHi_;
      return;
    }
    int maxg = 0;
    for (int g : F_.gdeg) maxg = std::max(maxg, g);
    if (A.artinian()) {
      exactAll_ = true;
      trueHi_ = maxg + A.topDegree();
      while (trueHi_ >= lo_ && F_.pieceDim(trueHi_) == 0) --trueHi_;
    } else {
      exactAll_ = false;
      trueHi_ = lo_;
      while (F_.pieceKnown(trueHi_ + 1)) ++trueHi_;
    }
    hiStored_ = trueHi_;
  }

  FreeModule<K> F_;
  int lo_ = 0;
  int hiStored_ = -1;
  int trueHi_ = -1;
  bool exactAll_ = false;
  std::vector<Mat<K>> spans_;
  mutable std::map<int, Subspace<K>> canon_;
  mutable std::optional<std::vector<std::pair<int, std::vector<K>>>> mg_;
};

// Ideals are submodules of the rank-one free module on the algebra.
template <class K>
Submodule<K> ideal_from_elems(AlgebraPtr<K> A, const std::vector<Elem<K>>& gens) {
  std::vector<std::pair<int, std::vector<K>>> gs;
  for (const Elem<K>& e : gens)
    if (e.deg >= 0 && !e.isZero()) gs.emplace_back(e.deg, e.v);
  if (gs.empty()) return Submodule<K>::zero(free_rank1<K>(std::move(A)));
  return Submodule<K>::close(free_rank1<K>(std::move(A)), gs);
}

template <class K>
Submodule<K> ideal_parse(AlgebraPtr<K> A, const std::vector<std::string>& exprs) {
  std::vector<Elem<K>> es;
  for (const std::string& s : exprs) es.push_back(elem_parse(*A, s));
  return ideal_from_elems(std::move(A), es);
}

template <class K>
Submodule<K> ideal_maximal(AlgebraPtr<K> A) {
  std::vector<std::pair<int, std::vector<K>>> gs;
  for (int s = 0; s < A->dim(1); ++s) {
    std::vector<K> v(A->dim(1), K(0));
    v[s] = K(1);
    gs.emplace_back(1, std::move(v));
  }
  return Submodule<K>::close(free_rank1<K>(std::move(A)), gs);
}

template <class K>
Submodule<K> ideal_unit(AlgebraPtr<K> A) {
  return Submodule<K>::close(free_rank1<K>(std::move(A)), {{0, {K(1)}}});
}

// Colon {a in A : a*m lies in N} for m in degree h of N's free module.
// Returns an ideal, exact through the degrees where N is stored.
template <class K>
Submodule<K> colon_by_element(const Submodule<K>& N, int h, const std::vector<K>& m) {
  const FreeModule<K> F = N.free();
  AlgebraPtr<K> A = F.A;
  int hi = N.exactAllDegrees() ? 1 << 29 : N.hiStored() - h;
  if (!A->artinian()) hi = std::min(hi, A->truncation());
  return Submodule<K>::fromPieces(
      free_rank1<K>(A), 0, hi, N.exactAllDegrees(), [&](int d) {
        int nc = A->dim(d);
        int nr = F.pieceDim(d + h);
        Mat<K> mat(nr, nc);
        for (int u = 0; u < nc; ++u) {
          std::vector<K> img = F.applyBasisMul(d, u, h, m);
          if (N.dim(d + h) > 0) img = N.canonical(d + h).reduce(std::move(img));
          for (int x = 0; x < nr; ++x) mat.at(x, u) = img[x];
        }
        return kernel(mat);
      });
}

template <class K>
Submodule<K> colon_by_elem(const Submodule<K>& N, const Elem<K>& f) {
  return colon_by_element(N, f.deg, f.v);
}

// J : I as the intersection of the colons by minimal generators of I.
template <class K>
Submodule<K> colon_ideal_by_ideal(const Submodule<K>& N, const Submodule<K>& I) {
  bool first = true;
  Submodule<K> acc;
  for (const auto& [d, v] : I.minGens()) {
    Submodule<K> c = colon_by_element(N, d, v);
    acc = first ? std::move(c) : acc.intersectWith(c);
    first = false;
  }
  if (first) return ideal_unit<K>(N.free().A);
  return acc;
}

}  // namespace lindef

#endif
