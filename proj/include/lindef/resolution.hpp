#ifndef LINDEF_RESOLUTION_HPP
#define LINDEF_RESOLUTION_HPP

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lindef/ideal.hpp"

namespace lindef {

// ---------------------------------------------------------------------
// A module presented by a free cover and its relation kernel. The
// presentation is minimal: rel is contained in the irrelevant multiple
// of F0, so generator counts are Betti numbers.

template <class K>
struct GradedModule {
  std::string name;
  FreeModule<K> F0;
  Submodule<K> rel;  // kernel of the cover F0 -> M

  int hilbertDim(int d) const { return F0.pieceDim(d) - rel.dim(d); }
  bool dimKnown(int d) const {
    return F0.pieceKnown(d) && (rel.exactAllDegrees() || d <= rel.hiStored());
  }
};

// Minimal generators of N modulo D + (max ideal)*N; D defaults to zero.
template <class K>
std::vector<std::pair<int, std::vector<K>>> min_gens_modulo(const Submodule<K>& N,
                                                            const Submodule<K>* D) {
  std::vector<std::pair<int, std::vector<K>>> out;
  const FreeModule<K>& F = N.free();
  int e = F.A->nvars();
  for (int d = N.lo(); d <= N.hiStored(); ++d) {
    if (N.dim(d) == 0) continue;
    RrefAccum<K> acc(F.pieceDim(d));
    Mat<K> prev = N.span(d - 1);
    for (int i = 0; i < prev.nr; ++i) {
      std::vector<K> r = prev.row(i);
      for (int v = 0; v < e; ++v) acc.insert(F.applyVar(v, d - 1, r));
    }
    if (D) {
      Mat<K> dm = D->span(d);
      for (int i = 0; i < dm.nr; ++i) acc.insert(dm.row(i));
    }
    Mat<K> cur = N.span(d);
    for (int i = 0; i < cur.nr; ++i) {
      std::vector<K> r = cur.row(i);
      if (acc.insert(r)) out.emplace_back(d, cur.row(i));
    }
  }
  return out;
}

template <class K>
GradedModule<K> present_submodule(const Submodule<K>& N, std::string name = "M",
                                  int maxDeg = -1) {
  auto mg = N.minGens();
  FreeModule<K> F0{N.free().A, {}};
  std::vector<std::vector<K>> cols;
  for (const auto& [d, v] : mg) {
    F0.gdeg.push_back(d);
    cols.push_back(v);
  }
  Submodule<K> rel = Submodule<K>::kernelOfMap(F0, N.free(), cols, nullptr, maxDeg);
  return GradedModule<K>{std::move(name), std::move(F0), std::move(rel)};
}

// N/D for submodules D subseteq N of the same free module.
template <class K>
GradedModule<K> present_quotient(const Submodule<K>& N, const Submodule<K>& D,
                                 std::string name = "M", int maxDeg = -1) {
  auto mg = min_gens_modulo(N, &D);
  FreeModule<K> F0{N.free().A, {}};
  std::vector<std::vector<K>> cols;
  for (const auto& [d, v] : mg) {
    F0.gdeg.push_back(d);
    cols.push_back(v);
  }
  Submodule<K> rel = Submodule<K>::kernelOfMap(F0, N.free(), cols, &D, maxDeg);
  return GradedModule<K>{std::move(name), std::move(F0), std::move(rel)};
}

template <class K>
GradedModule<K> present_ideal(const Submodule<K>& I, std::string name = "I",
                              int maxDeg = -1) {
  return present_submodule(I, std::move(name), maxDeg);
}

// F/D where D is already inside the irrelevant multiple of F.
template <class K>
GradedModule<K> present_cokernel(const FreeModule<K>& F, Submodule<K> D,
                                 std::string name = "coker") {
  for (const auto& [d, v] : D.minGens()) {
    int o = 0;
    for (size_t t = 0; t < F.gdeg.size(); ++t) {
      int din = F.A->degreeKnown(d - F.gdeg[t]) ? F.A->dim(d - F.gdeg[t]) : 0;
      if (F.gdeg[t] == d && din == 1 && !is_zero(v[o]))
        throw std::invalid_argument("present_cokernel: relations hit a generator");
      o += din;
    }
  }
  return GradedModule<K>{std::move(name), F, std::move(D)};
}

template <class K>
GradedModule<K> present_residue_field(const AlgebraPtr<K>& A) {
  return present_cokernel(free_rank1<K>(A), ideal_maximal<K>(A), "k");
}

// The submodule of the free module F generated by the columns of a
// matrix of algebra elements (entry degrees consistent per column).
template <class K>
Submodule<K> submodule_from_columns(const FreeModule<K>& F,
                                    const std::vector<std::vector<Elem<K>>>& columns) {
  std::vector<std::pair<int, std::vector<K>>> gens;
  for (const auto& col : columns) {
    int cd = -1;
    for (size_t t = 0; t < col.size(); ++t)
      if (col[t].deg >= 0) cd = std::max(cd, col[t].deg + F.gdeg[t]);
    if (cd < 0) continue;
    std::vector<K> v(F.pieceDim(cd), K(0));
    for (size_t t = 0; t < col.size(); ++t) {
      if (col[t].deg < 0) continue;
      if (col[t].deg + F.gdeg[t] != cd)
        throw std::invalid_argument("submodule_from_columns: non-homogeneous column");
      int o = F.offset(static_cast<int>(t), cd);
      for (size_t s = 0; s < col[t].v.size(); ++s) v[o + s] = col[t].v[s];
    }
    gens.emplace_back(cd, std::move(v));
  }
  if (gens.empty()) return Submodule<K>::zero(F);
  return Submodule<K>::close(F, gens);
}

// ---------------------------------------------------------------------
// Iterated minimal syzygies.

template <class K>
struct Resolution {
  GradedModule<K> M;
  std::vector<FreeModule<K>> F;  // F[0] = M.F0
  // dcols[i] for i >= 1: differential columns F[i] -> F[i-1]
  std::vector<std::vector<std::pair<int, std::vector<K>>>> dcols;
  std::vector<Submodule<K>> omega;  // omega[i] = ker(F[i] -> F[i-1]); omega[0] = M.rel
  bool lastOmegaKnown = true;       // false when the final kernel was skipped
  int steps() const { return static_cast<int>(F.size()) - 1; }
  bool terminated() const { return F.back().gdeg.empty(); }
  // internal degree through which the generators of F[i] are exact
  int exactThrough(int i) const {
    if (i == 0) return INT_MAX;
    const Submodule<K>& o = omega[i - 1];
    return o.exactAllDegrees() ? INT_MAX : o.hiStored();
  }
};

// Differentials of minimal covers stay inside the irrelevant part; a
// generator-degree entry would contradict minimality of the generators.
template <class K>
void assert_step_minimal(const FreeModule<K>& Fto,
                         const std::vector<std::pair<int, std::vector<K>>>& cols) {
  for (const auto& [d, v] : cols) {
    for (size_t t = 0; t < Fto.gdeg.size(); ++t) {
      if (Fto.gdeg[t] != d) continue;
      int o = Fto.offset(static_cast<int>(t), d);
      if (!is_zero(v[o]))
        throw std::logic_error("resolution step is not minimal");
    }
  }
}

// lastKernel = false builds F[homCutoff] and its differential but skips
// the final (usually dominant) kernel computation; the last omega is
// then a placeholder with no stored degrees.
template <class K>
Resolution<K> resolve_steps(const GradedModule<K>& M, int homCutoff, int maxDeg = -1,
                            bool lastKernel = true) {
  if (homCutoff < 0) throw std::invalid_argument("resolve: homCutoff < 0");
  Resolution<K> res{M, {M.F0}, {{}}, {M.rel}};
  for (int i = 1; i <= homCutoff; ++i) {
    const Submodule<K>& prev = res.omega[i - 1];
    auto mg = prev.minGens();
    assert_step_minimal(res.F[i - 1], mg);
    FreeModule<K> Fi{prev.free().A, {}};
    std::vector<std::vector<K>> cols;
    for (const auto& [d, v] : mg) {
      Fi.gdeg.push_back(d);
      cols.push_back(v);
    }
    Submodule<K> om;
    if (i == homCutoff && !lastKernel && !Fi.gdeg.empty()) {
      om = Submodule<K>::fromPieces(Fi, 0, -1, false, [](int) { return Mat<K>(); });
      res.lastOmegaKnown = false;
    } else {
      om = Submodule<K>::kernelOfMap(Fi, res.F[i - 1], cols, nullptr, maxDeg);
    }
    res.F.push_back(Fi);
    res.dcols.push_back(mg);
    res.omega.push_back(std::move(om));
    if (Fi.gdeg.empty()) break;  // resolution terminated
  }
  return res;
}

// ---------------------------------------------------------------------
// Betti tables.

struct BettiTable {
  std::map<std::pair<int, int>, long long> b;  // (homological i, internal j)
  int homCutoff = 0;
  std::vector<int> exactThrough;  // per i

  long long at(int i, int j) const {
    auto it = b.find({i, j});
    return it == b.end() ? 0 : it->second;
  }
  long long total(int i) const {
    long long s = 0;
    for (const auto& [ij, c] : b)
      if (ij.first == i) s += c;
    return s;
  }
  bool entryExact(int i, int j) const {
    if (i >= static_cast<int>(exactThrough.size())) return false;
    return exactThrough[i] == INT_MAX || j <= exactThrough[i];
  }
  bool allExact() const {
    for (int t : exactThrough)
      if (t != INT_MAX) return false;
    return true;
  }
  std::string text() const {
    // triangular layout: row r prints beta_{i, i+r}
    std::string out = "    ";
    for (int i = 0; i <= homCutoff; ++i) out += "      " + std::to_string(i);
    out += "\n";
    int maxShift = 0;
    for (const auto& [ij, c] : b) maxShift = std::max(maxShift, ij.second - ij.first);
    int minShift = 0;
    for (const auto& [ij, c] : b) minShift = std::min(minShift, ij.second - ij.first);
    for (int r = minShift; r <= maxShift; ++r) {
      out += std::to_string(r) + ":";
      for (int i = 0; i <= homCutoff; ++i) {
        long long v = at(i, i + r);
        std::string cell = v ? std::to_string(v) : ".";
        if (exactThrough[i] != INT_MAX && i + r > exactThrough[i]) cell = "?";
        while (cell.size() < 7) cell = " " + cell;
        out += cell;
      }
      out += "\n";
    }
    return out;
  }
};

template <class K>
BettiTable betti_table(const Resolution<K>& res) {
  BettiTable t;
  t.homCutoff = res.steps();
  for (int i = 0; i <= res.steps(); ++i) {
    t.exactThrough.push_back(res.exactThrough(i));
    for (int g : res.F[i].gdeg) ++t.b[{i, g}];
  }
  return t;
}

template <class K>
BettiTable resolve(const GradedModule<K>& M, int homCutoff, int maxDeg = -1) {
  return betti_table(resolve_steps(M, homCutoff, maxDeg));
}

template <class K>
std::vector<long long> poincare_partial(const GradedModule<K>& M, int homCutoff) {
  BettiTable t = resolve(M, homCutoff);
  std::vector<long long> out;
  for (int i = 0; i <= homCutoff; ++i) out.push_back(t.total(i));
  return out;
}

template <class K>
GradedModule<K> syzygy(const GradedModule<K>& M, int maxDeg = -1) {
  Resolution<K> res = resolve_steps(M, 1, maxDeg);
  if (res.steps() < 1)
    return GradedModule<K>{M.name + ".syz", FreeModule<K>{M.F0.A, {}},
                           Submodule<K>::zero(FreeModule<K>{M.F0.A, {}})};
  return GradedModule<K>{M.name + ".syz", res.F[1], res.omega[1]};
}

// Largest j - i over exact table entries.
template <class K>
int regularity_upto(const GradedModule<K>& M, int homCutoff) {
  BettiTable t = resolve(M, homCutoff);
  int r = INT_MIN;
  for (const auto& [ij, c] : t.b) {
    if (c == 0) continue;
    int limit = t.exactThrough[ij.first];
    if (limit != INT_MAX && ij.second > limit) continue;
    r = std::max(r, ij.second - ij.first);
  }
  return r;
}

// Alternating sum of free-module pieces minus the last kernel equals
// the module's Hilbert function in every degree: exactness of
// 0 <- M <- F_0 <- ... <- F_s <- omega_s.
template <class K>
bool euler_identity_holds(const Resolution<K>& res, int d) {
  long long lhs = 0;
  for (int i = 0; i <= res.steps(); ++i) {
    long long p = res.F[i].pieceDim(d);
    lhs += (i % 2 ? -p : p);
  }
  long long corr = res.omega[res.steps()].dim(d);
  lhs += (res.steps() % 2 ? corr : -corr);
  return lhs == res.M.hilbertDim(d);
}

template <class K>
bool euler_identity_through(const Resolution<K>& res, int dmax) {
  if (!res.lastOmegaKnown)
    throw std::logic_error("euler check needs the final kernel");
  for (int d = 0; d <= dmax; ++d) {
    if (!res.M.dimKnown(d)) break;
    bool ok = true;
    for (int i = 0; i <= res.steps() && ok; ++i) {
      const Submodule<K>& o = res.omega[i];
      if (!o.exactAllDegrees() && d > o.hiStored()) ok = false;
    }
    if (!ok) break;
    if (!euler_identity_holds(res, d)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------
// The linear part of the resolution: differentials truncated to their
// components that raise internal degree by exactly one.

template <class K>
std::vector<K> linear_truncation(const FreeModule<K>& Fto, int srcDeg,
                                 const std::vector<K>& col) {
  std::vector<K> out(col.size(), K(0));
  for (size_t t = 0; t < Fto.gdeg.size(); ++t) {
    if (Fto.gdeg[t] != srcDeg - 1) continue;
    int o = Fto.offset(static_cast<int>(t), srcDeg);
    int din = Fto.A->dim(1);
    for (int u = 0; u < din; ++u) out[o + u] = col[o + u];
  }
  return out;
}

// Matrix of lambda_i at internal degree j, as columns over the basis of
// (F_i)_j.
template <class K>
Mat<K> linear_part_matrix(const Resolution<K>& res, int i, int j) {
  const FreeModule<K>& Fi = res.F[i];
  const FreeModule<K>& Fprev = res.F[i - 1];
  int nc = Fi.pieceDim(j), nr = Fprev.pieceDim(j);
  Mat<K> m(nr, nc);
  for (int t = 0; t < Fi.rank(); ++t) {
    int g = Fi.gdeg[t];
    int din = (j - g >= 0 && Fi.A->degreeKnown(j - g)) ? Fi.A->dim(j - g) : 0;
    int o = Fi.offset(t, j);
    std::vector<K> trunc = linear_truncation(Fprev, g, res.dcols[i][t].second);
    for (int u = 0; u < din; ++u) {
      std::vector<K> img = Fprev.applyBasisMul(j - g, u, g, trunc);
      for (int x = 0; x < nr; ++x) m.at(x, o + u) = img[x];
    }
  }
  return m;
}

struct LinPartLevel {
  std::map<int, long long> dims;  // internal degree -> dim H_i(lin F)_j
  bool exact = false;             // dims cover every internal degree
  bool nonzero = false;
  std::string how;  // "computed" | "cycle-witness" | ""
  long long totalDim() const {
    long long s = 0;
    for (const auto& [j, v] : dims) s += v;
    return s;
  }
};

struct LinPartReport {
  std::vector<LinPartLevel> level;  // index i = 1..homCutoff at [i]
  int lindLowerBound = 0;
};

// Full homology of the linear part at level i, degree by degree.
template <class K>
LinPartLevel linpart_level_full(const Resolution<K>& res, int i) {
  LinPartLevel lv;
  if (i < 1 || i + 1 > res.steps()) return lv;
  const FreeModule<K>& Fi = res.F[i];
  if (Fi.gdeg.empty()) {
    lv.exact = true;
    lv.how = "computed";
    return lv;
  }
  const Algebra<K>& A = *Fi.A;
  int lo = *std::min_element(Fi.gdeg.begin(), Fi.gdeg.end());
  int hi = *std::max_element(Fi.gdeg.begin(), Fi.gdeg.end()) +
           (A.artinian() ? A.topDegree() : A.truncation());
  bool exact = A.artinian();
  for (int j = lo; j <= hi; ++j) {
    // generator lists of F_i and F_{i+1} must be complete through j
    const Submodule<K>& oprev = res.omega[i - 1];
    const Submodule<K>& ocur = res.omega[i];
    bool known = Fi.pieceKnown(j) && res.F[i + 1].pieceKnown(j) &&
                 res.F[i - 1].pieceKnown(j) &&
                 (oprev.exactAllDegrees() || j <= oprev.hiStored()) &&
                 (ocur.exactAllDegrees() || j <= ocur.hiStored());
    if (!known) {
      exact = false;
      break;
    }
    Mat<K> li = linear_part_matrix(res, i, j);
    Mat<K> ln = linear_part_matrix(res, i + 1, j);
    long long h = (li.nc - rank(li)) - rank(ln);
    if (h < 0) throw std::logic_error("linear part is not a complex");
    if (h > 0) lv.dims[j] = h;
  }
  lv.exact = exact;
  lv.how = "computed";
  lv.nonzero = lv.totalDim() > 0;
  return lv;
}

// Cheap sound nonzero test at level i using only syzygy data in internal
// degrees <= i+2. Requires generator degrees of F_{i-1}, F_i within
// {m, m+1}; then a degree-(i+2) syzygy supported on the degree-i blocks
// is a cycle of the linear part, and is a boundary exactly when it lies
// in A_1 * (degree-(i+1) syzygies).
template <class K>
bool linpart_nonzero_by_cycle_witness(const Resolution<K>& res, int i) {
  if (i < 1 || i > res.steps()) return false;
  const FreeModule<K>& Fi = res.F[i];
  const FreeModule<K>& Fprev = res.F[i - 1];
  for (int g : Fi.gdeg)
    if (g != i && g != i + 1) return false;
  for (int g : Fprev.gdeg)
    if (g != i - 1 && g != i) return false;
  const Submodule<K>& om = res.omega[i];  // syzygies inside F_i
  if (!om.exactAllDegrees() && om.hiStored() < i + 2) return false;
  // boundaries: A_1 * omega_{i+1}
  int pd = Fi.pieceDim(i + 2);
  RrefAccum<K> bnd(pd);
  Mat<K> low = om.span(i + 1);
  int e = Fi.A->nvars();
  for (int r = 0; r < low.nr; ++r) {
    std::vector<K> row = low.row(r);
    for (int v = 0; v < e; ++v) bnd.insert(Fi.applyVar(v, i + 1, row));
  }
  // cycle candidates: syzygies with zero components outside degree-i blocks
  Mat<K> cy = om.span(i + 2);
  std::vector<char> keep(pd, 0);
  int d2 = Fi.A->degreeKnown(2) ? Fi.A->dim(2) : 0;
  for (int t = 0; t < Fi.rank(); ++t) {
    if (Fi.gdeg[t] != i) continue;
    int o = Fi.offset(t, i + 2);
    for (int u = 0; u < d2; ++u) keep[o + u] = 1;
  }
  // solve for combinations with zero non-kept coordinates
  int bad = 0;
  for (int c = 0; c < pd; ++c)
    if (!keep[c]) ++bad;
  Mat<K> proj(bad, cy.nr);
  for (int r = 0; r < cy.nr; ++r) {
    int x = 0;
    for (int c = 0; c < pd; ++c)
      if (!keep[c]) proj.at(x++, r) = cy.at(r, c);
  }
  Mat<K> combos = kernel(proj);  // rows: coefficients over cy rows
  for (int r = 0; r < combos.nr; ++r) {
    std::vector<K> z(pd, K(0));
    for (int c = 0; c < cy.nr; ++c) {
      if (is_zero(combos.at(r, c))) continue;
      for (int x = 0; x < pd; ++x) z[x] += combos.at(r, c) * cy.at(c, x);
    }
    if (bnd.insert(z)) return true;  // cycle outside the boundary space
  }
  return false;
}

template <class K>
LinPartReport linear_part_homology(const GradedModule<K>& M, int homCutoff,
                                   int maxDeg = -1) {
  Resolution<K> res = resolve_steps(M, homCutoff + 1, maxDeg, /*lastKernel=*/false);
  LinPartReport rep;
  rep.level.resize(homCutoff + 1);
  for (int i = 1; i <= homCutoff; ++i) {
    if (i + 1 <= res.steps()) {
      rep.level[i] = linpart_level_full(res, i);
    } else if (res.terminated()) {
      // free modules vanish from the break point on
      rep.level[i].exact = true;
      rep.level[i].how = "computed";
    }
    if (!rep.level[i].nonzero && !rep.level[i].exact && i < res.steps() &&
        linpart_nonzero_by_cycle_witness(res, i)) {
      rep.level[i].nonzero = true;
      rep.level[i].how = "cycle-witness";
    }
    if (rep.level[i].nonzero) rep.lindLowerBound = i;
  }
  return rep;
}

// ---------------------------------------------------------------------
// Numeric Betti-splitting check for submodules N = N1 + N2 of one free
// module: beta_i(N) = beta_i(N1) + beta_i(N2) + beta_{i-1}(N1 cap N2).

template <class K>
std::vector<bool> betti_splitting_numeric(const Submodule<K>& N1, const Submodule<K>& N2,
                                          int homCutoff, int maxDeg = -1) {
  Submodule<K> N = N1.sumWith(N2);
  Submodule<K> I = N1.intersectWith(N2);
  BettiTable tN = resolve(present_submodule(N, "N", maxDeg), homCutoff, maxDeg);
  BettiTable t1 = resolve(present_submodule(N1, "N1", maxDeg), homCutoff, maxDeg);
  BettiTable t2 = resolve(present_submodule(N2, "N2", maxDeg), homCutoff, maxDeg);
  BettiTable tI =
      I.isZero() ? BettiTable{}
                 : resolve(present_submodule(I, "I", maxDeg), homCutoff, maxDeg);
  std::vector<bool> ok;
  for (int i = 0; i <= homCutoff; ++i)
    ok.push_back(tN.total(i) == t1.total(i) + t2.total(i) + (i ? tI.total(i - 1) : 0));
  return ok;
}

}  // namespace lindef

#endif
