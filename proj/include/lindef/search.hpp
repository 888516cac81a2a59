#ifndef LINDEF_SEARCH_HPP
#define LINDEF_SEARCH_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lindef/algebra.hpp"
#include "lindef/certify.hpp"
#include "lindef/ideal.hpp"

namespace lindef {

struct SearchBudget {
  long long maxCandidates = 1000000;  // (l1, l2) pairs examined
  double maxSeconds = 1800.0;
};

struct SearchConfig {
  std::vector<long long> coefficientPool = {-1, 1, 2, 3, 6};
  int maxSupport = 5;
  std::uint64_t rngSeed = 0;
  SearchBudget budget;
  std::string mode = "exhaustive-sparse";  // or "randomized"
  long long prefilterPrime = 0;            // 0 disables the mod-p prefilter
};

struct Candidate {
  long long index = 0;  // position in the deterministic pair stream
  std::string l1, l2;
  std::vector<std::string> K1, K2;
  int score = 0;  // passed checks in the verification report
};

namespace detail {

inline std::vector<long long> clean_pool(const std::vector<long long>& pool) {
  std::vector<long long> out;
  for (long long c : pool)
    if (c != 0 && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  if (out.empty()) throw std::invalid_argument("search: empty coefficient pool");
  return out;
}

// A tuple is canonical when no earlier-enumerated pool tuple spans the
// same line: the primitive leading-positive form either is the tuple
// itself or needs a coefficient outside the pool.
inline bool tuple_canonical(const std::vector<long long>& c, const std::vector<long long>& pool) {
  long long g = 0;
  for (long long x : c) g = std::gcd(g, x < 0 ? -x : x);
  std::vector<long long> p(c);
  for (long long& x : p) x /= g;
  if (p[0] < 0)
    for (long long& x : p) x = -x;
  if (p == c) return true;
  for (long long x : p)
    if (std::find(pool.begin(), pool.end(), x) == pool.end()) return true;
  return false;
}

// Support sets of each size in lexicographic order, sizes ascending.
inline bool next_combination(std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  for (int i = k - 1; i >= 0; --i) {
    if (s[i] < n - (k - i)) {
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

template <class K>
std::vector<K> sparse_vec(const std::vector<std::vector<K>>& varVecs, int dim1,
                          const std::vector<int>& supp, const std::vector<long long>& coef) {
  std::vector<K> v(dim1, K(0));
  for (size_t i = 0; i < supp.size(); ++i) {
    const std::vector<K>& b = varVecs[supp[i]];
    for (int c = 0; c < dim1; ++c)
      if (!is_zero(b[c])) v[c] += K(static_cast<long>(coef[i])) * b[c];
  }
  return v;
}

template <class K>
std::string sparse_str(const Algebra<K>& A, const std::vector<int>& supp,
                       const std::vector<long long>& coef) {
  std::string out;
  for (size_t i = 0; i < supp.size(); ++i) {
    long long c = coef[i];
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!out.empty()) {
      out += "+";
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += A.varNames()[supp[i]];
  }
  return out;
}

// Basis of {v : l1 * v = 0} in degree 1, as an rref the caller can
// test membership against.
template <class K>
RrefAccum<K> degree_one_annihilator(const Algebra<K>& A, const Elem<K>& l1) {
  int n1 = A.dim(1), n2 = A.dim(2);
  RrefAccum<K> rows(n1);  // row space of the multiplication matrix's kernel
  // Nullspace of the n2 x n1 multiplication matrix.
  RrefAccum<K> rr(n1 == 0 ? 1 : n1);
  std::vector<std::vector<K>> cols;
  for (int u = 0; u < n1; ++u) {
    Elem<K> e;
    e.deg = 1;
    e.v.assign(n1, K(0));
    e.v[u] = K(1);
    Elem<K> p = elem_mul(A, l1, e);
    cols.push_back(p.isZero() ? std::vector<K>(n2, K(0)) : p.v);
  }
  // Row-reduce the transpose: insert matrix rows, read the nullspace
  // off the free columns.
  RrefAccum<K> mat(n1);
  for (int r = 0; r < n2; ++r) {
    std::vector<K> row(n1, K(0));
    for (int u = 0; u < n1; ++u) row[u] = cols[u][r];
    mat.insert(std::move(row));
  }
  std::vector<char> isPiv(n1, 0);
  for (int c : mat.pivots()) isPiv[c] = 1;
  for (int c = 0; c < n1; ++c) {
    if (isPiv[c]) continue;
    std::vector<K> v(n1, K(0));
    v[c] = K(1);
    for (int r = 0; r < mat.rank(); ++r) {
      const std::vector<K>& w = mat.rowAt(r);
      if (!is_zero(w[c])) v[mat.pivots()[r]] = -w[c];
    }
    rows.insert(std::move(v));
  }
  return rows;
}

struct PairScan {
  long long l1Examined = 0;
  long long pairsExamined = 0;
  bool budgetExhausted = false;
};

// Streams canonical pool-sparse (l1, l2) pairs with l1*l2 = 0. The
// callback returns false to stop. Deterministic given the config.
template <class K>
PairScan scan_zero_divisor_pairs(
    const AlgebraPtr<K>& Aptr, const SearchConfig& cfg,
    const std::function<bool(long long, const std::vector<int>&, const std::vector<long long>&,
                             const std::vector<int>&, const std::vector<long long>&)>& fn) {
  const Algebra<K>& A = *Aptr;
  PairScan scan;
  if (A.dim(1) == 0 || A.truncation() < 2) return scan;
  std::vector<long long> pool = clean_pool(cfg.coefficientPool);
  int n = A.nvars(), dim1 = A.dim(1);
  int maxSupp = std::min(cfg.maxSupport, n);
  std::vector<std::vector<K>> varVecs;
  for (int v = 0; v < n; ++v) varVecs.push_back(elem_parse(A, A.varNames()[v]).v);
  auto start = std::chrono::steady_clock::now();
  auto overBudget = [&]() {
    if (scan.pairsExamined >= cfg.budget.maxCandidates) return true;
    double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return el >= cfg.budget.maxSeconds;
  };

  // All pool tuples over one fixed support, canonical only.
  auto forTuples = [&](int k, const std::function<bool(const std::vector<long long>&)>& emit) {
    std::vector<int> idx(k, 0);
    std::vector<long long> coef(k);
    for (;;) {
      for (int i = 0; i < k; ++i) coef[i] = pool[idx[i]];
      if (tuple_canonical(coef, pool) && !emit(coef)) return false;
      int i = k - 1;
      while (i >= 0 && idx[i] + 1 == static_cast<int>(pool.size())) idx[i--] = 0;
      if (i < 0) return true;
      ++idx[i];
    }
  };

  // Emits every canonical pool-sparse l2 in the annihilator of l1.
  auto emitL2 = [&](long long l1Index, const std::vector<int>& s1,
                    const std::vector<long long>& c1, const Elem<K>& l1) {
    RrefAccum<K> ker = degree_one_annihilator(A, l1);
    if (ker.rank() == 0) return true;
    for (int k2 = 1; k2 <= maxSupp; ++k2) {
      std::vector<int> s2(k2);
      std::iota(s2.begin(), s2.end(), 0);
      do {
        if (overBudget()) {
          scan.budgetExhausted = true;
          return false;
        }
        bool go = forTuples(k2, [&](const std::vector<long long>& c2) {
          std::vector<K> v = sparse_vec(varVecs, dim1, s2, c2);
          bool zero = true;
          for (const K& x : v)
            if (!is_zero(x)) {
              zero = false;
              break;
            }
          if (zero) return true;
          std::vector<K> red = v;
          if (ker.reduceInPlace(red) >= 0) return true;  // not in the annihilator
          if (overBudget()) {
            scan.budgetExhausted = true;
            return false;
          }
          ++scan.pairsExamined;
          return fn(l1Index, s1, c1, s2, c2);
        });
        if (!go) return false;
      } while (next_combination(s2, n));
    }
    return true;
  };

  auto tryL1 = [&](const std::vector<int>& s1, const std::vector<long long>& c1) {
    Elem<K> l1;
    l1.deg = 1;
    l1.v = sparse_vec(varVecs, dim1, s1, c1);
    bool zero = true;
    for (const K& x : l1.v)
      if (!is_zero(x)) {
        zero = false;
        break;
      }
    if (zero) return true;
    long long id = scan.l1Examined++;
    return emitL2(id, s1, c1, l1);
  };

  if (cfg.mode == "randomized") {
    std::mt19937_64 rng(cfg.rngSeed);
    while (!overBudget()) {
      int k = 1 + static_cast<int>(rng() % maxSupp);
      std::vector<int> s1;
      while (static_cast<int>(s1.size()) < k) {
        int v = static_cast<int>(rng() % n);
        if (std::find(s1.begin(), s1.end(), v) == s1.end()) s1.push_back(v);
      }
      std::sort(s1.begin(), s1.end());
      std::vector<long long> c1(k);
      for (int i = 0; i < k; ++i) c1[i] = pool[rng() % pool.size()];
      if (!tryL1(s1, c1)) break;
    }
    scan.budgetExhausted = scan.budgetExhausted || overBudget();
    return scan;
  }

  for (int k1 = 1; k1 <= maxSupp; ++k1) {
    std::vector<int> s1(k1);
    std::iota(s1.begin(), s1.end(), 0);
    do {
      if (overBudget()) {
        scan.budgetExhausted = true;
        return scan;
      }
      bool go = forTuples(k1, [&](const std::vector<long long>& c1) { return tryL1(s1, c1); });
      if (!go) return scan;
    } while (next_combination(s1, n));
  }
  return scan;
}

}  // namespace detail

// Materialized pair stream as parseable expressions, budget-capped.
template <class K>
std::vector<std::pair<std::string, std::string>> find_zero_divisor_pairs(const AlgebraPtr<K>& A,
                                                                         const SearchConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  detail::scan_zero_divisor_pairs<K>(
      A, cfg,
      [&](long long, const std::vector<int>& s1, const std::vector<long long>& c1,
          const std::vector<int>& s2, const std::vector<long long>& c2) {
        out.emplace_back(detail::sparse_str(*A, s1, c1), detail::sparse_str(*A, s2, c2));
        return true;
      });
  return out;
}

template <class K>
struct SearchOutcome {
  std::vector<Candidate> certified;   // ordered by pair index
  std::vector<Witness<K>> witnesses;  // parallel to certified
  long long l1Examined = 0;
  long long pairsExamined = 0;
  bool budgetExhausted = false;
};

// Derives K from the non-linear colon generators and keeps the pairs
// whose witness verifies over the ground field. A mirror algebra over a
// prime field turns on the discard-only prefilter; it never certifies.
template <class K>
SearchOutcome<K> search_witness(const AlgebraPtr<K>& A, const SearchConfig& cfg,
                                const AlgebraPtr<Fp>& mirror = nullptr,
                                std::ostream* progress = nullptr) {
  SearchOutcome<K> out;
  FreeModule<K> F = free_rank1(A);

  // Degree >= 2 minimal generators of (0) : l, or nothing when the
  // degree-one part is not the line spanned by the partner form.
  auto colonSplit = [&](const Elem<K>& l) -> std::optional<std::vector<std::string>> {
    Submodule<K> C = colon_by_element(Submodule<K>::zero(F), 1, l.v);
    std::vector<std::string> gens;
    int linear = 0;
    for (const auto& [d, v] : C.minGens()) {
      if (d == 1) {
        ++linear;
        continue;
      }
      Elem<K> g;
      g.deg = d;
      g.v = v;
      gens.push_back(elem_str(*A, g));
    }
    if (linear != 1 || gens.empty()) return std::nullopt;
    return gens;
  };

  detail::PairScan scan = detail::scan_zero_divisor_pairs<K>(
      A, cfg,
      [&](long long pairIndex, const std::vector<int>& s1, const std::vector<long long>& c1,
          const std::vector<int>& s2, const std::vector<long long>& c2) {
        std::string e1 = detail::sparse_str(*A, s1, c1);
        std::string e2 = detail::sparse_str(*A, s2, c2);
        Elem<K> l1 = elem_parse(*A, e1), l2 = elem_parse(*A, e2);
        auto K2 = colonSplit(l1);
        if (!K2) return true;
        auto K1 = colonSplit(l2);
        if (!K1) return true;
        if (cfg.prefilterPrime > 1 && mirror) {
          FpCtx::set(static_cast<std::uint64_t>(cfg.prefilterPrime));
          Witness<Fp> wp;
          wp.A = mirror;
          wp.name = "prefilter";
          wp.l1 = e1;
          wp.l2 = e2;
          wp.K1 = *K1;
          wp.K2 = *K2;
          wp.crossCutoff = 2;
          if (verify_witness(wp).verdict != "certified-not-absolutely-Koszul") return true;
        }
        Witness<K> w;
        w.A = A;
        w.name = A->label() + "-search";
        w.l1 = e1;
        w.l2 = e2;
        w.K1 = *K1;
        w.K2 = *K2;
        w.crossCutoff = 2;
        Report rep = verify_witness(w);
        int score = 0;
        for (const Check& c : rep.checks)
          if (c.status == "pass") ++score;
        if (progress)
          (*progress) << "pair " << pairIndex << ": " << e1 << " | " << e2 << " -> " << rep.verdict
                      << "\n";
        if (rep.verdict == "certified-not-absolutely-Koszul") {
          Candidate cand;
          cand.index = pairIndex;
          cand.l1 = e1;
          cand.l2 = e2;
          cand.K1 = *K1;
          cand.K2 = *K2;
          cand.score = score;
          out.certified.push_back(std::move(cand));
          out.witnesses.push_back(std::move(w));

        }
        return true;
      });
  out.l1Examined = scan.l1Examined;
  out.pairsExamined = scan.pairsExamined;
  out.budgetExhausted = scan.budgetExhausted;
  return out;
}

}  // namespace lindef

#endif
