// Certification layer: named checklists verifying witness data over the
// rationals. Koszul filtrations, linear-resolution certificates, Betti
// splittings, and reduction chains each contribute pass/fail checks to a
// Report whose verdict is only "certified" when every check passed.
#ifndef LINDEF_CERTIFY_HPP
#define LINDEF_CERTIFY_HPP

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lindef/algebra.hpp"
#include "lindef/constructions.hpp"
#include "lindef/ideal.hpp"
#include "lindef/resolution.hpp"

namespace lindef {

// ---------------------------------------------------------------------
// Reports: an ordered list of named checks, each pass/fail/not-applicable.

struct Check {
  std::string name;
  std::string status;  // "pass" | "fail" | "not-applicable"
  std::string evidence;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;
  std::string verdict;
  std::string qualifier;  // nonempty when equalities were degree-truncated

  bool pass(const std::string& name, bool ok, std::string evidence = "") {
    checks.push_back({name, ok ? "pass" : "fail", std::move(evidence)});
    return ok;
  }
  void na(const std::string& name, std::string evidence = "") {
    checks.push_back({name, "not-applicable", std::move(evidence)});
  }
  bool allPassed() const {
    for (const Check& c : checks)
      if (c.status == "fail") return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const Check& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c && c->status == "pass";
  }
  std::string text() const {
    std::ostringstream os;
    os << subject << "\n";
    for (const Check& c : checks) {
      os << "  [" << c.status << "] " << c.name;
      if (!c.evidence.empty()) os << ": " << c.evidence;
      os << "\n";
    }
    os << "verdict: " << verdict;
    if (!qualifier.empty()) os << " (" << qualifier << ")";
    os << "\n";
    return os.str();
  }
};

// ---------------------------------------------------------------------
// Certificate data. A colon claim names an ideal with an already
// certified 1-linear resolution: an explicit filtration member, a
// variable subset over a trusted strongly Koszul algebra, or the
// maximal ideal of a Koszul ambient.

struct ColonClaim {
  std::string kind;  // "member" | "variables" | "maximal"
  std::string member;
  std::vector<std::string> vars;
};

inline ColonClaim claim_member(std::string name) {
  return ColonClaim{"member", std::move(name), {}};
}
inline ColonClaim claim_variables(std::vector<std::string> vs) {
  return ColonClaim{"variables", "", std::move(vs)};
}
inline ColonClaim claim_maximal() { return ColonClaim{"maximal", "", {}}; }

struct FiltrationIdeal {
  std::string name;
  std::vector<std::string> gens;  // linear forms
};

// One cyclic extension: ideal = inside + (ext), inside : ext = colon.
struct FiltrationStep {
  std::string ideal, inside, ext, colon;
};

struct KoszulFiltrationCert {
  std::vector<FiltrationIdeal> ideals;
  std::vector<FiltrationStep> steps;
};

struct LinearQuotientStep {
  std::string gen;
  ColonClaim colon;
};

struct LinearResolutionCert {
  // "filtration-member": cyclic target, annihilator a named member.
  // "socle-shift": one copy of k in a single degree, annihilator maximal.
  // "linear-quotients": ordered chain with certified linear colons.
  std::string mechanism;
  ColonClaim annihilator;
  std::vector<LinearQuotientStep> chain;
};

// One stage of the chain connecting the witness ring to the ring the
// verdict is about. "hilbert-reduction" certifies an artinian reduction
// by comparing against the closed-form h-polynomial of the family;
// "member-quotient" certifies a further quotient by a 1-linear ideal.
struct LiftLink {
  std::string kind;    // "hilbert-reduction" | "member-quotient"
  std::string family;  // "segre" | "veronese"
  int p = 0, q = 0;
  std::string stage;   // builtin name of the ring this link produces
  std::string parent;  // builtin name being quotiented (member-quotient)
  std::vector<std::string> forms;
  ColonClaim member;
  std::optional<KoszulFiltrationCert> filtration;  // parent filtration
};

// ---------------------------------------------------------------------
// Context shared by the checks: the ambient algebra, its certified
// Koszulness (if any), and the verified filtration members by name.

template <class K>
struct CertContext {
  AlgebraPtr<K> A;
  bool ambientKoszul = false;
  std::string ambientHow;
  std::map<std::string, Submodule<K>> members;
};

template <class K>
CertContext<K> make_context(const AlgebraPtr<K>& A) {
  CertContext<K> ctx{A};
  if (A->stronglyKoszulTrusted) {
    ctx.ambientKoszul = true;
    ctx.ambientHow = "strongly-koszul-trusted";
  }
  return ctx;
}

inline std::string join_strs(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

// ---------------------------------------------------------------------
// Koszul filtration verification: every listed ideal is generated by
// linear forms, (0) and the maximal ideal appear, every nonzero member
// is reached by a step, and every step's sum and colon identity holds.

template <class K>
Report verify_koszul_filtration(const AlgebraPtr<K>& A, const KoszulFiltrationCert& cert,
                                CertContext<K>* out = nullptr) {
  Report rep;
  rep.subject = "koszul filtration over " + A->label();
  std::map<std::string, Submodule<K>> mem;
  bool linear = true, distinct = true;
  std::string badLinear, badName;
  for (const FiltrationIdeal& fi : cert.ideals) {
    if (mem.count(fi.name)) {
      distinct = false;
      badName = fi.name;
      continue;
    }
    for (const std::string& g : fi.gens) {
      Elem<K> e = elem_parse(A, g);
      if (e.deg != 1 || e.isZero()) {
        linear = false;
        badLinear = fi.name + ": " + g;
      }
    }
    mem.emplace(fi.name, ideal_parse(A, fi.gens));
  }
  rep.pass("ideal-names-distinct", distinct,
           distinct ? std::to_string(mem.size()) + " ideals" : "duplicate name " + badName);
  rep.pass("ideal-generators-linear", linear,
           linear ? "" : "nonlinear generator in " + badLinear);

  bool hasZero = false, hasMax = false;
  Submodule<K> mx = ideal_maximal(A);
  for (const auto& [n, I] : mem) {
    if (I.isZero()) hasZero = true;
    if (I.compare(mx).equal) hasMax = true;
  }
  rep.pass("zero-ideal-present", hasZero);
  rep.pass("maximal-ideal-present", hasMax);

  std::set<std::string> stepped;
  for (const FiltrationStep& st : cert.steps) {
    bool ok = true;
    std::string ev = st.ideal + " = " + st.inside + " + (" + st.ext + "), " + st.inside +
                     " : " + st.ext + " = " + st.colon;
    auto iI = mem.find(st.ideal), iJ = mem.find(st.inside), iC = mem.find(st.colon);
    if (iI == mem.end() || iJ == mem.end() || iC == mem.end()) {
      rep.pass("step-" + st.ideal, false, ev + "; unknown ideal name");
      continue;
    }
    Elem<K> x = elem_parse(A, st.ext);
    if (x.deg != 1 || x.isZero()) {
      rep.pass("step-" + st.ideal, false, ev + "; extension form is not linear");
      continue;
    }
    if (!iI->second.containsSub(iJ->second)) {
      ok = false;
      ev += "; " + st.inside + " is not contained in " + st.ideal;
    }
    Submodule<K> sum = iJ->second.sumWith(ideal_from_elems(A, {x}));
    if (ok && !iI->second.compare(sum).equal) {
      ok = false;
      ev += "; sum mismatch";
    }
    if (ok) {
      Submodule<K> col = colon_by_elem(iJ->second, x);
      if (!col.compare(iC->second).equal) {
        ok = false;
        ev += "; colon mismatch";
      }
    }
    rep.pass("step-" + st.ideal, ok, ev);
    if (ok) stepped.insert(st.ideal);
  }

  bool cover = true;
  std::string missing;
  for (const auto& [n, I] : mem)
    if (!I.isZero() && !stepped.count(n)) {
      cover = false;
      missing = n;
    }
  rep.pass("steps-cover-nonzero-ideals", cover,
           cover ? std::to_string(stepped.size()) + " steps" : "no step for " + missing);

  rep.verdict = rep.allPassed() ? "pass" : "fail";
  if (!A->artinian())
    rep.qualifier = "verified through truncation degree " + std::to_string(A->truncation());
  if (out && rep.verdict == "pass") {
    out->members = std::move(mem);
    out->ambientKoszul = true;
    if (out->ambientHow.empty()) out->ambientHow = "koszul-filtration";
  }
  return rep;
}

// ---------------------------------------------------------------------
// Colon claims resolve to a concrete ideal plus the justification that
// it has a 1-linear resolution.

template <class K>
struct ClaimIdeal {
  bool ok = false;
  Submodule<K> I;
  std::string why;
};

template <class K>
ClaimIdeal<K> resolve_colon_claim(const CertContext<K>& ctx, const ColonClaim& c) {
  ClaimIdeal<K> r;
  if (c.kind == "maximal") {
    if (!ctx.ambientKoszul) {
      r.why = "maximal-ideal claim needs a certified Koszul ambient";
      return r;
    }
    r.I = ideal_maximal(ctx.A);
    r.ok = true;
    r.why = "maximal ideal (" + ctx.ambientHow + ")";
  } else if (c.kind == "member") {
    auto it = ctx.members.find(c.member);
    if (it == ctx.members.end()) {
      r.why = "unknown filtration member " + c.member;
      return r;
    }
    r.I = it->second;
    r.ok = true;
    r.why = "filtration member " + c.member;
  } else if (c.kind == "variables") {
    if (!ctx.A->stronglyKoszulTrusted) {
      r.why = "variable-subset claim needs trusted strong Koszulness";
      return r;
    }
    const auto& names = ctx.A->varNames();
    for (const std::string& v : c.vars)
      if (std::find(names.begin(), names.end(), v) == names.end()) {
        r.why = "not a variable: " + v;
        return r;
      }
    r.I = ideal_parse(ctx.A, c.vars);
    r.ok = true;
    r.why = "subset of " + std::to_string(c.vars.size()) + " variables (strongly Koszul, trusted)";
  } else {
    r.why = "unknown claim kind " + c.kind;
  }
  return r;
}

// ---------------------------------------------------------------------
// Linear-resolution certificates. On success the target is certified
// d-linear, so its regularity equals the common generator degree d.

template <class K>
struct LinearCertResult {
  bool ok = false;
  int d = -1;
  std::string evidence;
};

template <class K>
LinearCertResult<K> check_linear_resolution_cert(const CertContext<K>& ctx,
                                                 const Submodule<K>& target,
                                                 const LinearResolutionCert& cert) {
  LinearCertResult<K> r;
  const FreeModule<K>& F = target.free();
  if (cert.mechanism == "filtration-member" || cert.mechanism == "socle-shift") {
    const auto& gens = target.minGens();
    if (gens.size() != 1) {
      r.evidence = "target is not cyclic (" + std::to_string(gens.size()) + " generators)";
      return r;
    }
    int d = gens[0].first;
    if (cert.mechanism == "socle-shift") {
      if (cert.annihilator.kind != "maximal") {
        r.evidence = "socle shift needs a maximal-ideal annihilator claim";
        return r;
      }
      for (int j = target.lo(); j <= target.hiStored(); ++j)
        if (target.dim(j) != (j == d ? 1 : 0)) {
          r.evidence = "target is not one copy of k in degree " + std::to_string(d);
          return r;
        }
    }
    ClaimIdeal<K> claim = resolve_colon_claim(ctx, cert.annihilator);
    if (!claim.ok) {
      r.evidence = claim.why;
      return r;
    }
    Submodule<K> ann = colon_by_element(Submodule<K>::zero(F), d, gens[0].second);
    auto cmp = ann.compare(claim.I);
    if (!cmp.equal) {
      r.evidence = "annihilator differs from " + claim.why;
      return r;
    }
    r.ok = true;
    r.d = d;
    r.evidence = "cyclic in degree " + std::to_string(d) + " with annihilator " + claim.why;
  } else if (cert.mechanism == "linear-quotients") {
    if (F.rank() != 1) {
      r.evidence = "linear-quotients certificates apply to ideals";
      return r;
    }
    std::vector<std::pair<int, std::vector<K>>> prefix;
    Submodule<K> P = Submodule<K>::zero(F);
    int d = -1;
    std::string whys;
    for (const LinearQuotientStep& st : cert.chain) {
      Elem<K> m = elem_parse(F.A, st.gen);
      if (m.deg < 0 || m.isZero()) {
        r.evidence = "zero chain generator " + st.gen;
        return r;
      }
      if (d < 0) d = m.deg;
      if (m.deg != d) {
        r.evidence = "chain generators of mixed degrees";
        return r;
      }
      ClaimIdeal<K> claim = resolve_colon_claim(ctx, st.colon);
      if (!claim.ok) {
        r.evidence = claim.why;
        return r;
      }
      Submodule<K> col = colon_by_element(P, m.deg, m.v);
      if (!col.compare(claim.I).equal) {
        r.evidence = "colon by " + st.gen + " differs from " + claim.why;
        return r;
      }
      whys += (whys.empty() ? "" : ", ") + claim.why;
      prefix.emplace_back(m.deg, m.v);
      P = Submodule<K>::close(F, prefix);
    }
    if (d < 0) {
      r.evidence = "empty chain";
      return r;
    }
    if (!P.compare(target).equal) {
      r.evidence = "chain does not generate the target";
      return r;
    }
    r.ok = true;
    r.d = d;
    r.evidence = "linear quotients chain of length " + std::to_string(cert.chain.size()) +
                 " in degree " + std::to_string(d) + "; colons: " + whys;
  } else {
    r.evidence = "unknown mechanism " + cert.mechanism;
  }
  return r;
}

// ---------------------------------------------------------------------
// Numeric splitting check against a quotient decomposition: a Betti
// splitting extending D inside N would force the listed additivity, so
// one failing row rules every such splitting out.

template <class K>
Report verify_quotient_splitting(const Submodule<K>& N, const Submodule<K>& D, int homCutoff,
                                 int maxDeg = -1) {
  Report rep;
  rep.subject = "quotient splitting check";
  bool cont = N.containsSub(D);
  rep.pass("submodule-containment", cont);
  if (!cont) {
    rep.verdict = "fail";
    return rep;
  }
  BettiTable tN = resolve(present_submodule(N, "N", maxDeg), homCutoff, maxDeg);
  BettiTable tD = resolve(present_submodule(D, "D", maxDeg), homCutoff, maxDeg);
  BettiTable tQ = resolve(present_quotient(N, D, "N/D", maxDeg), homCutoff, maxDeg);
  for (int i = 0; i <= homCutoff; ++i) {
    long long lhs = tN.total(i), rhs = tD.total(i) + tQ.total(i);
    rep.pass("betti-additivity-" + std::to_string(i), lhs == rhs,
             std::to_string(lhs) + " vs " + std::to_string(tD.total(i)) + " + " +
                 std::to_string(tQ.total(i)));
  }
  rep.verdict = rep.allPassed() ? "pass" : "fail";
  return rep;
}

// ---------------------------------------------------------------------
// Reduction chains.

template <class K>
void check_lift_links(Report& rep, const AlgebraPtr<K>& A, const std::vector<LiftLink>& links,
                      bool& hardFail) {
  (void)A;
  if (links.empty()) {
    rep.na("reduction-chain", "the witness ring is the ring the verdict is about");
    return;
  }
  for (const LiftLink& lk : links) {
    if (lk.kind == "hilbert-reduction") {
      AlgebraPtr<K> B = builtin_algebra<K>(lk.stage);
      HPolynomial want =
          lk.family == "segre" ? h_poly_segre(lk.p, lk.q) : h_poly_veronese(lk.p, lk.q);
      HPolynomial got;
      for (int d : hilbert(B)) got.h.push_back(d);
      got.trim();
      bool ok = B->artinian() && got == want;
      std::string hs;
      for (size_t i = 0; i < got.h.size(); ++i)
        hs += (i ? "," : "") + std::to_string(got.h[i]);
      hardFail |= !rep.pass("reduction-hilbert-" + lk.stage, ok,
                            ok ? "h = " + hs + " matches the " + lk.family + "(" +
                                     std::to_string(lk.p) + "," + std::to_string(lk.q) +
                                     ") h-polynomial, so the reduction is by a regular sequence"
                               : "h = " + hs + " does not match the closed form");
    } else if (lk.kind == "member-quotient") {
      AlgebraPtr<K> P = builtin_algebra<K>(lk.parent);
      CertContext<K> pctx = make_context(P);
      bool ok = true;
      std::string ev;
      if (lk.filtration) {
        Report fr = verify_koszul_filtration(P, *lk.filtration, &pctx);
        if (fr.verdict != "pass") {
          ok = false;
          ev = "parent filtration failed";
        }
      }
      if (ok) {
        ClaimIdeal<K> claim = resolve_colon_claim(pctx, lk.member);
        if (!claim.ok) {
          ok = false;
          ev = claim.why;
        } else {
          Submodule<K> Q = ideal_parse(P, lk.forms);
          if (!Q.compare(claim.I).equal) {
            ok = false;
            ev = "quotiented ideal differs from " + claim.why;
          } else {
            std::vector<int> hB = hilbert(builtin_algebra<K>(lk.stage));
            std::vector<int> hQ = hilbert(quotient_by_linear_forms(P, lk.forms, "lift-check"));
            if (hB != hQ) {
              ok = false;
              ev = "quotient Hilbert series differs from " + lk.stage;
            } else {
              ev = "(" + join_strs(lk.forms) + ") is " + claim.why + " in " + lk.parent +
                   ", and the quotient matches " + lk.stage;
            }
          }
        }
      }
      hardFail |= !rep.pass("reduction-member-" + lk.stage, ok, ev);
    } else {
      hardFail |= !rep.pass("reduction-" + lk.stage, false, "unknown link kind " + lk.kind);
    }
  }
}

// ---------------------------------------------------------------------
// Scalar witnesses: l1, l2 annihilating linear forms whose colons split
// off the listed nonlinear parts.

template <class K>
struct Witness {
  AlgebraPtr<K> A;
  std::string name;
  std::string l1, l2;
  std::vector<std::string> K1, K2;
  std::optional<KoszulFiltrationCert> filtration;
  std::optional<LinearResolutionCert> K1cert, K2cert, L1cert, L2cert;
  std::vector<LiftLink> lift;
  int crossCutoff = 2;
};

namespace detail {

inline std::string degree_list(const std::vector<int>& ds) {
  std::string s;
  for (int d : ds) s += (s.empty() ? "" : ",") + std::to_string(d);
  return s.empty() ? "-" : s;
}

// Certifies the intersection: zero, or a cert pins its linear degree.
template <class K>
int check_intersection(CertContext<K>& ctx, Report& rep, const std::string& tag,
                       const Submodule<K>& L, const std::optional<LinearResolutionCert>& cert,
                       bool& hardFail, bool& incon) {
  if (L.isZero()) {
    rep.pass("intersection-" + tag, true, "zero intersection");
    return -1;
  }
  if (!cert) {
    rep.na("intersection-" + tag, "nonzero intersection without a certificate");
    incon = true;
    return -2;
  }
  LinearCertResult<K> res = check_linear_resolution_cert(ctx, L, *cert);
  hardFail |= !rep.pass("intersection-" + tag, res.ok, res.evidence);
  return res.ok ? res.d : -2;
}

template <class K>
int check_part_cert(CertContext<K>& ctx, Report& rep, const std::string& tag,
                    const Submodule<K>& part, const std::optional<LinearResolutionCert>& cert,
                    bool& hardFail, bool& incon) {
  if (!cert) {
    rep.na(tag, "no linear-resolution certificate");
    incon = true;
    return -2;
  }
  LinearCertResult<K> res = check_linear_resolution_cert(ctx, part, *cert);
  hardFail |= !rep.pass(tag, res.ok, res.evidence);
  return res.ok ? res.d : -2;
}

// Betti splitting of sum = part1 + part2: direct sum, or every minimal
// generator degree of the intersection exceeds both certified
// regularities and the numeric additivity cross-check confirms.
template <class K>
void check_splitting(Report& rep, const std::string& tag, const Submodule<K>& part1, int reg1,
                     const Submodule<K>& part2, int reg2, const Submodule<K>& inter,
                     int crossCutoff, bool& hardFail, bool& incon) {
  if (inter.isZero()) {
    rep.pass(tag, true, "direct sum");
    return;
  }
  if (reg1 < 0 || reg2 < 0) {
    rep.na(tag, "missing regularity bound for a summand");
    incon = true;
    return;
  }
  std::vector<int> ds = inter.minGenDegrees();
  int lo = ds.empty() ? INT_MAX : *std::min_element(ds.begin(), ds.end());
  if (lo <= std::max(reg1, reg2)) {
    rep.na(tag, "intersection generator degree " + std::to_string(lo) +
                    " does not exceed the summand regularities " + std::to_string(reg1) + ", " +
                    std::to_string(reg2));
    incon = true;
    return;
  }
  std::vector<bool> ok = betti_splitting_numeric(part1, part2, crossCutoff);
  bool all = true;
  for (bool b : ok) all = all && b;
  hardFail |= !rep.pass(tag, all,
                        all ? "intersection generated in degree " + std::to_string(lo) +
                                  " > regularities " + std::to_string(reg1) + ", " +
                                  std::to_string(reg2) + "; additivity confirmed through step " +
                                  std::to_string(crossCutoff)
                            : "numeric additivity fails");
}

}  // namespace detail

template <class K>
Report verify_witness(const Witness<K>& w) {
  Report rep;
  rep.subject = "witness " + w.name + " over " + w.A->label();
  if (!w.A->artinian())
    rep.qualifier = "verified through truncation degree " + std::to_string(w.A->truncation());
  CertContext<K> ctx = make_context(w.A);
  bool hardFail = false, incon = false;

  if (w.filtration) {
    Report fr = verify_koszul_filtration(w.A, *w.filtration, &ctx);
    hardFail |= !rep.pass("ambient-koszul-filtration", fr.verdict == "pass",
                          std::to_string(fr.checks.size()) + " checks, verdict " + fr.verdict);
  }

  Elem<K> l1 = elem_parse(w.A, w.l1), l2 = elem_parse(w.A, w.l2);
  bool ok1 = l1.deg == 1 && !l1.isZero(), ok2 = l2.deg == 1 && !l2.isZero();
  rep.pass("l1-nonzero-linear", ok1, w.l1);
  rep.pass("l2-nonzero-linear", ok2, w.l2);
  if (!ok1 || !ok2) {
    rep.verdict = "refuted";
    return rep;
  }
  Elem<K> prod = elem_mul(w.A, l1, l2);
  hardFail |= !rep.pass("annihilating-pair", prod.isZero(),
                        prod.isZero() ? "l1*l2 = 0" : "l1*l2 != 0");

  Submodule<K> Z = Submodule<K>::zero(free_rank1<K>(w.A));
  Submodule<K> colon1 = colon_by_element(Z, 1, l1.v);
  Submodule<K> colon2 = colon_by_element(Z, 1, l2.v);
  Submodule<K> I1 = ideal_parse(w.A, w.K1), I2 = ideal_parse(w.A, w.K2);
  Submodule<K> P1 = ideal_from_elems(w.A, {l1}), P2 = ideal_from_elems(w.A, {l2});

  hardFail |= !rep.pass("colon-l1-decomposition", colon1.compare(I2.sumWith(P2)).equal,
                        "(0) : l1 vs K2 + (l2)");
  hardFail |= !rep.pass("colon-l2-decomposition", colon2.compare(I1.sumWith(P1)).equal,
                        "(0) : l2 vs K1 + (l1)");

  auto degCheck = [&](const std::string& tag, const Submodule<K>& I) {
    std::vector<int> ds = I.minGenDegrees();
    bool ok = !ds.empty();
    for (int d : ds) ok = ok && d >= 2;
    hardFail |= !rep.pass(tag, ok, "generator degrees " + detail::degree_list(ds));
  };
  degCheck("K1-generator-degrees", I1);
  degCheck("K2-generator-degrees", I2);

  Submodule<K> L1 = I2.intersectWith(P2), L2 = I1.intersectWith(P1);
  int dL1 = detail::check_intersection(ctx, rep, "colon-l1", L1, w.L1cert, hardFail, incon);
  int dL2 = detail::check_intersection(ctx, rep, "colon-l2", L2, w.L2cert, hardFail, incon);

  bool needReg = !L1.isZero() || !L2.isZero();
  int r = -1, dK1 = -1, dK2 = -1;
  if (!needReg) {
    rep.na("regularity-bound", "both decompositions are direct sums");
  } else {
    dK1 = detail::check_part_cert(ctx, rep, "K1-linear-resolution", I1, w.K1cert, hardFail, incon);
    dK2 = detail::check_part_cert(ctx, rep, "K2-linear-resolution", I2, w.K2cert, hardFail, incon);
    if (dK1 >= 0 && dK2 >= 0 && dL1 != -2 && dL2 != -2) {
      // Fixpoint of the syzygy induction t_i <= r + i for both (l1) and
      // (l2): the colon splits as K + (l), shifted by 1, so each level
      // is bounded by max{d_K, r, d_L - 1} + 1 at the previous level.
      r = std::max(2, std::max(dK1, dK2));
      if (dL1 >= 0) r = std::max(r, dL1 - 1);
      if (dL2 >= 0) r = std::max(r, dL2 - 1);
      auto base = [&](const std::string& tag, const Submodule<K>& colon) {
        std::vector<int> ds = colon.minGenDegrees();
        int t1 = 1;
        for (int d : ds) t1 = std::max(t1, d + 1);
        rep.pass(tag, t1 <= r + 1,
                 "t_0 = 1, t_1 = " + std::to_string(t1) + " within reg " + std::to_string(r));
      };
      base("regularity-base-l1", colon1);
      base("regularity-base-l2", colon2);
      hardFail |= !rep.pass("regularity-bound",
                            rep.passed("regularity-base-l1") && rep.passed("regularity-base-l2"),
                            "reg (l1), reg (l2) <= " + std::to_string(r) +
                                " by induction on syzygy degrees");
    } else {
      rep.na("regularity-bound", "missing certificate degrees");
      incon = true;
    }
  }
  detail::check_splitting(rep, "betti-splitting-colon-l1", I2, dK2 >= 0 ? dK2 : -1, P2, r, L1,
                          w.crossCutoff, hardFail, incon);
  detail::check_splitting(rep, "betti-splitting-colon-l2", I1, dK1 >= 0 ? dK1 : -1, P1, r, L2,
                          w.crossCutoff, hardFail, incon);

  check_lift_links(rep, w.A, w.lift, hardFail);

  rep.verdict = hardFail ? "refuted" : (incon ? "inconclusive" : "certified-not-absolutely-Koszul");
  return rep;
}

// ---------------------------------------------------------------------
// Matrix witnesses: a pair of composable matrices with zero products
// whose kernels split as the shifted image plus a listed module.

template <class K>
struct MatrixWitness {
  AlgebraPtr<K> A;
  std::string name;
  std::vector<std::vector<std::string>> phi1, phi2;  // row-major entries
  std::vector<std::vector<std::string>> K1, K2;      // module generators by component
  std::optional<KoszulFiltrationCert> filtration;
  std::optional<LinearResolutionCert> K1cert, K2cert, L1cert, L2cert;
  std::vector<LiftLink> lift;
  int crossCutoff = 2;
};

namespace detail {

template <class K>
std::vector<std::vector<Elem<K>>> parse_matrix_columns(const AlgebraPtr<K>& A,
                                                       const std::vector<std::vector<std::string>>& M) {
  size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  std::vector<std::vector<Elem<K>>> cs(cols, std::vector<Elem<K>>(rows));
  for (size_t r = 0; r < rows; ++r) {
    if (M[r].size() != cols) throw std::invalid_argument("ragged matrix");
    for (size_t c = 0; c < cols; ++c) cs[c][r] = elem_parse(A, M[r][c]);
  }
  return cs;
}

template <class K>
void elem_acc(Elem<K>& a, const Elem<K>& b) {
  if (b.deg < 0) return;
  if (a.deg < 0) {
    a = b;
    return;
  }
  if (a.deg != b.deg) throw std::invalid_argument("inhomogeneous sum");
  for (size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
}

// Product by columns: (MN) col c = sum_k M col k scaled by N[k][c].
template <class K>
bool matrix_product_zero(const AlgebraPtr<K>& A, const std::vector<std::vector<Elem<K>>>& Mcols,
                         const std::vector<std::vector<Elem<K>>>& Ncols) {
  for (const auto& nc : Ncols) {
    if (nc.size() != Mcols.size()) throw std::invalid_argument("matrix shapes do not compose");
    std::vector<Elem<K>> out(Mcols.empty() ? 0 : Mcols[0].size());
    for (size_t k = 0; k < nc.size(); ++k)
      for (size_t r = 0; r < out.size(); ++r)
        elem_acc(out[r], elem_mul(A, Mcols[k][r], nc[k]));
    for (const Elem<K>& e : out)
      if (e.deg >= 0 && !e.isZero()) return false;
  }
  return true;
}

template <class K>
std::vector<int> column_degrees(const FreeModule<K>& Fto,
                                const std::vector<std::vector<Elem<K>>>& cols) {
  std::vector<int> ds;
  for (const auto& col : cols) {
    int cd = -1;
    for (size_t t = 0; t < col.size(); ++t)
      if (col[t].deg >= 0) cd = std::max(cd, col[t].deg + Fto.gdeg[t]);
    if (cd < 0) throw std::invalid_argument("zero matrix column");
    for (size_t t = 0; t < col.size(); ++t)
      if (col[t].deg >= 0 && col[t].deg + Fto.gdeg[t] != cd)
        throw std::invalid_argument("non-homogeneous matrix column");
    ds.push_back(cd);
  }
  return ds;
}

template <class K>
std::pair<int, std::vector<K>> module_elem(const FreeModule<K>& F,
                                           const std::vector<std::string>& comps) {
  if (static_cast<int>(comps.size()) != F.rank())
    throw std::invalid_argument("component count differs from the module rank");
  int d = -1;
  std::vector<Elem<K>> es(comps.size());
  for (size_t t = 0; t < comps.size(); ++t) {
    es[t] = elem_parse(F.A, comps[t]);
    if (es[t].deg >= 0) d = std::max(d, es[t].deg + F.gdeg[t]);
  }
  if (d < 0) throw std::invalid_argument("zero module generator");
  std::vector<K> v(F.pieceDim(d), K(0));
  for (size_t t = 0; t < comps.size(); ++t) {
    if (es[t].deg < 0) continue;
    if (es[t].deg + F.gdeg[t] != d)
      throw std::invalid_argument("non-homogeneous module generator");
    int o = F.offset(static_cast<int>(t), d);
    for (size_t s = 0; s < es[t].v.size(); ++s) v[o + s] = es[t].v[s];
  }
  return {d, std::move(v)};
}

template <class K>
Submodule<K> module_span(const FreeModule<K>& F, const std::vector<std::vector<std::string>>& gens) {
  std::vector<std::pair<int, std::vector<K>>> gs;
  for (const auto& g : gens) gs.push_back(module_elem(F, g));
  if (gs.empty()) return Submodule<K>::zero(F);
  return Submodule<K>::close(F, gs);
}

inline void betti_row_tops(const BettiTable& t, int i, int& lo, int& hi) {
  lo = INT_MAX;
  hi = INT_MIN;
  for (const auto& [ij, c] : t.b)
    if (ij.first == i && c > 0) {
      lo = std::min(lo, ij.second);
      hi = std::max(hi, ij.second);
    }
}

}  // namespace detail

template <class K>
Report verify_matrix_witness(const MatrixWitness<K>& w) {
  Report rep;
  rep.subject = "matrix witness " + w.name + " over " + w.A->label();
  if (!w.A->artinian())
    rep.qualifier = "verified through truncation degree " + std::to_string(w.A->truncation());
  CertContext<K> ctx = make_context(w.A);
  bool hardFail = false, incon = false;

  if (w.filtration) {
    Report fr = verify_koszul_filtration(w.A, *w.filtration, &ctx);
    hardFail |= !rep.pass("ambient-koszul-filtration", fr.verdict == "pass",
                          std::to_string(fr.checks.size()) + " checks, verdict " + fr.verdict);
  }

  auto c1 = detail::parse_matrix_columns(w.A, w.phi1);
  auto c2 = detail::parse_matrix_columns(w.A, w.phi2);
  hardFail |= !rep.pass("composition-phi1-phi2", detail::matrix_product_zero(w.A, c1, c2));
  hardFail |= !rep.pass("composition-phi2-phi1", detail::matrix_product_zero(w.A, c2, c1));

  // Free modules: phi1 lands in degree-0 generators; each further source
  // takes its generator degrees from the column degrees of the map in.
  FreeModule<K> F0{w.A, std::vector<int>(w.phi1.size(), 0)};
  FreeModule<K> F1{w.A, detail::column_degrees(F0, c1)};
  if (w.phi2.size() != static_cast<size_t>(F1.rank()))
    throw std::invalid_argument("phi2 rows differ from phi1 columns");
  FreeModule<K> F2{w.A, detail::column_degrees(F1, c2)};
  FreeModule<K> F3{w.A, detail::column_degrees(F2, c1)};

  Submodule<K> M1 = submodule_from_columns(F0, c1);
  Submodule<K> M2 = submodule_from_columns(F1, c2);
  Submodule<K> M1s = submodule_from_columns(F2, c1);

  // Nonlinear first syzygy: some minimal relation degree exceeds the top
  // generator degree by at least 2.
  int t01 = 0, t11 = 0, t02 = 0, t12 = 0;
  {
    BettiTable b1 = resolve(present_submodule(M1, "M1"), 1);
    BettiTable b2 = resolve(present_submodule(M2, "M2"), 1);
    int lo, hi;
    detail::betti_row_tops(b1, 0, lo, t01);
    detail::betti_row_tops(b1, 1, lo, t11);
    detail::betti_row_tops(b2, 0, lo, t02);
    detail::betti_row_tops(b2, 1, lo, t12);
    hardFail |= !rep.pass("M1-nonlinear-syzygy", t11 > t01 + 1,
                          "generators through degree " + std::to_string(t01) +
                              ", relations through degree " + std::to_string(t11));
    hardFail |= !rep.pass("M2-nonlinear-syzygy", t12 > t02 + 1,
                          "generators through degree " + std::to_string(t02) +
                              ", relations through degree " + std::to_string(t12));
  }

  auto colsVecs = [&](const FreeModule<K>& Fto, const std::vector<std::vector<Elem<K>>>& cs) {
    std::vector<int> ds = detail::column_degrees(Fto, cs);
    std::vector<std::vector<K>> vs;
    for (size_t j = 0; j < cs.size(); ++j) {
      std::vector<K> v(Fto.pieceDim(ds[j]), K(0));
      for (size_t t = 0; t < cs[j].size(); ++t) {
        if (cs[j][t].deg < 0) continue;
        int o = Fto.offset(static_cast<int>(t), ds[j]);
        for (size_t s = 0; s < cs[j][t].v.size(); ++s) v[o + s] = cs[j][t].v[s];
      }
      vs.push_back(std::move(v));
    }
    return vs;
  };

  Submodule<K> Ker1 = Submodule<K>::kernelOfMap(F1, F0, colsVecs(F0, c1));
  Submodule<K> Ker2 = Submodule<K>::kernelOfMap(F2, F1, colsVecs(F1, c2));
  Submodule<K> K2sub = detail::module_span(F1, w.K2);
  Submodule<K> K1sub = detail::module_span(F2, w.K1);

  hardFail |= !rep.pass("kernel-phi1-decomposition", Ker1.compare(M2.sumWith(K2sub)).equal,
                        "ker phi1 vs im phi2 + K2");
  hardFail |= !rep.pass("kernel-phi2-decomposition", Ker2.compare(M1s.sumWith(K1sub)).equal,
                        "ker phi2 vs shifted im phi1 + K1");

  auto degCheck = [&](const std::string& tag, const Submodule<K>& S, int t0) {
    std::vector<int> ds = S.minGenDegrees();
    bool ok = !ds.empty();
    for (int d : ds) ok = ok && d >= t0 + 2;
    hardFail |= !rep.pass(tag, ok, "generator degrees " + detail::degree_list(ds));
  };
  degCheck("K1-generator-degrees", K1sub, t02);
  degCheck("K2-generator-degrees", K2sub, t01);

  Submodule<K> L1 = M2.intersectWith(K2sub), L2 = M1s.intersectWith(K1sub);
  int dL1 = detail::check_intersection(ctx, rep, "kernel-phi1", L1, w.L1cert, hardFail, incon);
  int dL2 = detail::check_intersection(ctx, rep, "kernel-phi2", L2, w.L2cert, hardFail, incon);

  bool needReg = !L1.isZero() || !L2.isZero();
  int R1 = -1, R2 = -1, regShifted = -1, dK1 = -1, dK2 = -1;
  if (!needReg) {
    rep.na("regularity-bound", "both decompositions are direct sums");
  } else {
    dK1 = detail::check_part_cert(ctx, rep, "K1-linear-resolution", K1sub, w.K1cert, hardFail,
                                  incon);
    dK2 = detail::check_part_cert(ctx, rep, "K2-linear-resolution", K2sub, w.K2cert, hardFail,
                                  incon);
    if (dK1 >= 0 && dK2 >= 0 && dL1 != -2 && dL2 != -2) {
      // Fixpoint of the syzygy induction through the kernel splittings;
      // the shifted image couples the two bounds, so they may differ by
      // at most one.
      R1 = std::max(t01, t11 - 1);
      R1 = std::max(R1, dK2 - 1);
      if (dL1 >= 0) R1 = std::max(R1, dL1 - 2);
      R2 = std::max(t02, t12 - 1);
      R2 = std::max(R2, dK1 - 1);
      if (dL2 >= 0) R2 = std::max(R2, dL2 - 2);
      hardFail |= !rep.pass("regularity-bound", std::abs(R1 - R2) <= 1,
                            "reg M1 <= " + std::to_string(R1) + ", reg M2 <= " +
                                std::to_string(R2) + " by induction on syzygy degrees");
      int shift = 0;
      for (int d : M1s.minGenDegrees()) shift = std::max(shift, d - t01);
      regShifted = R1 + shift;
    } else {
      rep.na("regularity-bound", "missing certificate degrees");
      incon = true;
    }
  }
  detail::check_splitting(rep, "betti-splitting-kernel-phi1", M2, R2, K2sub, dK2 >= 0 ? dK2 : -1,
                          L1, w.crossCutoff, hardFail, incon);
  detail::check_splitting(rep, "betti-splitting-kernel-phi2", M1s, regShifted, K1sub,
                          dK1 >= 0 ? dK1 : -1, L2, w.crossCutoff, hardFail, incon);

  check_lift_links(rep, w.A, w.lift, hardFail);

  rep.verdict = hardFail ? "refuted" : (incon ? "inconclusive" : "certified-not-absolutely-Koszul");
  return rep;
}

// ---------------------------------------------------------------------
// Corroboration of the nonlinearity conclusion: the homology of the
// linear part of the resolution of each side is nonzero at level 1 by
// direct computation, and at higher levels either directly or because
// the certified kernel splitting maps the previous level in. The
// splitting presents each syzygy as the other side's module plus a
// summand with linear resolution, possibly glued along an intersection
// with linear resolution; the comparison of linear parts then embeds
// H_{i-1} of the other side into H_i, so nonzero homology propagates
// upward from the computed base on both sides.

template <class K>
Report corroborate_linear_part_pair(const std::string& subject, const GradedModule<K>& M1,
                                    const GradedModule<K>& M2, bool splittingsCertified, int upTo,
                                    int honest1, int maxDeg = -1) {
  Report rep;
  rep.subject = subject;
  honest1 = std::max(1, std::min(honest1, upTo));
  LinPartReport lp1 = linear_part_homology(M1, honest1, maxDeg);
  LinPartReport lp2 = linear_part_homology(M2, 1, maxDeg);

  auto level = [&](const LinPartReport& lp, int i) -> const LinPartLevel* {
    if (i < 1 || i >= static_cast<int>(lp.level.size())) return nullptr;
    return &lp.level[i];
  };
  auto describe = [](const LinPartLevel& lv) {
    return lv.how == "cycle-witness"
               ? std::string("nonzero by an explicit surviving cycle")
               : "dim " + std::to_string(lv.totalDim()) + " (computed)";
  };

  const LinPartLevel* a1 = level(lp1, 1);
  const LinPartLevel* b1 = level(lp2, 1);
  bool base1 = a1 && a1->nonzero;
  bool base2 = b1 && b1->nonzero;
  rep.pass("nonlinear-level-1", base1, a1 && base1 ? describe(*a1) : "no nonzero class found");
  rep.pass("other-side-level-1", base2, b1 && base2 ? describe(*b1) : "no nonzero class found");

  bool fail = false, unknown = false;
  for (int i = 2; i <= upTo; ++i) {
    const LinPartLevel* lv = level(lp1, i);
    if (lv && lv->nonzero) {
      rep.pass("nonlinear-level-" + std::to_string(i), true, describe(*lv));
    } else if (lv && lv->exact && !lv->nonzero) {
      rep.pass("nonlinear-level-" + std::to_string(i), false, "linear-part homology vanishes");
      fail = true;
    } else if (base1 && base2 && splittingsCertified) {
      rep.pass("nonlinear-level-" + std::to_string(i), true,
               "nonzero by the kernel-splitting comparison from level " + std::to_string(i - 1));
    } else {
      rep.na("nonlinear-level-" + std::to_string(i),
             "not computed and no certified splitting to propagate along");
      unknown = true;
    }
  }
  fail |= !base1 || !base2;
  rep.verdict = fail ? "fail" : (unknown ? "inconclusive" : "pass");
  return rep;
}

template <class K>
Report corroborate_linear_part(const Witness<K>& w, const Report& wrep, int upTo = 4,
                               int honest1 = 1, int maxDeg = -1) {
  if (wrep.verdict != "certified-not-absolutely-Koszul") {
    Report rep;
    rep.subject = "linear-part corroboration for " + w.name;
    rep.na("witness-certified", "verdict was " + wrep.verdict);
    rep.verdict = "inconclusive";
    return rep;
  }
  Elem<K> l1 = elem_parse(w.A, w.l1), l2 = elem_parse(w.A, w.l2);
  GradedModule<K> M1 = present_ideal(ideal_from_elems(w.A, {l1}), "(l1)", maxDeg);
  GradedModule<K> M2 = present_ideal(ideal_from_elems(w.A, {l2}), "(l2)", maxDeg);
  bool split = wrep.passed("betti-splitting-colon-l1") && wrep.passed("betti-splitting-colon-l2");
  return corroborate_linear_part_pair("linear-part corroboration for " + w.name, M1, M2, split,
                                      upTo, honest1, maxDeg);
}

template <class K>
Report corroborate_linear_part(const MatrixWitness<K>& w, const Report& wrep, int upTo = 4,
                               int honest1 = 1, int maxDeg = -1) {
  if (wrep.verdict != "certified-not-absolutely-Koszul") {
    Report rep;
    rep.subject = "linear-part corroboration for " + w.name;
    rep.na("witness-certified", "verdict was " + wrep.verdict);
    rep.verdict = "inconclusive";
    return rep;
  }
  auto c1 = detail::parse_matrix_columns(w.A, w.phi1);
  auto c2 = detail::parse_matrix_columns(w.A, w.phi2);
  FreeModule<K> F0{w.A, std::vector<int>(w.phi1.size(), 0)};
  FreeModule<K> F1{w.A, detail::column_degrees(F0, c1)};
  GradedModule<K> M1 = present_submodule(submodule_from_columns(F0, c1), "im phi1", maxDeg);
  GradedModule<K> M2 = present_submodule(submodule_from_columns(F1, c2), "im phi2", maxDeg);
  bool split =
      wrep.passed("betti-splitting-kernel-phi1") && wrep.passed("betti-splitting-kernel-phi2");
  return corroborate_linear_part_pair("linear-part corroboration for " + w.name, M1, M2, split,
                                      upTo, honest1, maxDeg);
}

}  // namespace lindef

#endif
