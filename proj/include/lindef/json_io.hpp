#ifndef LINDEF_JSON_IO_HPP
#define LINDEF_JSON_IO_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lindef/certify.hpp"
#include "lindef/constructions.hpp"
#include "lindef/search.hpp"
#include "lindef/version.hpp"

namespace lindef {

using ojson = nlohmann::ordered_json;

// Algebra spec: {"builtin": name} or {"vars": [...], "relations": [...],
// "truncation": D, "label": ...}; either may add "quotient_linear": [forms].
template <class K>
AlgebraPtr<K> algebra_from_json(const ojson& j) {
  AlgebraPtr<K> A;
  if (j.contains("builtin")) {
    int trunc = j.value("truncation", -1);
    A = builtin_algebra<K>(j.at("builtin").get<std::string>(), trunc);
  } else {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<std::string> rels = j.value("relations", std::vector<std::string>{});
    int trunc = j.at("truncation").get<int>();
    std::string label = j.value("label", std::string("algebra"));
    A = make_presentation<K>(vars, rels, trunc, label);
  }
  if (j.contains("quotient_linear")) {
    std::vector<std::string> fs = j.at("quotient_linear").get<std::vector<std::string>>();
    A = quotient_by_linear_forms(A, fs, A->label() + "-quotient");
  }
  return A;
}

// Fixed key order so the spec hash is stable under key reordering.
inline ojson canonical_algebra_json(const ojson& j) {
  ojson out;
  if (j.contains("builtin")) {
    out["builtin"] = j.at("builtin");
    if (j.contains("truncation")) out["truncation"] = j.at("truncation");
  } else {
    out["vars"] = j.at("vars");
    out["relations"] = j.value("relations", ojson::array());
    out["truncation"] = j.at("truncation");
    if (j.contains("label")) out["label"] = j.at("label");
  }
  if (j.contains("quotient_linear")) out["quotient_linear"] = j.at("quotient_linear");
  return out;
}

inline std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Identifier-aware substitution; identifiers not in the map pass through.
inline std::string rename_identifiers(const std::string& src,
                                      const std::map<std::string, std::string>& ren) {
  if (ren.empty()) return src;
  std::string out;
  size_t i = 0;
  auto isIdent = [](char c, bool first) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
           (!first && c >= '0' && c <= '9');
  };
  while (i < src.size()) {
    if (isIdent(src[i], true)) {
      size_t b = i;
      while (i < src.size() && isIdent(src[i], false)) ++i;
      std::string id = src.substr(b, i - b);
      auto it = ren.find(id);
      out += (it == ren.end()) ? id : it->second;
    } else {
      out += src[i++];
    }
  }
  return out;
}

inline ojson claim_json(const ColonClaim& c) {
  ojson j;
  j["kind"] = c.kind;
  if (c.kind == "member") j["member"] = c.member;
  if (c.kind == "variables") j["vars"] = c.vars;
  return j;
}

inline ColonClaim claim_from_json(const ojson& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "member") return claim_member(j.at("member").get<std::string>());
  if (kind == "variables") return claim_variables(j.at("vars").get<std::vector<std::string>>());
  if (kind == "maximal") return claim_maximal();
  throw std::invalid_argument("unknown colon claim kind: " + kind);
}

inline ojson linear_cert_json(const LinearResolutionCert& c) {
  ojson j;
  j["mechanism"] = c.mechanism;
  if (c.mechanism == "linear-quotients") {
    ojson chain = ojson::array();
    for (const LinearQuotientStep& s : c.chain) {
      ojson e;
      e["gen"] = s.gen;
      e["colon"] = claim_json(s.colon);
      chain.push_back(e);
    }
    j["chain"] = chain;
  } else {
    j["annihilator"] = claim_json(c.annihilator);
  }
  return j;
}

inline LinearResolutionCert linear_cert_from_json(const ojson& j) {
  LinearResolutionCert c;
  c.mechanism = j.at("mechanism").get<std::string>();
  if (c.mechanism == "linear-quotients") {
    for (const ojson& e : j.at("chain"))
      c.chain.push_back({e.at("gen").get<std::string>(), claim_from_json(e.at("colon"))});
  } else {
    c.annihilator = claim_from_json(j.at("annihilator"));
  }
  return c;
}

inline ojson filtration_json(const KoszulFiltrationCert& f) {
  ojson j;
  ojson ideals = ojson::array();
  for (const FiltrationIdeal& I : f.ideals) {
    ojson e;
    e["name"] = I.name;
    e["gens"] = I.gens;
    ideals.push_back(e);
  }
  ojson steps = ojson::array();
  for (const FiltrationStep& s : f.steps) {
    ojson e;
    e["ideal"] = s.ideal;
    e["inside"] = s.inside;
    e["ext"] = s.ext;
    e["colon"] = s.colon;
    steps.push_back(e);
  }
  j["ideals"] = ideals;
  j["steps"] = steps;
  return j;
}

inline KoszulFiltrationCert filtration_from_json(const ojson& j) {
  KoszulFiltrationCert f;
  for (const ojson& e : j.at("ideals"))
    f.ideals.push_back(
        {e.at("name").get<std::string>(), e.at("gens").get<std::vector<std::string>>()});
  for (const ojson& e : j.at("steps"))
    f.steps.push_back({e.at("ideal").get<std::string>(), e.at("inside").get<std::string>(),
                       e.at("ext").get<std::string>(), e.at("colon").get<std::string>()});
  return f;
}

inline ojson lift_link_json(const LiftLink& l) {
  ojson j;
  j["kind"] = l.kind;
  if (l.kind == "hilbert-reduction") {
    j["family"] = l.family;
    j["p"] = l.p;
    j["q"] = l.q;
    j["stage"] = l.stage;
  } else {
    j["parent"] = l.parent;
    j["stage"] = l.stage;
    j["forms"] = l.forms;
    j["member"] = claim_json(l.member);
    if (l.filtration) j["filtration"] = filtration_json(*l.filtration);
  }
  return j;
}

inline LiftLink lift_link_from_json(const ojson& j) {
  LiftLink l;
  l.kind = j.at("kind").get<std::string>();
  if (l.kind == "hilbert-reduction") {
    l.family = j.at("family").get<std::string>();
    l.p = j.at("p").get<int>();
    l.q = j.at("q").get<int>();
    l.stage = j.at("stage").get<std::string>();
  } else if (l.kind == "member-quotient") {
    l.parent = j.at("parent").get<std::string>();
    l.stage = j.at("stage").get<std::string>();
    l.forms = j.at("forms").get<std::vector<std::string>>();
    l.member = claim_from_json(j.at("member"));
    if (j.contains("filtration")) l.filtration = filtration_from_json(j.at("filtration"));
  } else {
    throw std::invalid_argument("unknown lift link kind: " + l.kind);
  }
  return l;
}

template <class K>
struct LoadedWitness {
  bool matrix = false;
  Witness<K> scalar;
  MatrixWitness<K> mat;
};

// Loads either witness shape; "perm" (a permutation of 0..n-1) renames
// variable i to variable perm[i] in every expression of the witness
// body. Lift links describe fixed parent labelings and are not renamed.
template <class K>
LoadedWitness<K> witness_from_json(const ojson& j) {
  LoadedWitness<K> out;
  AlgebraPtr<K> A = algebra_from_json<K>(j.at("algebra"));
  std::map<std::string, std::string> ren;
  if (j.contains("perm")) {
    std::vector<int> perm = j.at("perm").get<std::vector<int>>();
    const std::vector<std::string>& names = A->varNames();
    if (perm.size() != names.size())
      throw std::invalid_argument("perm length does not match the variable count");
    std::vector<char> seen(perm.size(), 0);
    for (size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] < 0 || perm[i] >= static_cast<int>(perm.size()) || seen[perm[i]])
        throw std::invalid_argument("perm is not a permutation");
      seen[perm[i]] = 1;
      if (perm[i] != static_cast<int>(i)) ren[names[i]] = names[perm[i]];
    }
  }
  auto rn = [&](const std::string& s) { return rename_identifiers(s, ren); };
  auto rnList = [&](std::vector<std::string> v) {
    for (std::string& s : v) s = rn(s);
    return v;
  };
  auto rnCert = [&](LinearResolutionCert c) {
    for (LinearQuotientStep& s : c.chain) s.gen = rn(s.gen);
    if (c.annihilator.kind == "variables") c.annihilator.vars = rnList(c.annihilator.vars);
    for (LinearQuotientStep& s : c.chain)
      if (s.colon.kind == "variables") s.colon.vars = rnList(s.colon.vars);
    return c;
  };
  auto rnFilt = [&](KoszulFiltrationCert f) {
    for (FiltrationIdeal& I : f.ideals) I.gens = rnList(I.gens);
    for (FiltrationStep& s : f.steps) s.ext = rn(s.ext);
    return f;
  };
  std::string name = j.value("name", std::string("witness"));
  const ojson* certs = j.contains("certs") ? &j.at("certs") : nullptr;
  out.matrix = j.contains("phi1");
  if (out.matrix) {
    MatrixWitness<K>& w = out.mat;
    w.A = A;
    w.name = name;
    for (const ojson& row : j.at("phi1")) w.phi1.push_back(rnList(row.get<std::vector<std::string>>()));
    for (const ojson& row : j.at("phi2")) w.phi2.push_back(rnList(row.get<std::vector<std::string>>()));
    for (const ojson& g : j.at("K1")) w.K1.push_back(rnList(g.get<std::vector<std::string>>()));
    for (const ojson& g : j.at("K2")) w.K2.push_back(rnList(g.get<std::vector<std::string>>()));
    if (certs) {
      if (certs->contains("filtration")) w.filtration = rnFilt(filtration_from_json(certs->at("filtration")));
      if (certs->contains("K1")) w.K1cert = rnCert(linear_cert_from_json(certs->at("K1")));
      if (certs->contains("K2")) w.K2cert = rnCert(linear_cert_from_json(certs->at("K2")));
      if (certs->contains("L1")) w.L1cert = rnCert(linear_cert_from_json(certs->at("L1")));
      if (certs->contains("L2")) w.L2cert = rnCert(linear_cert_from_json(certs->at("L2")));
      w.crossCutoff = certs->value("cross_cutoff", 2);
    }
    if (j.contains("lift"))
      for (const ojson& l : j.at("lift")) w.lift.push_back(lift_link_from_json(l));
  } else {
    Witness<K>& w = out.scalar;
    w.A = A;
    w.name = name;
    w.l1 = rn(j.at("l1").get<std::string>());
    w.l2 = rn(j.at("l2").get<std::string>());
    w.K1 = rnList(j.at("K1").get<std::vector<std::string>>());
    w.K2 = rnList(j.at("K2").get<std::vector<std::string>>());
    if (certs) {
      if (certs->contains("filtration")) w.filtration = rnFilt(filtration_from_json(certs->at("filtration")));
      if (certs->contains("K1")) w.K1cert = rnCert(linear_cert_from_json(certs->at("K1")));
      if (certs->contains("K2")) w.K2cert = rnCert(linear_cert_from_json(certs->at("K2")));
      if (certs->contains("L1")) w.L1cert = rnCert(linear_cert_from_json(certs->at("L1")));
      if (certs->contains("L2")) w.L2cert = rnCert(linear_cert_from_json(certs->at("L2")));
      w.crossCutoff = certs->value("cross_cutoff", 2);
    }
    if (j.contains("lift"))
      for (const ojson& l : j.at("lift")) w.lift.push_back(lift_link_from_json(l));
  }
  return out;
}

template <class K>
ojson witness_json(const Witness<K>& w, const ojson& algebraSpec) {
  ojson j;
  j["schema"] = 1;
  j["name"] = w.name;
  j["algebra"] = canonical_algebra_json(algebraSpec);
  j["l1"] = w.l1;
  j["l2"] = w.l2;
  j["K1"] = w.K1;
  j["K2"] = w.K2;
  ojson certs;
  if (w.filtration) certs["filtration"] = filtration_json(*w.filtration);
  if (w.K1cert) certs["K1"] = linear_cert_json(*w.K1cert);
  if (w.K2cert) certs["K2"] = linear_cert_json(*w.K2cert);
  if (w.L1cert) certs["L1"] = linear_cert_json(*w.L1cert);
  if (w.L2cert) certs["L2"] = linear_cert_json(*w.L2cert);
  certs["cross_cutoff"] = w.crossCutoff;
  j["certs"] = certs;
  if (!w.lift.empty()) {
    ojson lift = ojson::array();
    for (const LiftLink& l : w.lift) lift.push_back(lift_link_json(l));
    j["lift"] = lift;
  }
  return j;
}

template <class K>
ojson matrix_witness_json(const MatrixWitness<K>& w, const ojson& algebraSpec) {
  ojson j;
  j["schema"] = 1;
  j["name"] = w.name;
  j["algebra"] = canonical_algebra_json(algebraSpec);
  j["phi1"] = w.phi1;
  j["phi2"] = w.phi2;
  j["K1"] = w.K1;
  j["K2"] = w.K2;
  ojson certs;
  if (w.filtration) certs["filtration"] = filtration_json(*w.filtration);
  if (w.K1cert) certs["K1"] = linear_cert_json(*w.K1cert);
  if (w.K2cert) certs["K2"] = linear_cert_json(*w.K2cert);
  if (w.L1cert) certs["L1"] = linear_cert_json(*w.L1cert);
  if (w.L2cert) certs["L2"] = linear_cert_json(*w.L2cert);
  certs["cross_cutoff"] = w.crossCutoff;
  j["certs"] = certs;
  if (!w.lift.empty()) {
    ojson lift = ojson::array();
    for (const LiftLink& l : w.lift) lift.push_back(lift_link_json(l));
    j["lift"] = lift;
  }
  return j;
}

inline ojson report_json(const Report& r) {
  ojson j;
  j["schema"] = 1;
  j["subject"] = r.subject;
  ojson checks = ojson::array();
  for (const Check& c : r.checks) {
    ojson e;
    e["name"] = c.name;
    e["status"] = c.status;
    e["evidence"] = c.evidence;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["verdict"] = r.verdict;
  if (!r.qualifier.empty()) j["qualifier"] = r.qualifier;
  return j;
}

inline ojson betti_json(const BettiTable& t) {
  ojson j;
  j["schema"] = 1;
  j["cutoff"] = t.homCutoff;
  j["exact_through"] = t.exactThrough;
  ojson entries = ojson::array();
  for (const auto& [key, val] : t.b) {
    ojson e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["beta"] = val;
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

inline SearchConfig search_config_from_json(const ojson& j) {
  SearchConfig cfg;
  if (j.contains("coefficient_pool"))
    cfg.coefficientPool = j.at("coefficient_pool").get<std::vector<long long>>();
  cfg.maxSupport = j.value("max_support", cfg.maxSupport);
  cfg.rngSeed = j.value("rng_seed", cfg.rngSeed);
  cfg.mode = j.value("mode", cfg.mode);
  cfg.prefilterPrime = j.value("prefilter_prime", cfg.prefilterPrime);
  if (j.contains("budget")) {
    cfg.budget.maxCandidates = j.at("budget").value("max_candidates", cfg.budget.maxCandidates);
    cfg.budget.maxSeconds = j.at("budget").value("max_seconds", cfg.budget.maxSeconds);
  }
  return cfg;
}

inline ojson search_config_json(const SearchConfig& cfg) {
  ojson j;
  j["coefficient_pool"] = cfg.coefficientPool;
  j["max_support"] = cfg.maxSupport;
  j["rng_seed"] = cfg.rngSeed;
  j["mode"] = cfg.mode;
  j["prefilter_prime"] = cfg.prefilterPrime;
  j["budget"] = {{"max_candidates", cfg.budget.maxCandidates},
                 {"max_seconds", cfg.budget.maxSeconds}};
  return j;
}

template <class K>
ojson search_outcome_json(const SearchOutcome<K>& out, const ojson& algebraSpec,
                          const SearchConfig& cfg) {
  ojson j;
  j["schema"] = 1;
  j["algebra"] = canonical_algebra_json(algebraSpec);
  j["config"] = search_config_json(cfg);
  ojson cs = ojson::array();
  for (const Candidate& c : out.certified) {
    ojson e;
    e["index"] = c.index;
    e["l1"] = c.l1;
    e["l2"] = c.l2;
    e["K1"] = c.K1;
    e["K2"] = c.K2;
    e["score"] = c.score;
    cs.push_back(e);
  }
  j["certified"] = cs;
  j["l1_examined"] = out.l1Examined;
  j["pairs_examined"] = out.pairsExamined;
  j["budget_exhausted"] = out.budgetExhausted;
  return j;
}

struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::string algebraHash;
  std::string arithmetic;
  double wallSeconds = 0.0;
  std::vector<std::string> verdicts;
};

inline ojson manifest_json(const RunManifest& m) {
  ojson j;
  j["schema"] = 1;
  j["command"] = m.command;
  j["arguments"] = m.arguments;
  j["algebra_hash"] = m.algebraHash;
  j["engine_version"] = kVersion;
  j["arithmetic"] = m.arithmetic;
  j["wall_seconds"] = m.wallSeconds;
  j["verdicts"] = m.verdicts;
  return j;
}

}  // namespace lindef

#endif
