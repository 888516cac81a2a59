#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lindef/json_io.hpp"
#include "lindef/scalar.hpp"
#include "lindef/search.hpp"

namespace fs = std::filesystem;
using namespace lindef;

namespace {

struct CommonOpts {
  std::string builtin;
  std::string algebraFile;
  std::string witnessFile;
  int cutoff = 3;
  int truncation = -1;
  long long modP = 0;
  std::uint64_t seed = 0;
  std::string outDir;
  std::string format = "text";
  std::string dataDir;
};

ojson algebra_spec(const CommonOpts& o) {
  ojson spec;
  if (!o.builtin.empty()) {
    spec["builtin"] = o.builtin;
    if (o.truncation >= 0) spec["truncation"] = o.truncation;
  } else if (!o.algebraFile.empty()) {
    std::ifstream in(o.algebraFile);
    if (!in.good()) throw std::runtime_error("cannot open algebra file: " + o.algebraFile);
    spec = ojson::parse(in);
    if (o.truncation >= 0) spec["truncation"] = o.truncation;
  } else {
    throw CLI::ValidationError("--builtin or --algebra is required");
  }
  return spec;
}

std::string data_dir(const CommonOpts& o) {
  if (!o.dataDir.empty()) return o.dataDir;
  for (const char* c : {"data/witnesses", "../data/witnesses"})
    if (fs::exists(c)) return c;
  return "data/witnesses";
}

void write_outputs(const CommonOpts& o, const std::string& stem, const ojson& report,
                   const std::string& text, const RunManifest& m) {
  if (o.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
  if (!o.outDir.empty()) {
    fs::create_directories(o.outDir);
    std::ofstream(fs::path(o.outDir) / (stem + ".json")) << report.dump(2) << "\n";
    std::ofstream(fs::path(o.outDir) / (stem + ".txt")) << text;
    std::ofstream(fs::path(o.outDir) / (stem + "-manifest.json")) << manifest_json(m).dump(2)
                                                                  << "\n";
  }
}

std::string joined(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

HPolynomial hp_of(const std::vector<int>& v) {
  HPolynomial h;
  for (int x : v) h.h.push_back(x);
  h.trim();
  return h;
}

std::string obstruction_detail(const ObstructionReport& ob) {
  std::string d = "g(-1) = " + ob.gAtMinusOne.get_str() + " after removing " +
                  std::to_string(ob.sFactor) + " factor(s) of 1+t";
  if (ob.firstNegativeIndex)
    d += "; complete-intersection series goes negative at index " +
         std::to_string(*ob.firstNegativeIndex);
  d += ob.nonCompleteIntersection ? "; not a complete intersection" : "";
  return d;
}

// Expected closed-form h-polynomial per builtin family stage, if any.
std::optional<HPolynomial> closed_form_h(const std::string& name) {
  if (name == "s36") return h_poly_segre(3, 6);
  if (name == "s45") return h_poly_segre(4, 5);
  if (name == "v72") return h_poly_veronese(7, 2);
  if (name == "v53") return h_poly_veronese(5, 3);
  if (name == "v54") return h_poly_veronese(5, 4);
  if (name == "v45") return h_poly_veronese(4, 5);
  return std::nullopt;
}

template <class K>
RunManifest make_manifest(const std::string& cmd, const std::vector<std::string>& args,
                          const ojson& spec) {
  RunManifest m;
  m.command = cmd;
  m.arguments = args;
  m.algebraHash = fnv1a_hex(canonical_algebra_json(spec).dump());
  m.arithmetic = FieldInfo<K>::name();
  return m;
}

template <class K>
int run_field_cmds(const std::string& cmd, const CommonOpts& o,
                   const std::vector<std::string>& exprs) {
  auto t0 = std::chrono::steady_clock::now();
  ojson spec = algebra_spec(o);
  AlgebraPtr<K> A = algebra_from_json<K>(spec);
  RunManifest m = make_manifest<K>(cmd, exprs, spec);
  auto finish = [&](const ojson& rep, const std::string& text) {
    m.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_outputs(o, cmd, rep, text, m);
  };

  if (cmd == "build") {
    ojson rep;
    rep["schema"] = 1;
    rep["label"] = A->label();
    rep["field"] = FieldInfo<K>::name();
    rep["vars"] = A->varNames();
    rep["hilbert"] = A->hilbert();
    rep["truncation"] = A->truncation();
    rep["artinian"] = A->artinian();
    std::string text = A->label() + " over " + FieldInfo<K>::name() + "\n  vars:";
    for (const auto& v : A->varNames()) text += " " + v;
    text += "\n  hilbert: " + joined(A->hilbert()) + "\n  truncation: " +
            std::to_string(A->truncation()) + (A->artinian() ? " (artinian)" : "") + "\n";
    finish(rep, text);
    return 0;
  }
  if (cmd == "hilbert") {
    ojson rep;
    rep["schema"] = 1;
    rep["hilbert"] = A->hilbert();
    finish(rep, joined(A->hilbert()) + "\n");
    return 0;
  }
  if (cmd == "obstruction") {
    HPolynomial h = hp_of(A->hilbert());
    ObstructionReport ob = br_obstruction(h, A->nvars());
    std::string detail = obstruction_detail(ob);
    ojson rep;
    rep["schema"] = 1;
    rep["h"] = h.h;
    rep["h_at_minus_one"] = h.evalMinusOne();
    rep["verdict"] = ob.verdict;
    rep["detail"] = detail;
    finish(rep, "h = " + h.str() + ", h(-1) = " + std::to_string(h.evalMinusOne()) + "\n" +
                    ob.verdict + ": " + detail + "\n");
    return ob.verdict == "BR-obstructed" ? 0 : 1;
  }
  if (cmd == "colon") {
    if (exprs.empty()) throw CLI::ValidationError("colon needs an element expression");
    Elem<K> f = elem_parse(A, exprs[0]);
    std::vector<std::string> gens(exprs.begin() + 1, exprs.end());
    Submodule<K> I = gens.empty() ? Submodule<K>::zero(free_rank1<K>(A)) : ideal_parse(A, gens);
    Submodule<K> C = colon_by_elem(I, f);
    ojson rep;
    rep["schema"] = 1;
    ojson gl = ojson::array();
    std::string text = "(" + (gens.empty() ? std::string("0") : join_strs(gens)) + ") : (" +
                       exprs[0] + ") minimal generators:\n";
    for (const auto& [d, v] : C.minGens()) {
      Elem<K> g;
      g.deg = d;
      g.v = v;
      std::string s = elem_str(*A, g);
      gl.push_back({{"degree", d}, {"expr", s}});
      text += "  [" + std::to_string(d) + "] " + s + "\n";
    }
    rep["generators"] = gl;
    finish(rep, text);
    return 0;
  }
  if (cmd == "resolve" || cmd == "linpart") {
    GradedModule<K> M = exprs.empty() ? present_residue_field<K>(A)
                                      : present_ideal<K>(ideal_parse(A, exprs), "ideal");
    if (cmd == "resolve") {
      BettiTable t = resolve(M, o.cutoff);
      finish(betti_json(t), t.text());
      return 0;
    }
    LinPartReport lp = linear_part_homology(M, o.cutoff);
    ojson rep;
    rep["schema"] = 1;
    ojson lv = ojson::array();
    std::string text = "linear-part homology of " + M.name + "\n";
    for (size_t i = 1; i < lp.level.size(); ++i) {
      lv.push_back({{"i", i},
                    {"dim", lp.level[i].totalDim()},
                    {"exact", lp.level[i].exact},
                    {"how", lp.level[i].how}});
      text += "  H_" + std::to_string(i) + ": dim " + std::to_string(lp.level[i].totalDim()) +
              (lp.level[i].exact ? "" : " (lower bound)") + " [" + lp.level[i].how + "]\n";
    }
    rep["levels"] = lv;
    rep["lind_lower_bound"] = lp.lindLowerBound;
    text += "  linearity defect lower bound: " + std::to_string(lp.lindLowerBound) + "\n";
    finish(rep, text);
    return 0;
  }
  throw CLI::ValidationError("unknown command: " + cmd);
}

int cmd_certify(const CommonOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  if (o.witnessFile.empty()) throw CLI::ValidationError("certify needs --witness FILE");
  std::ifstream in(o.witnessFile);
  if (!in.good()) throw std::runtime_error("cannot open witness file: " + o.witnessFile);
  ojson j = ojson::parse(in);
  Report rep;
  if (o.modP > 1) {
    FpCtx::set(static_cast<std::uint64_t>(o.modP));
    LoadedWitness<Fp> lw = witness_from_json<Fp>(j);
    rep = lw.matrix ? verify_matrix_witness(lw.mat) : verify_witness(lw.scalar);
    rep.subject += " (arithmetic " + FieldInfo<Fp>::name() + "; not a certification)";
  } else {
    LoadedWitness<Rat> lw = witness_from_json<Rat>(j);
    rep = lw.matrix ? verify_matrix_witness(lw.mat) : verify_witness(lw.scalar);
  }
  RunManifest m = make_manifest<Rat>("certify", {o.witnessFile}, j.at("algebra"));
  if (o.modP > 1) m.arithmetic = "F" + std::to_string(o.modP);
  m.verdicts = {rep.verdict};
  m.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_outputs(o, "certify", report_json(rep), rep.text(), m);
  return rep.verdict == "certified-not-absolutely-Koszul" ? 0 : 1;
}

int cmd_search(const CommonOpts& o, const std::string& configFile) {
  auto t0 = std::chrono::steady_clock::now();
  SearchConfig cfg;
  if (!configFile.empty()) {
    std::ifstream in(configFile);
    if (!in.good()) throw std::runtime_error("cannot open config file: " + configFile);
    cfg = search_config_from_json(ojson::parse(in));
  }
  if (o.seed) cfg.rngSeed = o.seed;
  if (o.modP > 1) cfg.prefilterPrime = o.modP;
  ojson spec = algebra_spec(o);
  AlgebraPtr<Rat> A = algebra_from_json<Rat>(spec);
  AlgebraPtr<Fp> mirror;
  if (cfg.prefilterPrime > 1) {
    FpCtx::set(static_cast<std::uint64_t>(cfg.prefilterPrime));
    mirror = algebra_from_json<Fp>(spec);
  }
  SearchOutcome<Rat> out = search_witness(A, cfg, mirror, &std::cerr);
  ojson rep = search_outcome_json(out, spec, cfg);
  std::string text = "search over " + A->label() + ": " + std::to_string(out.certified.size()) +
                     " certified witness(es) from " + std::to_string(out.pairsExamined) +
                     " pairs" + (out.budgetExhausted ? " (budget exhausted)" : "") + "\n";
  for (const Candidate& c : out.certified)
    text += "  [" + std::to_string(c.index) + "] l1 = " + c.l1 + ", l2 = " + c.l2 + "\n";
  RunManifest m = make_manifest<Rat>("search", {configFile}, spec);
  for (const Candidate& c : out.certified) m.verdicts.push_back(c.l1 + " | " + c.l2);
  m.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_outputs(o, "search", rep, text, m);
  if (!o.outDir.empty())
    std::ofstream(fs::path(o.outDir) / "witnesses.json") << rep.dump(2) << "\n";
  return out.certified.empty() ? 1 : 0;
}

// Witness-stage builtin per reproduce case.
const std::map<std::string, std::string> kCaseStage = {
    {"roos", "roos"}, {"conca", "conca"}, {"s36", "s36"},  {"s45", "s45w"},
    {"v72", "v72w"},  {"v53", "v53w"},    {"v54", "v54w"}, {"v45", "v45w"}};
const std::map<std::string, std::string> kCaseBase = {
    {"s36", "s36"}, {"s45", "s45"}, {"v72", "v72"}, {"v53", "v53"}, {"v54", "v54"}, {"v45", "v45"}};
const std::map<std::string, int> kHonestDepth = {{"roos", 4}, {"conca", 1}, {"s36", 2}, {"s45", 1},
                                                 {"v72", 1},  {"v53", 1},   {"v54", 1}, {"v45", 1}};

bool refuted_at_pair_conditions(const Report& rep) {
  for (const char* n : {"l1-nonzero-linear", "l2-nonzero-linear", "annihilating-pair",
                        "colon-l1-decomposition", "colon-l2-decomposition"}) {
    const Check* c = rep.find(n);
    if (c && c->status == "fail") return true;
  }
  return false;
}

std::string filtration_identities_text(const KoszulFiltrationCert& f) {
  std::string text;
  for (const FiltrationStep& s : f.steps)
    text += "    " + s.ideal + " = " + s.inside + " + (" + s.ext + "), " + s.inside + " : " +
            s.ext + " = " + s.colon + "\n";
  return text;
}

int reproduce_one(const CommonOpts& o, const std::string& cs, ojson& bundle, std::string& text) {
  auto t0 = std::chrono::steady_clock::now();
  ojson entry;
  entry["case"] = cs;
  bool ok = true;
  std::string stage = kCaseStage.at(cs);
  AlgebraPtr<Rat> W = builtin_algebra<Rat>(stage);
  text += "case " + cs + " (witness ring " + stage + ")\n";

  // Hilbert check: closed form for the product/power families.
  {
    auto base = kCaseBase.find(cs);
    if (base != kCaseBase.end()) {
      AlgebraPtr<Rat> U = builtin_algebra<Rat>(base->second);
      HPolynomial expect = *closed_form_h(base->second);
      HPolynomial got = hp_of(U->hilbert());
      bool pass = got == expect;
      ok = ok && pass;
      entry["hilbert"] = {{"status", pass ? "pass" : "fail"}, {"series", got.str()}};
      text += "  hilbert " + base->second + ": " + got.str() +
              (pass ? " matches the closed form\n" : " MISMATCH\n");
    } else {
      entry["hilbert"] = {{"status", "pass"}, {"series", joined(W->hilbert())}};
      text += "  hilbert: " + joined(W->hilbert()) + " (presentation, nothing to cross-check)\n";
    }
  }

  // Obstruction check on the witness-stage ring.
  if (cs != "roos" && cs != "conca") {
    HPolynomial h = hp_of(W->hilbert());
    ObstructionReport ob = br_obstruction(h, W->nvars());
    bool pass = ob.verdict == "BR-obstructed";
    ok = ok && pass;
    entry["obstruction"] = {{"status", pass ? "pass" : "fail"},
                            {"h_at_minus_one", h.evalMinusOne()},
                            {"detail", obstruction_detail(ob)}};
    text += "  obstruction: h(-1) = " + std::to_string(h.evalMinusOne()) + ", " + ob.verdict +
            "\n";
  } else {
    entry["obstruction"] = {{"status", "not-applicable"}};
    text += "  obstruction: not applicable\n";
  }

  // Witness certification from the bundled file, search fallback if the
  // pair itself fails (a labeling mismatch), then corroboration.
  {
    fs::path wf = fs::path(data_dir(o)) / (cs + ".json");
    std::ifstream in(wf);
    if (!in.good()) throw std::runtime_error("missing bundled witness: " + wf.string());
    ojson j = ojson::parse(in);
    LoadedWitness<Rat> lw = witness_from_json<Rat>(j);
    Report rep = lw.matrix ? verify_matrix_witness(lw.mat) : verify_witness(lw.scalar);
    if (rep.verdict != "certified-not-absolutely-Koszul" && !lw.matrix &&
        refuted_at_pair_conditions(rep)) {
      text += "  witness: bundled data refuted at the pair conditions; searching\n";
      SearchConfig cfg;
      cfg.budget.maxCandidates = 1000000;
      cfg.budget.maxSeconds = 1800.0;
      SearchOutcome<Rat> found = search_witness(lw.scalar.A, cfg);
      if (!found.certified.empty()) {
        lw.scalar.l1 = found.certified[0].l1;
        lw.scalar.l2 = found.certified[0].l2;
        lw.scalar.K1 = found.certified[0].K1;
        lw.scalar.K2 = found.certified[0].K2;
        rep = verify_witness(lw.scalar);
      }
    }
    bool pass = rep.verdict == "certified-not-absolutely-Koszul";
    ok = ok && pass;
    entry["witness"] = report_json(rep);
    text += "  witness: " + rep.verdict +
            (rep.qualifier.empty() ? "" : " (" + rep.qualifier + ")") + "\n";
    const auto& filt = lw.matrix ? lw.mat.filtration : lw.scalar.filtration;
    if (filt) {
      text += "  filtration colon identities:\n" + filtration_identities_text(*filt);
    }
    for (const Check& c : rep.checks)
      if (c.name.rfind("reduction-", 0) == 0)
        text += "  lift: " + c.name + " " + c.status + "\n";

    if (pass) {
      int honest = kHonestDepth.at(cs);
      Report lp = lw.matrix ? corroborate_linear_part(lw.mat, rep, 4, honest)
                            : corroborate_linear_part(lw.scalar, rep, 4, honest);
      bool lpPass = lp.verdict == "pass";
      ok = ok && lpPass;
      entry["linear_part"] = report_json(lp);
      text += "  linear-part corroboration: " + lp.verdict + "\n";
      for (const Check& c : lp.checks) text += "    " + c.name + ": " + c.evidence + "\n";
    }
  }

  entry["status"] = ok ? "pass" : "fail";
  entry["wall_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bundle.push_back(entry);
  text += ok ? "  => pass\n\n" : "  => FAIL\n\n";
  return ok ? 0 : 1;
}

int cmd_reproduce(const CommonOpts& o, const std::string& which) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> cases;
  if (which == "all")
    cases = {"roos", "conca", "s36", "s45", "v72", "v53", "v54", "v45"};
  else if (kCaseStage.count(which))
    cases = {which};
  else
    throw CLI::ValidationError("unknown case: " + which);
  ojson bundle = ojson::array();
  std::string text;
  int bad = 0;
  for (const std::string& cs : cases) bad += reproduce_one(o, cs, bundle, text);
  ojson rep;
  rep["schema"] = 1;
  rep["cases"] = bundle;
  int n = static_cast<int>(cases.size());
  rep["passed"] = n - bad;
  rep["total"] = n;
  text += std::to_string(n - bad) + "/" + std::to_string(n) + " cases pass\n";
  RunManifest m;
  m.command = "reproduce";
  m.arguments = {which};
  m.algebraHash = fnv1a_hex(which);
  m.arithmetic = "QQ";
  for (const ojson& e : bundle)
    m.verdicts.push_back(e.at("case").get<std::string>() + ":" +
                         e.at("status").get<std::string>());
  m.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_outputs(o, "reproduce", rep, text, m);
  return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification engine for graded algebra linearity defects"};
  app.require_subcommand(1);
  CommonOpts o;
  std::string configFile, reproduceCase;
  std::vector<std::string> exprs;

  auto addCommon = [&](CLI::App* c, bool algebra) {
    if (algebra) {
      c->add_option("--builtin", o.builtin, "builtin algebra name");
      c->add_option("--algebra", o.algebraFile, "algebra spec JSON file");
      c->add_option("--truncation", o.truncation, "truncation override");
      c->add_option("--mod-p", o.modP, "prime field arithmetic / prefilter prime");
    }
    c->add_option("--out", o.outDir, "directory for JSON and text reports");
    c->add_option("--format", o.format, "stdout format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  for (const char* name : {"build", "hilbert", "obstruction", "colon", "resolve", "linpart"}) {
    CLI::App* c = app.add_subcommand(name, "");
    addCommon(c, true);
    c->add_option("--cutoff", o.cutoff, "homological cutoff");
    c->add_option("exprs", exprs, "element or ideal generator expressions");
  }
  {
    CLI::App* c = app.add_subcommand("certify", "verify a witness file");
    addCommon(c, false);
    c->add_option("--witness", o.witnessFile, "witness JSON file")->required();
    c->add_option("--mod-p", o.modP, "run the checks over a prime field (not a certification)");
  }
  {
    CLI::App* c = app.add_subcommand("search", "search for certified witness pairs");
    addCommon(c, true);
    c->add_option("--config", configFile, "search config JSON");
    c->add_option("--seed", o.seed, "RNG seed override");
  }
  {
    CLI::App* c = app.add_subcommand("reproduce", "run the bundled case pipeline");
    addCommon(c, false);
    c->add_option("case", reproduceCase, "case name or 'all'")->required();
    c->add_option("--data", o.dataDir, "bundled witness directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* t = std::getenv("LINDEF_THREADS"); t && std::atoi(t) > 1)
    std::cerr << "note: LINDEF_THREADS caps workers; this build computes on one thread\n";

  try {
    std::string cmd = app.get_subcommands()[0]->get_name();
    if (cmd == "certify") return cmd_certify(o);
    if (cmd == "search") return cmd_search(o, configFile);
    if (cmd == "reproduce") return cmd_reproduce(o, reproduceCase);
    if (o.modP > 1) {
      FpCtx::set(static_cast<std::uint64_t>(o.modP));
      return run_field_cmds<Fp>(cmd, o, exprs);
    }
    return run_field_cmds<Rat>(cmd, o, exprs);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
