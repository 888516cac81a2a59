#include <climits>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "lindef/json_io.hpp"
#include "lindef/search.hpp"

using namespace lindef;

namespace {

ojson load_bundled(const std::string& name) {
  std::ifstream in(std::string(LINDEF_DATA_DIR) + "/" + name + ".json");
  REQUIRE(in.good());
  return ojson::parse(in);
}

}  // namespace

TEST_CASE("algebra specs load builtins and presentations") {
  ojson builtin = {{"builtin", "roos"}};
  auto A = algebra_from_json<Rat>(builtin);
  REQUIRE(A->label() == "roos");
  ojson pres = {{"vars", {"x", "y"}},
                {"relations", {"x^2"}},
                {"truncation", 4},
                {"label", "demo"}};
  auto B = algebra_from_json<Rat>(pres);
  REQUIRE(hilbert(B) == std::vector<int>{1, 2, 2, 2, 2});
  ojson quo = pres;
  quo["quotient_linear"] = {"x-y"};
  auto C = algebra_from_json<Rat>(quo);
  REQUIRE(C->nvars() == 1);
}

TEST_CASE("canonical hashing ignores key order") {
  ojson a = {{"builtin", "roos"}, {"truncation", 8}};
  ojson b = {{"truncation", 8}, {"builtin", "roos"}};
  REQUIRE(fnv1a_hex(canonical_algebra_json(a).dump()) ==
          fnv1a_hex(canonical_algebra_json(b).dump()));
  ojson c = {{"builtin", "conca"}};
  REQUIRE(fnv1a_hex(canonical_algebra_json(a).dump()) !=
          fnv1a_hex(canonical_algebra_json(c).dump()));
}

TEST_CASE("identifier renaming uses maximal munch") {
  std::map<std::string, std::string> ren{{"a1", "b1"}, {"a10", "b10"}};
  REQUIRE(rename_identifiers("a1+a10", ren) == "b1+b10");
  REQUIRE(rename_identifiers("a10*a1", ren) == "b10*b1");
  REQUIRE(rename_identifiers("3*a1^2", ren) == "3*b1^2");
}

TEST_CASE("witness files round-trip through serialization") {
  for (const char* name : {"roos", "s36", "conca"}) {
    ojson j = load_bundled(name);
    LoadedWitness<Rat> lw = witness_from_json<Rat>(j);
    ojson back = lw.matrix ? matrix_witness_json(lw.mat, j.at("algebra"))
                           : witness_json(lw.scalar, j.at("algebra"));
    LoadedWitness<Rat> again = witness_from_json<Rat>(back);
    if (lw.matrix) {
      REQUIRE(again.mat.phi1 == lw.mat.phi1);
      REQUIRE(again.mat.K2 == lw.mat.K2);
    } else {
      REQUIRE(again.scalar.l1 == lw.scalar.l1);
      REQUIRE(again.scalar.K1 == lw.scalar.K1);
      REQUIRE(again.scalar.crossCutoff == lw.scalar.crossCutoff);
    }
  }
}

TEST_CASE("variable permutations relabel the witness body") {
  ojson j = load_bundled("roos");
  // roos vars x y z u; swap x and y everywhere, then undo it with perm
  ojson swapped = j;
  std::map<std::string, std::string> swap{{"x", "y"}, {"y", "x"}};
  swapped["l1"] = rename_identifiers(j.at("l1").get<std::string>(), swap);
  swapped["l2"] = rename_identifiers(j.at("l2").get<std::string>(), swap);
  for (auto& g : swapped.at("K1")) g = rename_identifiers(g.get<std::string>(), swap);
  for (auto& g : swapped.at("K2")) g = rename_identifiers(g.get<std::string>(), swap);
  swapped["perm"] = {1, 0, 2, 3};
  LoadedWitness<Rat> lw = witness_from_json<Rat>(swapped);
  REQUIRE(lw.scalar.l1 == "x-z");
  Report rep = verify_witness(lw.scalar);
  REQUIRE(rep.verdict == "certified-not-absolutely-Koszul");
}

TEST_CASE("invalid permutations are rejected") {
  ojson j = load_bundled("roos");
  j["perm"] = {0, 0, 2, 3};
  REQUIRE_THROWS(witness_from_json<Rat>(j));
  j["perm"] = {0, 1, 2};
  REQUIRE_THROWS(witness_from_json<Rat>(j));
}

TEST_CASE("search configuration round-trips") {
  SearchConfig cfg;
  cfg.coefficientPool = {-1, 2, 5};
  cfg.maxSupport = 3;
  cfg.rngSeed = 42;
  cfg.mode = "randomized";
  cfg.prefilterPrime = 101;
  cfg.budget.maxCandidates = 777;
  cfg.budget.maxSeconds = 12.5;
  SearchConfig back = search_config_from_json(search_config_json(cfg));
  REQUIRE(back.coefficientPool == cfg.coefficientPool);
  REQUIRE(back.maxSupport == cfg.maxSupport);
  REQUIRE(back.rngSeed == cfg.rngSeed);
  REQUIRE(back.mode == cfg.mode);
  REQUIRE(back.prefilterPrime == cfg.prefilterPrime);
  REQUIRE(back.budget.maxCandidates == cfg.budget.maxCandidates);
  REQUIRE(back.budget.maxSeconds == cfg.budget.maxSeconds);
}

TEST_CASE("reports and tables serialize with schema tags") {
  Report rep;
  rep.subject = "demo";
  rep.pass("alpha", true, "ev");
  rep.na("beta");
  rep.verdict = "pass";
  ojson j = report_json(rep);
  REQUIRE(j.at("schema") == 1);
  REQUIRE(j.at("checks").size() == 2);
  REQUIRE(j.at("checks")[0].at("name") == "alpha");
  REQUIRE(j.at("verdict") == "pass");

  BettiTable t;
  t.homCutoff = 1;
  t.exactThrough = {INT_MAX, 5};
  t.b[{0, 0}] = 1;
  t.b[{1, 2}] = 3;
  ojson bj = betti_json(t);
  REQUIRE(bj.at("schema") == 1);
  REQUIRE(bj.at("entries").size() == 2);
  long long found = 0;
  for (const auto& e : bj.at("entries"))
    if (e.at("i") == 1 && e.at("j") == 2) found = e.at("beta").get<long long>();
  REQUIRE(found == 3);
}

TEST_CASE("manifests capture the run identity") {
  RunManifest m;
  m.command = "certify";
  m.arguments = {"w.json"};
  m.algebraHash = "abc";
  m.arithmetic = "QQ";
  m.wallSeconds = 0.5;
  m.verdicts = {"certified-not-absolutely-Koszul"};
  ojson j = manifest_json(m);
  REQUIRE(j.at("schema") == 1);
  REQUIRE(j.at("command") == "certify");
  REQUIRE(j.at("engine_version") == kVersion);
  REQUIRE(j.at("verdicts").size() == 1);
}
