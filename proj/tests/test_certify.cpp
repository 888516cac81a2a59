#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "lindef/certify.hpp"
#include "lindef/json_io.hpp"

using namespace lindef;

namespace {

ojson load_bundled(const std::string& name) {
  std::ifstream in(std::string(LINDEF_DATA_DIR) + "/" + name + ".json");
  REQUIRE(in.good());
  return ojson::parse(in);
}

Witness<Rat> roos_witness() {
  Witness<Rat> w;
  w.A = builtin_algebra<Rat>("roos");
  w.name = "roos-pair";
  w.l1 = "x-z";
  w.l2 = "x+z";
  w.K1 = {"y*u"};
  w.K2 = {"y*u"};
  w.crossCutoff = 3;
  return w;
}

}  // namespace

TEST_CASE("the four-variable pair certifies") {
  Report rep = verify_witness(roos_witness());
  REQUIRE(rep.verdict == "certified-not-absolutely-Koszul");
  const Check* c = rep.find("annihilating-pair");
  REQUIRE(c != nullptr);
  REQUIRE(c->status == "pass");
}

TEST_CASE("verdict is symmetric under swapping the pair") {
  Witness<Rat> w = roos_witness();
  std::swap(w.l1, w.l2);
  std::swap(w.K1, w.K2);
  Report rep = verify_witness(w);
  REQUIRE(rep.verdict == "certified-not-absolutely-Koszul");
}

TEST_CASE("a wrong annihilator is refuted, not patched") {
  Witness<Rat> w = roos_witness();
  w.l2 = "x+y";
  Report rep = verify_witness(w);
  REQUIRE(rep.verdict == "refuted");
  w = roos_witness();
  w.K1 = {"y*z"};
  rep = verify_witness(w);
  REQUIRE(rep.verdict == "refuted");
}

TEST_CASE("filtration table for the worked quotient verifies") {
  ojson j = load_bundled("conca");
  LoadedWitness<Rat> lw = witness_from_json<Rat>(j);
  REQUIRE(lw.matrix);
  REQUIRE(lw.mat.filtration.has_value());
  Report rep = verify_koszul_filtration(lw.mat.A, *lw.mat.filtration);
  REQUIRE(rep.verdict == "pass");
  int steps = 0;
  for (const Check& c : rep.checks)
    if (c.name.rfind("step-", 0) == 0) ++steps;
  REQUIRE(steps == 7);
}

TEST_CASE("a mutated filtration colon is detected") {
  ojson j = load_bundled("conca");
  LoadedWitness<Rat> lw = witness_from_json<Rat>(j);
  KoszulFiltrationCert bad = *lw.mat.filtration;
  bool mutated = false;
  for (FiltrationStep& s : bad.steps)
    if (s.ideal == "xy") {
      s.colon = "xzu";  // the true colon is the maximal ideal
      mutated = true;
    }
  REQUIRE(mutated);
  Report rep = verify_koszul_filtration(lw.mat.A, bad);
  REQUIRE(rep.verdict == "fail");
}

TEST_CASE("matrix form of a scalar pair gives the same verdict") {
  MatrixWitness<Rat> w;
  w.A = builtin_algebra<Rat>("roos");
  w.name = "roos-1x1";
  w.phi1 = {{"x-z"}};
  w.phi2 = {{"x+z"}};
  w.K1 = {{"y*u"}};
  w.K2 = {{"y*u"}};
  w.crossCutoff = 3;
  Report rep = verify_matrix_witness(w);
  REQUIRE(rep.verdict == "certified-not-absolutely-Koszul");
}

TEST_CASE("a Koszul ring control is refuted in matrix form") {
  MatrixWitness<Rat> w;
  w.A = builtin_algebra<Rat>("kx2");
  w.name = "kx2-control";
  w.phi1 = {{"x"}};
  w.phi2 = {{"x"}};
  w.K1 = {{"0"}};
  w.K2 = {{"0"}};
  Report rep = verify_matrix_witness(w);
  REQUIRE(rep.verdict == "refuted");
  const Check* c = rep.find("M1-nonlinear-syzygy");
  REQUIRE(c != nullptr);
  REQUIRE(c->status == "fail");
}

TEST_CASE("corroboration reports honest homology for the certified pair") {
  Witness<Rat> w = roos_witness();
  Report rep = verify_witness(w);
  Report lp = corroborate_linear_part(w, rep, 4, 4);
  REQUIRE(lp.verdict == "pass");
  for (int i = 1; i <= 4; ++i) {
    std::string name = i == 1 ? "nonlinear-level-1" : "nonlinear-level-" + std::to_string(i);
    const Check* c = lp.find(name);
    REQUIRE(c != nullptr);
    REQUIRE(c->status == "pass");
    REQUIRE(c->evidence.find("dim 2") != std::string::npos);
  }
}

TEST_CASE("corroboration refuses to propagate from a refuted witness") {
  Witness<Rat> w = roos_witness();
  w.l2 = "x+y";
  Report rep = verify_witness(w);
  Report lp = corroborate_linear_part(w, rep, 4, 1);
  REQUIRE(lp.verdict != "pass");
}

TEST_CASE("lift chain rejects a wrong family stage") {
  Witness<Rat> w = roos_witness();
  LiftLink lk;
  lk.kind = "hilbert-reduction";
  lk.family = "segre";
  lk.p = 3;
  lk.q = 6;
  lk.stage = "roos";
  w.lift = {lk};
  Report rep = verify_witness(w);
  REQUIRE(rep.verdict == "refuted");
}
