#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "lindef/search.hpp"

using namespace lindef;

namespace {

SearchConfig small_config() {
  SearchConfig cfg;
  cfg.coefficientPool = {-1, 1};
  cfg.maxSupport = 2;
  return cfg;
}

}  // namespace

TEST_CASE("zero divisor pair scan finds the sign pairs") {
  auto roos = builtin_algebra<Rat>("roos");
  auto pairs = find_zero_divisor_pairs(roos, small_config());
  REQUIRE(pairs.size() == 40);
  bool found = false;
  for (const auto& [a, b] : pairs) found = found || (a == "x-z" && b == "x+z");
  REQUIRE(found);
  // the relation-free truncated ring has no zero divisors
  auto free2 = make_presentation<Rat>({"x", "y"}, {}, 3, "free2");
  REQUIRE(find_zero_divisor_pairs(free2, small_config()).empty());
}

TEST_CASE("witness search certifies the discovered pairs") {
  auto roos = builtin_algebra<Rat>("roos");
  SearchOutcome<Rat> out = search_witness(roos, small_config());
  REQUIRE(out.certified.size() == 8);
  REQUIRE_FALSE(out.budgetExhausted);
  for (const Candidate& c : out.certified) {
    REQUIRE_FALSE(c.K1.empty());
    REQUIRE_FALSE(c.K2.empty());
  }
  bool found = false;
  for (const Candidate& c : out.certified)
    found = found || (c.l1 == "x-z" && c.l2 == "x+z" && c.K1 == std::vector<std::string>{"y*u"});
  REQUIRE(found);
}

TEST_CASE("search is deterministic") {
  auto roos = builtin_algebra<Rat>("roos");
  SearchOutcome<Rat> a = search_witness(roos, small_config());
  SearchOutcome<Rat> b = search_witness(roos, small_config());
  REQUIRE(a.certified.size() == b.certified.size());
  for (size_t i = 0; i < a.certified.size(); ++i) {
    REQUIRE(a.certified[i].l1 == b.certified[i].l1);
    REQUIRE(a.certified[i].l2 == b.certified[i].l2);
    REQUIRE(a.certified[i].index == b.certified[i].index);
  }
}

TEST_CASE("randomized draws are reproducible by seed") {
  auto roos = builtin_algebra<Rat>("roos");
  SearchConfig cfg = small_config();
  cfg.mode = "randomized";
  cfg.rngSeed = 99;
  cfg.budget.maxCandidates = 200;
  SearchOutcome<Rat> a = search_witness(roos, cfg);
  SearchOutcome<Rat> b = search_witness(roos, cfg);
  REQUIRE(a.pairsExamined == b.pairsExamined);
  REQUIRE(a.certified.size() == b.certified.size());
  for (size_t i = 0; i < a.certified.size(); ++i)
    REQUIRE(a.certified[i].l1 == b.certified[i].l1);
}

TEST_CASE("candidate budget cuts off cleanly") {
  auto roos = builtin_algebra<Rat>("roos");
  SearchConfig cfg = small_config();
  cfg.budget.maxCandidates = 5;
  SearchOutcome<Rat> out = search_witness(roos, cfg);
  REQUIRE(out.budgetExhausted);
  REQUIRE(out.pairsExamined <= 5);
}

TEST_CASE("modular prefilter keeps the rational witnesses") {
  auto roos = builtin_algebra<Rat>("roos");
  SearchConfig cfg = small_config();
  cfg.prefilterPrime = 32003;
  FpCtx::set(32003);
  auto mirror = builtin_algebra<Fp>("roos");
  SearchOutcome<Rat> withP = search_witness(roos, cfg, mirror);
  SearchOutcome<Rat> plain = search_witness(roos, small_config());
  REQUIRE(withP.certified.size() == plain.certified.size());
  for (size_t i = 0; i < withP.certified.size(); ++i) {
    REQUIRE(withP.certified[i].l1 == plain.certified[i].l1);
    REQUIRE(withP.certified[i].l2 == plain.certified[i].l2);
  }
}

TEST_CASE("the hypersurface pair is found but never certified") {
  auto kx2 = builtin_algebra<Rat>("kx2");
  auto pairs = find_zero_divisor_pairs(kx2, small_config());
  bool xx = false;
  for (const auto& [a, b] : pairs) xx = xx || (a == "x" && b == "x");
  REQUIRE(xx);
  SearchOutcome<Rat> out = search_witness(kx2, small_config());
  REQUIRE(out.certified.empty());
}
