#include <catch2/catch_amalgamated.hpp>

#include "lindef/matrix.hpp"
#include "lindef/scalar.hpp"
#include "lindef/subspace.hpp"
#include "test_helpers.hpp"

using namespace lindef;
using lindef_test::rand_mat;
using lindef_test::rand_rat;

TEST_CASE("prime field arithmetic") {
  FpCtx::set(32003);
  REQUIRE(FieldInfo<Fp>::name() == "F32003");
  Fp a(-1);
  REQUIRE(a.v == 32002);
  REQUIRE((Fp(5) * Fp(6401)).v == 32005 % 32003);
  Fp inv = Fp(1) / Fp(7);
  REQUIRE((inv * Fp(7)).v == 1);
  REQUIRE(is_zero(Fp(32003)));
  FpCtx::set(5);
  REQUIRE((Fp(3) + Fp(4)).v == 2);
  FpCtx::set(32003);
}

TEST_CASE("rational parsing") {
  REQUIRE(rat_parse("3/4") == Rat(3, 4));
  REQUIRE(rat_parse("-2") == Rat(-2));
  REQUIRE(rat_str(Rat(5, 10)) == "1/2");
  REQUIRE(is_zero(Rat(0)));
}

TEST_CASE("fraction-free and generic elimination agree") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    Mat<Rat> m = rand_mat(rng);
    Rref<Rat> fast = rref_bareiss(m);
    Rref<Rat> slow = rref_field(m);
    REQUIRE(fast.rank == slow.rank);
    REQUIRE(fast.pivots == slow.pivots);
    REQUIRE(fast.m == slow.m);
  }
}

TEST_CASE("rank-nullity and kernel columns") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Mat<Rat> m = rand_mat(rng);
    Mat<Rat> k = kernel(m);
    REQUIRE(rank(m) + k.nc == m.nc);
    // every kernel column maps to zero
    for (int c = 0; c < k.nc; ++c) {
      std::vector<Rat> x(m.nc);
      for (int j = 0; j < m.nc; ++j) x[j] = k.at(j, c);
      for (const Rat& y : mat_vec(m, x)) REQUIRE(is_zero(y));
    }
  }
}

TEST_CASE("modular reduction tracks rational rank") {
  std::mt19937 rng(11);
  FpCtx::set(32003);
  int agreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Mat<Rat> m = rand_mat(rng);
    Mat<Fp> mp;
    REQUIRE(mat_mod_p(m, mp));
    int rp = rank(mp), rq = rank(m);
    REQUIRE(rp <= rq);
    agreements += rp == rq;
  }
  // small random matrices almost never drop rank at a 5-digit prime
  REQUIRE(agreements >= 295);

  // a denominator divisible by p is reported, not silently wrong
  Mat<Rat> bad(1, 1);
  bad.at(0, 0) = Rat(1, 32003);
  Mat<Fp> out;
  REQUIRE_FALSE(mat_mod_p(bad, out));
  FpCtx::set(3);
  Mat<Rat> third(1, 1);
  third.at(0, 0) = Rat(1, 3);
  REQUIRE_FALSE(mat_mod_p(third, out));
  FpCtx::set(32003);
}

TEST_CASE("incremental echelon matches batch echelon") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Mat<Rat> m = rand_mat(rng);
    RrefAccum<Rat> acc(m.nc);
    for (int i = 0; i < m.nr; ++i) acc.insert(m.row(i));
    Rref<Rat> batch = rref(m);
    REQUIRE(acc.rank() == batch.rank);
    REQUIRE(acc.pivots() == batch.pivots);
    REQUIRE(acc.toMat() == batch.m);
    // membership: every original row reduces to zero
    for (int i = 0; i < m.nr; ++i) {
      std::vector<Rat> v = m.row(i);
      REQUIRE(acc.reduceInPlace(v) == -1);
    }
  }
}

TEST_CASE("linear solve finds witnesses exactly") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Mat<Rat> m = rand_mat(rng);
    std::vector<Rat> x0(m.nc);
    for (auto& x : x0) x = rand_rat(rng);
    std::vector<Rat> b = mat_vec(m, x0);
    std::vector<Rat> x;
    REQUIRE(solve(m, b, x));
    std::vector<Rat> bx = mat_vec(m, x);
    for (int i = 0; i < m.nr; ++i) REQUIRE(bx[i] == b[i]);
  }
  // inconsistent system
  Mat<Rat> z(2, 1);
  z.at(0, 0) = Rat(1);
  std::vector<Rat> x;
  REQUIRE_FALSE(solve(z, {Rat(0), Rat(1)}, x));
}

TEST_CASE("subspace dimension law") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> d(1, 6);
  auto randSpace = [&](int n) {
    Mat<Rat> m(d(rng), n);
    for (int i = 0; i < m.nr; ++i)
      for (int j = 0; j < m.nc; ++j) m.at(i, j) = rand_rat(rng);
    return Subspace<Rat>::fromMat(m);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    int n = d(rng);
    Subspace<Rat> U = randSpace(n);
    Subspace<Rat> V = randSpace(n);
    Subspace<Rat> S = U.sum(V);
    Subspace<Rat> I = U.intersect(V);
    REQUIRE(U.dim() + V.dim() == S.dim() + I.dim());
    REQUIRE(S.contains(U));
    REQUIRE(S.contains(V));
    REQUIRE(U.contains(I));
    REQUIRE(V.contains(I));
  }
}
