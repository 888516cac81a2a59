#ifndef LINDEF_TEST_HELPERS_HPP
#define LINDEF_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "lindef/algebra.hpp"
#include "lindef/matrix.hpp"

namespace lindef_test {

using lindef::Mat;
using lindef::Rat;

inline Rat rand_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  return Rat(num(rng), den(rng));
}

inline Mat<Rat> rand_mat(std::mt19937& rng, int maxDim = 6) {
  std::uniform_int_distribution<int> d(1, maxDim);
  Mat<Rat> m(d(rng), d(rng));
  for (int i = 0; i < m.nr; ++i)
    for (int j = 0; j < m.nc; ++j) m.at(i, j) = rand_rat(rng);
  return m;
}

// Random nonzero element of degree d, coordinates in the degree-d basis.
template <class K>
lindef::Elem<K> rand_elem(std::mt19937& rng, const lindef::Algebra<K>& A, int d) {
  std::uniform_int_distribution<int> c(-3, 3);
  lindef::Elem<K> e{d, std::vector<K>(A.dim(d), K(0))};
  bool nz = false;
  for (auto& x : e.v) {
    int t = c(rng);
    x = K(t);
    nz = nz || t != 0;
  }
  if (!nz && !e.v.empty()) e.v[0] = K(1);
  return e;
}

}  // namespace lindef_test

#endif
