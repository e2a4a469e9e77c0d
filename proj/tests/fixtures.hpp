#pragma once

// Shared test fixtures: the bundled corpus algebras built in code.

#include <utility>
#include <vector>

#include "tatehoch/algebra.hpp"

namespace tatehoch::fixtures {

inline Algebra ground_field(const Field& F) {
  std::vector<std::vector<Vec>> t(1, std::vector<Vec>(1, unit_vec(1, 0)));
  return make_algebra(F, {"1"}, t);
}

/// k[x]/(x^2) with basis {1, x}.
inline Algebra dual_numbers(const Field& F) {
  int d = 2;
  std::vector<std::vector<Vec>> t(d, std::vector<Vec>(d, Vec(d, 1)));
  for (int i = 0; i < d; ++i) {
    t[0][i] = unit_vec(d, i);
    t[i][0] = unit_vec(d, i);
  }
  t[1][1] = Vec(d, 1);  // x * x = 0
  return make_algebra(F, {"1", "x"}, t);
}

/// k[x]/(x^3) with basis {1, x, x^2}.
inline Algebra truncated_poly3(const Field& F) {
  int d = 3;
  std::vector<std::vector<Vec>> t(d, std::vector<Vec>(d, Vec(d, 1)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i + j < d) t[i][j] = unit_vec(d, i + j);
  return make_algebra(F, {"1", "x", "x2"}, t);
}

/// k<x,y>/(x^2, y^2, xy + q yx) with basis {1, x, y, xy}.
inline Algebra quantum_exterior(const Field& F, long long q) {
  int d = 4;
  Rat qq = F.reduce(Rat(q));
  std::vector<std::vector<Vec>> t(d, std::vector<Vec>(d, Vec(d, 1)));
  for (int i = 0; i < d; ++i) {
    t[0][i] = unit_vec(d, i);
    t[i][0] = unit_vec(d, i);
  }
  t[1][2] = unit_vec(d, 3);  // x y = xy
  Vec yx(d, 1);
  yx.at(3, 0) = F.neg(F.inv(qq));  // y x = -q^{-1} xy
  t[2][1] = yx;
  // x^2 = y^2 = 0 and every product with xy of positive length vanishes
  return make_algebra(F, {"1", "x", "y", "xy"}, t);
}

/// Group algebra of the cyclic group of order two, basis {e, g}.
inline Algebra group_algebra_c2(const Field& F) {
  int d = 2;
  std::vector<std::vector<Vec>> t(d, std::vector<Vec>(d, Vec(d, 1)));
  for (int i = 0; i < d; ++i) {
    t[0][i] = unit_vec(d, i);
    t[i][0] = unit_vec(d, i);
  }
  t[1][1] = unit_vec(d, 0);  // g^2 = e
  return make_algebra(F, {"e", "g"}, t);
}

inline FrobeniusData quantum_frobenius(const Algebra& a) {
  return frobenius(a, {Rat(0), Rat(0), Rat(0), Rat(1)});
}

/// The corpus as (algebra, frobenius) pairs, in a fixed order.
inline std::vector<std::pair<Algebra, FrobeniusData>> frobenius_corpus() {
  std::vector<std::pair<Algebra, FrobeniusData>> out;
  {
    Algebra a = ground_field(Field::Q());
    out.emplace_back(a, frobenius(a, {Rat(1)}));
  }
  {
    Algebra a = ground_field(Field::Fp(7));
    out.emplace_back(a, frobenius(a, {Rat(1)}));
  }
  {
    Algebra a = dual_numbers(Field::Fp(2));
    out.emplace_back(a, frobenius(a, {Rat(0), Rat(1)}));
  }
  {
    Algebra a = dual_numbers(Field::Fp(5));
    out.emplace_back(a, frobenius(a, {Rat(0), Rat(1)}));
  }
  {
    Algebra a = truncated_poly3(Field::Fp(11));
    out.emplace_back(a, frobenius(a, {Rat(0), Rat(0), Rat(1)}));
  }
  {
    Algebra a = quantum_exterior(Field::Fp(17), 3);
    out.emplace_back(a, quantum_frobenius(a));
  }
  {
    Algebra a = group_algebra_c2(Field::Fp(5));
    out.emplace_back(a, frobenius(a, {Rat(1), Rat(0)}));
  }
  return out;
}

}  // namespace tatehoch::fixtures
