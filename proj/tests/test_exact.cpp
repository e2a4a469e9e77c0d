#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tatehoch/exact.hpp"

using namespace tatehoch;

namespace {

Mat make(int r, int c, std::initializer_list<int> xs) {
  Mat m(r, c);
  int i = 0;
  for (int x : xs) m.a[i++] = Rat(x);
  return m;
}

Mat random_mat(const Field& F, std::mt19937_64& rng, int r, int c) {
  Mat m(r, c);
  if (F.is_prime_field()) {
    std::uniform_int_distribution<long long> d(0, F.p - 1);
    for (auto& x : m.a) x = Rat(d(rng));
  } else {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (auto& x : m.a) x = Rat(num(rng), den(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("field basics") {
  Field q = Field::Q();
  CHECK(q.mul(Rat(2, 3), Rat(3, 2)) == Rat(1));
  CHECK(q.inv(Rat(-5, 7)) == Rat(-7, 5));

  Field f5 = Field::Fp(5);
  CHECK(f5.reduce(Rat(7)) == Rat(2));
  CHECK(f5.reduce(Rat(-1)) == Rat(4));
  CHECK(f5.inv(Rat(2)) == Rat(3));
  CHECK(f5.reduce(Rat(1, 2)) == Rat(3));  // 2^{-1} = 3 mod 5

  CHECK_THROWS_AS(Field::Fp(6), MathError);
  CHECK_THROWS_AS(f5.inv(Rat(0)), MathError);
}

TEST_CASE("rref identity and zero") {
  Field q = Field::Q();
  auto rr = rref(q, Mat::identity(3));
  CHECK(rr.r == Mat::identity(3));
  CHECK(rr.pivots == std::vector<int>{0, 1, 2});

  auto zz = rref(q, Mat::zero(2, 4));
  CHECK(zz.r.is_zero());
  CHECK(zz.pivots.empty());
}

TEST_CASE("rref over F5 hand example") {
  Field f5 = Field::Fp(5);
  Mat m = make(2, 2, {2, 4, 1, 2});
  auto rr = rref(f5, m);
  CHECK(rr.r == make(2, 2, {1, 2, 0, 0}));
  CHECK(rr.pivots == std::vector<int>{0});
}

TEST_CASE("rref is idempotent") {
  Field f7 = Field::Fp(7);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_mat(f7, rng, 4, 6);
    auto r1 = rref(f7, m);
    auto r2 = rref(f7, r1.r);
    CHECK(r1.r == r2.r);
  }
}

TEST_CASE("kernel basics") {
  Field q = Field::Q();
  CHECK(kernel(q, Mat::identity(4)).dim() == 0);
  CHECK(kernel(q, Mat::zero(3, 5)).dim() == 5);

  Mat m = make(1, 2, {1, 1});
  Subspace k = kernel(q, m);
  REQUIRE(k.dim() == 1);
  // span{(1,-1)} up to scaling
  CHECK(q.mul(k.basis.at(0, 0), Rat(-1)) == k.basis.at(0, 1));
}

TEST_CASE("rank-nullity randomized") {
  std::mt19937_64 rng(23);
  for (Field F : {Field::Q(), Field::Fp(5), Field::Fp(17)}) {
    for (int t = 0; t < 15; ++t) {
      Mat m = random_mat(F, rng, 5, 7);
      CHECK(rank(F, m) + kernel(F, m).dim() == m.cols);
    }
  }
}

TEST_CASE("solve exact or none") {
  Field f5 = Field::Fp(5);
  Mat m = make(2, 2, {2, 4, 1, 2});  // rank 1
  Vec b1 = vec_of({Rat(2), Rat(1)});
  auto x = solve(f5, m, b1);
  REQUIRE(x.has_value());
  CHECK(mat_mul(f5, m, *x) == b1);

  Vec b2 = vec_of({Rat(1), Rat(1)});
  CHECK(!solve(f5, m, b2).has_value());

  std::mt19937_64 rng(37);
  for (int t = 0; t < 20; ++t) {
    Mat a = random_mat(f5, rng, 4, 5);
    Vec b = random_mat(f5, rng, 4, 1);
    auto s = solve(f5, a, b);
    bool in_image = subspace_contains(f5, image(f5, a), b);
    CHECK(s.has_value() == in_image);
    if (s) CHECK(mat_mul(f5, a, *s) == b);
  }
}

TEST_CASE("matrix product associativity randomized") {
  std::mt19937_64 rng(41);
  for (Field F : {Field::Q(), Field::Fp(11)}) {
    for (int t = 0; t < 10; ++t) {
      Mat A = random_mat(F, rng, 3, 4), B = random_mat(F, rng, 4, 2), C = random_mat(F, rng, 2, 5);
      CHECK(mat_mul(F, mat_mul(F, A, B), C) == mat_mul(F, A, mat_mul(F, B, C)));
    }
  }
}

TEST_CASE("quotient trivial cases") {
  Field q = Field::Q();
  auto qr = quotient(q, Subspace::full(q, 3), Subspace::zero(3));
  CHECK(qr.dim == 3);
  // projection of each representative is a unit vector
  for (int i = 0; i < 3; ++i) {
    Vec r(3, 1);
    for (int j = 0; j < 3; ++j) r.at(j, 0) = qr.rep_basis.at(i, j);
    Vec c = mat_mul(q, qr.proj, r);
    CHECK(c == unit_vec(3, i));
  }
  auto qr2 = quotient(q, Subspace::full(q, 3), Subspace::full(q, 3));
  CHECK(qr2.dim == 0);
}

TEST_CASE("quotient over F2 with self-orthogonal rows") {
  Field f2 = Field::Fp(2);
  Subspace w{2, make(1, 2, {1, 1})};  // (1,1).(1,1) = 0 mod 2
  auto qr = quotient(f2, Subspace::full(f2, 2), w);
  CHECK(qr.dim == 1);
  Vec wv = vec_of({Rat(1), Rat(1)});
  CHECK(mat_mul(f2, qr.proj, wv).is_zero());
}

TEST_CASE("quotient rejects bad input") {
  Field q = Field::Q();
  Subspace w{2, make(1, 2, {1, 0})};
  Subspace v{2, make(1, 2, {0, 1})};
  CHECK_THROWS_AS(quotient(q, v, w), MathError);
  Subspace w3{3, make(1, 3, {1, 0, 0})};
  CHECK_THROWS_AS(quotient(q, v, w3), MathError);
}

TEST_CASE("intersect example") {
  Field q = Field::Q();
  Subspace v{2, make(2, 2, {1, 0, 0, 1})};
  Subspace w{2, make(1, 2, {1, 1})};
  Subspace i = intersect(q, v, w);
  REQUIRE(i.dim() == 1);
  CHECK(i.basis.at(0, 0) == i.basis.at(0, 1));
}

TEST_CASE("image and containment") {
  Field q = Field::Q();
  Mat m = make(3, 2, {1, 2, 0, 0, 1, 2});  // columns span one line
  Subspace im = image(q, m);
  CHECK(im.dim() == 1);
  CHECK(subspace_contains(q, im, vec_of({Rat(2), Rat(0), Rat(2)})));
  CHECK(!subspace_contains(q, im, vec_of({Rat(1), Rat(1), Rat(0)})));
}

TEST_CASE("solve_matrix and inverse") {
  Field f7 = Field::Fp(7);
  std::mt19937_64 rng(53);
  for (int t = 0; t < 10; ++t) {
    Mat m = random_mat(f7, rng, 4, 4);
    if (rank(f7, m) < 4) continue;
    Mat inv = mat_inverse(f7, m);
    CHECK(mat_mul(f7, m, inv) == Mat::identity(4));
  }
  CHECK_THROWS_AS(mat_inverse(f7, Mat::zero(2, 2)), MathError);
}
