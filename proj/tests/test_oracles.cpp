#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tatehoch/bar.hpp"

using namespace tatehoch;

// Frozen outputs of the resolution oracle (degrees 0..5), computed once
// and pinned here; the bar engine is checked against them elsewhere.
TEST_CASE("oracle: frozen Ext dimension tables") {
  auto run = [](const Algebra& a) {
    return oracle::ext_dims(a, regular_bimodule(a), 6);
  };
  CHECK(run(fixtures::dual_numbers(Field::Fp(5))) == std::vector<int>{2, 1, 1, 1, 1, 1});
  CHECK(run(fixtures::dual_numbers(Field::Fp(2))) == std::vector<int>{2, 2, 2, 2, 2, 2});
  CHECK(run(fixtures::truncated_poly3(Field::Fp(11))) == std::vector<int>{3, 2, 2, 2, 2, 2});
  CHECK(run(fixtures::quantum_exterior(Field::Fp(17), 3)) ==
        std::vector<int>{2, 2, 1, 0, 0, 0});
  CHECK(run(fixtures::group_algebra_c2(Field::Fp(5))) == std::vector<int>{2, 0, 0, 0, 0, 0});
  CHECK(run(fixtures::ground_field(Field::Fp(7))) == std::vector<int>{1, 0, 0, 0, 0, 0});
  CHECK(run(fixtures::ground_field(Field::Q())) == std::vector<int>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("oracle equivalence: bar cohomology matches the resolution oracle") {
  // low degrees on the dimension-2 algebras, plus twisted coefficients
  for (Field F : {Field::Fp(5), Field::Fp(2)}) {
    Algebra a = fixtures::dual_numbers(F);
    BarWindow b = bar_window(a, 4);
    Bimodule A = regular_bimodule(a);
    auto expect = oracle::ext_dims(a, A, 3);
    for (int n = 0; n <= 2; ++n) CHECK(hochschild_cohomology(b, A, n).dim == expect[n]);

    Bimodule K = k_dual(A);
    auto expect_d = oracle::ext_dims(a, K, 3);
    for (int n = 0; n <= 2; ++n) CHECK(hochschild_cohomology(b, K, n).dim == expect_d[n]);
  }
}

TEST_CASE("oracle equivalence on a dimension-3 algebra") {
  Algebra a = fixtures::truncated_poly3(Field::Fp(11));
  BarWindow b = bar_window(a, 4);
  Bimodule A = regular_bimodule(a);
  auto expect = oracle::ext_dims(a, A, 4);
  for (int n = 0; n <= 3; ++n) CHECK(hochschild_cohomology(b, A, n).dim == expect[n]);
}
