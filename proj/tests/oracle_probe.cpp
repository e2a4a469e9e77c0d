#include <cstdio>
#include <cstdlib>
#include "fixtures.hpp"
#include "oracle.hpp"
using namespace tatehoch;
int main(int argc, char** argv) {
  int which = argc > 1 ? std::atoi(argv[1]) : 0;
  int nmax = argc > 2 ? std::atoi(argv[2]) : 6;
  auto run = [&](const Algebra& a, const char* name) {
    Bimodule A = regular_bimodule(a);
    auto dims = oracle::ext_dims(a, A, nmax);
    std::printf("%-14s:", name);
    for (int d : dims) std::printf(" %d", d);
    std::printf("\n");
    std::fflush(stdout);
  };
  switch (which) {
    case 0: run(fixtures::dual_numbers(Field::Fp(5)), "f5-dual"); break;
    case 1: run(fixtures::dual_numbers(Field::Fp(2)), "f2-dual"); break;
    case 2: run(fixtures::truncated_poly3(Field::Fp(11)), "f11-x3"); break;
    case 3: run(fixtures::quantum_exterior(Field::Fp(17), 3), "f17-quantum"); break;
    case 4: run(fixtures::group_algebra_c2(Field::Fp(5)), "f5-c2"); break;
    case 5: run(fixtures::ground_field(Field::Fp(7)), "f7"); break;
    case 6: run(fixtures::ground_field(Field::Q()), "q-unit"); break;
  }
  return 0;
}
