#include <chrono>
#include <cstdio>
#include "fixtures.hpp"
#include "tatehoch/products.hpp"
using namespace tatehoch;
using Clock = std::chrono::steady_clock;
double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}
int main() {
  Algebra a = fixtures::quantum_exterior(Field::Fp(17), 3);
  FrobeniusData f = fixtures::quantum_frobenius(a);
  auto t0 = Clock::now();
  SyzygyChain s = syzygies(a, 5);
  std::printf("syzygies W=5: %.1fs; dims:", secs(t0));
  for (int i = -5; i <= 5; ++i) std::printf(" %d", s.omega(i).dim);
  std::printf("\n");
  t0 = Clock::now();
  ComplexWindow sc = syzygy_complex(s, f);
  std::printf("syzygy complex: %.1fs\n", secs(t0));
  Bimodule Mp = twist(regular_bimodule(a), identity_automorphism(a), f.nakayama_inv);
  t0 = Clock::now();
  auto st = stable_tensor(s.omega(3), Mp);
  std::printf("stable_tensor(Omega^3, M'): %.1fs dim %d\n", secs(t0), st.dim);
  t0 = Clock::now();
  CompleteWindow t = complete_bar_window(a, f, 2);
  std::printf("complete window W=2: %.1fs\n", secs(t0));
  t0 = Clock::now();
  FundamentalClass w = fundamental_class(a, f, s, sc, t);
  std::printf("fundamental class: %.1fs\n", secs(t0));
  for (int n : {0, 1, -2}) {
    t0 = Clock::now();
    auto d = duality_map(a, f, s, sc, t, w, n);
    std::printf("duality n=%d: %.1fs dim %d\n", n, secs(t0), d.dim_source);
  }
  return 0;
}
