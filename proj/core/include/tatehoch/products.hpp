#pragma once

// Cup and cap products on Tate-Hochschild (co)homology by two engines:
// syzygy-shift composition in the stable module category, and pairing
// through a diagonal approximation of the complete bar window.  Plus the
// fundamental class, the duality map it induces, ring tables, and the
// classical-to-Tate compatibility checks.

#include <cstdint>

#include "tatehoch/tatecore.hpp"

namespace tatehoch {

/// The syzygy chain assembled as a complex window [-W, W] with
/// components F_i (i >= 0) and I_{-i-1} (i < 0), augmented by
/// eps = pi_0 and eta = emb_0.  Free structures are recorded everywhere
/// (injectives are free on Frobenius-functional generators).
ComplexWindow syzygy_complex(const SyzygyChain& s, const FrobeniusData& f);

/// Syzygy chain of an arbitrary coefficient bimodule, to positive depth
/// `pos` and negative depth `neg`.
struct ModuleChain {
  Bimodule base;
  std::vector<Bimodule> mods_pos;  // Omega^0 M = M .. Omega^pos M
  std::vector<Bimodule> frees;     // covers
  std::vector<Mat> pis, iotas;
  std::vector<Bimodule> mods_neg;  // Omega^{-1} M .. Omega^{-neg} M
  std::vector<Bimodule> injs;
  std::vector<Mat> embs, quos;

  const Bimodule& omega(int b) const;
};
ModuleChain module_chain(const Bimodule& m, int pos, int neg);

/// Stable class: an A^e-linear representative Omega^i A -> coefficients.
struct StableClass {
  int degree{0};
  Mat rep;
};

/// Omega^i(g) : Omega^{i+j} A -> Omega^i A for a representative
/// g : Omega^j A -> A, computed by lifting along the syzygy complex.
Mat omega_shift_map(const SyzygyChain& s, const ComplexWindow& schain, const Mat& g, int j,
                    int i);

/// Cup product f . Omega^i(g) of stable classes with coefficients in A.
StableClass es_cup(const SyzygyChain& s, const ComplexWindow& schain, const StableClass& f,
                   const StableClass& g);

/// A stable tensor class: coordinates inside tensor_over_Ae(omega(j), M).
struct StableTensorClass {
  int degree{0};
  Vec coords;
};

/// Cap product of an A-coefficient stable class with a stable tensor
/// class over M: transport across the syzygy-shift isomorphism, apply
/// the evaluation pairing, transport back.
StableTensorClass es_cap(const SyzygyChain& s, const ComplexWindow& schain,
                         const FrobeniusData& f, const StableClass& u,
                         const StableTensorClass& z, const Bimodule& m);

/// Diagonal approximation on a complete window: components
/// D^(n)_p : T_n -> T_{n-p} (x)_A T_p for |n| <= 2 board, with a recorded
/// validity region; built by the ascending/descending seam recursion and
/// chain extension, deterministically from the given seed.
struct DiagonalWindow {
  int D{0};
  TensorWindow target;
  std::vector<Mat> maps;        // maps[n + 2D] : T_n -> target comp n, |n| <= 2D
  std::vector<int> valid_lo, valid_hi;  // per level: slot range where the chain identity holds

  const Mat& map(int n) const { return maps[n + 2 * D]; }
};
DiagonalWindow diagonal_window(const CompleteWindow& t, int D, std::uint64_t seed = 0);

/// Window-route cup: u, v are hom-model cochains of degrees r, s over
/// M, N; the result is a degree-(r+s) hom-model cochain over M (x)_A N.
Vec cup_via_diagonal(const CompleteWindow& t, const DiagonalWindow& dw,
                     const HomComplexWindow& hm, const Bimodule& m, const Vec& u, int r,
                     const HomComplexWindow& hn, const Bimodule& n, const Vec& v, int s,
                     const TensorOverA& mn);

/// Window-route cap: u a hom-model cochain of degree r over M, z a
/// tensor-model chain of degree s over N; result at degree s - r over
/// M (x)_A N.
Vec cap_via_diagonal(const CompleteWindow& t, const DiagonalWindow& dw, const Bimodule& m,
                     const Mat& u_matrix, int r, const TensorComplexWindow& tn,
                     const Bimodule& n, const Vec& z, int s, const TensorOverA& mn);

/// The fundamental class in the stable tensor model of degree -1 with
/// coefficients twist(A, 1, nu^{-1}); normalized so that the canonical
/// degree-0 unit caps to it (asserted via es_cap).
struct FundamentalClass {
  StableTensorClass omega;  // degree -1 over twist(A, 1, nu^{-1})
  Bimodule coeff;
};
FundamentalClass fundamental_class(const Algebra& a, const FrobeniusData& f,
                                   const SyzygyChain& s, const ComplexWindow& schain,
                                   const CompleteWindow& t);

/// Matrix of (- cap omega) : H^n(A, M) -> H_{-n-1}(A, twist(M,1,nu^{-1}))
/// between the stable-route groups; throws unless it has full rank.
/// M must be A itself or reachable from A by the connecting isomorphisms
/// of the weakly-projective shift sequences (K(A) is).
struct DualityReport {
  int degree;
  int dim_source, dim_target;
  Mat matrix;
};
DualityReport duality_map(const Algebra& a, const FrobeniusData& f, const SyzygyChain& s,
                          const ComplexWindow& schain, const CompleteWindow& t,
                          const FundamentalClass& w, int n);
DualityReport duality_map_shifted(const Algebra& a, const FrobeniusData& f,
                                  const SyzygyChain& s, const ComplexWindow& schain,
                                  const CompleteWindow& t, const FundamentalClass& w, int n);

/// Structure constants of the Tate cohomology ring on basis classes of
/// degrees in [-D, D], with unit, associativity on all triples with
/// in-range sums, and graded commutativity asserted.
struct RingTable {
  int D{0};
  std::vector<int> dims;  // group dimension per degree -D..D
  // table[(i, a), (j, b)] -> coordinates of the product class
  std::vector<std::vector<std::vector<std::vector<Vec>>>> entries;
};
RingTable ring_table(const Algebra& a, const FrobeniusData& f, const SyzygyChain& s,
                     const ComplexWindow& schain, int D);

/// Classical cup/cap against their Tate extensions on the window route:
/// asserts the comparison squares for degree pairs up to (rmax, smax).
void verify_compatibility(const CompleteWindow& t, const DiagonalWindow& dw,
                          const BarWindow& bar, int rmax, int smax);

/// Chain comparison from the complete window to the syzygy complex,
/// lifting the identity of A, for degrees [-depth, depth].
ChainMapWindow window_to_syzygy(const CompleteWindow& t, const SyzygyChain& s,
                                const ComplexWindow& schain, int depth);

/// Window-route cocycle representing a stable class: the composite of
/// the comparison map with rep . pi_i, in hom-model coordinates.
Vec stable_to_window_cochain(const CompleteWindow& t, const SyzygyChain& s,
                             const ChainMapWindow& theta, const HomComplexWindow& hom,
                             const Bimodule& coeff, const StableClass& c);

/// dim H_i(A,A) = dim H_{-i-1}(A,A) and
/// dim H^i(A,A) = dim H^{-i-1}(A, twist(A,1,nu^2)) over [-range, range].
void verify_dual_dimensions(const TateFormulaEngine& eng, int range);

}  // namespace tatehoch
