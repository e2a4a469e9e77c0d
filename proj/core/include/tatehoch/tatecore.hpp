#pragma once

// Tate-Hochschild machinery: the complete bar window, the degree-formula
// engine for Tate (co)homology, the norm exact sequence, syzygy chains
// with stable Hom/tensor (the second engine), minimality checking, and
// the vanishing/shift/twist verification routines.

#include "tatehoch/bar.hpp"

namespace tatehoch {

/// Radical of the enveloping algebra as a subspace of A (x) A
/// coordinates (index (i, j) -> i * dimA + j).
Subspace enveloping_radical(const Algebra& a);

/// Greedy generating set of a bimodule over the enveloping algebra:
/// lifts of a top basis, discarding anything already generated.
std::vector<Vec> env_generators(const Bimodule& x, const Subspace& env_rad);

/// Free cover (A^e)^r -> target on a greedily minimized generating set,
/// with the free structure of the cover recorded.
struct FreeCover {
  Bimodule space;
  FreeStructure fs;
  Mat pi;
  int rank{0};
};
FreeCover free_cover(const Bimodule& target, const Subspace& env_rad);

/// A window [-W, W] of the complete bar resolution: bar components in
/// non-negative degrees, twisted duals of bar components below zero.
struct CompleteWindow {
  ComplexWindow cx;
  FrobeniusData frob;
  int W{0};
  std::string provenance{"complete-bar"};
};

/// Builds the window and verifies every defining invariant: d^2 = 0,
/// d_0 = eta eps, exactness at all interior degrees, exactness of the
/// A^e-dual window, and recorded free structure on every component.
CompleteWindow complete_bar_window(const Algebra& a, const FrobeniusData& f, int W,
                                   int action_dim_limit = 256);

/// A Tate (co)homology group with chosen representatives; the encoding
/// of `reps` rows depends on the engine that produced it.
struct TateGroup {
  int degree{0};
  int dim{0};
  Mat reps;
};

/// Degree-formula engine: positive degrees through the bar window,
/// degrees 0 and -1 through the norm-map subquotients, degrees below -1
/// through twisted Hochschild homology (and dually for homology).
struct TateFormulaEngine {
  const Algebra* a{nullptr};
  FrobeniusData f;
  BarWindow bar;
  int W{0};

  TateGroup cohomology(const Bimodule& m, int n) const;
  TateGroup homology(const Bimodule& m, int n) const;
};

TateFormulaEngine make_formula_engine(const Algebra& a, const FrobeniusData& f, int W);

struct NormSequenceReport {
  int dim_h_minus1;   // kernel-side Tate group
  int dim_h0_lower;   // H_0(A, M twisted)
  int dim_h0_upper;   // H^0(A, M)
  int dim_h0_tate;    // cokernel-side Tate group
  int norm_rank;
};

/// Asserts exactness of the four-term norm sequence for M and returns
/// the dimensions; throws on any failure.
NormSequenceReport verify_norm_sequence(const Algebra& a, const FrobeniusData& f,
                                        const Bimodule& m);

/// Syzygy chain of A over the enveloping algebra: free covers with
/// greedily minimized generating sets going up, dual embeddings into
/// injectives going down.
struct SyzygyChain {
  const Algebra* a{nullptr};
  int W{0};
  std::vector<Bimodule> omega_pos;  // Omega^0 = A .. Omega^W
  std::vector<Bimodule> free_pos;   // F_0 .. F_{W-1}, F_i covers Omega^i
  std::vector<int> rank_pos;
  std::vector<Mat> pi_pos;    // F_i -> Omega^i
  std::vector<Mat> iota_pos;  // Omega^{i+1} -> F_i
  std::vector<Bimodule> omega_neg;  // Omega^{-1} .. Omega^{-W}
  std::vector<Bimodule> inj_neg;    // I_0 .. I_{W-1}; Omega^{-i} embeds in I_i
  std::vector<int> rank_neg;
  std::vector<Mat> emb_neg;  // Omega^{-i} -> I_i   (i = 0 embeds A)
  std::vector<Mat> quo_neg;  // I_i -> Omega^{-i-1}

  const Bimodule& omega(int i) const;
};

SyzygyChain syzygies(const Algebra& a, int W);

struct StableHom {
  int dim{0};
  std::vector<Mat> reps;  // representative A^e-linear maps
  Mat proj;               // hom-coefficient coordinates -> quotient coordinates
  std::vector<Mat> hom_basis;
};

/// Hom over A^e modulo maps factoring through a free cover of the target.
StableHom stable_hom(const Bimodule& m, const Bimodule& n);

struct StableTensor {
  int dim{0};
  Mat basis;  // rows: elements of the stable subspace in tensor coordinates
  TensorOverAe amb;
};

/// Elements of M (x)_{A^e} N killed by id (x) iota for an injective
/// embedding of N (the dual of a free cover of D(N)); pass alt = true to
/// recompute with a second, redundant embedding.
StableTensor stable_tensor(const Bimodule& m, const Bimodule& n, bool alt = false);

/// Stable-route engine.
TateGroup tate_via_stable(const SyzygyChain& syz, const Bimodule& m, int n);
TateGroup tate_homology_via_stable(const SyzygyChain& syz, const Bimodule& m, int n);

/// Per-degree cover criterion: degree n is minimal iff the image of
/// d_{n+1} lies inside rad(A^e) T_n.  Computed for interior degrees with
/// materialized actions.
std::vector<std::pair<int, bool>> minimality_check(const CompleteWindow& t);

/// Asserts vanishing of all Tate groups of a weakly projective bimodule
/// on [-range, range]; throws otherwise.
void verify_weak_projective_vanishing(const TateFormulaEngine& eng, const Bimodule& m,
                                      int range);

/// Dimension-shift identities through the K(M) and C(M) sequences.
void verify_dimension_shift(const TateFormulaEngine& eng, const Bimodule& m, int range);

/// Twisted-coefficient Ext identity via the stable engine:
/// dim Ext^(twist(A,alpha,alpha), N) = dim Ext^(A, twist(N,inv,inv)).
void verify_twist_ext(const SyzygyChain& syz, const Algebra& a, const Bimodule& n,
                      const Automorphism& alpha, int range);

}  // namespace tatehoch
