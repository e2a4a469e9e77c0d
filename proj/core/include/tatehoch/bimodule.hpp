#pragma once

// A-bimodules as pairs of commuting action-matrix families, with the
// constructions the (co)homology engines consume: twists, tensor and Hom
// over A and over the enveloping algebra, k-duals, invariant/norm
// subspaces, weak projectivity, and the four standard shift sequences.

#include <vector>

#include "tatehoch/algebra.hpp"

namespace tatehoch {

struct Bimodule {
  const Algebra* alg{nullptr};
  int dim{0};
  std::vector<Mat> left;   // left[i]  = action of u_i on the left
  std::vector<Mat> right;  // right[i] = action of u_i on the right

  /// Large resolution components may skip materializing their action
  /// matrices; operations needing them must check first.
  bool has_actions() const { return !left.empty(); }
  const Field& field() const { return alg->field; }
  Mat left_mult(const Vec& x) const;   // action of an algebra element
  Mat right_mult(const Vec& x) const;
  /// Action of u_i (x) u_j^op, i.e. m -> u_i m u_j.
  Mat env_action(int i, int j) const { return mat_mul(alg->field, left[i], right[j]); }
};

/// Validating constructor: unit acts as identity, actions are algebra
/// (anti)homomorphisms, and left commutes with right.  Reports the first
/// failing basis pair.
Bimodule make_bimodule(const Algebra& a, std::vector<Mat> left, std::vector<Mat> right);

Bimodule zero_bimodule(const Algebra& a);
/// A itself with multiplication on either side.
Bimodule regular_bimodule(const Algebra& a);
/// A (x) A with the outer actions a(x (x) y)b = ax (x) yb; the rank-one
/// free module over the enveloping algebra.
Bimodule free_rank_one(const Algebra& a);

/// A map of bimodules; make_bimodule_map checks A^e-linearity.
struct BimoduleMap {
  Mat matrix;  // tgt.dim x src.dim
};
BimoduleMap make_bimodule_map(const Bimodule& src, const Bimodule& tgt, Mat m);
bool is_bimodule_map(const Bimodule& src, const Bimodule& tgt, const Mat& m);

/// Twisted bimodule: a * m * b := alpha(a) m beta(b) on the same space.
Bimodule twist(const Bimodule& m, const Automorphism& alpha, const Automorphism& beta);

struct SubBimodule {
  Bimodule space;
  Mat incl;  // big.dim x space.dim
};
SubBimodule sub_bimodule(const Bimodule& big, const Subspace& s);

struct QuoBimodule {
  Bimodule space;
  Mat proj;  // space.dim x big.dim
  Mat lift;  // big.dim x space.dim, coset representatives
};
QuoBimodule quo_bimodule(const Bimodule& big, const Subspace& s);

/// M (x)_A N: quotient of the k-tensor product by m a (x) n - m (x) a n.
/// Index convention on the ambient space: (m, n) -> m * dimN + n.
struct TensorOverA {
  Bimodule space;
  Mat proj;  // space.dim x (dimM * dimN)
  Mat lift;
};
TensorOverA tensor_over_A(const Bimodule& m, const Bimodule& n);

/// M (x)_{A^e} N: plain vector space quotient (no residual actions).
struct TensorOverAe {
  int dim{0};
  Mat proj;
  Mat lift;
};
TensorOverAe tensor_over_Ae(const Bimodule& m, const Bimodule& n);

/// Basis of Hom_{A^e}(M, N) as matrices.
std::vector<Mat> hom_Ae_basis(const Bimodule& m, const Bimodule& n);

/// D(M) = Hom_k(M, k) with (a f)(x) = f(x a), (f a)(x) = f(a x).
Bimodule k_dual(const Bimodule& m);

struct InvariantSpaces {
  Subspace M_A;      // {m : am = ma}
  Subspace N_image;  // image of the norm m -> sum_i u_i m v_i
  Subspace N_kernel; // kernel of the norm
  Subspace I_space;  // span{m nu^{-1}(a) - a m}
  Mat norm;          // the norm map as a matrix
};
InvariantSpaces invariant_spaces(const Bimodule& m, const FrobeniusData& f);

/// Solvability of sum_i u_i g v_i = id over one-sided A-linear g.
bool is_weakly_projective(const Bimodule& m, const FrobeniusData& f);

struct ShortExactSeq {
  Bimodule sub, mid, quo;
  Mat inj;   // mid.dim x sub.dim
  Mat surj;  // quo.dim x mid.dim
};

/// The four shift sequences with weakly projective middle terms:
/// 0 -> K(M) -> A(x)M -> M -> 0,     0 -> K'(M) -> M(x)A -> M -> 0,
/// 0 -> M -> Hom_k(A,M)_r -> C(M) -> 0,  0 -> M -> Hom_k(A,M)_l -> C'(M) -> 0.
struct ShiftSequences {
  ShortExactSeq K, Kp, C, Cp;
};
ShiftSequences shift_sequences(const Bimodule& m, const FrobeniusData& f);

/// Exactness check for a short exact sequence of bimodules.
bool is_short_exact(const ShortExactSeq& s);

}  // namespace tatehoch
