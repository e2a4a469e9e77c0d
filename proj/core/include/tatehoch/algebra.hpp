#pragma once

// Finite-dimensional unital associative algebras given by structure
// constants, together with Frobenius forms, dual bases, the Nakayama
// automorphism, enveloping algebras and Jacobson radicals.

#include <memory>
#include <string>
#include <vector>

#include "tatehoch/exact.hpp"

namespace tatehoch {

/// Basis element 0 is always the unit.  table[i][j] holds the
/// coordinate column of u_i * u_j.
struct Algebra {
  Field field;
  int dim{0};
  std::vector<std::string> basis_labels;
  std::vector<std::vector<Vec>> table;
  std::vector<Mat> lmat;  // lmat[i] = matrix of left multiplication by u_i
  std::vector<Mat> rmat;  // rmat[i] = matrix of right multiplication by u_i

  Vec mul_vec(const Vec& x, const Vec& y) const;
  Vec unit() const { return unit_vec(dim, 0); }
  /// Matrix of left multiplication by an arbitrary element.
  Mat left_mult(const Vec& x) const;
  Mat right_mult(const Vec& x) const;
  bool is_commutative() const;
};

/// Validating constructor: checks the unit axiom and associativity on
/// all basis triples.
Algebra make_algebra(const Field& field, std::vector<std::string> labels,
                     std::vector<std::vector<Vec>> table);

/// An algebra automorphism as an invertible coordinate matrix, checked
/// multiplicative and unital on construction.
struct Automorphism {
  Mat matrix;
};

Automorphism make_automorphism(const Algebra& a, Mat m);
Automorphism identity_automorphism(const Algebra& a);
Automorphism compose(const Algebra& a, const Automorphism& f, const Automorphism& g);
Automorphism inverse(const Algebra& a, const Automorphism& f);
bool is_identity(const Algebra& a, const Automorphism& f);

Algebra opposite(const Algebra& a);

/// A tensor A (x) A^op with basis u_i (x) u_j^op at index i*dim + j and
/// product (a (x) b^op)(c (x) d^op) = ac (x) (db)^op.
Algebra enveloping(const Algebra& a);

/// Frobenius structure determined by the functional lambda via
/// <a,b> := lambda(ab).
struct FrobeniusData {
  std::vector<Rat> lambda;  // dim scalars
  Mat gram;                 // gram[i][j] = lambda(u_i u_j)
  Mat dual_basis;           // rows are the v_i with <v_i, u_j> = delta_ij
  Automorphism nakayama;        // nu with <a,b> = <b, nu(a)>
  Automorphism nakayama_inv;
};

/// Throws MathError when the form is degenerate.
FrobeniusData frobenius(const Algebra& a, const std::vector<Rat>& lambda);

bool is_symmetric(const FrobeniusData& f);

struct RadicalData {
  Subspace basis;        // the Jacobson radical inside the algebra
  int nilpotency_index;  // smallest k with rad^k = 0 (1 when rad = 0)
};

/// Throws MathError("radical unavailable...") outside the supported
/// field range (see implementation notes).
RadicalData radical(const Algebra& a);

}  // namespace tatehoch
