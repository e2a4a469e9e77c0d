#pragma once

// Exact dense linear algebra over Q and prime fields F_p.
// Everything downstream routes its arithmetic through this header.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tatehoch {

using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an operation is called outside its mathematical domain
/// (dimension mismatch, non-prime modulus, subspace not contained, ...).
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ground field: the rationals or F_p for a prime p.
/// Elements are stored as Rat; over F_p they are kept as canonical
/// integer representatives in [0, p).
struct Field {
  enum class Kind { rationals, prime };
  Kind kind{Kind::rationals};
  long long p{0};

  static Field Q() { return Field{Kind::rationals, 0}; }
  static Field Fp(long long p);

  bool is_prime_field() const { return kind == Kind::prime; }
  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }

  Rat reduce(const Rat& x) const;
  Rat add(const Rat& a, const Rat& b) const { return reduce(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return reduce(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return reduce(a * b); }
  Rat neg(const Rat& a) const { return reduce(-a); }
  Rat inv(const Rat& a) const;
  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }
  bool is_zero(const Rat& a) const { return reduce(a) == 0; }

  std::string str() const;
};

/// Dense row-major matrix with exact entries.
struct Mat {
  int rows{0}, cols{0};
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat zero(int r, int c) { return Mat(r, c); }
  static Mat identity(int n);

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_zero() const;
};

/// A column vector is a rows x 1 Mat.
using Vec = Mat;

Vec vec_of(const std::vector<Rat>& entries);
Vec unit_vec(int n, int i);

Mat mat_add(const Field& F, const Mat& A, const Mat& B);
Mat mat_sub(const Field& F, const Mat& A, const Mat& B);
Mat mat_scale(const Field& F, const Rat& c, const Mat& A);
Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
/// Kronecker product (row-major block convention).
Mat mat_kron(const Field& F, const Mat& A, const Mat& B);
/// Stack B below A (equal column counts).
Mat mat_vstack(const Mat& A, const Mat& B);
/// Place B to the right of A (equal row counts).
Mat mat_hstack(const Mat& A, const Mat& B);

/// A subspace of k^ambient_dim; basis rows are linearly independent.
struct Subspace {
  int ambient_dim{0};
  Mat basis;  // dim x ambient_dim, full row rank

  int dim() const { return basis.rows; }
  static Subspace zero(int ambient) { return Subspace{ambient, Mat(0, ambient)}; }
  static Subspace full(const Field& F, int ambient);
};

struct RrefResult {
  Mat r;
  std::vector<int> pivots;
};

/// Reduced row-echelon form; pivot choice is the first nonzero entry,
/// so results are deterministic.
RrefResult rref(const Field& F, const Mat& m);

int rank(const Field& F, const Mat& m);

/// Basis of {x : m x = 0}, returned with basis vectors as rows.
Subspace kernel(const Field& F, const Mat& m);

/// Column space of m, basis vectors as rows (row-reduced).
Subspace image(const Field& F, const Mat& m);

/// Row space of m, row-reduced.
Subspace row_space(const Field& F, const Mat& m);

/// One exact solution of m x = b, or nullopt iff b is not in the image.
/// Free variables are set to zero, so the answer is deterministic.
std::optional<Vec> solve(const Field& F, const Mat& m, const Vec& b);

/// Solve A X = B columnwise; nullopt iff some column is unsolvable.
std::optional<Mat> solve_matrix(const Field& F, const Mat& A, const Mat& B);

/// Matrix inverse; throws MathError when singular.
Mat mat_inverse(const Field& F, const Mat& m);

bool subspace_contains(const Field& F, const Subspace& v, const Vec& x);
bool subspace_leq(const Field& F, const Subspace& w, const Subspace& v);
Subspace subspace_sum(const Field& F, const Subspace& v, const Subspace& w);
Subspace intersect(const Field& F, const Subspace& v, const Subspace& w);

/// Quotient v/w for w <= v.  proj maps ambient coordinates of an element
/// of v to its quotient coordinates; lift sends quotient coordinates to
/// the chosen coset representatives (rows of rep_basis).
struct QuotientResult {
  int dim{0};
  Mat proj;       // dim x ambient
  Mat rep_basis;  // dim x ambient, coset representatives
};
QuotientResult quotient(const Field& F, const Subspace& v, const Subspace& w);

}  // namespace tatehoch
