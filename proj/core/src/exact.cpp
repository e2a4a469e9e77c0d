#include "tatehoch/exact.hpp"

#include <algorithm>

namespace tatehoch {

namespace {

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long mod_pos(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

long long inv_mod(long long a, long long p) {
  // extended Euclid
  long long t = 0, nt = 1, r = p, nr = mod_pos(a, p);
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw MathError("division by zero in F_p");
  return mod_pos(t, p);
}

long long to_ll(const Rat& x) {
  return static_cast<long long>(boost::multiprecision::numerator(x));
}

// Fast elimination path for prime fields: work on int64 copies.
struct FpView {
  long long p;
  int rows, cols;
  std::vector<long long> a;
  FpView(const Field& F, const Mat& m) : p(F.p), rows(m.rows), cols(m.cols), a(m.a.size()) {
    for (size_t i = 0; i < m.a.size(); ++i) a[i] = to_ll(m.a[i]);
  }
  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  Mat to_mat() const {
    Mat m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = Rat(a[i]);
    return m;
  }
};

RrefResult rref_fp(const Field& F, const Mat& m) {
  FpView v(F, m);
  const long long p = v.p;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < v.cols && r < v.rows; ++c) {
    int piv = -1;
    for (int i = r; i < v.rows; ++i)
      if (v.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < v.cols; ++j) std::swap(v.at(piv, j), v.at(r, j));
    long long s = inv_mod(v.at(r, c), p);
    for (int j = c; j < v.cols; ++j) v.at(r, j) = mod_pos(v.at(r, j) * s % p, p);
    for (int i = 0; i < v.rows; ++i) {
      if (i == r) continue;
      long long f = v.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < v.cols; ++j)
        v.at(i, j) = mod_pos(v.at(i, j) - f * v.at(r, j) % p, p);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{v.to_mat(), pivots};
}

RrefResult rref_q(const Field& F, const Mat& m) {
  Mat v = m;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < v.cols && r < v.rows; ++c) {
    int piv = -1;
    for (int i = r; i < v.rows; ++i)
      if (v.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < v.cols; ++j) std::swap(v.at(piv, j), v.at(r, j));
    Rat s = F.inv(v.at(r, c));
    for (int j = c; j < v.cols; ++j) v.at(r, j) = v.at(r, j) * s;
    for (int i = 0; i < v.rows; ++i) {
      if (i == r) continue;
      Rat f = v.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < v.cols; ++j) v.at(i, j) -= f * v.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(v), std::move(pivots)};
}

}  // namespace

Field Field::Fp(long long p) {
  if (!is_prime_ll(p)) throw MathError("modulus " + std::to_string(p) + " is not prime");
  return Field{Kind::prime, p};
}

Rat Field::reduce(const Rat& x) const {
  if (kind == Kind::rationals) return x;
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(x);
  cpp_int den = boost::multiprecision::denominator(x);
  cpp_int pp = p;
  cpp_int n = num % pp;
  if (n < 0) n += pp;
  if (den != 1) {
    cpp_int d = den % pp;
    if (d < 0) d += pp;
    long long di = inv_mod(static_cast<long long>(d), p);
    n = (n * di) % pp;
  }
  return Rat(n);
}

Rat Field::inv(const Rat& a) const {
  if (kind == Kind::rationals) {
    if (a == 0) throw MathError("division by zero in Q");
    return Rat(1) / a;
  }
  Rat r = reduce(a);
  if (r == 0) throw MathError("division by zero in F_p");
  return Rat(inv_mod(to_ll(r), p));
}

std::string Field::str() const {
  return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Vec vec_of(const std::vector<Rat>& entries) {
  Vec v(static_cast<int>(entries.size()), 1);
  for (size_t i = 0; i < entries.size(); ++i) v.a[i] = entries[i];
  return v;
}

Vec unit_vec(int n, int i) {
  Vec v(n, 1);
  v.at(i, 0) = 1;
  return v;
}

Mat mat_add(const Field& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw MathError("mat_add: shape mismatch");
  Mat C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.reduce(A.a[i] + B.a[i]);
  return C;
}

Mat mat_sub(const Field& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw MathError("mat_sub: shape mismatch");
  Mat C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.reduce(A.a[i] - B.a[i]);
  return C;
}

Mat mat_scale(const Field& F, const Rat& c, const Mat& A) {
  Mat C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.mul(c, A.a[i]);
  return C;
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw MathError("mat_mul: shape mismatch");
  Mat C(A.rows, B.cols);
  if (F.is_prime_field()) {
    const long long p = F.p;
    std::vector<long long> a(A.a.size()), b(B.a.size());
    for (size_t i = 0; i < A.a.size(); ++i) a[i] = to_ll(A.a[i]);
    for (size_t i = 0; i < B.a.size(); ++i) b[i] = to_ll(B.a[i]);
    for (int i = 0; i < A.rows; ++i)
      for (int k = 0; k < A.cols; ++k) {
        long long aik = a[static_cast<size_t>(i) * A.cols + k];
        if (aik == 0) continue;
        for (int j = 0; j < B.cols; ++j) {
          auto& cij = C.a[static_cast<size_t>(i) * B.cols + j];
          long long add = aik * b[static_cast<size_t>(k) * B.cols + j] % p;
          cij = Rat(mod_pos(to_ll(cij) + add, p));
        }
      }
    return C;
  }
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Rat& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

Mat mat_transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Mat mat_kron(const Field& F, const Mat& A, const Mat& B) {
  Mat C(A.rows * B.rows, A.cols * B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      if (A.at(i, j) == 0) continue;
      for (int k = 0; k < B.rows; ++k)
        for (int l = 0; l < B.cols; ++l)
          C.at(i * B.rows + k, j * B.cols + l) = F.mul(A.at(i, j), B.at(k, l));
    }
  return C;
}

Mat mat_vstack(const Mat& A, const Mat& B) {
  if (A.cols != B.cols) throw MathError("mat_vstack: column mismatch");
  Mat C(A.rows + B.rows, A.cols);
  std::copy(A.a.begin(), A.a.end(), C.a.begin());
  std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
  return C;
}

Mat mat_hstack(const Mat& A, const Mat& B) {
  if (A.rows != B.rows) throw MathError("mat_hstack: row mismatch");
  Mat C(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

Subspace Subspace::full(const Field&, int ambient) {
  return Subspace{ambient, Mat::identity(ambient)};
}

RrefResult rref(const Field& F, const Mat& m) {
  return F.is_prime_field() ? rref_fp(F, m) : rref_q(F, m);
}

int rank(const Field& F, const Mat& m) {
  return static_cast<int>(rref(F, m).pivots.size());
}

Subspace kernel(const Field& F, const Mat& m) {
  RrefResult rr = rref(F, m);
  const auto& piv = rr.pivots;
  std::vector<int> free_cols;
  {
    size_t t = 0;
    for (int c = 0; c < m.cols; ++c) {
      if (t < piv.size() && piv[t] == c) { ++t; continue; }
      free_cols.push_back(c);
    }
  }
  Mat basis(static_cast<int>(free_cols.size()), m.cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(static_cast<int>(k), fc) = 1;
    for (size_t r = 0; r < piv.size(); ++r)
      basis.at(static_cast<int>(k), piv[r]) = F.neg(rr.r.at(static_cast<int>(r), fc));
  }
  return Subspace{m.cols, std::move(basis)};
}

Subspace image(const Field& F, const Mat& m) {
  return row_space(F, mat_transpose(m));
}

Subspace row_space(const Field& F, const Mat& m) {
  RrefResult rr = rref(F, m);
  int rk = static_cast<int>(rr.pivots.size());
  Mat basis(rk, m.cols);
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < m.cols; ++j) basis.at(i, j) = rr.r.at(i, j);
  return Subspace{m.cols, std::move(basis)};
}

std::optional<Vec> solve(const Field& F, const Mat& m, const Vec& b) {
  auto X = solve_matrix(F, m, b);
  if (!X) return std::nullopt;
  return *X;
}

std::optional<Mat> solve_matrix(const Field& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows) throw MathError("solve_matrix: shape mismatch");
  RrefResult rr = rref(F, mat_hstack(A, B));
  // any pivot in the B block means inconsistency
  for (int c : rr.pivots)
    if (c >= A.cols) return std::nullopt;
  Mat X(A.cols, B.cols);
  for (size_t r = 0; r < rr.pivots.size(); ++r)
    for (int j = 0; j < B.cols; ++j)
      X.at(rr.pivots[r], j) = rr.r.at(static_cast<int>(r), A.cols + j);
  return X;
}

Mat mat_inverse(const Field& F, const Mat& m) {
  if (m.rows != m.cols) throw MathError("mat_inverse: not square");
  auto X = solve_matrix(F, m, Mat::identity(m.rows));
  if (!X || rank(F, m) != m.rows) throw MathError("mat_inverse: singular matrix");
  return *X;
}

bool subspace_contains(const Field& F, const Subspace& v, const Vec& x) {
  if (x.rows != v.ambient_dim) throw MathError("subspace_contains: ambient mismatch");
  return solve(F, mat_transpose(v.basis), x).has_value();
}

bool subspace_leq(const Field& F, const Subspace& w, const Subspace& v) {
  if (w.ambient_dim != v.ambient_dim) throw MathError("subspace_leq: ambient mismatch");
  Mat vt = mat_transpose(v.basis);
  for (int i = 0; i < w.dim(); ++i) {
    Vec x(w.ambient_dim, 1);
    for (int j = 0; j < w.ambient_dim; ++j) x.at(j, 0) = w.basis.at(i, j);
    if (!solve(F, vt, x)) return false;
  }
  return true;
}

Subspace subspace_sum(const Field& F, const Subspace& v, const Subspace& w) {
  if (v.ambient_dim != w.ambient_dim) throw MathError("subspace_sum: ambient mismatch");
  return row_space(F, mat_vstack(v.basis, w.basis));
}

Subspace intersect(const Field& F, const Subspace& v, const Subspace& w) {
  if (v.ambient_dim != w.ambient_dim) throw MathError("intersect: ambient mismatch");
  // x = a^T V = b^T W; solve [V^T | -W^T] (a;b) = 0 and read off a^T V.
  Mat lhs = mat_hstack(mat_transpose(v.basis), mat_scale(F, Rat(-1), mat_transpose(w.basis)));
  Subspace k = kernel(F, lhs);
  Mat cand(k.dim(), v.ambient_dim);
  for (int i = 0; i < k.dim(); ++i)
    for (int j = 0; j < v.ambient_dim; ++j) {
      Rat s = 0;
      for (int t = 0; t < v.dim(); ++t) s += k.basis.at(i, t) * v.basis.at(t, j);
      cand.at(i, j) = F.reduce(s);
    }
  return row_space(F, cand);
}

QuotientResult quotient(const Field& F, const Subspace& v, const Subspace& w) {
  if (v.ambient_dim != w.ambient_dim) throw MathError("quotient: ambient mismatch");
  if (!subspace_leq(F, w, v)) throw MathError("quotient: w is not contained in v");
  // extend a basis of w to a basis of v; the new vectors are coset reps
  RrefResult wr = rref(F, w.basis);
  Mat stacked = w.basis;
  std::vector<int> rep_rows;
  int cur_rank = w.dim();
  for (int i = 0; i < v.dim(); ++i) {
    Mat trial(cur_rank + 1, v.ambient_dim);
    for (int r = 0; r < cur_rank; ++r)
      for (int c = 0; c < v.ambient_dim; ++c) trial.at(r, c) = stacked.at(r, c);
    for (int c = 0; c < v.ambient_dim; ++c) trial.at(cur_rank, c) = v.basis.at(i, c);
    if (rank(F, trial) > cur_rank) {
      stacked = trial;
      rep_rows.push_back(i);
      ++cur_rank;
    }
  }
  int qdim = v.dim() - w.dim();
  Mat reps(qdim, v.ambient_dim);
  for (int i = 0; i < qdim; ++i)
    for (int c = 0; c < v.ambient_dim; ++c) reps.at(i, c) = v.basis.at(rep_rows[i], c);
  // Coordinate functionals on span(stacked): track the rref transformation
  // R = T * S with T invertible.  For x in the row space, x = b^T R with
  // b[i] = x[pivot_i], hence the S-coordinates are c = T^T b.
  Mat st = stacked;  // k x ambient, full row rank
  int k = st.rows;
  RrefResult rr2 = rref(F, mat_hstack(st, Mat::identity(k)));
  Mat T(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) T.at(i, j) = rr2.r.at(i, v.ambient_dim + j);
  std::vector<int> piv2;
  for (int c : rr2.pivots)
    if (c < v.ambient_dim) piv2.push_back(c);
  if (static_cast<int>(piv2.size()) != k) throw MathError("quotient: internal rank failure");
  Mat sel(k, v.ambient_dim);
  for (int i = 0; i < k; ++i) sel.at(i, piv2[i]) = 1;
  Mat C = mat_mul(F, mat_transpose(T), sel);  // k x ambient, C x = coords for x in span
  Mat proj(qdim, v.ambient_dim);
  for (int i = 0; i < qdim; ++i)
    for (int c = 0; c < v.ambient_dim; ++c) proj.at(i, c) = C.at(w.dim() + i, c);
  return QuotientResult{qdim, std::move(proj), std::move(reps)};
}

}  // namespace tatehoch
