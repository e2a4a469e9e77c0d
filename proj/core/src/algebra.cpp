#include "tatehoch/algebra.hpp"

#include <sstream>

namespace tatehoch {

Vec Algebra::mul_vec(const Vec& x, const Vec& y) const {
  Vec out(dim, 1);
  for (int i = 0; i < dim; ++i) {
    if (x.at(i, 0) == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y.at(j, 0) == 0) continue;
      Rat c = field.mul(x.at(i, 0), y.at(j, 0));
      for (int k = 0; k < dim; ++k)
        out.at(k, 0) = field.add(out.at(k, 0), field.mul(c, table[i][j].at(k, 0)));
    }
  }
  return out;
}

Mat Algebra::left_mult(const Vec& x) const {
  Mat m = Mat::zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    if (x.at(i, 0) != 0) m = mat_add(field, m, mat_scale(field, x.at(i, 0), lmat[i]));
  return m;
}

Mat Algebra::right_mult(const Vec& x) const {
  Mat m = Mat::zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    if (x.at(i, 0) != 0) m = mat_add(field, m, mat_scale(field, x.at(i, 0), rmat[i]));
  return m;
}

bool Algebra::is_commutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (!(table[i][j] == table[j][i])) return false;
  return true;
}

Algebra make_algebra(const Field& field, std::vector<std::string> labels,
                     std::vector<std::vector<Vec>> table) {
  int d = static_cast<int>(labels.size());
  if (d <= 0) throw MathError("algebra must have positive dimension");
  if (static_cast<int>(table.size()) != d) throw MathError("table has wrong shape");
  for (auto& row : table) {
    if (static_cast<int>(row.size()) != d) throw MathError("table has wrong shape");
    for (auto& v : row) {
      if (v.rows != d || v.cols != 1) throw MathError("table entry has wrong shape");
      for (auto& x : v.a) x = field.reduce(x);
    }
  }

  Algebra a;
  a.field = field;
  a.dim = d;
  a.basis_labels = std::move(labels);
  a.table = std::move(table);

  // unit axiom: basis element 0 is a two-sided unit
  for (int i = 0; i < d; ++i) {
    if (!(a.table[0][i] == unit_vec(d, i)))
      throw MathError("basis element 0 is not a left unit at index " + std::to_string(i));
    if (!(a.table[i][0] == unit_vec(d, i)))
      throw MathError("basis element 0 is not a right unit at index " + std::to_string(i));
  }

  a.lmat.resize(d);
  a.rmat.resize(d);
  for (int i = 0; i < d; ++i) {
    Mat L(d, d), R(d, d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        L.at(k, j) = a.table[i][j].at(k, 0);  // u_i * u_j
        R.at(k, j) = a.table[j][i].at(k, 0);  // u_j * u_i
      }
    a.lmat[i] = std::move(L);
    a.rmat[i] = std::move(R);
  }

  // associativity on all basis triples
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec lhs = a.mul_vec(a.table[i][j], unit_vec(d, k));
        Vec rhs = a.mul_vec(unit_vec(d, i), a.table[j][k]);
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "associativity fails on basis triple (" << i << "," << j << "," << k << ")";
          throw MathError(os.str());
        }
      }
  return a;
}

Automorphism make_automorphism(const Algebra& a, Mat m) {
  if (m.rows != a.dim || m.cols != a.dim) throw MathError("automorphism has wrong shape");
  if (rank(a.field, m) != a.dim) throw MathError("automorphism matrix is singular");
  Vec one = a.unit();
  if (!(mat_mul(a.field, m, one) == one)) throw MathError("automorphism does not fix the unit");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec lhs = mat_mul(a.field, m, a.table[i][j]);
      Vec rhs = a.mul_vec(mat_mul(a.field, m, unit_vec(a.dim, i)),
                          mat_mul(a.field, m, unit_vec(a.dim, j)));
      if (!(lhs == rhs))
        throw MathError("automorphism is not multiplicative on basis pair (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return Automorphism{std::move(m)};
}

Automorphism identity_automorphism(const Algebra& a) {
  return Automorphism{Mat::identity(a.dim)};
}

Automorphism compose(const Algebra& a, const Automorphism& f, const Automorphism& g) {
  return Automorphism{mat_mul(a.field, f.matrix, g.matrix)};
}

Automorphism inverse(const Algebra& a, const Automorphism& f) {
  return Automorphism{mat_inverse(a.field, f.matrix)};
}

bool is_identity(const Algebra& a, const Automorphism& f) {
  return f.matrix == Mat::identity(a.dim);
}

Algebra opposite(const Algebra& a) {
  std::vector<std::vector<Vec>> t(a.dim, std::vector<Vec>(a.dim));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) t[i][j] = a.table[j][i];
  auto labels = a.basis_labels;
  return make_algebra(a.field, std::move(labels), std::move(t));
}

Algebra enveloping(const Algebra& a) {
  int d = a.dim, D = d * d;
  auto idx = [d](int i, int j) { return i * d + j; };
  std::vector<std::string> labels(D);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      labels[idx(i, j)] = a.basis_labels[i] + "(x)" + a.basis_labels[j] + "^o";

  std::vector<std::vector<Vec>> t(D, std::vector<Vec>(D, Vec(D, 1)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          // (u_i (x) u_j^o)(u_k (x) u_l^o) = u_i u_k (x) (u_l u_j)^o
          const Vec& ik = a.table[i][k];
          const Vec& lj = a.table[l][j];
          Vec out(D, 1);
          for (int p = 0; p < d; ++p) {
            if (ik.at(p, 0) == 0) continue;
            for (int q = 0; q < d; ++q) {
              if (lj.at(q, 0) == 0) continue;
              out.at(idx(p, q), 0) =
                  a.field.add(out.at(idx(p, q), 0), a.field.mul(ik.at(p, 0), lj.at(q, 0)));
            }
          }
          t[idx(i, j)][idx(k, l)] = std::move(out);
        }
  return make_algebra(a.field, std::move(labels), std::move(t));
}

FrobeniusData frobenius(const Algebra& a, const std::vector<Rat>& lambda) {
  if (static_cast<int>(lambda.size()) != a.dim)
    throw MathError("frobenius functional has wrong length");
  const Field& F = a.field;
  FrobeniusData f;
  f.lambda = lambda;
  for (auto& x : f.lambda) x = F.reduce(x);

  auto pair = [&](const Vec& x, const Vec& y) {
    Vec xy = a.mul_vec(x, y);
    Rat s = 0;
    for (int k = 0; k < a.dim; ++k) s += f.lambda[k] * xy.at(k, 0);
    return F.reduce(s);
  };

  Mat G(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) G.at(i, j) = pair(unit_vec(a.dim, i), unit_vec(a.dim, j));
  if (rank(F, G) != a.dim) throw MathError("frobenius form is degenerate");
  f.gram = G;

  // associativity of the form is automatic for <a,b> = lambda(ab); assert anyway
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) {
        Rat lhs = pair(a.table[i][j], unit_vec(a.dim, k));
        Rat rhs = pair(unit_vec(a.dim, i), a.table[j][k]);
        if (lhs != rhs) throw MathError("frobenius form is not associative");
      }

  // dual basis rows: D G = I
  f.dual_basis = mat_inverse(F, G);
  // check <v_i, u_j> = delta_ij
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec vi(a.dim, 1);
      for (int k = 0; k < a.dim; ++k) vi.at(k, 0) = f.dual_basis.at(i, k);
      Rat val = pair(vi, unit_vec(a.dim, j));
      if (val != (i == j ? Rat(1) : Rat(0)))
        throw MathError("dual basis construction failed");
    }

  // Nakayama automorphism from G C = G^T, i.e. <u_j, nu(u_i)> = <u_i, u_j>.
  Mat C = mat_mul(F, mat_inverse(F, G), mat_transpose(G));
  f.nakayama = make_automorphism(a, C);  // throws if the solved map is not an automorphism
  f.nakayama_inv = inverse(a, f.nakayama);

  // <a,b> = <b, nu(a)> on all basis pairs
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec nui = mat_mul(F, f.nakayama.matrix, unit_vec(a.dim, i));
      if (pair(unit_vec(a.dim, i), unit_vec(a.dim, j)) != pair(unit_vec(a.dim, j), nui))
        throw MathError("nakayama identity fails");
    }
  return f;
}

bool is_symmetric(const FrobeniusData& f) {
  return f.gram == mat_transpose(f.gram);
}

namespace {

// Trace-form radical: rad = {x : trace(L_{x u_j}) = 0 for all j}.
Subspace radical_trace_form(const Algebra& a) {
  const Field& F = a.field;
  Mat sys(a.dim, a.dim);
  // row j, column i: trace(L_{u_i u_j})
  for (int j = 0; j < a.dim; ++j)
    for (int i = 0; i < a.dim; ++i) {
      Mat L = a.left_mult(a.table[i][j]);
      Rat tr = 0;
      for (int k = 0; k < a.dim; ++k) tr += L.at(k, k);
      sys.at(j, i) = F.reduce(tr);
    }
  return kernel(F, sys);
}

// For commutative algebras over a prime field the radical is the set of
// nilpotents, which is the kernel of x -> x^{p^m} once p^m >= dim.  The
// p-power map is linear over the prime field.
Subspace radical_frobenius_kernel(const Algebra& a) {
  const Field& F = a.field;
  long long p = F.p;
  // matrix of x -> x^p
  Mat P(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i) {
    Vec x = unit_vec(a.dim, i);
    Vec acc = x;
    for (long long t = 1; t < p; ++t) acc = a.mul_vec(acc, x);
    for (int k = 0; k < a.dim; ++k) P.at(k, i) = acc.at(k, 0);
  }
  // iterate the map by squaring its matrix: x -> x^{p^{2^t}}
  Mat M = P;
  long long q = p;
  while (q < a.dim) {
    M = mat_mul(F, M, M);  // note: (x^{p^t})^{p^t} = x^{p^{2t}}
    q = q * q;
  }
  return kernel(F, M);
}

}  // namespace

RadicalData radical(const Algebra& a) {
  const Field& F = a.field;
  Subspace rad;
  if (!F.is_prime_field() || F.p > a.dim) {
    rad = radical_trace_form(a);
  } else if (a.is_commutative()) {
    rad = radical_frobenius_kernel(a);
  } else {
    throw MathError("radical unavailable: field F" + std::to_string(F.p) +
                    " with p <= dim and noncommutative algebra");
  }

  // verify two-sided ideal
  for (int i = 0; i < a.dim; ++i)
    for (int r = 0; r < rad.dim(); ++r) {
      Vec x(a.dim, 1);
      for (int k = 0; k < a.dim; ++k) x.at(k, 0) = rad.basis.at(r, k);
      if (!subspace_contains(F, rad, a.mul_vec(unit_vec(a.dim, i), x)) ||
          !subspace_contains(F, rad, a.mul_vec(x, unit_vec(a.dim, i))))
        throw MathError("radical candidate is not a two-sided ideal");
    }

  // nilpotency index: iterate rad^{k+1} = rad^k * rad until zero
  int index = 1;
  Subspace power = rad;
  while (power.dim() > 0) {
    if (index > a.dim + 1) throw MathError("radical candidate is not nilpotent");
    std::vector<Vec> prods;
    for (int r = 0; r < power.dim(); ++r)
      for (int s = 0; s < rad.dim(); ++s) {
        Vec x(a.dim, 1), y(a.dim, 1);
        for (int k = 0; k < a.dim; ++k) x.at(k, 0) = power.basis.at(r, k);
        for (int k = 0; k < a.dim; ++k) y.at(k, 0) = rad.basis.at(s, k);
        prods.push_back(a.mul_vec(x, y));
      }
    Mat span(static_cast<int>(prods.size()), a.dim);
    for (size_t t = 0; t < prods.size(); ++t)
      for (int k = 0; k < a.dim; ++k) span.at(static_cast<int>(t), k) = prods[t].at(k, 0);
    power = row_space(F, span);
    ++index;
  }
  return RadicalData{rad, rad.dim() == 0 ? 1 : index};
}

}  // namespace tatehoch
