#include "tatehoch/bimodule.hpp"

#include <string>

namespace tatehoch {

namespace {

// Row-major flattening: vec(X)[i * X.cols + j] = X[i][j], so that
// vec(A X B) = (A kron B^T) vec(X).
Mat conj_kron(const Field& F, const Mat& A, const Mat& B) {
  return mat_kron(F, A, mat_transpose(B));
}

Mat flatten_rows(const std::vector<Vec>& cols, int n) {
  Mat m(static_cast<int>(cols.size()), n);
  for (size_t i = 0; i < cols.size(); ++i)
    for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = cols[i].at(j, 0);
  return m;
}

}  // namespace

Mat Bimodule::left_mult(const Vec& x) const {
  Mat m = Mat::zero(dim, dim);
  for (int i = 0; i < alg->dim; ++i)
    if (x.at(i, 0) != 0) m = mat_add(alg->field, m, mat_scale(alg->field, x.at(i, 0), left[i]));
  return m;
}

Mat Bimodule::right_mult(const Vec& x) const {
  Mat m = Mat::zero(dim, dim);
  for (int i = 0; i < alg->dim; ++i)
    if (x.at(i, 0) != 0) m = mat_add(alg->field, m, mat_scale(alg->field, x.at(i, 0), right[i]));
  return m;
}

Bimodule make_bimodule(const Algebra& a, std::vector<Mat> left, std::vector<Mat> right) {
  const Field& F = a.field;
  if (static_cast<int>(left.size()) != a.dim || static_cast<int>(right.size()) != a.dim)
    throw MathError("bimodule needs one action matrix per algebra basis element");
  int d = left.empty() ? 0 : left[0].rows;
  for (auto& m : left)
    if (m.rows != d || m.cols != d) throw MathError("bimodule action matrices must be square");
  for (auto& m : right)
    if (m.rows != d || m.cols != d) throw MathError("bimodule action matrices must be square");

  Bimodule b;
  b.alg = &a;
  b.dim = d;
  b.left = std::move(left);
  b.right = std::move(right);

  if (!(b.left[0] == Mat::identity(d)))
    throw MathError("bimodule: unit does not act as identity on the left");
  if (!(b.right[0] == Mat::identity(d)))
    throw MathError("bimodule: unit does not act as identity on the right");

  auto fail = [](const char* what, int i, int j) {
    throw MathError(std::string("bimodule: ") + what + " fails on basis pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
  };
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      // L_i L_j = L_{u_i u_j}
      if (!(mat_mul(F, b.left[i], b.left[j]) == b.left_mult(a.table[i][j])))
        fail("left multiplicativity", i, j);
      // R_j R_i = R_{u_i u_j}
      if (!(mat_mul(F, b.right[j], b.right[i]) == b.right_mult(a.table[i][j])))
        fail("right multiplicativity", i, j);
      if (!(mat_mul(F, b.left[i], b.right[j]) == mat_mul(F, b.right[j], b.left[i])))
        fail("left/right commutation", i, j);
    }
  return b;
}

Bimodule zero_bimodule(const Algebra& a) {
  std::vector<Mat> l(a.dim, Mat(0, 0)), r(a.dim, Mat(0, 0));
  Bimodule b;
  b.alg = &a;
  b.dim = 0;
  b.left = std::move(l);
  b.right = std::move(r);
  return b;
}

Bimodule regular_bimodule(const Algebra& a) {
  return make_bimodule(a, a.lmat, a.rmat);
}

Bimodule free_rank_one(const Algebra& a) {
  const Field& F = a.field;
  std::vector<Mat> l(a.dim), r(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    l[i] = mat_kron(F, a.lmat[i], Mat::identity(a.dim));
    r[i] = mat_kron(F, Mat::identity(a.dim), a.rmat[i]);
  }
  return make_bimodule(a, std::move(l), std::move(r));
}

bool is_bimodule_map(const Bimodule& src, const Bimodule& tgt, const Mat& m) {
  const Field& F = src.field();
  if (m.rows != tgt.dim || m.cols != src.dim) return false;
  for (int i = 1; i < src.alg->dim; ++i) {
    if (!(mat_mul(F, m, src.left[i]) == mat_mul(F, tgt.left[i], m))) return false;
    if (!(mat_mul(F, m, src.right[i]) == mat_mul(F, tgt.right[i], m))) return false;
  }
  return true;
}

BimoduleMap make_bimodule_map(const Bimodule& src, const Bimodule& tgt, Mat m) {
  if (!is_bimodule_map(src, tgt, m)) throw MathError("matrix is not A^e-linear");
  return BimoduleMap{std::move(m)};
}

Bimodule twist(const Bimodule& m, const Automorphism& alpha, const Automorphism& beta) {
  const Field& F = m.field();
  int da = m.alg->dim;
  std::vector<Mat> l(da, Mat::zero(m.dim, m.dim)), r(da, Mat::zero(m.dim, m.dim));
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < da; ++k) {
      const Rat& ca = alpha.matrix.at(k, i);
      if (ca != 0) l[i] = mat_add(F, l[i], mat_scale(F, ca, m.left[k]));
      const Rat& cb = beta.matrix.at(k, i);
      if (cb != 0) r[i] = mat_add(F, r[i], mat_scale(F, cb, m.right[k]));
    }
  }
  return make_bimodule(*m.alg, std::move(l), std::move(r));
}

SubBimodule sub_bimodule(const Bimodule& big, const Subspace& s) {
  const Field& F = big.field();
  Mat incl = mat_transpose(s.basis);  // big.dim x s.dim
  int da = big.alg->dim;
  std::vector<Mat> l(da), r(da);
  for (int i = 0; i < da; ++i) {
    auto li = solve_matrix(F, incl, mat_mul(F, big.left[i], incl));
    auto ri = solve_matrix(F, incl, mat_mul(F, big.right[i], incl));
    if (!li || !ri) throw MathError("subspace is not a sub-bimodule");
    l[i] = *li;
    r[i] = *ri;
  }
  SubBimodule out;
  out.space = make_bimodule(*big.alg, std::move(l), std::move(r));
  out.incl = std::move(incl);
  return out;
}

QuoBimodule quo_bimodule(const Bimodule& big, const Subspace& s) {
  const Field& F = big.field();
  auto qr = quotient(F, Subspace::full(F, big.dim), s);
  Mat lift = mat_transpose(qr.rep_basis);  // big.dim x q
  int da = big.alg->dim;
  std::vector<Mat> l(da), r(da);
  for (int i = 0; i < da; ++i) {
    l[i] = mat_mul(F, qr.proj, mat_mul(F, big.left[i], lift));
    r[i] = mat_mul(F, qr.proj, mat_mul(F, big.right[i], lift));
    // well-definedness: the action must preserve s
    for (int row = 0; row < s.dim(); ++row) {
      Vec x(big.dim, 1);
      for (int k = 0; k < big.dim; ++k) x.at(k, 0) = s.basis.at(row, k);
      if (!mat_mul(F, qr.proj, mat_mul(F, big.left[i], x)).is_zero() ||
          !mat_mul(F, qr.proj, mat_mul(F, big.right[i], x)).is_zero())
        throw MathError("subspace is not action-invariant; quotient undefined");
    }
  }
  QuoBimodule out;
  out.space = make_bimodule(*big.alg, std::move(l), std::move(r));
  out.proj = qr.proj;
  out.lift = std::move(lift);
  return out;
}

TensorOverA tensor_over_A(const Bimodule& m, const Bimodule& n) {
  if (m.alg != n.alg) throw MathError("tensor_over_A: different algebras");
  const Field& F = m.field();
  const Algebra& a = *m.alg;
  int dm = m.dim, dn = n.dim, D = dm * dn;
  // relations (m a) (x) n - m (x) (a n) over the big space
  std::vector<Vec> rel;
  for (int i = 1; i < a.dim; ++i) {
    Mat rel_i = mat_sub(F, mat_kron(F, m.right[i], Mat::identity(dn)),
                        mat_kron(F, Mat::identity(dm), n.left[i]));
    for (int c = 0; c < D; ++c) {
      Vec v(D, 1);
      bool nz = false;
      for (int r2 = 0; r2 < D; ++r2) {
        v.at(r2, 0) = rel_i.at(r2, c);
        nz = nz || v.at(r2, 0) != 0;
      }
      if (nz) rel.push_back(std::move(v));
    }
  }
  Subspace relspan = row_space(F, flatten_rows(rel, D));

  // ambient actions descend: left from m, right from n
  Bimodule big;
  big.alg = m.alg;
  big.dim = D;
  big.left.resize(a.dim);
  big.right.resize(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    big.left[i] = mat_kron(F, m.left[i], Mat::identity(dn));
    big.right[i] = mat_kron(F, Mat::identity(dm), n.right[i]);
  }
  auto q = quo_bimodule(big, relspan);
  return TensorOverA{std::move(q.space), std::move(q.proj), std::move(q.lift)};
}

TensorOverAe tensor_over_Ae(const Bimodule& m, const Bimodule& n) {
  if (m.alg != n.alg) throw MathError("tensor_over_Ae: different algebras");
  const Field& F = m.field();
  const Algebra& a = *m.alg;
  int dm = m.dim, dn = n.dim, D = dm * dn;
  // m (a(x)b^o) (x) n - m (x) (a(x)b^o) n with the right A^e-structure
  // on m given by m (a(x)b^o) = b m a
  std::vector<Vec> rel;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      if (i == 0 && j == 0) continue;
      Mat lhs = mat_kron(F, m.env_action(j, i), Mat::identity(dn));
      Mat rhs = mat_kron(F, Mat::identity(dm), n.env_action(i, j));
      Mat rel_ij = mat_sub(F, lhs, rhs);
      for (int c = 0; c < D; ++c) {
        Vec v(D, 1);
        bool nz = false;
        for (int r2 = 0; r2 < D; ++r2) {
          v.at(r2, 0) = rel_ij.at(r2, c);
          nz = nz || v.at(r2, 0) != 0;
        }
        if (nz) rel.push_back(std::move(v));
      }
    }
  Subspace relspan = row_space(F, flatten_rows(rel, D));
  auto qr = quotient(F, Subspace::full(F, D), relspan);
  return TensorOverAe{qr.dim, qr.proj, mat_transpose(qr.rep_basis)};
}

std::vector<Mat> hom_Ae_basis(const Bimodule& m, const Bimodule& n) {
  if (m.alg != n.alg) throw MathError("hom_Ae_basis: different algebras");
  const Field& F = m.field();
  const Algebra& a = *m.alg;
  int dm = m.dim, dn = n.dim;
  if (dm == 0 || dn == 0) return {};
  // unknown f: n.dim x m.dim, constraints f L_i = L_i f and f R_i = R_i f
  std::vector<Mat> blocks;
  for (int i = 1; i < a.dim; ++i) {
    blocks.push_back(mat_sub(F, conj_kron(F, Mat::identity(dn), m.left[i]),
                             conj_kron(F, n.left[i], Mat::identity(dm))));
    blocks.push_back(mat_sub(F, conj_kron(F, Mat::identity(dn), m.right[i]),
                             conj_kron(F, n.right[i], Mat::identity(dm))));
  }
  Mat sys(0, dn * dm);
  for (auto& b : blocks) sys = mat_vstack(sys, b);
  Subspace k = kernel(F, sys);
  std::vector<Mat> out;
  for (int r = 0; r < k.dim(); ++r) {
    Mat f(dn, dm);
    for (int i = 0; i < dn; ++i)
      for (int j = 0; j < dm; ++j) f.at(i, j) = k.basis.at(r, i * dm + j);
    out.push_back(std::move(f));
  }
  return out;
}

Bimodule k_dual(const Bimodule& m) {
  const Algebra& a = *m.alg;
  std::vector<Mat> l(a.dim), r(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    l[i] = mat_transpose(m.right[i]);
    r[i] = mat_transpose(m.left[i]);
  }
  return make_bimodule(a, std::move(l), std::move(r));
}

InvariantSpaces invariant_spaces(const Bimodule& m, const FrobeniusData& f) {
  const Field& F = m.field();
  const Algebra& a = *m.alg;

  // M^A: common kernel of L_i - R_i
  Mat stacked(0, m.dim);
  for (int i = 1; i < a.dim; ++i)
    stacked = mat_vstack(stacked, mat_sub(F, m.left[i], m.right[i]));
  Subspace MA = m.dim == 0 ? Subspace::zero(0) : kernel(F, stacked);

  // norm: m -> sum_i u_i m v_i
  Mat N = Mat::zero(m.dim, m.dim);
  for (int i = 0; i < a.dim; ++i) {
    Vec vi(a.dim, 1);
    for (int k = 0; k < a.dim; ++k) vi.at(k, 0) = f.dual_basis.at(i, k);
    N = mat_add(F, N, mat_mul(F, m.left[i], m.right_mult(vi)));
  }

  // I = span{m nu^{-1}(a) - a m}
  std::vector<Vec> gens;
  for (int i = 1; i < a.dim; ++i) {
    Vec nia = mat_mul(F, f.nakayama_inv.matrix, unit_vec(a.dim, i));
    Mat op = mat_sub(F, m.right_mult(nia), m.left[i]);
    for (int c = 0; c < m.dim; ++c) {
      Vec v(m.dim, 1);
      for (int r2 = 0; r2 < m.dim; ++r2) v.at(r2, 0) = op.at(r2, c);
      gens.push_back(std::move(v));
    }
  }
  Subspace I = row_space(F, flatten_rows(gens, m.dim));

  InvariantSpaces out;
  out.M_A = MA;
  out.N_image = image(F, N);
  out.N_kernel = kernel(F, N);
  out.I_space = I;
  out.norm = N;

  if (!subspace_leq(F, out.N_image, out.M_A))
    throw MathError("norm image is not contained in the invariants");
  if (!subspace_leq(F, out.I_space, out.N_kernel))
    throw MathError("commutator-type space is not norm-annihilated");
  return out;
}

bool is_weakly_projective(const Bimodule& m, const FrobeniusData& f) {
  const Field& F = m.field();
  const Algebra& a = *m.alg;
  int d = m.dim;
  if (d == 0) return true;
  std::vector<Vec> duals(a.dim, Vec(a.dim, 1));
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) duals[i].at(k, 0) = f.dual_basis.at(i, k);

  Vec id_flat(d * d, 1);
  for (int i = 0; i < d; ++i) id_flat.at(i * d + i, 0) = 1;

  // right-A-linear g: sum_i L_{u_i} g L_{v_i} = id, g R_a = R_a g
  {
    Mat sum = Mat::zero(d * d, d * d);
    for (int i = 0; i < a.dim; ++i)
      sum = mat_add(F, sum, conj_kron(F, m.left[i], m.left_mult(duals[i])));
    Mat sys = sum;
    Mat rhsM = id_flat;
    for (int i = 1; i < a.dim; ++i) {
      Mat c = mat_sub(F, conj_kron(F, Mat::identity(d), m.right[i]),
                      conj_kron(F, m.right[i], Mat::identity(d)));
      sys = mat_vstack(sys, c);
      rhsM = mat_vstack(rhsM, Vec(d * d, 1));
    }
    if (solve(F, sys, rhsM)) return true;
  }
  // left-A-linear g: sum_i R_{v_i} g R_{u_i} = id, g L_a = L_a g
  {
    Mat sum = Mat::zero(d * d, d * d);
    for (int i = 0; i < a.dim; ++i)
      sum = mat_add(F, sum, conj_kron(F, m.right_mult(duals[i]), m.right[i]));
    Mat sys = sum;
    Mat rhsM = id_flat;
    for (int i = 1; i < a.dim; ++i) {
      Mat c = mat_sub(F, conj_kron(F, Mat::identity(d), m.left[i]),
                      conj_kron(F, m.left[i], Mat::identity(d)));
      sys = mat_vstack(sys, c);
      rhsM = mat_vstack(rhsM, Vec(d * d, 1));
    }
    if (solve(F, sys, rhsM)) return true;
  }
  return false;
}

bool is_short_exact(const ShortExactSeq& s) {
  const Field& F = s.mid.field();
  if (rank(F, s.inj) != s.sub.dim) return false;                       // injective
  if (image(F, s.surj).dim() != s.quo.dim) return false;               // surjective
  if (!mat_mul(F, s.surj, s.inj).is_zero()) return false;              // composite zero
  return s.sub.dim + s.quo.dim == s.mid.dim;                           // exact in the middle
}

ShiftSequences shift_sequences(const Bimodule& m, const FrobeniusData& f) {
  const Field& F = m.field();
  const Algebra& a = *m.alg;
  int da = a.dim, dm = m.dim;
  ShiftSequences out;

  auto check = [&](const ShortExactSeq& s, const char* name) {
    if (!is_short_exact(s)) throw MathError(std::string("shift sequence ") + name + " not exact");
    if (!is_weakly_projective(s.mid, f))
      throw MathError(std::string("shift sequence ") + name + ": middle term not weakly projective");
  };

  {  // K(M): 0 -> K -> A (x) M -> M -> 0, pi(b (x) m) = b m
    Bimodule big;
    big.alg = m.alg;
    big.dim = da * dm;
    big.left.resize(da);
    big.right.resize(da);
    for (int i = 0; i < da; ++i) {
      big.left[i] = mat_kron(F, a.lmat[i], Mat::identity(dm));
      big.right[i] = mat_kron(F, Mat::identity(da), m.right[i]);
    }
    Mat pi(dm, da * dm);
    for (int i = 0; i < da; ++i)
      for (int x = 0; x < dm; ++x) {
        Vec col = mat_mul(F, m.left[i], unit_vec(dm, x));
        for (int r = 0; r < dm; ++r) pi.at(r, i * dm + x) = col.at(r, 0);
      }
    auto sb = sub_bimodule(big, kernel(F, pi));
    out.K = ShortExactSeq{std::move(sb.space), std::move(big), m, std::move(sb.incl), std::move(pi)};
    check(out.K, "K(M)");
  }
  {  // K'(M): 0 -> K' -> M (x) A -> M -> 0, pi(m (x) b) = m b
    Bimodule big;
    big.alg = m.alg;
    big.dim = dm * da;
    big.left.resize(da);
    big.right.resize(da);
    for (int i = 0; i < da; ++i) {
      big.left[i] = mat_kron(F, m.left[i], Mat::identity(da));
      big.right[i] = mat_kron(F, Mat::identity(dm), a.rmat[i]);
    }
    Mat pi(dm, dm * da);
    for (int x = 0; x < dm; ++x)
      for (int i = 0; i < da; ++i) {
        Vec col = mat_mul(F, m.right[i], unit_vec(dm, x));
        for (int r = 0; r < dm; ++r) pi.at(r, x * da + i) = col.at(r, 0);
      }
    auto sb = sub_bimodule(big, kernel(F, pi));
    out.Kp = ShortExactSeq{std::move(sb.space), std::move(big), m, std::move(sb.incl), std::move(pi)};
    check(out.Kp, "K'(M)");
  }
  {  // C(M): 0 -> M -> Hom_k(A, M) -> C -> 0 with (a g b)(x) = a g(b x),
     // embedding mu(m) = [x -> m x]; flatten g as (m, x) -> m * da + x.
    Bimodule big;
    big.alg = m.alg;
    big.dim = dm * da;
    big.left.resize(da);
    big.right.resize(da);
    for (int i = 0; i < da; ++i) {
      big.left[i] = mat_kron(F, m.left[i], Mat::identity(da));
      big.right[i] = conj_kron(F, Mat::identity(dm), a.lmat[i]);
    }
    Mat mu(dm * da, dm);
    for (int c = 0; c < dm; ++c)
      for (int x = 0; x < da; ++x) {
        Vec val = mat_mul(F, m.right[x], unit_vec(dm, c));  // m * u_x
        for (int r = 0; r < dm; ++r) mu.at(r * da + x, c) = val.at(r, 0);
      }
    auto q = quo_bimodule(big, image(F, mu));
    out.C = ShortExactSeq{m, std::move(big), std::move(q.space), std::move(mu), std::move(q.proj)};
    check(out.C, "C(M)");
  }
  {  // C'(M): (a g b)(x) = g(x a) b, embedding mu'(m) = [x -> x m]
    Bimodule big;
    big.alg = m.alg;
    big.dim = dm * da;
    big.left.resize(da);
    big.right.resize(da);
    for (int i = 0; i < da; ++i) {
      big.left[i] = conj_kron(F, Mat::identity(dm), a.rmat[i]);
      big.right[i] = mat_kron(F, m.right[i], Mat::identity(da));
    }
    Mat mu(dm * da, dm);
    for (int c = 0; c < dm; ++c)
      for (int x = 0; x < da; ++x) {
        Vec val = mat_mul(F, m.left[x], unit_vec(dm, c));  // u_x * m
        for (int r = 0; r < dm; ++r) mu.at(r * da + x, c) = val.at(r, 0);
      }
    auto q = quo_bimodule(big, image(F, mu));
    out.Cp = ShortExactSeq{m, std::move(big), std::move(q.space), std::move(mu), std::move(q.proj)};
    check(out.Cp, "C'(M)");
  }
  return out;
}

}  // namespace tatehoch
