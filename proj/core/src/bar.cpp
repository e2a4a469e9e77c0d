#include "tatehoch/bar.hpp"

#include <string>

namespace tatehoch {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// letters of a word index, as algebra basis indices (1..dimA-1)
std::vector<int> word_letters(int w, int n, int abar) {
  std::vector<int> out(n);
  for (int t = n - 1; t >= 0; --t) {
    out[t] = w % abar + 1;
    w /= abar;
  }
  return out;
}

int word_of_letters(const std::vector<int>& letters, int abar) {
  int w = 0;
  for (int a : letters) w = w * abar + (a - 1);
  return w;
}

}  // namespace

int BarWindow::words(int n) const { return ipow(abar_dim, n); }

int BarWindow::basis_index(int i, int w, int j, int n) const {
  const int da = alg().dim;
  return (i * words(n) + w) * da + j;
}

BarWindow bar_window(const Algebra& a, int N, int action_dim_limit) {
  if (N < 1) throw MathError("bar window needs at least one positive degree");
  const Field& F = a.field;
  const int da = a.dim, abar = da - 1;

  BarWindow b;
  b.top_degree = N;
  b.abar_dim = abar;

  auto bar_dim = [&](int n) { return da * ipow(abar, n) * da; };
  auto bidx = [&](int i, int w, int j, int n) { return (i * ipow(abar, n) + w) * da + j; };

  // components
  std::vector<Bimodule> comps;
  std::vector<std::optional<FreeStructure>> frees;
  for (int n = 0; n <= N; ++n) {
    int wn = ipow(abar, n), dim = bar_dim(n);
    Bimodule comp;
    comp.alg = &a;
    comp.dim = dim;
    if (dim <= action_dim_limit) {
      comp.left.resize(da);
      comp.right.resize(da);
      for (int p = 0; p < da; ++p) {
        Mat L(dim, dim), R(dim, dim);
        for (int i = 0; i < da; ++i)
          for (int w = 0; w < wn; ++w)
            for (int j = 0; j < da; ++j) {
              int col = bidx(i, w, j, n);
              const Vec& pi = a.table[p][i];  // u_p u_i
              const Vec& jp = a.table[j][p];  // u_j u_p
              for (int k = 0; k < da; ++k) {
                if (pi.at(k, 0) != 0) L.at(bidx(k, w, j, n), col) = pi.at(k, 0);
                if (jp.at(k, 0) != 0) R.at(bidx(i, w, k, n), col) = jp.at(k, 0);
              }
            }
        comp.left[p] = std::move(L);
        comp.right[p] = std::move(R);
      }
    }
    // free structure: generators 1 (x) w (x) 1; expansion is the identity
    // permutation e_{(i,w,j)} = u_i g_w u_j
    FreeStructure fs;
    fs.gens = Mat(dim, wn);
    for (int w = 0; w < wn; ++w) fs.gens.at(bidx(0, w, 0, n), w) = 1;
    fs.expand = Mat(wn * da * da, dim);
    for (int i = 0; i < da; ++i)
      for (int w = 0; w < wn; ++w)
        for (int j = 0; j < da; ++j)
          fs.expand.at((w * da + i) * da + j, bidx(i, w, j, n)) = 1;
    comps.push_back(std::move(comp));
    frees.emplace_back(std::move(fs));
  }

  // differentials
  std::vector<Mat> diffs;
  for (int n = 1; n <= N; ++n) {
    int wn = ipow(abar, n), wn1 = ipow(abar, n - 1);
    Mat d(bar_dim(n - 1), bar_dim(n));
    for (int i = 0; i < da; ++i)
      for (int w = 0; w < wn; ++w)
        for (int j = 0; j < da; ++j) {
          int col = bidx(i, w, j, n);
          auto letters = word_letters(w, n, abar);
          // t = 0: multiply the first letter into the left corner
          {
            std::vector<int> rest(letters.begin() + 1, letters.end());
            int wr = word_of_letters(rest, abar);
            const Vec& prod = a.table[i][letters[0]];
            for (int k = 0; k < da; ++k)
              if (prod.at(k, 0) != 0)
                d.at(bidx(k, wr, j, n - 1), col) =
                    F.add(d.at(bidx(k, wr, j, n - 1), col), prod.at(k, 0));
          }
          // 1 <= t <= n-1: merge adjacent letters, drop the unit component
          for (int t = 1; t <= n - 1; ++t) {
            Rat sign = (t % 2 == 0) ? Rat(1) : Rat(-1);
            const Vec& prod = a.table[letters[t - 1]][letters[t]];
            for (int k = 1; k < da; ++k) {
              if (prod.at(k, 0) == 0) continue;
              std::vector<int> merged;
              merged.reserve(n - 1);
              for (int s2 = 0; s2 < t - 1; ++s2) merged.push_back(letters[s2]);
              merged.push_back(k);
              for (int s2 = t + 1; s2 < n; ++s2) merged.push_back(letters[s2]);
              int wm = word_of_letters(merged, abar);
              d.at(bidx(i, wm, j, n - 1), col) =
                  F.add(d.at(bidx(i, wm, j, n - 1), col), F.mul(sign, prod.at(k, 0)));
            }
          }
          // t = n: multiply the last letter into the right corner
          {
            Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
            std::vector<int> rest(letters.begin(), letters.end() - 1);
            int wr = word_of_letters(rest, abar);
            const Vec& prod = a.table[letters[n - 1]][j];
            for (int k = 0; k < da; ++k)
              if (prod.at(k, 0) != 0)
                d.at(bidx(i, wr, k, n - 1), col) =
                    F.add(d.at(bidx(i, wr, k, n - 1), col), F.mul(sign, prod.at(k, 0)));
          }
        }
    diffs.push_back(std::move(d));
  }

  // augmentation eps(u_i (x) u_j) = u_i u_j
  Mat eps(da, da * da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      const Vec& prod = a.table[i][j];
      for (int k = 0; k < da; ++k) eps.at(k, bidx(i, 0, j, 0)) = prod.at(k, 0);
    }

  b.cx = make_complex_window(a, 0, N, std::move(comps), std::move(diffs), eps);
  b.cx.truncated_hi = true;
  for (int n = 0; n <= N; ++n) b.cx.free[n] = std::move(*frees[n]);

  // resolution property: exact at 1..N-1 and ker eps = im d_1
  {
    int r_eps = rank(F, *b.cx.eps);
    if (r_eps != da) throw MathError("bar window: augmentation not surjective");
    int prev_rank = rank(F, b.cx.diff(1));
    if (prev_rank != bar_dim(0) - da) throw MathError("bar window: not exact at degree 0");
    for (int n = 1; n <= N - 1; ++n) {
      int rn1 = rank(F, b.cx.diff(n + 1));
      if (rn1 != bar_dim(n) - prev_rank)
        throw MathError("bar window: not exact at degree " + std::to_string(n));
      prev_rank = rn1;
    }
  }

  // extra degeneracy s_n(a0 (x) w (x) a) = 1 (x) abar_0 (x) w (x) a
  b.s.resize(N + 1);
  {
    Mat sm1(bar_dim(0), da);
    for (int k = 0; k < da; ++k) sm1.at(bidx(0, 0, k, 0), k) = 1;
    b.s[0] = std::move(sm1);
    for (int n = 0; n <= N - 1; ++n) {
      int wn = ipow(abar, n);
      Mat sn(bar_dim(n + 1), bar_dim(n));
      for (int i = 1; i < da; ++i)  // i = 0 maps to zero in Abar
        for (int w = 0; w < wn; ++w)
          for (int j = 0; j < da; ++j) {
            auto letters = word_letters(w, n, abar);
            std::vector<int> ext;
            ext.reserve(n + 1);
            ext.push_back(i);
            for (int t = 0; t < n; ++t) ext.push_back(letters[t]);
            sn.at(bidx(0, word_of_letters(ext, abar), j, n + 1), bidx(i, w, j, n)) = 1;
          }
      b.s[n + 1] = std::move(sn);
    }
    // d s + s d = id on the augmented window
    if (!(mat_mul(F, *b.cx.eps, b.s[0]) == Mat::identity(da)))
      throw MathError("bar window: eps s_{-1} != id");
    Mat c0 = mat_add(F, mat_mul(F, b.cx.diff(1), b.s[1]), mat_mul(F, b.s[0], *b.cx.eps));
    if (!(c0 == Mat::identity(bar_dim(0)))) throw MathError("bar window: homotopy fails at 0");
    for (int n = 1; n <= N - 1; ++n) {
      Mat cn = mat_add(F, mat_mul(F, b.cx.diff(n + 1), b.s[n + 1]),
                       mat_mul(F, b.s[n], b.cx.diff(n)));
      if (!(cn == Mat::identity(bar_dim(n))))
        throw MathError("bar window: homotopy fails at degree " + std::to_string(n));
    }
  }
  return b;
}

HomologyData cohomology_edge(const Field& F, const KCochainWindow& cx, int n) {
  if (n < cx.lo || n >= cx.hi) throw MathError("cohomology_edge: degree out of range");
  Subspace Z = kernel(F, cx.delta(n));
  Subspace B = n > cx.lo ? image(F, cx.delta(n - 1)) : Subspace::zero(cx.dim(n));
  auto q = quotient(F, Z, B);
  HomologyData h;
  h.dim = q.dim;
  h.cycles = Z.basis;
  h.boundaries = B.basis;
  h.proj = q.proj;
  h.reps = q.rep_basis;
  return h;
}

HomologyData homology_edge(const Field& F, const KChainWindow& cx, int n) {
  if (n <= cx.lo - 1 || n >= cx.hi) throw MathError("homology_edge: degree out of range");
  Subspace Z = n > cx.lo ? kernel(F, cx.diff(n)) : Subspace::full(F, cx.dim(n));
  Subspace B = image(F, cx.diff(n + 1));
  auto q = quotient(F, Z, B);
  HomologyData h;
  h.dim = q.dim;
  h.cycles = Z.basis;
  h.boundaries = B.basis;
  h.proj = q.proj;
  h.reps = q.rep_basis;
  return h;
}

HomologyData hochschild_cohomology(const BarWindow& b, const Bimodule& m, int n) {
  HomComplexWindow model;
  return hochschild_cohomology(b, m, n, model);
}

HomologyData hochschild_cohomology(const BarWindow& b, const Bimodule& m, int n,
                                   HomComplexWindow& model) {
  if (n < 0 || n > b.top_degree - 1)
    throw MathError("hochschild_cohomology: degree out of window");
  model = hom_complex(b.cx, m);
  return cohomology_edge(b.alg().field, model.cx, n);
}

HomologyData hochschild_homology(const BarWindow& b, const Bimodule& m, int n) {
  TensorComplexWindow model;
  return hochschild_homology(b, m, n, model);
}

HomologyData hochschild_homology(const BarWindow& b, const Bimodule& m, int n,
                                 TensorComplexWindow& model) {
  if (n < 0 || n > b.top_degree - 1)
    throw MathError("hochschild_homology: degree out of window");
  model = tensor_complex(b.cx, m);
  return homology_edge(b.alg().field, model.cx, n);
}

BarDiagonal bar_diagonal(const BarWindow& b, int up_to) {
  const Field& F = b.alg().field;
  const Algebra& a = b.alg();
  const int da = a.dim, abar = b.abar_dim;
  if (up_to > b.top_degree) throw MathError("bar_diagonal: window too small");

  BarDiagonal out;
  out.target = complete_tensor_window(b.cx, b.cx, 0, up_to);
  out.delta.lo = 0;
  out.delta.hi = up_to;
  for (int n = 0; n <= up_to; ++n) {
    const Bimodule& tgt = out.target.comp(n);
    Mat dn(tgt.dim, b.cx.comp(n).dim);
    int wn = ipow(abar, n);
    for (int i = 0; i < da; ++i)
      for (int w = 0; w < wn; ++w)
        for (int j = 0; j < da; ++j) {
          int col = b.basis_index(i, w, j, n);
          auto letters = word_letters(w, n, abar);
          for (int t = 0; t <= n; ++t) {
            const auto* slot = out.target.find_slot(n, n - t);
            if (!slot) throw MathError("bar_diagonal: missing slot");
            std::vector<int> front(letters.begin(), letters.begin() + t);
            std::vector<int> back(letters.begin() + t, letters.end());
            int amb = b.basis_index(i, word_of_letters(front, abar), 0, t) *
                          b.cx.comp(n - t).dim +
                      b.basis_index(0, word_of_letters(back, abar), j, n - t);
            Vec e(slot->t.proj.cols, 1);
            e.at(amb, 0) = 1;
            Vec coords = mat_mul(F, slot->t.proj, e);
            for (int r2 = 0; r2 < coords.rows; ++r2)
              dn.at(slot->offset + r2, col) =
                  F.add(dn.at(slot->offset + r2, col), coords.at(r2, 0));
          }
        }
    out.delta.maps.push_back(std::move(dn));
  }

  // chain-map identity on the window
  for (int n = 1; n <= up_to; ++n) {
    Mat lhs = mat_mul(F, out.target.diff(n), out.delta.map(n));
    Mat rhs = mat_mul(F, out.delta.map(n - 1), b.cx.diff(n));
    if (!(lhs == rhs))
      throw MathError("bar_diagonal: chain identity fails at degree " + std::to_string(n));
  }
  // augmentation condition (eps (x) eps) Delta_0 = eps
  {
    const auto* slot = out.target.find_slot(0, 0);
    int d0 = b.cx.comp(0).dim;
    Mat ee(da, d0 * d0);
    for (int x = 0; x < d0; ++x)
      for (int y = 0; y < d0; ++y) {
        Vec ex(d0, 1), ey(d0, 1);
        ex.at(x, 0) = 1;
        ey.at(y, 0) = 1;
        Vec vx = mat_mul(F, *b.cx.eps, ex), vy = mat_mul(F, *b.cx.eps, ey);
        Vec prod = a.mul_vec(vx, vy);
        for (int k = 0; k < da; ++k) ee.at(k, x * d0 + y) = prod.at(k, 0);
      }
    Mat slot_part(slot->t.space.dim, out.delta.map(0).cols);
    for (int r2 = 0; r2 < slot_part.rows; ++r2)
      for (int c2 = 0; c2 < slot_part.cols; ++c2)
        slot_part.at(r2, c2) = out.delta.map(0).at(slot->offset + r2, c2);
    Mat comp = mat_mul(F, ee, mat_mul(F, slot->t.lift, slot_part));
    if (!(comp == *b.cx.eps)) throw MathError("bar_diagonal: augmentation condition fails");
  }
  return out;
}

namespace {

// model cochain block w of u at degree n: the value u(1 (x) w (x) 1) in M
Vec model_block(const Vec& u, int w, int dm) {
  Vec out(dm, 1);
  for (int k = 0; k < dm; ++k) out.at(k, 0) = u.at(w * dm + k, 0);
  return out;
}

}  // namespace

Vec cup_bar_into(const BarWindow& b, const Bimodule& m, int dm, const Vec& u,
                 const Bimodule& n, int dn, const Vec& v, const TensorOverA& mn) {
  const Field& F = b.alg().field;
  const int abar = b.abar_dim;
  if (dm + dn > b.top_degree) throw MathError("cup_bar: window too small");
  int words_m = ipow(abar, dm), words_total = ipow(abar, dm + dn);
  Rat sign = ((dm * dn) % 2 == 0) ? Rat(1) : Rat(-1);
  Vec out(words_total * mn.space.dim, 1);
  for (int w = 0; w < words_total; ++w) {
    auto letters = word_letters(w, dm + dn, abar);
    std::vector<int> front(letters.begin(), letters.begin() + dm);
    std::vector<int> back(letters.begin() + dm, letters.end());
    Vec x1 = model_block(u, word_of_letters(front, abar), m.dim);
    Vec x2 = model_block(v, word_of_letters(back, abar), n.dim);
    // proj(x1 (x) x2)
    Vec amb(m.dim * n.dim, 1);
    for (int p = 0; p < m.dim; ++p)
      for (int q = 0; q < n.dim; ++q) amb.at(p * n.dim + q, 0) = F.mul(x1.at(p, 0), x2.at(q, 0));
    Vec coords = mat_mul(F, mn.proj, amb);
    for (int k = 0; k < mn.space.dim; ++k)
      out.at(w * mn.space.dim + k, 0) = F.mul(sign, coords.at(k, 0));
  }
  (void)words_m;
  return out;
}

CupResult cup_bar(const BarWindow& b, const Bimodule& m, int dm, const Vec& u,
                  const Bimodule& n, int dn, const Vec& v) {
  CupResult r{tensor_over_A(m, n), Vec()};
  r.cochain = cup_bar_into(b, m, dm, u, n, dn, v, r.coeff);
  return r;
}

Vec cap_bar_into(const BarWindow& b, const Bimodule& m, int dm, const Vec& u,
                 const Bimodule& n, int p, const Vec& z, const TensorOverA& mn) {
  const Field& F = b.alg().field;
  const int abar = b.abar_dim;
  if (p > b.top_degree || dm > p) throw MathError("cap_bar: degrees out of range");
  int words_p = ipow(abar, p), words_out = ipow(abar, p - dm);
  Rat sign = ((dm * (p - dm)) % 2 == 0) ? Rat(1) : Rat(-1);
  Vec out(words_out * mn.space.dim, 1);
  for (int w = 0; w < words_p; ++w) {
    auto letters = word_letters(w, p, abar);
    std::vector<int> front(letters.begin(), letters.begin() + (p - dm));
    std::vector<int> back(letters.begin() + (p - dm), letters.end());
    Vec nw = model_block(z, w, n.dim);
    Vec ub = model_block(u, word_of_letters(back, abar), m.dim);
    Vec amb(m.dim * n.dim, 1);
    for (int a2 = 0; a2 < m.dim; ++a2)
      for (int c2 = 0; c2 < n.dim; ++c2)
        amb.at(a2 * n.dim + c2, 0) = F.mul(ub.at(a2, 0), nw.at(c2, 0));
    Vec coords = mat_mul(F, mn.proj, amb);
    int wf = word_of_letters(front, abar);
    for (int k = 0; k < mn.space.dim; ++k)
      out.at(wf * mn.space.dim + k, 0) =
          F.add(out.at(wf * mn.space.dim + k, 0), F.mul(sign, coords.at(k, 0)));
  }
  return out;
}

CapResult cap_bar(const BarWindow& b, const Bimodule& m, int dm, const Vec& u,
                  const Bimodule& n, int p, const Vec& z) {
  CapResult r{tensor_over_A(m, n), Vec()};
  r.chain = cap_bar_into(b, m, dm, u, n, p, z, r.coeff);
  return r;
}

void verify_composition_product(const BarWindow& b, const Bimodule& m, const Bimodule& n,
                                int dm, int dn) {
  const Field& F = b.alg().field;
  const Algebra& a = b.alg();
  if (dm + dn + 1 > b.top_degree)
    throw MathError("verify_composition_product: window too small");

  HomComplexWindow hu, hv;
  HomologyData gu = hochschild_cohomology(b, m, dm, hu);
  HomologyData gv = hochschild_cohomology(b, n, dn, hv);

  // target complex X_l = Bar_l (x)_A N with the induced differentials
  std::vector<TensorOverA> X;
  for (int l = 0; l <= dm; ++l) X.push_back(tensor_over_A(b.cx.comp(l), n));
  std::vector<Bimodule> xcomps;
  std::vector<Mat> xdiffs;
  for (int l = 0; l <= dm; ++l) xcomps.push_back(X[l].space);
  for (int l = 1; l <= dm; ++l) {
    Mat big = mat_kron(F, b.cx.diff(l), Mat::identity(n.dim));
    xdiffs.push_back(mat_mul(F, X[l - 1].proj, mat_mul(F, big, X[l].lift)));
  }
  ComplexWindow XN = make_complex_window(a, 0, dm, xcomps, xdiffs);

  // (eps (x) id): X_0 -> N on the quotient model
  Mat epsid(n.dim, X[0].space.dim);
  {
    Mat amb(n.dim, b.cx.comp(0).dim * n.dim);
    for (int bcol = 0; bcol < b.cx.comp(0).dim; ++bcol) {
      Vec e(b.cx.comp(0).dim, 1);
      e.at(bcol, 0) = 1;
      Vec av = mat_mul(F, *b.cx.eps, e);
      Mat act = n.left_mult(av);
      for (int q = 0; q < n.dim; ++q)
        for (int r2 = 0; r2 < n.dim; ++r2) amb.at(r2, bcol * n.dim + q) = act.at(r2, q);
    }
    epsid = mat_mul(F, amb, X[0].lift);
  }

  TensorOverA mn = tensor_over_A(m, n);
  HomComplexWindow hmn;
  HomologyData gmn = hochschild_cohomology(b, mn.space, dm + dn, hmn);

  Rat lift_sign = (dn % 2 == 0) ? Rat(1) : Rat(-1);
  for (int cu = 0; cu < gu.dim; ++cu) {
    Vec urep(hu.cx.dim(dm), 1);
    for (int k = 0; k < urep.rows; ++k) urep.at(k, 0) = gu.reps.at(cu, k);
    Mat umat = hu.cochain_matrix(b.cx, m, dm, urep);
    for (int cv = 0; cv < gv.dim; ++cv) {
      Vec vrep(hv.cx.dim(dn), 1);
      for (int k = 0; k < vrep.rows; ++k) vrep.at(k, 0) = gv.reps.at(cv, k);
      Mat vmat = hv.cochain_matrix(b.cx, n, dn, vrep);

      // lift: vt_0 with (eps (x) id) vt_0 = v, then
      // d vt_l = (-1)^{dn} vt_{l-1} d
      std::vector<Mat> vt(dm + 1);
      {
        std::vector<MapConstraint> cons{{epsid, Mat(), vmat}};
        auto f0 = solve_bimodule_map(b.cx.comp(dn), X[0].space,
                                     b.cx.free_at(dn) ? &*b.cx.free_at(dn) : nullptr, cons);
        if (!f0) throw MathError("composition product: cannot lift over the augmentation");
        vt[0] = std::move(*f0);
      }
      for (int l = 1; l <= dm; ++l) {
        Mat rhs = mat_scale(F, lift_sign, mat_mul(F, vt[l - 1], b.cx.diff(dn + l)));
        std::vector<MapConstraint> cons{{XN.diff(l), Mat(), rhs}};
        auto fl = solve_bimodule_map(b.cx.comp(dn + l), X[l].space,
                                     b.cx.free_at(dn + l) ? &*b.cx.free_at(dn + l) : nullptr,
                                     cons);
        if (!fl)
          throw MathError("composition product: lifting failed at step " + std::to_string(l));
        vt[l] = std::move(*fl);
      }

      // compose with u (x) id : X_dm -> M (x) N
      Mat uid(mn.space.dim, X[dm].space.dim);
      {
        Mat amb(mn.space.dim, b.cx.comp(dm).dim * n.dim);
        for (int bcol = 0; bcol < b.cx.comp(dm).dim; ++bcol) {
          Vec e(b.cx.comp(dm).dim, 1);
          e.at(bcol, 0) = 1;
          Vec uval = mat_mul(F, umat, e);
          for (int q = 0; q < n.dim; ++q) {
            Vec big(m.dim * n.dim, 1);
            for (int p2 = 0; p2 < m.dim; ++p2)
              big.at(p2 * n.dim + q, 0) = uval.at(p2, 0);
            Vec crd = mat_mul(F, mn.proj, big);
            for (int r2 = 0; r2 < mn.space.dim; ++r2)
              amb.at(r2, bcol * n.dim + q) = crd.at(r2, 0);
          }
        }
        uid = mat_mul(F, amb, X[dm].lift);
      }
      Mat composite = mat_mul(F, uid, vt[dm]);

      // compare classes in H^{dm+dn}(A, M (x) N)
      Vec comp_model = hmn.matrix_cochain(b.cx, mn.space, dm + dn, composite);
      Vec cup_model = cup_bar_into(b, m, dm, urep, n, dn, vrep, mn);
      Vec ccomp = mat_mul(F, gmn.proj, comp_model);
      Vec ccup = mat_mul(F, gmn.proj, cup_model);
      if (!(ccomp == ccup))
        throw MathError("composition product disagrees with cup at basis pair (" +
                        std::to_string(cu) + "," + std::to_string(cv) + ")");
    }
  }
}

}  // namespace tatehoch
