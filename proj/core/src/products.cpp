#include "tatehoch/products.hpp"

#include <random>
#include <string>

namespace tatehoch {

namespace {

// induced map between tensor-over-Ae quotients from maps on the factors
Mat induced_tensor_map(const Field& F, const TensorOverAe& src, const TensorOverAe& tgt,
                       const Mat& fleft, const Mat& fright) {
  Mat big = mat_kron(F, fleft, fright);
  return mat_mul(F, tgt.proj, mat_mul(F, big, src.lift));
}

Vec flatten(const Mat& m) {
  Vec v(static_cast<int>(m.a.size()), 1);
  for (size_t i = 0; i < m.a.size(); ++i) v.at(static_cast<int>(i), 0) = m.a[i];
  return v;
}

// Frobenius functional of the enveloping algebra on a k-dual of a free
// module: the generator of each D(A^e) block
Vec injective_generators_column(const Algebra& a, const FrobeniusData& f, int blocks,
                                int block) {
  int D = a.dim * a.dim;
  Vec g(blocks * D, 1);
  for (int p = 0; p < a.dim; ++p)
    for (int q = 0; q < a.dim; ++q)
      g.at(block * D + p * a.dim + q, 0) = a.field.mul(f.lambda[p], f.lambda[q]);
  return g;
}

}  // namespace

ComplexWindow syzygy_complex(const SyzygyChain& s, const FrobeniusData& f) {
  const Algebra& a = *s.a;
  const Field& F = a.field;
  const int da = a.dim, W = s.W;

  std::vector<Bimodule> comps;
  std::vector<Mat> diffs;
  std::vector<std::optional<FreeStructure>> frees;

  // degrees -W .. W-1: components I_{W-1} .. I_0, F_0 .. F_{W-1}
  for (int n = -W; n <= W - 1; ++n) {
    if (n >= 0) {
      comps.push_back(s.free_pos[n]);
      FreeStructure fs;
      int r = s.rank_pos[n];
      fs.gens = Mat(comps.back().dim, r);
      fs.expand = Mat(r * da * da, comps.back().dim);
      for (int t = 0; t < r; ++t) {
        fs.gens.at(t * da * da, t) = 1;
        for (int p = 0; p < da; ++p)
          for (int q = 0; q < da; ++q)
            fs.expand.at((t * da + p) * da + q, t * da * da + p * da + q) = 1;
      }
      frees.emplace_back(std::move(fs));
    } else {
      const Bimodule& I = s.inj_neg[-n - 1];
      comps.push_back(I);
      int r = s.rank_neg[-n - 1];
      Mat gens(I.dim, r);
      for (int t = 0; t < r; ++t) {
        Vec g = injective_generators_column(a, f, r, t);
        for (int k = 0; k < I.dim; ++k) gens.at(k, t) = g.at(k, 0);
      }
      frees.emplace_back(make_free_structure(I, gens));
    }
  }
  for (int n = -W + 1; n <= W - 1; ++n) {
    if (n >= 1)
      diffs.push_back(mat_mul(F, s.iota_pos[n - 1], s.pi_pos[n]));
    else if (n == 0)
      diffs.push_back(mat_mul(F, s.emb_neg[0], s.pi_pos[0]));
    else
      diffs.push_back(mat_mul(F, s.emb_neg[-n], s.quo_neg[-n - 1]));
  }
  ComplexWindow cx = make_complex_window(a, -W, W - 1, comps, diffs, s.pi_pos[0], s.emb_neg[0]);
  cx.truncated_lo = cx.truncated_hi = true;
  for (size_t i = 0; i < frees.size(); ++i) cx.free[i] = std::move(*frees[i]);
  return cx;
}

const Bimodule& ModuleChain::omega(int b) const {
  if (b >= 0) {
    if (b >= static_cast<int>(mods_pos.size())) throw MathError("module chain too short");
    return mods_pos[b];
  }
  if (-b - 1 >= static_cast<int>(mods_neg.size())) throw MathError("module chain too short");
  return mods_neg[-b - 1];
}

ModuleChain module_chain(const Bimodule& m, int pos, int neg) {
  const Algebra& a = *m.alg;
  const Field& F = a.field;
  Subspace env_rad = enveloping_radical(a);

  ModuleChain c;
  c.base = m;
  c.mods_pos.push_back(m);
  for (int i = 0; i < pos; ++i) {
    FreeCover cover = free_cover(c.mods_pos.back(), env_rad);
    auto sb = sub_bimodule(cover.space, kernel(F, cover.pi));
    c.frees.push_back(std::move(cover.space));
    c.pis.push_back(std::move(cover.pi));
    c.iotas.push_back(std::move(sb.incl));
    c.mods_pos.push_back(std::move(sb.space));
  }
  Bimodule cur = m;
  for (int i = 0; i < neg; ++i) {
    Bimodule dual = k_dual(cur);
    FreeCover cover = free_cover(dual, env_rad);
    Bimodule I = k_dual(cover.space);
    Mat emb = mat_transpose(cover.pi);
    if (rank(F, emb) != cur.dim) throw MathError("module chain: embedding not injective");
    auto q = quo_bimodule(I, image(F, emb));
    c.injs.push_back(std::move(I));
    c.embs.push_back(std::move(emb));
    c.quos.push_back(q.proj);
    c.mods_neg.push_back(q.space);
    cur = c.mods_neg.back();
  }
  return c;
}

namespace {

// pi_m : T_m ->> Omega^m and iota_m : Omega^m -> T_{m-1} on the chain
const Mat& chain_pi(const SyzygyChain& s, int m) {
  return m >= 0 ? s.pi_pos[m] : s.quo_neg[-m - 1];
}
const Mat& chain_iota(const SyzygyChain& s, int m) {
  return m >= 1 ? s.iota_pos[m - 1] : s.emb_neg[-m];
}

}  // namespace

Mat omega_shift_map(const SyzygyChain& s, const ComplexWindow& schain, const Mat& g, int j,
                    int i) {
  const Field& F = s.a->field;
  if (i == 0) return g.rows == s.omega(j).dim && g.cols == s.omega(j).dim
                     ? g
                     : g;  // degree-0 shift is the map itself
  // build the lifted chain g_l : T_{l+j} -> T_l for l between 0 and i,
  // with d_l g_l = (-1)^j g_{l-1} d_{l+j}
  Rat sgn = (j % 2 == 0) ? Rat(1) : Rat(-1);
  std::vector<Mat> gl;  // gl[|l|] along the direction of i
  {
    // base: pi_0 g_0 = g pi_j
    Mat rhs = mat_mul(F, g, chain_pi(s, j));
    std::vector<MapConstraint> cons{{chain_pi(s, 0), Mat(), rhs}};
    auto g0 = solve_bimodule_map(schain.comp(j), schain.comp(0),
                                 schain.free_at(j) ? &*schain.free_at(j) : nullptr, cons);
    if (!g0) throw MathError("omega shift: base lift failed");
    gl.push_back(std::move(*g0));
  }
  if (i > 0) {
    for (int l = 1; l <= i; ++l) {
      Mat rhs = mat_scale(F, sgn, mat_mul(F, gl.back(), schain.diff(l + j)));
      std::vector<MapConstraint> cons{{schain.diff(l), Mat(), rhs}};
      auto next = solve_bimodule_map(schain.comp(l + j), schain.comp(l),
                                     schain.free_at(l + j) ? &*schain.free_at(l + j) : nullptr,
                                     cons);
      if (!next)
        throw MathError("omega shift: ascent failed at level " + std::to_string(l));
      gl.push_back(std::move(*next));
    }
  } else {
    for (int l = -1; l >= i; --l) {
      Mat rhs = mat_scale(F, sgn, mat_mul(F, schain.diff(l + 1), gl.back()));
      std::vector<MapConstraint> cons{{Mat(), schain.diff(l + j + 1), rhs}};
      auto next = solve_bimodule_map(schain.comp(l + j), schain.comp(l),
                                     schain.free_at(l + j) ? &*schain.free_at(l + j) : nullptr,
                                     cons);
      if (!next)
        throw MathError("omega shift: descent failed at level " + std::to_string(l));
      gl.push_back(std::move(*next));
    }
  }
  // induced map on images: X pi_{i+j} = pi_i g_i
  Mat rhs = mat_mul(F, chain_pi(s, i), gl.back());
  Mat piT = mat_transpose(chain_pi(s, i + j));
  auto Xt = solve_matrix(F, piT, mat_transpose(rhs));
  if (!Xt) throw MathError("omega shift: induced map does not descend");
  Mat X = mat_transpose(*Xt);
  if (!is_bimodule_map(s.omega(i + j), s.omega(i), X))
    throw MathError("omega shift: induced map is not A^e-linear");
  return X;
}

StableClass es_cup(const SyzygyChain& s, const ComplexWindow& schain, const StableClass& f,
                   const StableClass& g) {
  const Field& F = s.a->field;
  Mat shifted = omega_shift_map(s, schain, g.rep, g.degree, f.degree);
  return StableClass{f.degree + g.degree, mat_mul(F, f.rep, shifted)};
}

namespace {

// Transport data for the cap product: tensor quotients and stable
// subspaces of omega^a A (x) omega^b M, plus the one-step shift
// isomorphisms between adjacent (a, b).
struct CapTransport {
  const SyzygyChain* s;
  const ModuleChain* mc;
  const Field* F;
  std::map<std::pair<int, int>, TensorOverAe> ten;
  std::map<std::pair<int, int>, StableTensor> stab;
  std::map<std::pair<int, int>, Mat> fwd;  // keyed by upper (a, b): stab(a,b)->stab(a-1,b+1)

  const Bimodule& mid_A(int a) const {
    return a >= 1 ? s->free_pos[a - 1] : s->inj_neg[-a];
  }
  const Bimodule& midM(int b) const {
    return b >= 0 ? mc->frees[b] : mc->injs[-b - 1];
  }
  const Mat& downM(int b) const { return b >= 0 ? mc->pis[b] : mc->quos[-b - 1]; }
  const Mat& upM(int b) const { return b >= 0 ? mc->iotas[b] : mc->embs[-b - 1]; }

  TensorOverAe& tensor_at(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = ten.find(key);
    if (it == ten.end())
      it = ten.emplace(key, tensor_over_Ae(s->omega(a), mc->omega(b))).first;
    return it->second;
  }
  StableTensor& stable_at(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = stab.find(key);
    if (it == stab.end())
      it = stab.emplace(key, stable_tensor(s->omega(a), mc->omega(b))).first;
    return it->second;
  }

  // matrix of the one-step shift on stable subspaces, in ambient tensor
  // coordinates composed through the chosen stable bases
  const Mat& forward(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = fwd.find(key);
    if (it != fwd.end()) return it->second;

    TensorOverAe& t_in = tensor_at(a, b);
    TensorOverAe t_mid2 = tensor_over_Ae(s->omega(a), midM(b));
    TensorOverAe t_big = tensor_over_Ae(mid_A(a), midM(b));
    TensorOverAe t_pre = tensor_over_Ae(mid_A(a), mc->omega(b + 1));
    TensorOverAe& t_out = tensor_at(a - 1, b + 1);

    Mat map1 = induced_tensor_map(*F, t_mid2, t_in, Mat::identity(s->omega(a).dim), downM(b));
    auto sigma = solve_matrix(*F, map1, Mat::identity(t_in.dim));
    if (!sigma) throw MathError("cap transport: coefficient lift has no section");
    Mat map2 = induced_tensor_map(*F, t_mid2, t_big, chain_iota(*s, a),
                                  Mat::identity(midM(b).dim));
    Mat map3 = induced_tensor_map(*F, t_pre, t_big, Mat::identity(mid_A(a).dim), upM(b));
    Mat map4 = induced_tensor_map(*F, t_pre, t_out, chain_pi(*s, a - 1),
                                  Mat::identity(mc->omega(b + 1).dim));

    StableTensor& st_in = stable_at(a, b);
    StableTensor& st_out = stable_at(a - 1, b + 1);
    if (st_in.dim != st_out.dim)
      throw MathError("cap transport: stable dimensions disagree across the shift");
    Mat out(st_out.dim, st_in.dim);
    Mat out_basisT = mat_transpose(st_out.basis);
    for (int k = 0; k < st_in.dim; ++k) {
      Vec w(t_in.dim, 1);
      for (int e = 0; e < t_in.dim; ++e) w.at(e, 0) = st_in.basis.at(k, e);
      Vec u1 = mat_mul(*F, *sigma, w);
      Vec u2 = mat_mul(*F, map2, u1);
      auto u3 = solve(*F, map3, u2);
      if (!u3) throw MathError("cap transport: pulled element misses the sub-tensor");
      Vec img = mat_mul(*F, map4, *u3);
      auto coords = solve(*F, out_basisT, img);
      if (!coords) throw MathError("cap transport: image leaves the stable subspace");
      for (int r2 = 0; r2 < st_out.dim; ++r2) out.at(r2, k) = coords->at(r2, 0);
    }
    if (st_in.dim > 0 && rank(*F, out) != st_in.dim)
      throw MathError("cap transport: shift is not invertible");
    return fwd.emplace(key, std::move(out)).first->second;
  }

  Vec to_stable_coords(int a, int b, const Vec& ambient) {
    StableTensor& st = stable_at(a, b);
    auto coords = solve(*F, mat_transpose(st.basis), ambient);
    if (!coords) throw MathError("cap: element is not in the stable subspace");
    return *coords;
  }
  Vec to_ambient(int a, int b, const Vec& coords) {
    StableTensor& st = stable_at(a, b);
    return mat_mul(*F, mat_transpose(st.basis), coords);
  }
};

}  // namespace

StableTensorClass es_cap(const SyzygyChain& s, const ComplexWindow& schain,
                         const FrobeniusData& f, const StableClass& u,
                         const StableTensorClass& z, const Bimodule& m) {
  (void)schain;
  (void)f;
  const Field& F = s.a->field;
  int i = u.degree, j = z.degree;
  ModuleChain mc = module_chain(m, std::max(0, j - i) + 1, std::max(0, i - j) + 1);

  CapTransport ct;
  ct.s = &s;
  ct.mc = &mc;
  ct.F = &F;

  // start at (j, 0)
  Vec cur = ct.to_stable_coords(j, 0, z.coords);
  {  // move the left slot from j to i
    int a = j;
    while (a > i) {
      cur = mat_mul(F, ct.forward(a, j - a), cur);
      --a;
    }
    while (a < i) {
      cur = mat_mul(F, mat_inverse(F, ct.forward(a + 1, j - a - 1)), cur);
      ++a;
    }
  }
  // evaluation step: apply u on the left slot, landing at (0, j - i)
  {
    TensorOverAe& t_in = ct.tensor_at(i, j - i);
    TensorOverAe& t_out = ct.tensor_at(0, j - i);
    Mat phi = induced_tensor_map(F, t_in, t_out, u.rep, Mat::identity(mc.omega(j - i).dim));
    Vec amb = ct.to_ambient(i, j - i, cur);
    Vec img = mat_mul(F, phi, amb);
    cur = ct.to_stable_coords(0, j - i, img);
  }
  // move back: left slot from 0 to j - i
  {
    int a = 0;
    while (a > j - i) {
      cur = mat_mul(F, ct.forward(a, j - i - a), cur);
      --a;
    }
    while (a < j - i) {
      cur = mat_mul(F, mat_inverse(F, ct.forward(a + 1, j - i - a - 1)), cur);
      ++a;
    }
  }
  StableTensorClass out;
  out.degree = j - i;
  out.coords = ct.to_ambient(j - i, 0, cur);
  return out;
}

namespace {

// row-selection matrix picking the rows of the given slots
Mat slot_row_selector(const TensorWindow& tt, int level, int blo, int bhi) {
  int total = tt.comp(level).dim;
  int rows = 0;
  for (const auto& sl : tt.slots_at(level))
    if (sl.b >= blo && sl.b <= bhi) rows += sl.t.space.dim;
  Mat sel(rows, total);
  int r = 0;
  for (const auto& sl : tt.slots_at(level))
    if (sl.b >= blo && sl.b <= bhi)
      for (int k = 0; k < sl.t.space.dim; ++k) sel.at(r++, sl.offset + k) = 1;
  return sel;
}

// block of a level-to-level differential between two named slots
Mat slot_block(const Field& F, const TensorWindow& tt, int level, int b_from, int b_to) {
  const auto* sf = tt.find_slot(level, b_from);
  const auto* st = tt.find_slot(level - 1, b_to);
  if (!sf || !st) throw MathError("diagonal: missing tensor slot");
  const Mat& d = tt.diff(level);
  Mat blk(st->t.space.dim, sf->t.space.dim);
  for (int r = 0; r < blk.rows; ++r)
    for (int c = 0; c < blk.cols; ++c) blk.at(r, c) = d.at(st->offset + r, sf->offset + c);
  return blk;
}

}  // namespace

DiagonalWindow diagonal_window(const CompleteWindow& t, int D, std::uint64_t seed) {
  const Field& F = t.cx.alg->field;
  const Algebra& a = *t.cx.alg;
  const int W = t.W;
  if (W < 2 * D + 2)
    throw MathError("diagonal window: need W >= 2D + 2, have W = " + std::to_string(W) +
                    " for D = " + std::to_string(D));

  DiagonalWindow dw;
  dw.D = D;
  dw.target = complete_tensor_window(t.cx, t.cx, -(2 * D + 1), 2 * D + 1, true);
  TensorWindow& tt = dw.target;
  dw.maps.resize(4 * D + 1);
  dw.valid_lo.assign(4 * D + 1, 0);
  dw.valid_hi.assign(4 * D + 1, 0);

  const Mat& d1 = t.cx.diff(1);
  const Mat& eps = *t.cx.eps;

  // seam phase: tau_r : T_0 -> T_r (x) T_{-r} occupying slot b = -r of level 0
  std::map<int, Mat> tau;  // keyed by r
  {
    // tau_0: (eps (x) eps) tau_0 = eps, seeded deterministically
    const auto* s00 = tt.find_slot(0, 0);
    int d0 = t.cx.comp(0).dim;
    Mat epseps(a.dim, d0 * d0);
    for (int x = 0; x < d0; ++x)
      for (int y = 0; y < d0; ++y) {
        Vec ex = unit_vec(d0, x), ey = unit_vec(d0, y);
        Vec prod = a.mul_vec(mat_mul(F, eps, ex), mat_mul(F, eps, ey));
        for (int k = 0; k < a.dim; ++k) epseps.at(k, x * d0 + y) = prod.at(k, 0);
      }
    Mat econd = mat_mul(F, epseps, s00->t.lift);
    std::vector<MapConstraint> cons{{econd, Mat(), eps}};
    auto t0 = solve_bimodule_map(t.cx.comp(0), s00->t.space,
                                 t.cx.free_at(0) ? &*t.cx.free_at(0) : nullptr, cons);
    if (!t0) throw MathError("diagonal: no seam seed");
    Mat tau0 = std::move(*t0);
    if (seed != 0) {
      // shift by a random homogeneous solution
      auto basis = hom_Ae_basis(t.cx.comp(0), s00->t.space);
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<long long> dist(0, F.is_prime_field() ? F.p - 1 : 5);
      for (const auto& h : basis) {
        if (!mat_mul(F, econd, h).is_zero()) continue;
        Rat c = F.reduce(Rat(dist(rng)));
        if (c != 0) tau0 = mat_add(F, tau0, mat_scale(F, c, h));
      }
    }
    tau[0] = std::move(tau0);
  }
  for (int r = 1; r <= W - 1; ++r) {
    // ascending: d'(r,-r) tau_r d1 = -d''(r-1,-r+1) tau_{r-1} d1
    Mat dpp = slot_block(F, tt, 0, -r + 1, -r);  // d'' : slot(r-1,-r+1) -> (r-1,-r)
    Mat rhs = mat_scale(F, Rat(-1), mat_mul(F, dpp, mat_mul(F, tau[r - 1], d1)));
    Mat dp = slot_block(F, tt, 0, -r, -r);  // d' : slot(r,-r) -> (r-1,-r)
    std::vector<MapConstraint> cons{{dp, d1, rhs}};
    const auto* slot = tt.find_slot(0, -r);
    auto tr = solve_bimodule_map(t.cx.comp(0), slot->t.space,
                                 t.cx.free_at(0) ? &*t.cx.free_at(0) : nullptr, cons);
    if (!tr) throw MathError("diagonal: ascending seam failed at " + std::to_string(r));
    tau[r] = std::move(*tr);
  }
  for (int r = -1; r >= -(W - 1); --r) {
    // descending: d''(r,-r) tau_r d1 = -d'(r+1,-r-1) tau_{r+1} d1
    Mat dp = slot_block(F, tt, 0, -r - 1, -r - 1);  // d' : slot(r+1,-r-1) -> (r,-r-1)
    Mat rhs = mat_scale(F, Rat(-1), mat_mul(F, dp, mat_mul(F, tau[r + 1], d1)));
    Mat dpp = slot_block(F, tt, 0, -r, -r - 1);  // d'' : slot(r,-r) -> (r,-r-1)
    std::vector<MapConstraint> cons{{dpp, d1, rhs}};
    const auto* slot = tt.find_slot(0, -r);
    auto tr = solve_bimodule_map(t.cx.comp(0), slot->t.space,
                                 t.cx.free_at(0) ? &*t.cx.free_at(0) : nullptr, cons);
    if (!tr) throw MathError("diagonal: descending seam failed at " + std::to_string(r));
    tau[r] = std::move(*tr);
  }
  {  // assemble level 0
    Mat level0(tt.comp(0).dim, t.cx.comp(0).dim);
    for (auto& [r, m] : tau) {
      const auto* slot = tt.find_slot(0, -r);
      for (int k = 0; k < m.rows; ++k)
        for (int c = 0; c < m.cols; ++c) level0.at(slot->offset + k, c) = m.at(k, c);
    }
    dw.maps[0 + 2 * D] = std::move(level0);
  }

  // upward extension
  for (int n = 1; n <= 2 * D; ++n) {
    Mat rhs_full = mat_mul(F, dw.map(n - 1), t.cx.diff(n));
    bool done = false;
    for (int shrink = 0; shrink <= 2 * W && !done; ++shrink) {
      int blo = n - W + shrink, bhi = W - 1 - shrink;
      Mat sel = slot_row_selector(tt, n - 1, blo, bhi);
      std::vector<MapConstraint> cons{
          {mat_mul(F, sel, tt.diff(n)), Mat(), mat_mul(F, sel, rhs_full)}};
      auto mn = solve_bimodule_map(t.cx.comp(n), tt.comp(n),
                                   t.cx.free_at(n) ? &*t.cx.free_at(n) : nullptr, cons);
      if (mn) {
        dw.maps[n + 2 * D] = std::move(*mn);
        done = true;
      }
    }
    if (!done) throw MathError("diagonal: upward extension failed at " + std::to_string(n));
  }
  // downward extension
  for (int n = -1; n >= -2 * D; --n) {
    Mat rhs_full = mat_mul(F, tt.diff(n + 1), dw.map(n + 1));
    bool done = false;
    for (int shrink = 0; shrink <= 2 * W && !done; ++shrink) {
      int blo = n + 1 - W + shrink, bhi = W - 1 - shrink;
      Mat sel = slot_row_selector(tt, n, blo, bhi);
      std::vector<MapConstraint> cons{
          {sel, t.cx.diff(n + 1), mat_mul(F, sel, rhs_full)}};
      auto mn = solve_bimodule_map(t.cx.comp(n), tt.comp(n),
                                   t.cx.free_at(n) ? &*t.cx.free_at(n) : nullptr, cons);
      if (mn) {
        dw.maps[n + 2 * D] = std::move(*mn);
        done = true;
      }
    }
    if (!done) throw MathError("diagonal: downward extension failed at " + std::to_string(n));
  }

  // record where the chain identity actually holds, per level
  for (int n = -2 * D + 1; n <= 2 * D; ++n) {
    Mat resid = mat_sub(F, mat_mul(F, tt.diff(n), dw.map(n)),
                        mat_mul(F, dw.map(n - 1), t.cx.diff(n)));
    int lo = 1, hi = -1;  // empty unless a contiguous region around 0 verifies
    std::vector<int> good;
    for (const auto& sl : tt.slots_at(n - 1)) {
      bool ok = true;
      for (int k = 0; k < sl.t.space.dim && ok; ++k)
        for (int c = 0; c < resid.cols && ok; ++c)
          if (resid.at(sl.offset + k, c) != 0) ok = false;
      if (ok) good.push_back(sl.b);
    }
    if (!good.empty()) {
      // largest contiguous interval containing the middle slot
      int mid = (n - 1) / 2;
      lo = hi = mid;
      bool found = false;
      for (int b : good)
        if (b == mid) found = true;
      if (!found && !good.empty()) {
        lo = hi = good[good.size() / 2];
      }
      bool grew = true;
      while (grew) {
        grew = false;
        for (int b : good) {
          if (b == lo - 1) { lo = b; grew = true; }
          if (b == hi + 1) { hi = b; grew = true; }
        }
      }
    }
    dw.valid_lo[n + 2 * D] = lo;
    dw.valid_hi[n + 2 * D] = hi;
  }

  // augmentation condition at level 0
  {
    const auto* s00 = tt.find_slot(0, 0);
    int d0 = t.cx.comp(0).dim;
    Mat epseps(a.dim, d0 * d0);
    for (int x = 0; x < d0; ++x)
      for (int y = 0; y < d0; ++y) {
        Vec prod = a.mul_vec(mat_mul(F, eps, unit_vec(d0, x)), mat_mul(F, eps, unit_vec(d0, y)));
        for (int k = 0; k < a.dim; ++k) epseps.at(k, x * d0 + y) = prod.at(k, 0);
      }
    Mat blk(s00->t.space.dim, t.cx.comp(0).dim);
    for (int k = 0; k < blk.rows; ++k)
      for (int c = 0; c < blk.cols; ++c) blk.at(k, c) = dw.map(0).at(s00->offset + k, c);
    Mat comp = mat_mul(F, epseps, mat_mul(F, s00->t.lift, blk));
    if (!(comp == eps)) throw MathError("diagonal: augmentation condition fails");
  }
  return dw;
}

Vec cup_via_diagonal(const CompleteWindow& t, const DiagonalWindow& dw,
                     const HomComplexWindow& hm, const Bimodule& m, const Vec& u, int r,
                     const HomComplexWindow& hn, const Bimodule& n, const Vec& v, int s,
                     const TensorOverA& mn) {
  const Field& F = t.cx.alg->field;
  int level = r + s;
  if (level > 2 * dw.D || level < -2 * dw.D)
    throw MathError("cup_via_diagonal: degree outside the diagonal region");
  const auto* slot = dw.target.find_slot(level, s);
  if (!slot) throw MathError("cup_via_diagonal: slot missing");
  Mat umat = hm.cochain_matrix(t.cx, m, r, u);
  Mat vmat = hn.cochain_matrix(t.cx, n, s, v);
  // pairing: slot coords -> coefficients of M (x) N
  Mat pairing = mat_mul(F, mn.proj, mat_mul(F, mat_kron(F, umat, vmat), slot->t.lift));
  Mat blk(slot->t.space.dim, t.cx.comp(level).dim);
  for (int k = 0; k < blk.rows; ++k)
    for (int c = 0; c < blk.cols; ++c) blk.at(k, c) = dw.map(level).at(slot->offset + k, c);
  Rat sign = ((r * s) % 2 == 0) ? Rat(1) : Rat(-1);
  Mat w = mat_scale(F, sign, mat_mul(F, pairing, blk));
  HomComplexWindow hmn = hom_complex(t.cx, mn.space);
  Vec coords = hmn.matrix_cochain(t.cx, mn.space, level, w);
  if (level < hmn.cx.hi && !mat_mul(F, hmn.cx.delta(level), coords).is_zero())
    throw MathError("cup_via_diagonal: product is not a cocycle (margin too small)");
  return coords;
}

Vec cap_via_diagonal(const CompleteWindow& t, const DiagonalWindow& dw, const Bimodule& m,
                     const Mat& u_matrix, int r, const TensorComplexWindow& tn,
                     const Bimodule& n, const Vec& z, int s, const TensorOverA& mn) {
  const Field& F = t.cx.alg->field;
  int out_deg = s - r;
  if (s > 2 * dw.D || s < -2 * dw.D)
    throw MathError("cap_via_diagonal: degree outside the diagonal region");
  const auto* slot = dw.target.find_slot(s, r);
  if (!slot) throw MathError("cap_via_diagonal: slot missing");
  const Bimodule& tout = t.cx.comp(out_deg);

  Vec zamb = tn.chain_ambient(t.cx, n, s, z);  // (T_s basis) x (N basis)
  Mat blk(slot->t.space.dim, t.cx.comp(s).dim);
  for (int k = 0; k < blk.rows; ++k)
    for (int c = 0; c < blk.cols; ++c) blk.at(k, c) = dw.map(s).at(slot->offset + k, c);

  Rat sign = ((r * out_deg) % 2 == 0) ? Rat(1) : Rat(-1);
  Vec out_amb(tout.dim * mn.space.dim, 1);
  int tr_dim = t.cx.comp(r).dim;
  for (int b = 0; b < t.cx.comp(s).dim; ++b) {
    // coefficient vector of N attached to basis element b of T_s
    Vec ncoef(n.dim, 1);
    bool nz = false;
    for (int q = 0; q < n.dim; ++q) {
      ncoef.at(q, 0) = zamb.at(b * n.dim + q, 0);
      nz = nz || ncoef.at(q, 0) != 0;
    }
    if (!nz) continue;
    Vec sc(slot->t.space.dim, 1);
    for (int k = 0; k < sc.rows; ++k) sc.at(k, 0) = blk.at(k, b);
    Vec pair_amb = mat_mul(F, slot->t.lift, sc);  // (T_{s-r} basis) x (T_r basis)
    for (int xi = 0; xi < tout.dim; ++xi)
      for (int yi = 0; yi < tr_dim; ++yi) {
        const Rat& c = pair_amb.at(xi * tr_dim + yi, 0);
        if (c == 0) continue;
        Vec uy = mat_mul(F, u_matrix, unit_vec(tr_dim, yi));  // in M
        Vec mnflat(m.dim * n.dim, 1);
        for (int p2 = 0; p2 < m.dim; ++p2)
          for (int q2 = 0; q2 < n.dim; ++q2)
            mnflat.at(p2 * n.dim + q2, 0) = F.mul(uy.at(p2, 0), ncoef.at(q2, 0));
        Vec mncoords = mat_mul(F, mn.proj, mnflat);
        for (int k = 0; k < mn.space.dim; ++k)
          out_amb.at(xi * mn.space.dim + k, 0) =
              F.add(out_amb.at(xi * mn.space.dim + k, 0),
                    F.mul(F.mul(sign, c), mncoords.at(k, 0)));
      }
  }
  TensorComplexWindow tmn = tensor_complex(t.cx, mn.space);
  Vec coords = tmn.ambient_chain(t.cx, mn.space, out_deg, out_amb);
  // a cycle input must cap to a cycle; boundary effects would surface here
  bool z_cycle = s <= tn.cx.lo || mat_mul(F, tn.cx.diff(s), z).is_zero();
  if (z_cycle && out_deg > t.cx.lo && !mat_mul(F, tmn.cx.diff(out_deg), coords).is_zero())
    throw MathError("cap_via_diagonal: product is not a cycle (margin too small)");
  return coords;
}

FundamentalClass fundamental_class(const Algebra& a, const FrobeniusData& f,
                                   const SyzygyChain& s, const ComplexWindow& schain,
                                   const CompleteWindow& t) {
  const Field& F = a.field;
  FundamentalClass out;
  out.coeff = twist(regular_bimodule(a), identity_automorphism(a), f.nakayama_inv);
  const Bimodule& mp = out.coeff;

  // cycle at window degree -1: generator of T_{-1} tensored with 1
  TensorComplexWindow tm = tensor_complex(t.cx, mp);
  Vec z(tm.cx.dim(-1), 1);
  z.at(0, 0) = 1;  // block of the single generator, coefficient 1 in A
  if (!mat_mul(F, tm.cx.diff(-1), z).is_zero())
    throw MathError("fundamental class: generator chain is not a cycle");

  // comparison into the syzygy chain at degrees 0 and -1
  Mat theta0, theta_m1;
  {
    std::vector<MapConstraint> cons{{chain_pi(s, 0), Mat(), *t.cx.eps}};
    auto th0 = solve_bimodule_map(t.cx.comp(0), schain.comp(0),
                                  t.cx.free_at(0) ? &*t.cx.free_at(0) : nullptr, cons);
    if (!th0) throw MathError("fundamental class: comparison at degree 0 failed");
    theta0 = std::move(*th0);
    Mat rhs = mat_mul(F, schain.diff(0), theta0);
    std::vector<MapConstraint> cons1{{Mat(), t.cx.diff(0), rhs}};
    auto th1 = solve_bimodule_map(t.cx.comp(-1), schain.comp(-1),
                                  t.cx.free_at(-1) ? &*t.cx.free_at(-1) : nullptr, cons1);
    if (!th1) throw MathError("fundamental class: comparison at degree -1 failed");
    theta_m1 = std::move(*th1);
  }

  // push the cycle: window T_{-1} (x) M' -> I_0 (x) M' -> Omega^{-1} (x) M'
  Vec amb = tm.chain_ambient(t.cx, mp, -1, z);
  Vec in_i0 = mat_mul(F, mat_kron(F, theta_m1, Mat::identity(mp.dim)), amb);
  Vec in_omega = mat_mul(F, mat_kron(F, s.quo_neg[0], Mat::identity(mp.dim)), in_i0);
  TensorOverAe ten = tensor_over_Ae(s.omega(-1), mp);
  out.omega.degree = -1;
  out.omega.coords = mat_mul(F, ten.proj, in_omega);

  // membership in the stable subspace
  StableTensor st = stable_tensor(s.omega(-1), mp);
  if (!solve(F, mat_transpose(st.basis), out.omega.coords))
    throw MathError("fundamental class: representative is not stable");

  // normalization: the degree-zero unit caps to the class itself
  StableClass unit{0, Mat::identity(a.dim)};
  StableTensorClass back = es_cap(s, schain, f, unit, out.omega, mp);
  if (!(back.coords == out.omega.coords))
    throw MathError("fundamental class: unit cap does not fix the class");
  return out;
}

DualityReport duality_map(const Algebra& a, const FrobeniusData& f, const SyzygyChain& s,
                          const ComplexWindow& schain, const CompleteWindow& t,
                          const FundamentalClass& w, int n) {
  (void)t;
  const Field& F = a.field;
  Bimodule A = regular_bimodule(a);
  StableHom src = stable_hom(s.omega(n), A);
  StableTensor tgt = stable_tensor(s.omega(-n - 1), w.coeff);
  DualityReport rep;
  rep.degree = n;
  rep.dim_source = src.dim;
  rep.dim_target = tgt.dim;
  if (src.dim != tgt.dim)
    throw MathError("duality: source and target dimensions disagree at degree " +
                    std::to_string(n));
  rep.matrix = Mat(tgt.dim, src.dim);
  Mat tgt_basisT = mat_transpose(tgt.basis);
  for (int k = 0; k < src.dim; ++k) {
    StableClass u{n, src.reps[k]};
    StableTensorClass img = es_cap(s, schain, f, u, w.omega, w.coeff);
    auto coords = solve(F, tgt_basisT, img.coords);
    if (!coords) throw MathError("duality: image leaves the stable subspace");
    for (int r2 = 0; r2 < tgt.dim; ++r2) rep.matrix.at(r2, k) = coords->at(r2, 0);
  }
  if (src.dim > 0 && rank(F, rep.matrix) != src.dim)
    throw MathError("duality: cap with the fundamental class is not invertible at degree " +
                    std::to_string(n));
  return rep;
}

namespace {

// connecting map on stable cohomology for 0 -> sub -> mid -> quo -> 0
Mat stable_coh_connecting(const SyzygyChain& s, const ComplexWindow& schain,
                          const ShortExactSeq& ses, int n) {
  const Field& F = s.a->field;
  StableHom from = stable_hom(s.omega(n), ses.quo);
  StableHom to = stable_hom(s.omega(n + 1), ses.sub);
  Mat out(to.dim, from.dim);
  for (int k = 0; k < from.dim; ++k) {
    Mat rhs = mat_mul(F, from.reps[k], chain_pi(s, n));
    std::vector<MapConstraint> cons{{ses.surj, Mat(), rhs}};
    auto g = solve_bimodule_map(schain.comp(n), ses.mid,
                                schain.free_at(n) ? &*schain.free_at(n) : nullptr, cons);
    if (!g) throw MathError("connecting map: lift through the middle failed");
    Mat restricted = mat_mul(F, *g, chain_iota(s, n + 1));
    auto x = solve_matrix(F, ses.inj, restricted);
    if (!x) throw MathError("connecting map: restriction misses the subobject");
    Vec coords = mat_mul(F, to.proj, flatten(*x));
    for (int r2 = 0; r2 < to.dim; ++r2) out.at(r2, k) = coords.at(r2, 0);
  }
  return out;
}

// connecting map on stable homology for 0 -> sub -> mid -> quo -> 0
Mat stable_hom_connecting(const SyzygyChain& s, const ComplexWindow& schain,
                          const ShortExactSeq& ses, int l) {
  const Field& F = s.a->field;
  StableTensor from = stable_tensor(s.omega(l), ses.quo);
  StableTensor to = stable_tensor(s.omega(l - 1), ses.sub);
  TensorOverAe t_from = tensor_over_Ae(s.omega(l), ses.quo);
  TensorOverAe t_chain_q = tensor_over_Ae(schain.comp(l), ses.quo);
  TensorOverAe t_chain_m = tensor_over_Ae(schain.comp(l), ses.mid);
  TensorOverAe t_prev_m = tensor_over_Ae(schain.comp(l - 1), ses.mid);
  TensorOverAe t_prev_s = tensor_over_Ae(schain.comp(l - 1), ses.sub);
  TensorOverAe t_out = tensor_over_Ae(s.omega(l - 1), ses.sub);

  Mat proj_step = induced_tensor_map(F, t_chain_q, t_from, chain_pi(s, l),
                                     Mat::identity(ses.quo.dim));
  auto sigma1 = solve_matrix(F, proj_step, Mat::identity(t_from.dim));
  Mat coeff_step = induced_tensor_map(F, t_chain_m, t_chain_q,
                                      Mat::identity(schain.comp(l).dim), ses.surj);
  auto sigma2 = solve_matrix(F, coeff_step, Mat::identity(t_chain_q.dim));
  if (!sigma1 || !sigma2) throw MathError("homology connecting: no sections");
  Mat dstep = induced_tensor_map(F, t_chain_m, t_prev_m, schain.diff(l),
                                 Mat::identity(ses.mid.dim));
  Mat incl_step = induced_tensor_map(F, t_prev_s, t_prev_m,
                                     Mat::identity(schain.comp(l - 1).dim), ses.inj);
  Mat proj_out = induced_tensor_map(F, t_prev_s, t_out, chain_pi(s, l - 1),
                                    Mat::identity(ses.sub.dim));

  Mat out(to.dim, from.dim);
  Mat to_basisT = mat_transpose(to.basis);
  for (int k = 0; k < from.dim; ++k) {
    Vec w(t_from.dim, 1);
    for (int e = 0; e < t_from.dim; ++e) w.at(e, 0) = from.basis.at(k, e);
    Vec u = mat_mul(F, *sigma2, mat_mul(F, *sigma1, w));
    Vec v = mat_mul(F, dstep, u);
    auto pulled = solve(F, incl_step, v);
    if (!pulled) throw MathError("homology connecting: boundary misses the subobject");
    Vec img = mat_mul(F, proj_out, *pulled);
    auto coords = solve(F, to_basisT, img);
    if (!coords) throw MathError("homology connecting: image not stable");
    for (int r2 = 0; r2 < to.dim; ++r2) out.at(r2, k) = coords->at(r2, 0);
  }
  return out;
}

}  // namespace

DualityReport duality_map_shifted(const Algebra& a, const FrobeniusData& f,
                                  const SyzygyChain& s, const ComplexWindow& schain,
                                  const CompleteWindow& t, const FundamentalClass& w, int n) {
  const Field& F = a.field;
  Bimodule A = regular_bimodule(a);
  auto seqs = shift_sequences(A, f);

  // base duality one degree lower, conjugated through the connecting
  // isomorphisms for K(A) and its twist
  DualityReport base = duality_map(a, f, s, schain, t, w, n - 1);

  Mat dcoh = stable_coh_connecting(s, schain, seqs.K, n - 1);
  // twisted sequence 0 -> K' -> (A(x)A)' -> A' -> 0 with ' = twist(-,1,nu^{-1})
  Automorphism id_a = identity_automorphism(a);
  ShortExactSeq tw_ses{twist(seqs.K.sub, id_a, f.nakayama_inv),
                       twist(seqs.K.mid, id_a, f.nakayama_inv),
                       twist(seqs.K.quo, id_a, f.nakayama_inv), seqs.K.inj, seqs.K.surj};
  Mat dhom = stable_hom_connecting(s, schain, tw_ses, -n);

  DualityReport rep;
  rep.degree = n;
  rep.dim_source = dcoh.rows;
  rep.dim_target = dhom.rows;
  if (rank(F, dcoh) != dcoh.rows || dcoh.rows != dcoh.cols)
    throw MathError("duality shift: cohomology connecting map is not invertible");
  if (rank(F, dhom) != dhom.rows || dhom.rows != dhom.cols)
    throw MathError("duality shift: homology connecting map is not invertible");
  rep.matrix = mat_mul(F, dhom, mat_mul(F, base.matrix, mat_inverse(F, dcoh)));
  if (rep.matrix.rows != rep.matrix.cols ||
      (rep.matrix.rows > 0 && rank(F, rep.matrix) != rep.matrix.rows))
    throw MathError("duality shift: composite is not invertible at degree " +
                    std::to_string(n));
  return rep;
}

RingTable ring_table(const Algebra& a, const FrobeniusData& f, const SyzygyChain& s,
                     const ComplexWindow& schain, int D) {
  const Field& F = a.field;
  Bimodule A = regular_bimodule(a);

  // group data out to 3D so associativity triples stay in range
  int reach = 3 * D;
  std::map<int, StableHom> groups;
  for (int i = -reach; i <= reach; ++i) groups.emplace(i, stable_hom(s.omega(i), A));

  auto class_coords = [&](const StableClass& c) {
    return mat_mul(F, groups.at(c.degree).proj, flatten(c.rep));
  };
  auto basis_class = [&](int deg, int k) {
    return StableClass{deg, groups.at(deg).reps[k]};
  };

  RingTable table;
  table.D = D;
  for (int i = -D; i <= D; ++i) table.dims.push_back(groups.at(i).dim);

  // unit laws
  StableClass unit{0, Mat::identity(a.dim)};
  for (int j = -D; j <= D; ++j)
    for (int k = 0; k < groups.at(j).dim; ++k) {
      StableClass g = basis_class(j, k);
      if (!(class_coords(es_cup(s, schain, unit, g)) == class_coords(g)))
        throw MathError("ring: left unit law fails");
      if (!(class_coords(es_cup(s, schain, g, unit)) == class_coords(g)))
        throw MathError("ring: right unit law fails");
    }

  // table entries and graded commutativity
  table.entries.assign(2 * D + 1, {});
  for (int i = -D; i <= D; ++i) {
    auto& row = table.entries[i + D];
    row.assign(groups.at(i).dim, {});
    for (int ka = 0; ka < groups.at(i).dim; ++ka) {
      row[ka].assign(2 * D + 1, {});
      for (int j = -D; j <= D; ++j) {
        if (i + j < -D || i + j > D) continue;
        row[ka][j + D].resize(groups.at(j).dim);
        for (int kb = 0; kb < groups.at(j).dim; ++kb) {
          StableClass fg = es_cup(s, schain, basis_class(i, ka), basis_class(j, kb));
          Vec coords = class_coords(fg);
          StableClass gf = es_cup(s, schain, basis_class(j, kb), basis_class(i, ka));
          Vec coords2 = class_coords(gf);
          Rat sign = ((i * j) % 2 == 0) ? Rat(1) : Rat(-1);
          Vec expect(coords.rows, 1);
          for (int e = 0; e < coords.rows; ++e) expect.at(e, 0) = F.mul(sign, coords2.at(e, 0));
          if (!(coords == expect)) throw MathError("ring: graded commutativity fails");
          row[ka][j + D][kb] = coords;
        }
      }
    }
  }

  // associativity on all triples with every partial degree in reach
  for (int i = -D; i <= D; ++i)
    for (int j = -D; j <= D; ++j)
      for (int k = -D; k <= D; ++k)
        for (int ka = 0; ka < groups.at(i).dim; ++ka)
          for (int kb = 0; kb < groups.at(j).dim; ++kb)
            for (int kc = 0; kc < groups.at(k).dim; ++kc) {
              StableClass xy = es_cup(s, schain, basis_class(i, ka), basis_class(j, kb));
              StableClass yz = es_cup(s, schain, basis_class(j, kb), basis_class(k, kc));
              StableClass lhs = es_cup(s, schain, xy, basis_class(k, kc));
              StableClass rhs = es_cup(s, schain, basis_class(i, ka), yz);
              if (!(class_coords(lhs) == class_coords(rhs)))
                throw MathError("ring: associativity fails");
            }
  return table;
}

void verify_compatibility(const CompleteWindow& t, const DiagonalWindow& dw,
                          const BarWindow& bar, int rmax, int smax) {
  const Field& F = t.cx.alg->field;
  const Algebra& a = *t.cx.alg;
  Bimodule A = regular_bimodule(a);
  TensorOverA AA = tensor_over_A(A, A);

  HomComplexWindow hwin = hom_complex(t.cx, A);
  HomComplexWindow hmn = hom_complex(t.cx, AA.space);
  TensorComplexWindow twin = tensor_complex(t.cx, A);
  TensorComplexWindow tmn = tensor_complex(t.cx, AA.space);

  // cup squares: classical cup maps to the window-route cup
  for (int r = 0; r <= rmax; ++r)
    for (int sdeg = 0; sdeg <= smax; ++sdeg) {
      HomologyData gu = cohomology_at(F, hwin.cx, r);
      HomologyData gv = cohomology_at(F, hwin.cx, sdeg);
      HomologyData gt = cohomology_at(F, hmn.cx, r + sdeg);
      for (int cu = 0; cu < gu.dim; ++cu)
        for (int cv = 0; cv < gv.dim; ++cv) {
          Vec u(hwin.cx.dim(r), 1), v(hwin.cx.dim(sdeg), 1);
          for (int k = 0; k < u.rows; ++k) u.at(k, 0) = gu.reps.at(cu, k);
          for (int k = 0; k < v.rows; ++k) v.at(k, 0) = gv.reps.at(cv, k);
          Vec classical = cup_bar_into(bar, A, r, u, A, sdeg, v, AA);
          Vec tate = cup_via_diagonal(t, dw, hwin, A, u, r, hwin, A, v, sdeg, AA);
          if (!(mat_mul(F, gt.proj, classical) == mat_mul(F, gt.proj, tate)))
            throw MathError("compatibility: cup square fails at (" + std::to_string(r) + "," +
                            std::to_string(sdeg) + ")");
        }
    }

  // cap squares
  for (int r = 0; r <= rmax; ++r)
    for (int sdeg = std::max(r, 0); sdeg <= smax; ++sdeg) {
      HomologyData gu = cohomology_at(F, hwin.cx, r);
      HomologyData gz = homology_at(F, twin.cx, sdeg);
      HomologyData gt = homology_at(F, tmn.cx, sdeg - r);
      for (int cu = 0; cu < gu.dim; ++cu)
        for (int cz = 0; cz < gz.dim; ++cz) {
          Vec u(hwin.cx.dim(r), 1), z(twin.cx.dim(sdeg), 1);
          for (int k = 0; k < u.rows; ++k) u.at(k, 0) = gu.reps.at(cu, k);
          for (int k = 0; k < z.rows; ++k) z.at(k, 0) = gz.reps.at(cz, k);
          Vec classical = cap_bar_into(bar, A, r, u, A, sdeg, z, AA);
          Mat umat = hwin.cochain_matrix(t.cx, A, r, u);
          Vec tate = cap_via_diagonal(t, dw, A, umat, r, twin, A, z, sdeg, AA);
          if (!(mat_mul(F, gt.proj, classical) == mat_mul(F, gt.proj, tate)))
            throw MathError("compatibility: cap square fails at (" + std::to_string(r) + "," +
                            std::to_string(sdeg) + ")");
        }
    }
}

ChainMapWindow window_to_syzygy(const CompleteWindow& t, const SyzygyChain& s,
                                const ComplexWindow& schain, int depth) {
  const Field& F = t.cx.alg->field;
  std::vector<MapConstraint> cons{{chain_pi(s, 0), Mat(), *t.cx.eps}};
  auto th0 = solve_bimodule_map(t.cx.comp(0), schain.comp(0),
                                t.cx.free_at(0) ? &*t.cx.free_at(0) : nullptr, cons);
  if (!th0) throw MathError("comparison: augmentation lift failed");
  std::map<int, Mat> part{{0, *th0}};
  ChainMapWindow up = lift_chain_map(t.cx, schain, part, 0, depth);
  ChainMapWindow down = lift_chain_map_down(t.cx, schain, part, 0, -depth);
  ChainMapWindow out;
  out.lo = -depth;
  out.hi = depth;
  for (int n = -depth; n <= depth; ++n)
    out.maps.push_back(n <= 0 ? down.map(n) : up.map(n));
  return out;
}

Vec stable_to_window_cochain(const CompleteWindow& t, const SyzygyChain& s,
                             const ChainMapWindow& theta, const HomComplexWindow& hom,
                             const Bimodule& coeff, const StableClass& c) {
  const Field& F = t.cx.alg->field;
  Mat w = mat_mul(F, c.rep, mat_mul(F, chain_pi(s, c.degree), theta.map(c.degree)));
  return hom.matrix_cochain(t.cx, coeff, c.degree, w);
}

void verify_dual_dimensions(const TateFormulaEngine& eng, int range) {
  const Algebra& a = *eng.a;
  Bimodule A = regular_bimodule(a);
  Automorphism nu2 = compose(a, eng.f.nakayama, eng.f.nakayama);
  Bimodule A2 = twist(A, identity_automorphism(a), nu2);
  for (int i = -range; i <= range; ++i) {
    if (eng.homology(A, i).dim != eng.homology(A, -i - 1).dim)
      throw MathError("dual dimensions: homology self-duality fails at " + std::to_string(i));
    if (eng.cohomology(A, i).dim != eng.cohomology(A2, -i - 1).dim)
      throw MathError("dual dimensions: twisted cohomology duality fails at " +
                      std::to_string(i));
  }
}

}  // namespace tatehoch
