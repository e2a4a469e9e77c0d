#pragma once

// The normalized bar resolution on a finite window, classical Hochschild
// (co)homology, the front/back-face diagonal, and cup and cap products.

#include "tatehoch/complexwin.hpp"

namespace tatehoch {

/// Bar_n = A (x) Abar^{(x)n} (x) A with Abar spanned by the non-unit
/// basis classes.  Basis index (i, w, j) -> (i * words + w) * dimA + j
/// where w runs over length-n words in base dimA-1.
struct BarWindow {
  ComplexWindow cx;        // degrees 0..N, augmented by eps
  int top_degree{0};
  int abar_dim{0};
  /// Extra degeneracy s_n : Bar_n -> Bar_{n+1} for n = -1..N-1 (s_{-1} is
  /// A -> Bar_0); right A-linear, d s + s d = id on the augmented window.
  std::vector<Mat> s;

  const Algebra& alg() const { return *cx.alg; }
  int words(int n) const;                       // (dimA-1)^n
  int basis_index(int i, int w, int j, int n) const;
  const Mat& contraction(int n) const { return s[n + 1]; }  // s_n
};

/// Build the window with degrees 0..N; verifies d^2 = 0, the resolution
/// property up to N-1, and the contracting-homotopy identity.
/// Components of dimension above action_dim_limit skip their dense
/// action matrices (the free-module model is kept).
BarWindow bar_window(const Algebra& a, int N, int action_dim_limit = 256);

/// H^n(A, M) from the bar window; 0 <= n <= N-1.  The representative
/// coordinates live in the hom-complex model (M^{words(n)}).
HomologyData hochschild_cohomology(const BarWindow& b, const Bimodule& m, int n);
HomologyData hochschild_cohomology(const BarWindow& b, const Bimodule& m, int n,
                                   HomComplexWindow& model);

/// H_n(A, M); representative coordinates in the tensor model.
HomologyData hochschild_homology(const BarWindow& b, const Bimodule& m, int n);
HomologyData hochschild_homology(const BarWindow& b, const Bimodule& m, int n,
                                 TensorComplexWindow& model);

/// Edge-aware (co)homology of windowed k-complexes: boundaries are taken
/// to vanish below the window when the complex genuinely starts there.
HomologyData cohomology_edge(const Field& F, const KCochainWindow& cx, int n);
HomologyData homology_edge(const Field& F, const KChainWindow& cx, int n);

/// The diagonal Bar_n -> sum_{t} Bar_t (x)_A Bar_{n-t} as a chain map into
/// the assembled tensor window (degrees 0..up_to).
struct BarDiagonal {
  TensorWindow target;
  ChainMapWindow delta;
};
BarDiagonal bar_diagonal(const BarWindow& b, int up_to);

/// Cup product of cochain representatives: u in the degree-m model over
/// M, v in the degree-n model over N; the result is a degree-(m+n)
/// model cochain over M (x)_A N (returned together with the product
/// bimodule data).  Uses the front/back-face formula with sign (-1)^{mn}.
struct CupResult {
  TensorOverA coeff;  // M (x)_A N
  Vec cochain;        // model coordinates at degree m+n
};
CupResult cup_bar(const BarWindow& b, const Bimodule& m, int dm, const Vec& u,
                  const Bimodule& n, int dn, const Vec& v);
/// Same product against a precomputed coefficient tensor.
Vec cup_bar_into(const BarWindow& b, const Bimodule& m, int dm, const Vec& u,
                 const Bimodule& n, int dn, const Vec& v, const TensorOverA& mn);

/// Cap product: u a degree-m model cochain over M, z a degree-p model
/// chain over N; result is a degree-(p-m) model chain over M (x)_A N
/// with sign (-1)^{m(p-m)}.
struct CapResult {
  TensorOverA coeff;
  Vec chain;
};
CapResult cap_bar(const BarWindow& b, const Bimodule& m, int dm, const Vec& u,
                  const Bimodule& n, int p, const Vec& z);
Vec cap_bar_into(const BarWindow& b, const Bimodule& m, int dm, const Vec& u,
                 const Bimodule& n, int p, const Vec& z, const TensorOverA& mn);

/// Checks that the cup product agrees with the composition product
/// (lift v through eps (x) id, postcompose u (x) id) for all basis
/// classes of degrees (dm, dn); throws on disagreement.
void verify_composition_product(const BarWindow& b, const Bimodule& m, const Bimodule& n,
                                int dm, int dn);

}  // namespace tatehoch
