#pragma once

// Windowed chain complexes of bimodules: homology, Hom and tensor
// complexes (with fast paths through recorded free-module structure),
// chain-map lifting and homotopy extension as deterministic linear
// solves, and the complete tensor product of two windows.

#include <map>
#include <optional>

#include "tatehoch/bimodule.hpp"

namespace tatehoch {

/// Free A^e-module structure on a bimodule: generator columns plus the
/// coefficients expressing each basis vector as sum_{s,i,j} c u_i g_s u_j
/// (flat index (s * dimA + i) * dimA + j).
struct FreeStructure {
  Mat gens;    // dim x rank
  Mat expand;  // (rank * dimA^2) x dim
  int rank() const { return gens.cols; }
};

FreeStructure make_free_structure(const Bimodule& x, const Mat& gens);

/// Assemble the matrix of the A^e-linear map X -> Y with the given
/// generator images (one column of `images` per generator of X).
Mat map_from_free(const Bimodule& x, const FreeStructure& xf, const Bimodule& y,
                  const Mat& images);

/// Chain complex window: components C_n for lo <= n <= hi and
/// differentials d_n : C_n -> C_{n-1} for lo < n <= hi.
struct ComplexWindow {
  const Algebra* alg{nullptr};
  int lo{0}, hi{-1};
  std::vector<Bimodule> comps;
  std::vector<Mat> diffs;  // diffs[n - lo - 1] = d_n
  std::vector<std::optional<FreeStructure>> free;
  std::optional<Mat> eps;  // augmentation C_0 -> A
  std::optional<Mat> eta;  // co-augmentation A -> C_{-1}
  // set when the window is a finite piece of an unbounded complex
  bool truncated_lo{false}, truncated_hi{false};

  int size() const { return hi - lo + 1; }
  bool in_window(int n) const { return lo <= n && n <= hi; }
  const Bimodule& comp(int n) const { return comps[n - lo]; }
  const Mat& diff(int n) const { return diffs[n - lo - 1]; }  // lo < n <= hi
  const std::optional<FreeStructure>& free_at(int n) const { return free[n - lo]; }
};

/// Validates d^2 = 0 on the interior and the augmentation identities
/// (eps d_1 = 0, d_{-1} eta = 0, d_0 = eta eps) where the degrees exist.
ComplexWindow make_complex_window(const Algebra& a, int lo, int hi,
                                  std::vector<Bimodule> comps, std::vector<Mat> diffs,
                                  std::optional<Mat> eps = std::nullopt,
                                  std::optional<Mat> eta = std::nullopt);

ComplexWindow shift(const ComplexWindow& c, int i);
ComplexWindow truncate_geq(const ComplexWindow& c, int n);
ComplexWindow truncate_lt(const ComplexWindow& c, int n);

struct HomologyData {
  int dim{0};
  Mat cycles;      // rows span Z_n
  Mat boundaries;  // rows span B_n
  Mat proj;        // dim x comp_dim: cycle -> homology coordinates
  Mat reps;        // dim x comp_dim: chosen representative cycles (rows)
};

/// Homology of a plain k-linear windowed complex at an interior degree:
/// dims/diffs indexed by degree, d_n : C_n -> C_{n-1}.
struct KChainWindow {
  int lo{0}, hi{-1};
  std::vector<int> dims;
  std::vector<Mat> diffs;  // diffs[n - lo - 1] = d_n
  int dim(int n) const { return dims[n - lo]; }
  const Mat& diff(int n) const { return diffs[n - lo - 1]; }
};

HomologyData homology_at(const Field& F, const KChainWindow& c, int n);
HomologyData homology_at(const ComplexWindow& c, int n);

/// Cochain window: deltas[n - lo] = delta^n : C^n -> C^{n+1} for lo <= n < hi.
struct KCochainWindow {
  int lo{0}, hi{-1};
  std::vector<int> dims;
  std::vector<Mat> deltas;
  int dim(int n) const { return dims[n - lo]; }
  const Mat& delta(int n) const { return deltas[n - lo]; }
};

HomologyData cohomology_at(const Field& F, const KCochainWindow& c, int n);

/// Hom_{A^e}(C, M) as a cochain window.  Components with free structure
/// use the model Hom(C_n, M) = M^{rank}; otherwise an explicit basis of
/// A^e-linear maps is used.  The differential carries the sign (-1)^{n+1}
/// on precomposition with d_{n+1}.
struct HomComplexWindow {
  KCochainWindow cx;
  std::vector<std::vector<Mat>> basis;  // per degree; empty when the free model is used
  std::vector<int> ranks;               // rank, or -1 when the basis model is used
  int coeff_dim{0};

  /// Full matrix of the cochain with the given coordinates.
  Mat cochain_matrix(const ComplexWindow& c, const Bimodule& m, int n, const Vec& coords) const;
  /// Coordinates of an explicit A^e-linear map C_n -> M.
  Vec matrix_cochain(const ComplexWindow& c, const Bimodule& m, int n, const Mat& f) const;
};

HomComplexWindow hom_complex(const ComplexWindow& c, const Bimodule& m);

/// C (x)_{A^e} M as a chain window, with the analogous free model
/// C_n (x) M = M^{rank} (g_s (x) m identified with the s-block).
struct TensorComplexWindow {
  KChainWindow cx;
  std::vector<TensorOverAe> generic;  // used only where no free structure exists
  std::vector<int> ranks;
  int coeff_dim{0};

  /// Element of C_n (x) M from model coordinates, as a vector in the
  /// flattened ambient space (c, m) -> c * dimM + m.
  Vec chain_ambient(const ComplexWindow& c, const Bimodule& m, int n, const Vec& coords) const;
  Vec ambient_chain(const ComplexWindow& c, const Bimodule& m, int n, const Vec& ambient) const;
};

TensorComplexWindow tensor_complex(const ComplexWindow& c, const Bimodule& m);

/// Constraint post * f * pre = rhs on an unknown A^e-linear map f.
/// Empty post/pre mean identity.
struct MapConstraint {
  Mat post, pre, rhs;
};

/// Deterministic solve for an A^e-linear map X -> Y subject to the given
/// constraints.  When a seed is supplied and already satisfies everything
/// it is returned unchanged.
std::optional<Mat> solve_bimodule_map(const Bimodule& x, const Bimodule& y,
                                      const FreeStructure* xfree,
                                      const std::vector<MapConstraint>& cons,
                                      const Mat* seed = nullptr);

struct ChainMapWindow {
  int lo{0}, hi{-1};
  std::vector<Mat> maps;  // maps[n - lo] : src C_n -> tgt C_n
  const Mat& map(int n) const { return maps[n - lo]; }
};

/// Extend a partial family {f_i : i <= r} commuting with differentials
/// upward to degree up_to, solving d f_n = f_{n-1} d (src component free
/// or small).  Throws when a step has no solution.
ChainMapWindow lift_chain_map(const ComplexWindow& src, const ComplexWindow& tgt,
                              const std::map<int, Mat>& partial, int r, int up_to,
                              const std::map<int, Mat>* seed = nullptr);

/// Extend a partial family {f_i : i >= r} downward to degree down_to,
/// solving f_{n} d_{n+1} = d_{n+1} f_{n+1} for descending n.
ChainMapWindow lift_chain_map_down(const ComplexWindow& src, const ComplexWindow& tgt,
                                   const std::map<int, Mat>& partial, int r, int down_to,
                                   const std::map<int, Mat>* seed = nullptr);

/// Homotopy extension: given chain maps f, g and a partial homotopy
/// {h_i : i <= r} with d h + h d = f - g up to r, extend upward.
std::map<int, Mat> extend_homotopy(const ComplexWindow& src, const ComplexWindow& tgt,
                                   const ChainMapWindow& f, const ChainMapWindow& g,
                                   const std::map<int, Mat>& partial, int r, int up_to);

/// Downward variant: {h_i : i >= r} extended to down_to.
std::map<int, Mat> extend_homotopy_down(const ComplexWindow& src, const ComplexWindow& tgt,
                                        const ChainMapWindow& f, const ChainMapWindow& g,
                                        const std::map<int, Mat>& partial, int r, int down_to);

/// Complete tensor product of two windows over A restricted to in-window
/// slot pairs, with slot indices |i| <= slot bounds implied by the inputs.
/// Requesting a degree whose slots would cross a truncated window edge is
/// an error naming the missing pair.
struct TensorWindow {
  int lo{0}, hi{-1};
  struct Slot {
    int a, b;     // component pair (C_a, C'_b)
    int offset;   // offset of this slot inside the direct sum
    TensorOverA t;
  };
  std::vector<std::vector<Slot>> slots;
  std::vector<Bimodule> comps;
  std::vector<Mat> diffs;  // d_n for lo < n <= hi

  const Bimodule& comp(int n) const { return comps[n - lo]; }
  const Mat& diff(int n) const { return diffs[n - lo - 1]; }
  const std::vector<Slot>& slots_at(int n) const { return slots[n - lo]; }
  const Slot* find_slot(int n, int b) const;
};

TensorWindow complete_tensor_window(const ComplexWindow& c, const ComplexWindow& cp,
                                    int out_lo, int out_hi, bool allow_truncation = false);

/// Direct sum with block-diagonal actions; offsets are the running sums.
Bimodule direct_sum(const Algebra& a, const std::vector<const Bimodule*>& parts);

}  // namespace tatehoch
