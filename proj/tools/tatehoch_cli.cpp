// Command-line frontend: validate algebra spec files, print Frobenius
// data, tabulate Hochschild and Tate-Hochschild groups by one or both
// engines, export ring tables, check duality, and run the full property
// suite.  Exit codes: 0 ok, 1 usage, 2 parse error, 3 mathematical
// precondition, 4 property failure.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>

#include "tatehoch/cache.hpp"
#include "tatehoch/products.hpp"
#include "tatehoch/report.hpp"
#include "tatehoch/specfile.hpp"

using namespace tatehoch;
using nlohmann::ordered_json;

namespace {

struct PropertyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  AlgebraSpec spec;
  std::unique_ptr<Algebra> alg;
  FrobeniusData frob;
  std::string hash;
};

Context make_context(const std::string& path) {
  Context c;
  c.spec = load_algebra_spec(path);
  c.alg = std::make_unique<Algebra>(
      make_algebra(c.spec.field, c.spec.basis, c.spec.table));
  c.frob = frobenius(*c.alg, c.spec.functional);
  c.hash = content_hash(c.spec.source_text);
  return c;
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

ordered_json mat_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

void start_report(Report& rep, const char* command, const Context& c) {
  rep.set("command", command);
  rep.set("algebra", c.spec.name);
  rep.set("field", c.spec.field.str());
  rep.set("dim", c.alg->dim);
  rep.set("hash", c.hash);
}

struct OutputOpts {
  std::string json_path, csv_path;
  bool quiet{false};
};

void emit(const Report& rep, const OutputOpts& out) {
  if (!out.quiet) std::cout << rep.to_text();
  if (!out.json_path.empty()) {
    if (out.json_path == "-") {
      std::cout << rep.to_json();
    } else {
      std::ofstream f(out.json_path, std::ios::binary | std::ios::trunc);
      f << rep.to_json();
    }
  }
  if (!out.csv_path.empty()) {
    if (out.csv_path == "-") {
      std::cout << rep.to_csv();
    } else {
      std::ofstream f(out.csv_path, std::ios::binary | std::ios::trunc);
      f << rep.to_csv();
    }
  }
}

Bimodule coefficient_module(const Context& c, const std::string& which) {
  Bimodule A = regular_bimodule(*c.alg);
  if (which == "A") return A;
  if (which == "DA") return k_dual(A);
  if (which == "AxA") return free_rank_one(*c.alg);
  throw PropertyFailure("unknown coefficient module '" + which + "'");
}

// ---- commands ---------------------------------------------------------

Report cmd_validate(const Context& c) {
  Report rep;
  start_report(rep, "validate", c);
  rep.add_check("associativity-and-unit", true);  // make_algebra already threw otherwise
  rep.add_check("frobenius-form-nondegenerate", true);
  rep.add_check("nakayama-is-automorphism", true);
  return rep;
}

Report cmd_frobenius(const Context& c) {
  Report rep;
  start_report(rep, "frobenius", c);
  rep.set("gram", mat_json(c.frob.gram));
  rep.set("dual_basis", mat_json(c.frob.dual_basis));
  rep.set("nakayama", mat_json(c.frob.nakayama.matrix));
  rep.set("symmetric", is_symmetric(c.frob));
  int order = -1;
  Mat power = c.frob.nakayama.matrix;
  for (int k = 1; k <= 512; ++k) {
    if (power == Mat::identity(c.alg->dim)) {
      order = k;
      break;
    }
    power = mat_mul(c.alg->field, power, c.frob.nakayama.matrix);
  }
  rep.set("nakayama_order", order > 0 ? ordered_json(order) : ordered_json("> 512"));
  return rep;
}

Report cmd_hochschild(const Context& c, int lo, int hi, const std::string& module) {
  if (lo < 0 || hi < lo) throw PropertyFailure("need 0 <= min <= max");
  Report rep;
  start_report(rep, "hochschild", c);
  rep.set("module", module);
  Bimodule m = coefficient_module(c, module);
  BarWindow bar = bar_window(*c.alg, hi + 1);
  ordered_json table = ordered_json::array();
  for (int n = lo; n <= hi; ++n) {
    table.push_back({{"degree", n},
                     {"cohomology", hochschild_cohomology(bar, m, n).dim},
                     {"homology", hochschild_homology(bar, m, n).dim}});
  }
  rep.set("table", table);
  return rep;
}

Report cmd_tate(const Context& c, int lo, int hi, const std::string& engine, bool no_cache) {
  if (hi < lo) throw PropertyFailure("need min <= max");
  Report rep;
  start_report(rep, "tate", c);
  rep.set("engine", engine);
  rep.set("min", lo);
  rep.set("max", hi);

  std::string key = content_hash(c.spec.source_text + "|tate|" + engine + "|" +
                                 std::to_string(lo) + ".." + std::to_string(hi));
  if (!no_cache) {
    if (auto hit = cache_get(key)) {
      rep.j = ordered_json::parse(*hit);
      rep.set("cache", "hit");
      return rep;
    }
  }

  // cohomology at degree hi needs engine window hi; degree lo is reached
  // through the homology formulas once lo >= -W - 1
  int Wf = std::max({hi, -lo - 1, 1});
  int Ws = std::max({hi, -lo, 1});
  Bimodule A = regular_bimodule(*c.alg);
  std::unique_ptr<TateFormulaEngine> formula;
  std::unique_ptr<SyzygyChain> syz;
  if (engine == "formula" || engine == "both")
    formula = std::make_unique<TateFormulaEngine>(make_formula_engine(*c.alg, c.frob, Wf));
  if (engine == "stable" || engine == "both")
    syz = std::make_unique<SyzygyChain>(syzygies(*c.alg, Ws));
  if (!formula && !syz) throw PropertyFailure("engine must be formula, stable or both");

  ordered_json table = ordered_json::array();
  bool agree = true;
  for (int n = lo; n <= hi; ++n) {
    ordered_json row{{"degree", n}};
    int ch = -1, hh = -1;
    if (formula) {
      ch = formula->cohomology(A, n).dim;
      hh = formula->homology(A, n).dim;
      row["cohomology"] = ch;
      row["homology"] = hh;
    }
    if (syz) {
      int sc = tate_via_stable(*syz, A, n).dim;
      int sh = tate_homology_via_stable(*syz, A, n).dim;
      if (formula) {
        row["cohomology_stable"] = sc;
        row["homology_stable"] = sh;
        agree = agree && sc == ch && sh == hh;
      } else {
        row["cohomology"] = sc;
        row["homology"] = sh;
      }
    }
    table.push_back(row);
  }
  rep.set("table", table);
  if (formula && syz) {
    rep.add_check("engine-agreement", agree);
    if (!agree) throw PropertyFailure("formula and stable engines disagree");
  }
  if (!no_cache) cache_put(key, rep.j.dump());
  rep.set("cache", "miss");
  return rep;
}

Report cmd_ring(const Context& c, int maxdeg) {
  Report rep;
  start_report(rep, "ring", c);
  rep.set("max_degree", maxdeg);
  int W = 3 * maxdeg + 2;
  SyzygyChain syz = syzygies(*c.alg, W);
  ComplexWindow schain = syzygy_complex(syz, c.frob);
  RingTable rt = ring_table(*c.alg, c.frob, syz, schain, maxdeg);
  ordered_json dims = ordered_json::array();
  for (int i = -maxdeg; i <= maxdeg; ++i)
    dims.push_back({{"degree", i}, {"dim", rt.dims[i + maxdeg]}});
  rep.set("table", dims);
  ordered_json prods = ordered_json::array();
  for (int i = -maxdeg; i <= maxdeg; ++i)
    for (int ka = 0; ka < rt.dims[i + maxdeg]; ++ka)
      for (int j = -maxdeg; j <= maxdeg; ++j) {
        if (i + j < -maxdeg || i + j > maxdeg) continue;
        for (int kb = 0; kb < rt.dims[j + maxdeg]; ++kb) {
          const Vec& coords = rt.entries[i + maxdeg][ka][j + maxdeg][kb];
          ordered_json cc = ordered_json::array();
          for (int e = 0; e < coords.rows; ++e) cc.push_back(rat_str(coords.at(e, 0)));
          prods.push_back({{"left_degree", i},
                           {"left_index", ka},
                           {"right_degree", j},
                           {"right_index", kb},
                           {"product", cc}});
        }
      }
  rep.set("products", prods);
  rep.add_check("ring-axioms", true);  // ring_table throws otherwise
  return rep;
}

Report cmd_duality(const Context& c, int range) {
  Report rep;
  start_report(rep, "duality", c);
  rep.set("range", range);
  SyzygyChain syz = syzygies(*c.alg, range + 3);
  ComplexWindow schain = syzygy_complex(syz, c.frob);
  CompleteWindow t = complete_bar_window(*c.alg, c.frob, 2);
  FundamentalClass w = fundamental_class(*c.alg, c.frob, syz, schain, t);
  TateFormulaEngine eng = make_formula_engine(*c.alg, c.frob, range);
  verify_dual_dimensions(eng, range);
  rep.add_check("dual-dimensions", true);
  ordered_json table = ordered_json::array();
  for (int n = -range; n <= range; ++n) {
    auto d = duality_map(*c.alg, c.frob, syz, schain, t, w, n);
    auto ds = duality_map_shifted(*c.alg, c.frob, syz, schain, t, w, n);
    table.push_back({{"degree", n},
                     {"dim", d.dim_source},
                     {"full_rank", true},
                     {"shifted_dim", ds.dim_source},
                     {"shifted_full_rank", true}});
  }
  rep.set("table", table);
  rep.add_check("cap-with-fundamental-class-iso", true);
  return rep;
}

Report cmd_check(const Context& c, std::uint64_t seed) {
  Report rep;
  start_report(rep, "check", c);
  rep.set("seed", std::to_string(seed));
  const Algebra& a = *c.alg;
  Bimodule A = regular_bimodule(a);
  int range = 3;
  int W = c.spec.window;

  auto run = [&](const char* name, auto&& fn) {
    try {
      fn();
      rep.add_check(name, true);
    } catch (const std::exception& e) {
      rep.add_check(name, false);
      rep.set(std::string("error_") + name, e.what());
    }
  };

  TateFormulaEngine eng = make_formula_engine(a, c.frob, range);
  run("norm-sequence", [&] { verify_norm_sequence(a, c.frob, A); });
  run("weakly-projective-vanishing",
      [&] { verify_weak_projective_vanishing(eng, free_rank_one(a), range); });
  run("dimension-shift", [&] { verify_dimension_shift(eng, A, 2); });
  run("dual-dimensions", [&] { verify_dual_dimensions(eng, range); });

  SyzygyChain syz = syzygies(a, std::max(5, range + 2));
  ComplexWindow schain = syzygy_complex(syz, c.frob);
  run("engine-agreement", [&] {
    for (int n = -range; n <= range; ++n) {
      if (tate_via_stable(syz, A, n).dim != eng.cohomology(A, n).dim)
        throw PropertyFailure("cohomology engines disagree at " + std::to_string(n));
      if (tate_homology_via_stable(syz, A, n).dim != eng.homology(A, n).dim)
        throw PropertyFailure("homology engines disagree at " + std::to_string(n));
    }
  });
  run("twisted-ext", [&] { verify_twist_ext(syz, a, A, c.frob.nakayama, 1); });
  run("ring-axioms", [&] { ring_table(a, c.frob, syz, schain, 1); });
  run("composition-product", [&] {
    BarWindow bar = bar_window(a, 3);
    verify_composition_product(bar, A, A, 1, 1);
  });
  run("duality", [&] {
    CompleteWindow t = complete_bar_window(a, c.frob, 2);
    FundamentalClass w = fundamental_class(a, c.frob, syz, schain, t);
    for (int n = -2; n <= 2; ++n) duality_map(a, c.frob, syz, schain, t, w, n);
  });
  if (a.dim <= 2) {
    run("product-engine-equality", [&] {
      CompleteWindow t = complete_bar_window(a, c.frob, std::max(W, 4));
      DiagonalWindow dw = diagonal_window(t, 1, seed);
      ChainMapWindow theta = window_to_syzygy(t, syz, schain, 3);
      HomComplexWindow hwin = hom_complex(t.cx, A);
      TensorOverA AA = tensor_over_A(A, A);
      HomComplexWindow haa = hom_complex(t.cx, AA.space);
      const Field& F = a.field;
      for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
          if (i + j < -1 || i + j > 1) continue;
          StableHom gi = stable_hom(syz.omega(i), A);
          StableHom gj = stable_hom(syz.omega(j), A);
          HomologyData gt = cohomology_at(F, haa.cx, i + j);
          for (int ka = 0; ka < gi.dim; ++ka)
            for (int kb = 0; kb < gj.dim; ++kb) {
              StableClass fc{i, gi.reps[ka]}, gc{j, gj.reps[kb]};
              StableClass es = es_cup(syz, schain, fc, gc);
              Mat emb(AA.space.dim, a.dim);
              for (int c2 = 0; c2 < a.dim; ++c2) {
                Vec big(a.dim * a.dim, 1);
                big.at(0 * a.dim + c2, 0) = 1;
                Vec cc = mat_mul(F, AA.proj, big);
                for (int r2 = 0; r2 < AA.space.dim; ++r2) emb.at(r2, c2) = cc.at(r2, 0);
              }
              StableClass es_aa{es.degree, mat_mul(F, emb, es.rep)};
              Vec es_w = stable_to_window_cochain(t, syz, theta, haa, AA.space, es_aa);
              Vec fw = stable_to_window_cochain(t, syz, theta, hwin, A, fc);
              Vec gw = stable_to_window_cochain(t, syz, theta, hwin, A, gc);
              Vec dg = cup_via_diagonal(t, dw, hwin, A, fw, i, hwin, A, gw, j, AA);
              if (!(mat_mul(F, gt.proj, es_w) == mat_mul(F, gt.proj, dg)))
                throw PropertyFailure("product engines disagree");
            }
        }
    });
    run("compatibility-squares", [&] {
      CompleteWindow t = complete_bar_window(a, c.frob, std::max(W, 4));
      DiagonalWindow dw = diagonal_window(t, 1, seed);
      BarWindow bar = bar_window(a, std::max(W, 4));
      verify_compatibility(t, dw, bar, 1, 1);
    });
  }
  if (!rep.all_checks_pass()) throw PropertyFailure("property suite failed");
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Tate-Hochschild cohomology of Frobenius algebras"};
  app.require_subcommand(1);

  std::string path, module = "A", engine = "both";
  int lo = 0, hi = 3, maxdeg = 1, range = 2;
  std::uint64_t seed = 0;
  bool no_cache = false, clear = false, stats = false, timings = false;
  OutputOpts out;

  auto add_common = [&](CLI::App* sc, bool needs_path = true) {
    if (needs_path) sc->add_option("spec", path, "algebra spec file")->required();
    sc->add_option("--json", out.json_path, "write the JSON report here ('-' = stdout)");
    sc->add_option("--csv", out.csv_path, "write CSV tables here ('-' = stdout)");
    sc->add_flag("--quiet", out.quiet, "suppress the text rendering");
    sc->add_flag("--timings", timings, "print wall-clock timings to stderr");
  };

  auto* validate = app.add_subcommand("validate", "parse and run all constructor checks");
  add_common(validate);
  auto* frob = app.add_subcommand("frobenius", "dual basis, Nakayama data, symmetry");
  add_common(frob);
  auto* hoch = app.add_subcommand("hochschild", "classical (co)homology table");
  add_common(hoch);
  hoch->add_option("--min", lo, "lowest degree");
  hoch->add_option("--max", hi, "highest degree");
  hoch->add_option("--module", module, "coefficients: A, DA or AxA");
  auto* tate = app.add_subcommand("tate", "Tate (co)homology table");
  add_common(tate);
  int tlo = -3, thi = 3;
  tate->add_option("--min", tlo, "lowest degree");
  tate->add_option("--max", thi, "highest degree");
  tate->add_option("--engine", engine, "formula, stable or both");
  tate->add_flag("--no-cache", no_cache, "skip the result cache");
  auto* ring = app.add_subcommand("ring", "cohomology ring structure constants");
  add_common(ring);
  ring->add_option("--max-deg", maxdeg, "degree bound for basis classes");
  auto* dual = app.add_subcommand("duality", "fundamental-class duality ranks");
  add_common(dual);
  dual->add_option("--range", range, "degree range");
  auto* check = app.add_subcommand("check", "full property suite");
  add_common(check);
  check->add_option("--seed", seed, "seed for randomized representatives");
  auto* cachecmd = app.add_subcommand("cache", "result cache maintenance");
  cachecmd->add_flag("--clear", clear, "remove all cached entries");
  cachecmd->add_flag("--stats", stats, "print cache statistics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    Report rep;
    if (cachecmd->parsed()) {
      if (clear) cache_clear();
      auto st = cache_stats();
      rep.set("command", "cache");
      rep.set("directory", cache_dir());
      rep.set("entries", st.entries);
      rep.set("bytes", static_cast<std::uint64_t>(st.bytes));
      std::cout << rep.to_text();
      return 0;
    }
    Context ctx = make_context(path);
    if (validate->parsed()) rep = cmd_validate(ctx);
    else if (frob->parsed()) rep = cmd_frobenius(ctx);
    else if (hoch->parsed()) rep = cmd_hochschild(ctx, lo, hi, module);
    else if (tate->parsed()) rep = cmd_tate(ctx, tlo, thi, engine, no_cache);
    else if (ring->parsed()) rep = cmd_ring(ctx, maxdeg);
    else if (dual->parsed()) rep = cmd_duality(ctx, range);
    else if (check->parsed()) rep = cmd_check(ctx, seed);
    emit(rep, out);
    if (timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::cerr << "elapsed: " << ms << " ms\n";
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PropertyFailure& e) {
    std::cerr << "property failure: " << e.what() << "\n";
    return 4;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
