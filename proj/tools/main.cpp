// tangleroof command-line front end: invariant evaluation, characteristic
// curve sweeps, decomposition verification, table reproduction, Bloch-ball
// zero-region queries.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tangleroof/tangleroof.hpp"

namespace {

constexpr int kExitInput = 2;      // malformed file / bad input value
constexpr int kExitDimension = 3;  // qubit-count or measure mismatch
constexpr int kExitCase = 4;       // unsupported case or region
constexpr int kExitVerify = 5;     // verification failed

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

tangleroof::PureState load_state(const std::string& spec, bool allow_unnormalized) {
  if (tangleroof::catalog_has(spec)) return tangleroof::catalog_lookup(spec).state;
  return tangleroof::read_state_file(spec, allow_unnormalized);
}

int cmd_invariants(const std::string& state_spec, bool allow_unnormalized, bool log2) {
  using namespace tangleroof;
  PureState s = load_state(state_spec, allow_unnormalized);
  const int n = s.num_qubits();
  if (n == 4) {
    std::cout << "F1 = " << fmt(f_invariant(InvariantKind::F1, s)) << "\n"
              << "F2 = " << fmt(f_invariant(InvariantKind::F2, s)) << "\n"
              << "F3 = " << fmt(f_invariant(InvariantKind::F3, s)) << "\n"
              << "G1 = " << fmt(g_invariant(InvariantKind::G1, s)) << "\n"
              << "G2 = " << fmt(g_invariant(InvariantKind::G2, s)) << "\n"
              << "G3 = " << fmt(g_invariant(InvariantKind::G3, s)) << "\n";
  } else if (n == 3) {
    std::cout << "tau3   = " << fmt(three_tangle(s)) << "\n"
              << "tau3^2 = " << fmt(three_tangle_squared(s)) << "\n";
  } else if (n == 2) {
    const double c = concurrence_pure(s);
    std::cout << "C   = " << fmt(c) << "\n"
              << "EOF = " << fmt(eof_from_concurrence(c, log2))
              << (log2 ? "  (log base 2)" : "  (natural log)") << "\n";
  } else {
    std::cerr << "error: no measure panel for " << n << " qubits (need 2, 3 or 4)\n";
    return kExitDimension;
  }
  return 0;
}

void write_plot_script(const std::string& path, const std::string& prefix) {
  std::ofstream out(path);
  out << "# gnuplot script for " << prefix << " sweep output\n"
      << "set datafile separator ','\n"
      << "set xlabel 'p'\n"
      << "set ylabel 'measure'\n"
      << "plot '" << prefix << "_envelope.csv' every ::1 using 1:2 with lines title 'min', \\\n"
      << "     '' every ::1 using 1:3 with lines title 'hull', \\\n"
      << "     '' every ::1 using 1:4 with lines title 'reference'\n";
}

int cmd_sweep(const std::string& case_id, int p_points, int phi_points,
              std::optional<std::string> out_prefix, std::optional<std::string> plot_script) {
  using namespace tangleroof;
  const RoofCase& c = find_case(case_id);
  const RankTwoFamily& fam = roof_family(c.family);
  const std::vector<double> pg = uniform_grid(0.0, 1.0, p_points);
  const std::vector<double> fg = phase_grid(phi_points);

  const CurveGrid grid = characteristic_curve(fam, c.kind, pg, fg);
  const EnvelopeResult env = envelope_from_grid(fam, c.kind, grid);
  const PiecewiseFormula ref = reference_formula(case_id);
  std::vector<double> refv(pg.size());
  double max_dev = 0.0;
  for (std::size_t i = 0; i < pg.size(); ++i) {
    refv[i] = ref(pg[i]);
    max_dev = std::max(max_dev, std::abs(env.hull_curve[i] - refv[i]));
  }

  const std::string prefix = out_prefix.value_or(case_id);
  {
    std::ofstream out(prefix + "_curve.csv");
    if (!out) throw StateFileError("cannot open " + prefix + "_curve.csv");
    write_curve_csv(out, grid);
  }
  {
    std::ofstream out(prefix + "_envelope.csv");
    if (!out) throw StateFileError("cannot open " + prefix + "_envelope.csv");
    write_envelope_csv(out, env, refv);
  }
  if (plot_script) write_plot_script(*plot_script, prefix);

  std::cout << case_id << ": wrote " << prefix << "_curve.csv and " << prefix
            << "_envelope.csv (" << p_points << "x" << phi_points << ")\n"
            << "max |hull - reference| = " << fmt(max_dev) << "\n";
  return 0;
}

int cmd_verify(const std::string& case_id, double p, double tol) {
  using namespace tangleroof;
  const Decomposition d = build_decomposition(case_id, p);
  const RoofCase& c = find_case(case_id);
  const VerifyResult v = verify_decomposition(d, c.kind);
  const double ref = reference_formula(case_id)(p);

  std::cout << case_id << " at p = " << fmt(p) << "\n";
  for (std::size_t t = 0; t < d.terms.size(); ++t) {
    std::cout << "  term " << t << ": weight " << fmt(d.terms[t].weight) << ", amplitudes [";
    bool first = true;
    for (std::size_t i = 0; i < d.terms[t].state.dim(); ++i) {
      const tangleroof::cplx a = d.terms[t].state.amp(i);
      if (std::abs(a) < 1e-14) continue;
      if (!first) std::cout << ", ";
      std::cout << i << ": " << fmt(a.real());
      if (std::abs(a.imag()) >= 1e-14) std::cout << (a.imag() < 0 ? "-" : "+") << fmt(std::abs(a.imag())) << "i";
      first = false;
    }
    std::cout << "]\n";
  }
  std::cout << "reconstruction residual = " << fmt(v.residual) << "\n"
            << "average entanglement    = " << fmt(v.avg_entanglement) << "\n"
            << "reference value         = " << fmt(ref) << "\n";
  const bool pass = v.residual <= 1e-10 && std::abs(v.avg_entanglement - ref) <= tol;
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : kExitVerify;
}

int cmd_tables(double tol_invariants, double tol_concurrence) {
  using namespace tangleroof;
  bool ok = true;
  auto report = [&ok](const std::string& label, double dev, double tol) {
    std::cout << "  " << label << ": max deviation " << fmt(dev) << (dev <= tol ? "" : "  ** FAIL **")
              << "\n";
    if (dev > tol) ok = false;
  };

  std::cout << "Table I (pure four-way invariants, tol " << fmt(tol_invariants) << ")\n";
  const struct { const char* key; double f1, f2, f3; } rows[] = {
      {"phi1", 1.0, 1.0, 0.5},
      {"phi2", 8.0 / 9.0, 0.0, 0.0},
      {"phi3", 0.0, 0.0, 1.0},
      {"w4", 0.0, 0.0, 0.0},
  };
  for (const auto& row : rows) {
    const PureState& s = catalog_lookup(row.key).state;
    double dev = std::abs(f_invariant(InvariantKind::F1, s) - row.f1);
    dev = std::max(dev, std::abs(f_invariant(InvariantKind::F2, s) - row.f2));
    dev = std::max(dev, std::abs(f_invariant(InvariantKind::F3, s) - row.f3));
    report(row.key, dev, tol_invariants);
  }

  std::cout << "Table III (rho1 roof formulas vs decompositions at 21 p, tol "
            << fmt(tol_invariants) << ")\n";
  for (const char* id : {"F1-rho1", "F2-rho1", "F3-rho1", "G1-rho1", "G2-rho1", "G3-rho1"}) {
    const PiecewiseFormula ref = reference_formula(id);
    const RoofCase& c = find_case(id);
    double dev = 0.0;
    for (int k = 0; k <= 20; ++k) {
      const double p = k / 20.0;
      const VerifyResult v = verify_decomposition(build_decomposition(id, p), c.kind);
      dev = std::max(dev, std::abs(v.avg_entanglement - ref(p)));
      dev = std::max(dev, v.residual);
    }
    report(id, dev, tol_invariants);
  }

  std::cout << "Table IV (pair concurrences vs closed forms at 21 p, tol "
            << fmt(tol_concurrence) << ")\n";
  const double a1 = (std::sqrt(2.0) - 1.0) * (std::sqrt(2.0) - 1.0);
  const double a3 = (2.0 - std::sqrt(2.0)) / 2.0;
  auto c_r1 = [a1](double p) {
    return p <= a1 ? 0.5 * (1.0 - 2.0 * std::sqrt(p) - p) : 0.0;
  };
  auto c_r2 = [](double p) {
    return p <= 1.0 / 3.0
               ? (3.0 - p) / 6.0 - std::sqrt(2.0) / 3.0 * std::sqrt(p * (3.0 - p))
               : 0.0;
  };
  auto c_r3_side = [a3](double p) {
    return p <= a3 ? 0.5 * (1.0 - p - std::sqrt(p * (2.0 - p))) : 0.0;
  };
  auto c_r3_cd = [](double p) {
    const double c = std::sqrt(p * (2.0 - p));
    return 0.5 * (1.0 - std::sqrt(p / 2.0) * (std::sqrt(1.0 + c) + std::sqrt(1.0 - c)));
  };
  const std::vector<std::vector<int>> all_pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  auto pair_dev = [](FamilyId fam, const std::vector<int>& pair, auto&& formula) {
    const RankTwoFamily& family = roof_family(fam);
    double dev = 0.0;
    for (int k = 0; k <= 20; ++k) {
      const double p = k / 20.0;
      const double got = concurrence_mixed(partial_trace(mix(family, p), pair));
      dev = std::max(dev, std::abs(got - formula(p)));
    }
    return dev;
  };
  {
    double dev = 0.0;
    for (const auto& pr : all_pairs) dev = std::max(dev, pair_dev(FamilyId::Rho1, pr, c_r1));
    report("rho1 all pairs", dev, tol_concurrence);
  }
  {
    double dev = 0.0;
    for (const auto& pr : all_pairs) dev = std::max(dev, pair_dev(FamilyId::Rho2, pr, c_r2));
    report("rho2 all pairs", dev, tol_concurrence);
  }
  report("rho3 pair AB", pair_dev(FamilyId::Rho3, {0, 1}, c_r1), tol_concurrence);
  {
    double dev = 0.0;
    for (const auto& pr : {std::vector<int>{0, 2}, {0, 3}, {1, 2}, {1, 3}})
      dev = std::max(dev, pair_dev(FamilyId::Rho3, pr, c_r3_side));
    report("rho3 pairs AC/AD/BC/BD", dev, tol_concurrence);
  }
  report("rho3 pair CD", pair_dev(FamilyId::Rho3, {2, 3}, c_r3_cd), tol_concurrence);

  std::cout << (ok ? "ALL TABLES OK" : "TABLE DEVIATION EXCEEDED") << "\n";
  return ok ? 0 : kExitVerify;
}

int cmd_bloch(double x, double y, double z) {
  using namespace tangleroof;
  const BlochVector r{x, y, z};
  if (r.length() > 1.0 + 1e-12) {
    std::cerr << "error: |r| = " << fmt(r.length()) << " exceeds 1\n";
    return kExitInput;
  }
  const Tetrahedron t = zero_tetrahedron();
  if (!contains(t, r)) {
    std::cout << "outside\n";
    return 0;
  }
  const Decomposition d = zero_witness(r);
  const VerifyResult v = verify_decomposition(d, InvariantKind::F1);
  std::cout << "inside\n";
  const char* names[4] = {"W4", "Z2(p0,0)", "Z2(p0,2pi/3)", "Z2(p0,4pi/3)"};
  const std::array<double, 4> w = barycentric_weights(t, r);
  for (int k = 0; k < 4; ++k)
    std::cout << "  weight[" << names[k] << "] = " << fmt(std::max(w[k], 0.0)) << "\n";
  std::cout << "reconstruction residual = " << fmt(v.residual) << "\n"
            << "average F1 (certificate) = " << fmt(v.avg_entanglement) << "\n";
  return 0;
}

int cmd_catalog(const std::string& key, const std::string& out_path) {
  using namespace tangleroof;
  if (key.empty()) {
    for (const NamedState& ns : catalog())
      std::cout << ns.key << "  (" << ns.state.num_qubits() << " qubits)  " << ns.description
                << "\n";
    return 0;
  }
  if (!catalog_has(key)) {
    std::cerr << "error: unknown catalog key '" << key << "'\n";
    return kExitInput;
  }
  const NamedState& ns = catalog_lookup(key);
  if (out_path.empty()) {
    write_state(std::cout, ns.state);
  } else {
    write_state_file(out_path, ns.state);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SLOCC entanglement monotones and rank-2 convex-roof curves "
               "for three- and four-qubit states"};
  app.require_subcommand(1);

  std::string state_spec, case_id, cat_key, cat_out;
  std::optional<std::string> out_prefix, plot_script;
  bool allow_unnormalized = false, log2 = false;
  int p_points = 2001, phi_points = 720;
  double p = 0.0, tol = 1e-9;
  double bx = 0.0, by = 0.0, bz = 0.0;
  double tab_tol_inv = 1e-9, tab_tol_conc = 1e-6;

  CLI::App* inv = app.add_subcommand("invariants", "evaluate the measure panel of a state");
  inv->add_option("state", state_spec, "catalog key or state file path")->required();
  inv->add_flag("--unnormalized", allow_unnormalized, "accept norm deviation beyond 1e-6");
  inv->add_flag("--log2", log2, "report EOF in bits instead of nats");

  CLI::App* sweep = app.add_subcommand("sweep", "characteristic curves, envelope and reference CSV");
  sweep->add_option("case", case_id, "case id, e.g. F1-rho1 or tau3-ghzw")->required();
  sweep->add_option("--p-points", p_points, "p grid size")->check(CLI::Range(2, 2000000));
  sweep->add_option("--phi-points", phi_points, "phi grid size")->check(CLI::Range(2, 2000000));
  sweep->add_option("-o,--out", out_prefix, "output file prefix (default: case id)");
  sweep->add_option("--plot-script", plot_script, "also write a gnuplot script here");

  CLI::App* verify = app.add_subcommand("verify", "check the optimal decomposition at one p");
  verify->add_option("case", case_id, "case id")->required();
  verify->add_option("p", p, "mixing weight in [0,1]")->required();
  verify->add_option("--tol", tol, "average-vs-reference tolerance")
      ->check(CLI::PositiveNumber);

  CLI::App* tables = app.add_subcommand("tables", "recompute the published tables");
  tables->add_option("--tol", tab_tol_inv, "invariant-table tolerance")->check(CLI::PositiveNumber);
  tables->add_option("--tol-concurrence", tab_tol_conc, "concurrence-table tolerance")
      ->check(CLI::PositiveNumber);

  CLI::App* bloch = app.add_subcommand("bloch", "zero-entanglement tetrahedron membership");
  bloch->add_option("x", bx, "Bloch x")->required();
  bloch->add_option("y", by, "Bloch y")->required();
  bloch->add_option("z", bz, "Bloch z")->required();

  CLI::App* cat = app.add_subcommand("catalog", "list built-in states or dump one");
  cat->add_option("key", cat_key, "catalog key (omit to list)");
  cat->add_option("-o,--out", cat_out, "write the state file here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return cmd_invariants(state_spec, allow_unnormalized, log2);
    if (sweep->parsed()) return cmd_sweep(case_id, p_points, phi_points, out_prefix, plot_script);
    if (verify->parsed()) return cmd_verify(case_id, p, tol);
    if (tables->parsed()) return cmd_tables(tab_tol_inv, tab_tol_conc);
    if (bloch->parsed()) return cmd_bloch(bx, by, bz);
    if (cat->parsed()) return cmd_catalog(cat_key, cat_out);
  } catch (const tangleroof::StateFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const tangleroof::UnknownCaseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCase;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCase;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
