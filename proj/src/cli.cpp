#include "fwexact/cli.hpp"

#include "fwexact/json_io.hpp"
#include "fwexact/latex.hpp"
#include "fwexact/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace fwexact {

namespace {

struct CommonOpts {
  int order = 0;
  std::string theory = "dirac";
  std::string phi_sign = "minus";
  std::string format = "text";
  std::string out_path;
};

int phi_sign_value(const std::string& s) { return s == "plus" ? +1 : -1; }

int write_output(const std::string& text, const CommonOpts& opts,
                 std::ostream& out, std::ostream& err) {
  if (opts.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(opts.out_path, std::ios::binary);
  if (!f) {
    err << "cannot open output file: " << opts.out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

int cmd_coeffs(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  SeqTable t;
  int jmax = opts.order;
  const int identity_jmax = std::max(jmax, 8);
  if (opts.format == "json")
    return write_output(json_text(coeffs_json(t, jmax, identity_jmax)), opts,
                        out, err);
  std::ostringstream os;
  os << "  j";
  for (const char* n : {"a_j", "b_j", "c_j", "d_j"}) os << "\t" << n;
  os << "\n";
  for (int j = 0; j <= jmax; ++j)
    os << "  " << j << "\t" << t.a(j) << "\t" << t.b(j) << "\t" << t.c(j)
       << "\t" << t.d(j) << "\n";
  for (Identity id : {Identity::A, Identity::B, Identity::C1, Identity::C2,
                      Identity::D, Identity::E, Identity::F}) {
    IdentityReport r = check_identity(t, id, identity_jmax);
    os << "  identity " << identity_name(id) << " (j=" << r.j_min << ".."
       << r.j_max << "): ";
    if (r.pass) {
      os << "pass\n";
    } else if (identity_expected_inconsistent(id)) {
      os << "printed-inconsistent (fails at j=" << r.first_failure->j << ": "
         << r.first_failure->lhs << " vs " << r.first_failure->rhs << ")\n";
    } else {
      os << "FAIL at j=" << r.first_failure->j << "\n";
    }
  }
  return write_output(os.str(), opts, out, err);
}

int cmd_series_check(const CommonOpts& opts, std::ostream& out,
                     std::ostream& err) {
  SeqTable t;
  if (opts.format == "json")
    return write_output(json_text(series_check_json(t, opts.order)), opts, out,
                        err);
  std::ostringstream os;
  bool all_pass = true;
  const char* names[] = {"a", "b", "c", "d"};
  Seq seqs[] = {Seq::A, Seq::B, Seq::C, Seq::D};
  for (int k = 0; k < 4; ++k) {
    SeriesReport r = verify_series(t, seqs[k], opts.order);
    all_pass = all_pass && r.pass;
    os << "  series " << names[k] << " through x^" << opts.order << ": "
       << (r.pass ? "pass" : "FAIL");
    if (r.first_failure)
      os << " at x^" << r.first_failure->power << " ("
         << r.first_failure->lhs << " vs " << r.first_failure->rhs << ")";
    os << "\n";
  }
  SeriesReport printed = series_c_printed_prefactor_report(t, opts.order);
  os << "  series c, printed 1/8 prefactor: "
     << (printed.pass ? "pass" : "printed-inconsistent");
  if (printed.first_failure)
    os << " (x^" << printed.first_failure->power << ": "
       << printed.first_failure->lhs << " vs " << printed.first_failure->rhs
       << "; consistent prefactor is 1/2)";
  os << "\n";
  int rc = write_output(os.str(), opts, out, err);
  if (rc != 0) return rc;
  return all_pass ? 0 : 1;
}

int cmd_solve(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  bool pauli = opts.theory == "dirac-pauli";
  if (pauli && opts.order < 3) {
    err << "solve: dirac-pauli requires --order >= 3\n";
    return 2;
  }
  int sign = phi_sign_value(opts.phi_sign);
  OpSeries x = solve_dirac(std::max(opts.order, 1), sign);
  OpSeries xp(Grading::Recursion);
  if (pauli) xp = solve_pauli(opts.order, x, sign);

  if (opts.format == "json") {
    Json doc{{"version", kVersion},
             {"theory", opts.theory},
             {"order", opts.order},
             {"x", series_json(x, "X")}};
    if (pauli) doc["xprime"] = series_json(xp, "X'");
    return write_output(json_text(doc), opts, out, err);
  }
  if (opts.format == "latex") {
    std::string body = latex_series(x, "X");
    if (pauli) body += latex_series(xp, "X'");
    return write_output(latex_document(body), opts, out, err);
  }
  std::ostringstream os;
  for (int g = 1; g <= opts.order; ++g)
    os << "  X_" << g << " = " << x.at(g).str() << "\n";
  if (pauli)
    for (int g = 1; g <= opts.order; ++g)
      os << "  X'_" << g << " = " << xp.at(g).str() << "\n";
  return write_output(os.str(), opts, out, err);
}

int cmd_hamiltonian(const CommonOpts& opts, bool expanded, std::ostream& out,
                    std::ostream& err) {
  int sign = phi_sign_value(opts.phi_sign);
  bool pauli = opts.theory == "dirac-pauli";
  OpSeries x = solve_dirac(opts.order + 2, sign);
  HamiltonianSeries h =
      assemble_h_dirac(x, opts.order, Route::Commutator, sign);
  if (pauli) {
    OpSeries xp = solve_pauli(opts.order + 1, x, sign);
    h = ham_sum(h, assemble_h_pauli(x, xp, opts.order));
  }
  if (expanded) h = physicalize(h);
  std::string repr = expanded ? "expanded" : "compact";
  std::string symbol = pauli ? "\\mathcal{H}_{\\mathrm{FW}}"
                             : "H_{\\mathrm{FW}}";

  if (opts.format == "json")
    return write_output(json_text(hamiltonian_json(h, opts.theory, repr)),
                        opts, out, err);
  if (opts.format == "latex")
    return write_output(latex_document(latex_hamiltonian(h, symbol)), opts,
                        out, err);
  std::ostringstream os;
  os << "  " << (pauli ? "H_FW + H'_FW" : "H_FW") << " (" << repr << ", "
     << (expanded ? "physical" : "recursion") << " grading)\n";
  if (h.rest_energy) os << "  order -2: [m c^2] 1\n";
  for (const auto& [g, e] : h.body.entries())
    os << "  order " << g << ": " << e.str() << "\n";
  return write_output(os.str(), opts, out, err);
}

int cmd_verify(const CommonOpts& opts, const std::string& command,
               std::ostream& out, std::ostream& err) {
  VerifyConfig config;
  config.order = opts.order;
  config.phi_sign = phi_sign_value(opts.phi_sign);
  VerificationReport report = run_verification(config);
  std::string text = opts.format == "json"
                         ? json_text(report_json(report, command))
                         : report_text(report);
  int rc = write_output(text, opts, out, err);
  if (rc != 0) return rc;
  return report.overall_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "fwexact: exact verification of the Foldy-Wouthuysen transform of the "
      "Dirac and Dirac-Pauli Hamiltonians against the classical orbital + "
      "spin Hamiltonian (static homogeneous fields, weak-field limit)",
      "fwexact"};
  app.require_subcommand(1);

  CommonOpts coeffs_opts, series_opts, solve_opts, ham_opts, verify_opts,
      report_opts;
  bool expanded = false;

  auto add_format = [](CLI::App* cmd, CommonOpts& o,
                       const std::vector<std::string>& choices) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(choices))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "write output to a file");
  };

  CLI::App* coeffs =
      app.add_subcommand("coeffs", "coefficient tables a,b,c,d and the "
                                   "combinatorial identity report");
  coeffs_opts.order = 8;
  coeffs->add_option("-n,--order", coeffs_opts.order, "largest j tabulated")
      ->check(CLI::Range(4, 1000))
      ->capture_default_str();
  add_format(coeffs, coeffs_opts, {"text", "json"});

  CLI::App* series = app.add_subcommand(
      "series-check", "Taylor-series identities for a,b,c,d");
  series_opts.order = 100;
  series->add_option("-n,--order", series_opts.order,
                     "power of x checked through")
      ->check(CLI::Range(4, 2000))
      ->capture_default_str();
  add_format(series, series_opts, {"text", "json"});

  CLI::App* solve = app.add_subcommand(
      "solve", "solve the block-diagonalization recursion for X (and X')");
  solve_opts.order = 9;
  solve->add_option("-n,--order", solve_opts.order, "highest order solved")
      ->check(CLI::Range(1, 60))
      ->capture_default_str();
  solve->add_option("--theory", solve_opts.theory, "dirac or dirac-pauli")
      ->check(CLI::IsMember({"dirac", "dirac-pauli"}))
      ->capture_default_str();
  solve->add_option("--phi-sign", solve_opts.phi_sign,
                    "sign convention of [phi, pi]")
      ->check(CLI::IsMember({"minus", "plus"}))
      ->capture_default_str();
  add_format(solve, solve_opts, {"text", "json", "latex"});

  CLI::App* ham = app.add_subcommand(
      "hamiltonian", "assemble the transformed Hamiltonian series");
  ham_opts.order = 6;
  ham->add_option("-n,--order", ham_opts.order, "highest order assembled")
      ->check(CLI::Range(2, 40))
      ->capture_default_str();
  ham->add_option("--theory", ham_opts.theory, "dirac or dirac-pauli")
      ->check(CLI::IsMember({"dirac", "dirac-pauli"}))
      ->capture_default_str();
  ham->add_option("--phi-sign", ham_opts.phi_sign,
                  "sign convention of [phi, pi]")
      ->check(CLI::IsMember({"minus", "plus"}))
      ->capture_default_str();
  ham->add_flag("--expanded", expanded,
                "expanded pi-basis at physical grading");
  add_format(ham, ham_opts, {"text", "json", "latex"});

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full verification pipeline (exit 1 on failure)");
  verify_opts.order = 10;
  verify->add_option("-n,--order", verify_opts.order,
                     "operator-series order for the checks")
      ->check(CLI::Range(2, 30))
      ->capture_default_str();
  verify->add_option("--phi-sign", verify_opts.phi_sign,
                     "sign convention of [phi, pi]")
      ->check(CLI::IsMember({"minus", "plus"}))
      ->capture_default_str();
  add_format(verify, verify_opts, {"text", "json"});

  CLI::App* report = app.add_subcommand(
      "report", "full verification as a JSON document");
  report_opts.order = 10;
  report_opts.format = "json";
  report->add_option("-n,--order", report_opts.order,
                     "operator-series order for the checks")
      ->check(CLI::Range(2, 30))
      ->capture_default_str();
  report->add_option("--phi-sign", report_opts.phi_sign,
                     "sign convention of [phi, pi]")
      ->check(CLI::IsMember({"minus", "plus"}))
      ->capture_default_str();
  report->add_option("--out", report_opts.out_path,
                     "write the document to a file");

  std::vector<std::string> cli_args(args.rbegin(), args.rend());
  if (!cli_args.empty()) cli_args.pop_back();  // program name
  try {
    app.parse(cli_args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(coeffs_opts, out, err);
    if (series->parsed()) return cmd_series_check(series_opts, out, err);
    if (solve->parsed()) return cmd_solve(solve_opts, out, err);
    if (ham->parsed()) return cmd_hamiltonian(ham_opts, expanded, out, err);
    if (verify->parsed()) return cmd_verify(verify_opts, "verify", out, err);
    if (report->parsed()) return cmd_verify(report_opts, "report", out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace fwexact
