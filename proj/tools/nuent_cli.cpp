// nuent command-line front end: tau sweeps as CSV, the self-verification
// suite, and a Bogoliubov coefficient inspector.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "nuent/dirac.hpp"
#include "nuent/sweep.hpp"
#include "nuent/verify.hpp"

namespace {

int run_sweep(const nuent::SweepConfig& config, const std::string& out_path) {
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << out_path << '\n';
    return 1;
  }
  nuent::write_sweep(config, out);
  out.flush();
  if (!out) {
    std::cerr << "error: write failed: " << out_path << '\n';
    return 1;
  }
  return 0;
}

int run_verify(std::uint64_t seed, int trials, const std::string& format) {
  const nuent::verify::Report report = nuent::verify::run_all(seed, trials);
  nuent::verify::write_report(report, std::cout,
                              format == "csv" ? nuent::verify::ReportFormat::csv
                                              : nuent::verify::ReportFormat::text);
  return report.all_pass() ? 0 : 1;
}

int run_bogoliubov(double x, double p, const std::string& format) {
  const auto mm = nuent::dirac::from_dimensionless(x, p);
  const auto bg = nuent::dirac::bogoliubov(mm);
  using nuent::format_number;
  if (format == "csv") {
    std::cout << "x,p,omega1,omega2,U,V,U2_plus_V2\n"
              << format_number(x) << ',' << format_number(p) << ','
              << format_number(mm.omega1()) << ',' << format_number(mm.omega2()) << ','
              << format_number(bg.U) << ',' << format_number(bg.V) << ','
              << format_number(bg.U * bg.U + bg.V * bg.V) << '\n';
    return 0;
  }
  std::cout << "x        = " << format_number(x) << '\n'
            << "p        = " << format_number(p) << '\n'
            << "omega1   = " << format_number(mm.omega1()) << '\n'
            << "omega2   = " << format_number(mm.omega2()) << '\n'
            << "U        = " << format_number(bg.U) << '\n'
            << "V        = " << format_number(bg.V) << '\n'
            << "U^2+V^2  = " << format_number(bg.U * bg.U + bg.V * bg.V) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flavor-entanglement calculator for two-flavor neutrino oscillations"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "emit entropy/population curves over tau as CSV");
  std::string model = "qft";
  nuent::SweepConfig config;
  std::string out_path;
  sweep->add_option("--model", model, "model: qm or qft")
      ->check(CLI::IsMember({"qm", "qft"}))
      ->capture_default_str();
  sweep->add_option("--sin2theta", config.sin2_theta, "sin^2 of the mixing angle")
      ->capture_default_str();
  sweep->add_option("--x", config.x, "mass ratio m2/m1")->capture_default_str();
  sweep->add_option("--p", config.p, "momentum |k|/sqrt(m1 m2)")->capture_default_str();
  sweep->add_option("--tau-max", config.tau_max, "end of the tau grid")->capture_default_str();
  sweep->add_option("--steps", config.steps, "grid points, endpoints included")
      ->capture_default_str();
  sweep->add_option("--out", out_path, "output CSV path")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run the self-verification suites");
  std::uint64_t seed = 20240314;
  int trials = 1000;
  std::string verify_format = "text";
  verify->add_option("--seed", seed, "random-draw seed")->capture_default_str();
  verify->add_option("--trials", trials, "random trials per suite (0 skips random checks)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--format", verify_format, "report format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();

  // bogoliubov
  auto* bogo = app.add_subcommand("bogoliubov", "print omega1, omega2, |U|, |V|");
  double x = 10.0, p = 5.0;
  std::string bogo_format = "text";
  bogo->add_option("--x", x, "mass ratio m2/m1")->capture_default_str();
  bogo->add_option("--p", p, "momentum |k|/sqrt(m1 m2)")->capture_default_str();
  bogo->add_option("--format", bogo_format, "output format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      config.model = model == "qm" ? nuent::SweepModel::qm : nuent::SweepModel::qft;
      return run_sweep(config, out_path);
    }
    if (verify->parsed()) return run_verify(seed, trials, verify_format);
    if (bogo->parsed()) return run_bogoliubov(x, p, bogo_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
