#include "nuent/verify.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <vector>

#include "nuent/multiqubit.hpp"
#include "nuent/qft.hpp"
#include "nuent/qm.hpp"
#include "nuent/sweep.hpp"

namespace nuent::verify {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

int Report::failures() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRefSin2Theta = 0.314;
constexpr double kRefX = 10.0;
constexpr double kRefP = 5.0;
constexpr int kTauPoints = 200;

struct Runner {
  std::mt19937_64 rng;
  int trials;
  Report report;

  void add(std::string name, double max_err, double tol,
           std::optional<double> constant = std::nullopt) {
    report.checks.push_back({std::move(name), max_err, tol, max_err <= tol, constant});
  }

  PureState<double> random_state(int n_modes) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    VectorX<double> amps(std::int64_t{1} << n_modes);
    for (std::int64_t i = 0; i < amps.size(); ++i)
      amps[i] = std::complex<double>(gauss(rng), gauss(rng));
    amps /= std::sqrt(amps.squaredNorm());
    std::vector<std::string> names;
    for (int q = 0; q < n_modes; ++q) names.push_back("m" + std::to_string(q));
    return PureState<double>::from_names(names, std::move(amps));
  }

  std::set<std::string> random_keep(const PureState<double>& state) {
    const int n = state.num_modes();
    std::uniform_int_distribution<std::size_t> dist(1, (std::size_t{1} << n) - 2);
    const std::size_t mask = dist(rng);
    std::set<std::string> keep;
    for (int q = 0; q < n; ++q)
      if (mask & (std::size_t{1} << q)) keep.insert(state.modes()[static_cast<std::size_t>(q)].name);
    return keep;
  }
};

Bipartition split_from_keep(const PureState<double>& state, const std::set<std::string>& keep) {
  std::set<std::string> rest;
  for (const ModeLabel& m : state.modes())
    if (!keep.count(m.name)) rest.insert(m.name);
  return Bipartition(keep, rest);
}

Bipartition single_mode_split(const PureState<double>& state, std::string_view mode) {
  return split_from_keep(state, {std::string(mode)});
}

// ---- multiqubit invariants --------------------------------------------------

void check_multiqubit_random(Runner& r) {
  if (r.trials <= 0) return;
  double err_trace = 0, err_order = 0, err_sym = 0, err_range = 0, err_dual = 0, err_var = 0;
  for (int trial = 0; trial < r.trials; ++trial) {
    const int n = 3 + trial % 2;
    const PureState<double> psi = r.random_state(n);
    const std::set<std::string> keep = r.random_keep(psi);

    const DensityMatrix<double> rho = partial_trace(psi, keep);
    err_trace = std::max(err_trace, std::abs(rho.entries().trace().real() - 1.0));

    std::vector<std::string> order = psi.mode_names();
    std::shuffle(order.begin(), order.end(), r.rng);
    const PureState<double> permuted = with_mode_order(psi, order);
    const DensityMatrix<double> rho_perm =
        with_mode_order(partial_trace(permuted, keep), [&] {
          std::vector<std::string> kept;
          for (const ModeLabel& m : rho.modes()) kept.push_back(m.name);
          return kept;
        }());
    err_order =
        std::max(err_order, (rho.entries() - rho_perm.entries()).cwiseAbs().maxCoeff());

    const Bipartition split = split_from_keep(psi, keep);
    const Bipartition swapped(split.side_b(), split.side_a());
    const double s = linear_entropy(psi, split);
    err_sym = std::max(err_sym, std::abs(s - linear_entropy(psi, swapped)));
    err_range = std::max({err_range, -s, s - 1.0});

    err_dual = std::max(err_dual, std::abs(purity(partial_trace(psi, split.side_a())) -
                                           purity(partial_trace(psi, split.side_b()))));

    const std::string& mode = psi.modes()[static_cast<std::size_t>(trial % n)].name;
    const double q = occupation_probability(psi, mode);
    NumberObservable<double> number;
    number.weights[mode] = 1.0;
    err_var = std::max(err_var,
                       std::abs(observable_moments(psi, number).variance - q * (1.0 - q)));
  }
  r.add("multiqubit/partial_trace_unit_trace", err_trace, kAlgebraTol);
  r.add("multiqubit/partial_trace_order_independence", err_order, kAlgebraTol);
  r.add("multiqubit/linear_entropy_symmetry", err_sym, kAlgebraTol);
  r.add("multiqubit/linear_entropy_range", std::max(err_range, 0.0), kAlgebraTol);
  r.add("multiqubit/schmidt_duality", err_dual, kAlgebraTol);
  r.add("multiqubit/single_mode_variance_law", err_var, kAlgebraTol);
}

// ---- dirac invariants -------------------------------------------------------

void check_dirac(Runner& r) {
  if (r.trials > 0) {
    std::uniform_real_distribution<double> draw_x(1.0, 100.0);
    std::uniform_real_distribution<double> draw_p(0.01, 100.0);
    double err_unit = 0, err_expr = 0, err_flip = 0;
    for (int trial = 0; trial < r.trials; ++trial) {
      const auto mm = dirac::from_dimensionless(draw_x(r.rng), draw_p(r.rng));
      for (int hel : {1, 2}) {
        const auto bg = dirac::bogoliubov(mm, hel);
        err_unit = std::max(err_unit, std::abs(bg.U * bg.U + bg.V * bg.V - 1.0));
        const auto u1 = dirac::spinor_u(mm, 1, hel);
        const auto u2 = dirac::spinor_u(mm, 2, hel);
        const auto v1 = dirac::spinor_v(mm, 1, hel);
        const auto v2 = dirac::spinor_v(mm, 2, hel);
        const double eps = hel == 1 ? -1.0 : 1.0;
        err_expr = std::max(err_expr, std::abs(u1.dot(u2) - v1.dot(v2)));
        err_expr = std::max(err_expr, std::abs(eps * u1.dot(v2) + eps * u2.dot(v1)));
      }
      const std::complex<double> raw1 =
          dirac::spinor_u(mm, 1, 1).dot(dirac::spinor_v(mm, 2, 1));
      const std::complex<double> raw2 =
          dirac::spinor_u(mm, 1, 2).dot(dirac::spinor_v(mm, 2, 2));
      err_flip = std::max(err_flip, std::abs(raw1 + raw2));
    }
    r.add("dirac/unitarity", err_unit, kAlgebraTol);
    r.add("dirac/expression_agreement", err_expr, kAlgebraTol);
    r.add("dirac/helicity_sign_flip", err_flip, kAlgebraTol);
  }

  double err_equal_mass = 0;
  for (int i = 0; i <= 50; ++i)
    err_equal_mass = std::max(err_equal_mass, dirac::bogoliubov(1.0, 2.0 * i).V);
  r.add("dirac/equal_mass_V_zero", err_equal_mass, kAlgebraTol);

  double err_vanish = 0;
  double prev = dirac::bogoliubov(kRefX, 10.0).V;
  for (double p : {100.0, 1000.0, 10000.0}) {
    const double v = dirac::bogoliubov(kRefX, p).V;
    err_vanish = std::max(err_vanish, v - prev);  // must decrease toward 0
    prev = v;
  }
  r.add("dirac/V_monotone_vanishing", std::max(err_vanish, 0.0), kAlgebraTol);

  const auto bg = dirac::bogoliubov(kRefX, 1e4);
  r.add("dirac/relativistic_limit", 1.0 - bg.U * bg.U, 1e-4);
}

// ---- qm invariants ----------------------------------------------------------

std::vector<double> theta_samples(int count) {
  std::vector<double> thetas;
  for (int j = 0; j < count; ++j)
    thetas.push_back(kPi / 2 * (j + 0.5) / count);
  return thetas;
}

void check_qm(Runner& r) {
  const std::vector<double> taus = tau_grid(4 * kPi, kTauPoints);
  const std::vector<double> thetas = theta_samples(20);

  double err_mass = 0, err_flavor = 0, err_var = 0, err_const = 0, err_unitary = 0,
         err_prob = 0;
  for (double theta : thetas) {
    double mass_min = 2.0, mass_max = -1.0;
    for (double tau : taus) {
      const PureState<double> mass_state = qm::electron_state(theta, tau, Basis::mass);
      const PureState<double> flavor_state = qm::electron_state(theta, tau, Basis::flavor);
      const double s_mass = linear_entropy(mass_state, Bipartition({"nu1"}, {"nu2"}));
      const double s_flavor = linear_entropy(flavor_state, Bipartition({"nue"}, {"numu"}));
      err_mass = std::max(err_mass, std::abs(qm::entropy_mass_closed(theta) - s_mass));
      const double closed = qm::entropy_flavor_closed(theta, tau);
      err_flavor = std::max(err_flavor, std::abs(closed - s_flavor));
      mass_min = std::min(mass_min, s_mass);
      mass_max = std::max(mass_max, s_mass);

      for (const char* mode : {"nue", "numu"}) {
        NumberObservable<double> number;
        number.weights[mode] = 1.0;
        err_var = std::max(err_var, std::abs(observable_moments(flavor_state, number).variance -
                                             closed / 4.0));
      }

      const auto evolution = qm::evolution_matrix(theta, 1.0, 2.0, tau);
      err_unitary = std::max(
          err_unitary, (evolution.adjoint() * evolution - Eigen::Matrix2cd::Identity())
                           .cwiseAbs()
                           .maxCoeff());
      err_prob = std::max(err_prob, std::abs(std::norm(evolution(0, 0)) +
                                             std::norm(evolution(0, 1)) - 1.0));
    }
    err_const = std::max(err_const, mass_max - mass_min);
  }
  r.add("qm/mass_entropy_vs_oracle", err_mass, kAlgebraTol);
  r.add("qm/flavor_entropy_vs_oracle", err_flavor, kAlgebraTol);
  r.add("qm/variance_identity", err_var, kAlgebraTol);
  r.add("qm/mass_entropy_tau_independence", err_const, kAlgebraTol);
  r.add("qm/evolution_unitarity", err_unitary, kAlgebraTol);
  r.add("qm/probability_conservation", err_prob, kAlgebraTol);
}

// ---- qft invariants ---------------------------------------------------------

void check_qft_normalization(Runner& r) {
  if (r.trials <= 0) return;
  std::uniform_real_distribution<double> draw_theta(0.01, kPi / 2 - 0.01);
  std::uniform_real_distribution<double> draw_x(1.0 + 1e-6, 100.0);
  std::uniform_real_distribution<double> draw_p(0.01, 100.0);
  std::uniform_real_distribution<double> draw_tau(0.0, 4 * kPi);
  double err = 0;
  for (int trial = 0; trial < r.trials; ++trial) {
    const qft::OscillationParams<double> prm{draw_theta(r.rng), draw_x(r.rng), draw_p(r.rng),
                                             draw_tau(r.rng)};
    err = std::max(err, std::abs(qft::flavor_coeffs(prm).norm2() - 1.0));
  }
  r.add("qft/coeff_normalization", err, kAlgebraTol);
}

void check_qft_oracle(Runner& r) {
  const double theta = qm::theta_from_sin2(kRefSin2Theta);
  const std::vector<double> taus = tau_grid(4 * kPi, kTauPoints);
  const auto splits_mass = qft::balanced_splits(Basis::mass);
  const auto splits_flavor = qft::balanced_splits(Basis::flavor);

  double err_m1 = 0, err_m2 = 0, err_f1 = 0, err_f2 = 0, err_varid = 0;
  double const_nu2_min = 2.0, const_nu2_max = -1.0;
  double const_split_min = 2.0, const_split_max = -1.0;

  for (double tau : taus) {
    const qft::OscillationParams<double> prm{theta, kRefX, kRefP, tau};
    const PureState<double> mass_state = qft::state_mass_basis(prm);
    const PureState<double> flavor_state = qft::state_flavor_basis(prm);

    for (std::string_view mode : qft::kMassModes) {
      const double closed = qft::entropy_1v3_closed(Basis::mass, mode, prm);
      const double oracle = linear_entropy(mass_state, single_mode_split(mass_state, mode));
      err_m1 = std::max(err_m1, std::abs(closed - oracle));
      err_varid = std::max(err_varid, std::abs(qft::number_variance(Basis::mass, mode, prm) -
                                               oracle / 4.0));
    }
    for (std::string_view mode : qft::kFlavorModes) {
      const double closed = qft::entropy_1v3_closed(Basis::flavor, mode, prm);
      const double oracle = linear_entropy(flavor_state, single_mode_split(flavor_state, mode));
      err_f1 = std::max(err_f1, std::abs(closed - oracle));
      err_varid = std::max(err_varid, std::abs(qft::number_variance(Basis::flavor, mode, prm) -
                                               oracle / 4.0));
    }
    for (const Bipartition& split : splits_mass)
      err_m2 = std::max(err_m2, std::abs(qft::entropy_2v2_closed(Basis::mass, split, prm) -
                                         linear_entropy(mass_state, split)));
    for (const Bipartition& split : splits_flavor)
      err_f2 = std::max(err_f2, std::abs(qft::entropy_2v2_closed(Basis::flavor, split, prm) -
                                         linear_entropy(flavor_state, split)));

    const double s_nu2 = qft::entropy_1v3_closed(Basis::mass, "nu2", prm);
    const_nu2_min = std::min(const_nu2_min, s_nu2);
    const_nu2_max = std::max(const_nu2_max, s_nu2);
    const double s_pair = qft::entropy_2v2_closed(Basis::mass, splits_mass[1], prm);
    const_split_min = std::min(const_split_min, s_pair);
    const_split_max = std::max(const_split_max, s_pair);
  }

  r.add("qft/mass_1v3_vs_oracle", err_m1, kOracleTol);
  r.add("qft/mass_2v2_vs_oracle", err_m2, kOracleTol);
  r.add("qft/flavor_1v3_vs_oracle", err_f1, kOracleTol);
  r.add("qft/flavor_2v2_vs_oracle", err_f2, kOracleTol);
  r.add("qft/single_mode_variance_identity", err_varid, kAlgebraTol);
  r.add("qft/tau_independence_mass_forms",
        std::max(const_nu2_max - const_nu2_min, const_split_max - const_split_min), kAlgebraTol);
}

void check_qft_qm_limit(Runner& r) {
  const double theta = qm::theta_from_sin2(kRefSin2Theta);
  const std::vector<double> taus = tau_grid(4 * kPi, kTauPoints);
  const auto splits = qft::balanced_splits(Basis::flavor);
  double err = 0, err_antiparticle = 0;
  for (double tau : taus) {
    const qft::OscillationParams<double> prm{theta, kRefX, 1e4, tau};
    const auto cf = qft::flavor_coeffs(prm);
    const auto limit = qft::pontecorvo_coeffs(theta, tau);
    for (std::string_view mode : qft::kFlavorModes)
      err = std::max(err, std::abs(qft::entropy_1v3_flavor(mode, cf) -
                                   qft::entropy_1v3_flavor(mode, limit)));
    for (const Bipartition& split : splits)
      err = std::max(err, std::abs(qft::entropy_2v2_flavor(split, cf) -
                                   qft::entropy_2v2_flavor(split, limit)));
    err_antiparticle = std::max({err_antiparticle, qft::entropy_1v3_flavor("nuebar", cf),
                                 qft::entropy_1v3_flavor("numubar", cf)});
  }
  r.add("qft/qm_limit_flavor_entropies", err, 1e-3);
  r.add("qft/qm_limit_antiparticle_modes", err_antiparticle, 1e-3);
}

void check_qft_ratios(Runner& r) {
  const double theta = qm::theta_from_sin2(kRefSin2Theta);
  const std::vector<double> taus = tau_grid(4 * kPi, kTauPoints);
  struct Named {
    qft::PairObservable kind;
    const char* name;
  };
  const Named observables[] = {
      {qft::PairObservable::n_e_plus_n_mu, "qft/ratio_n_e_plus_n_mu"},
      {qft::PairObservable::charge_e, "qft/ratio_charge_e"},
      {qft::PairObservable::n_e_minus_n_mubar, "qft/ratio_n_e_minus_n_mubar"},
  };
  for (const Named& named : observables) {
    const Bipartition split = qft::split_of(named.kind);
    double best_entropy = 0, constant = 0;
    std::vector<double> ratios;
    for (double tau : taus) {
      const qft::OscillationParams<double> prm{theta, kRefX, kRefP, tau};
      const double entropy = qft::entropy_2v2_closed(Basis::flavor, split, prm);
      if (entropy <= 1e-8) continue;
      const double ratio = qft::number_variance(named.kind, prm) / entropy;
      ratios.push_back(ratio);
      if (entropy > best_entropy) {
        best_entropy = entropy;
        constant = ratio;
      }
    }
    double err = 0;
    for (double ratio : ratios) err = std::max(err, std::abs(ratio - constant));
    r.add(named.name, err, 1e-10, constant);
  }
}

std::string format_scientific(double value, int precision) {
  std::array<char, 32> buf;
  auto [last, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                  std::chars_format::scientific, precision);
  if (ec != std::errc{}) return "?";
  return std::string(buf.data(), last);
}

}  // namespace

Report run_all(std::uint64_t seed, int trials) {
  Runner runner{std::mt19937_64(seed), trials, {}};
  check_multiqubit_random(runner);
  check_dirac(runner);
  check_qm(runner);
  check_qft_normalization(runner);
  check_qft_oracle(runner);
  check_qft_qm_limit(runner);
  check_qft_ratios(runner);
  return std::move(runner.report);
}

void write_report(const Report& report, std::ostream& out, ReportFormat format) {
  if (format == ReportFormat::csv) {
    out << "check,max_abs_error,tolerance,status,constant\n";
    for (const Check& c : report.checks) {
      out << c.name << ',' << format_scientific(c.max_abs_error, 6) << ','
          << format_scientific(c.tolerance, 1) << ',' << (c.pass ? "pass" : "FAIL") << ',';
      if (c.constant) out << format_number(*c.constant);
      out << '\n';
    }
    return;
  }

  std::size_t width = 0;
  for (const Check& c : report.checks) width = std::max(width, c.name.size());
  for (const Check& c : report.checks) {
    std::string line = c.name;
    line.append(width + 2 - c.name.size(), ' ');
    std::string err = format_scientific(c.max_abs_error, 3);
    line += err;
    line.append(err.size() < 14 ? 14 - err.size() : 1, ' ');
    std::string tol = format_scientific(c.tolerance, 1);
    line += tol;
    line.append(tol.size() < 12 ? 12 - tol.size() : 1, ' ');
    line += c.pass ? "PASS" : "FAIL";
    if (c.constant) {
      line += "  constant=";
      line += format_number(*c.constant);
    }
    out << line << '\n';
  }
  out << "checks: " << report.checks.size() << "  failures: " << report.failures() << '\n';
}

}  // namespace nuent::verify
