#include "nuent/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "nuent/qft.hpp"
#include "nuent/qm.hpp"

namespace nuent {

std::string format_number(double value) {
  std::array<char, 32> buf;
  auto [last, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
  if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf.data(), last);
}

void validate(const SweepConfig& config) {
  if (!(config.sin2_theta > 0.0) || !(config.sin2_theta < 1.0))
    throw std::invalid_argument("sin2theta must lie in (0, 1)");
  if (!(config.x > 0.0)) throw std::invalid_argument("x must be positive");
  if (config.model == SweepModel::qft && config.x == 1.0)
    throw std::invalid_argument("x = 1 degenerates the frequencies; tau cannot advance");
  if (!(config.p >= 0.0)) throw std::invalid_argument("p must be >= 0");
  if (!(config.tau_max > 0.0)) throw std::invalid_argument("tau-max must be positive");
  if (config.steps < 2) throw std::invalid_argument("steps must be >= 2");
}

std::vector<double> tau_grid(double tau_max, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    grid[static_cast<std::size_t>(i)] = tau_max * (static_cast<double>(i) / (steps - 1));
  return grid;
}

const char* const kQmSweepHeader = "tau,S_mass,S_flavor,N_e,N_mu";
const char* const kQftSweepHeader =
    "tau,S_nue,S_numu,S_nuebar,S_numubar,avg_1v3,"
    "S_nue_numu,S_nue_nuebar,S_nue_numubar,avg_2v2,"
    "P_ee,P_emu,P_emu_eebar,P_ee_mumubar";

QmSweepRow qm_sweep_row(double theta, double tau) {
  const double q = qm::transition_probability(theta, tau);
  return {tau, qm::entropy_mass_closed(theta), qm::entropy_flavor_closed(theta, tau), 1.0 - q, q};
}

QftSweepContext make_qft_context(double theta, double x, double p) {
  const auto mm = dirac::from_dimensionless(x, p);
  const auto bg = dirac::bogoliubov(mm);
  return {theta, bg.U, bg.V, mm.omega1(), mm.omega2()};
}

QftSweepRow qft_sweep_row(const QftSweepContext& ctx, double tau) {
  const double t = tau / (ctx.omega2 - ctx.omega1);
  const auto cf = qft::flavor_coeffs_from(ctx.theta, ctx.U, ctx.V, ctx.omega1 * t, tau,
                                          (ctx.omega2 + ctx.omega1) * t);
  QftSweepRow row;
  row.tau = tau;
  for (std::size_t i = 0; i < 4; ++i)
    row.s_1v3[i] = qft::entropy_1v3_flavor(qft::kFlavorModes[i], cf);
  row.avg_1v3 = (row.s_1v3[0] + row.s_1v3[1] + row.s_1v3[2] + row.s_1v3[3]) / 4.0;
  const auto splits = qft::balanced_splits(Basis::flavor);
  for (std::size_t i = 0; i < 3; ++i) row.s_2v2[i] = qft::entropy_2v2_flavor(splits[i], cf);
  row.avg_2v2 = (row.s_2v2[0] + row.s_2v2[1] + row.s_2v2[2]) / 3.0;
  row.coeff_sq = {std::norm(cf.ee), std::norm(cf.emu), std::norm(cf.emu_eebar),
                  std::norm(cf.ee_mumubar)};
  return row;
}

namespace {

void append(std::string& line, double value) {
  line += ',';
  line += format_number(value);
}

}  // namespace

void write_sweep(const SweepConfig& config, std::ostream& out) {
  validate(config);
  const double theta = qm::theta_from_sin2(config.sin2_theta);
  const std::vector<double> grid = tau_grid(config.tau_max, config.steps);

  if (config.model == SweepModel::qm) {
    out << kQmSweepHeader << '\n';
    for (double tau : grid) {
      const QmSweepRow row = qm_sweep_row(theta, tau);
      std::string line = format_number(row.tau);
      append(line, row.s_mass);
      append(line, row.s_flavor);
      append(line, row.n_e);
      append(line, row.n_mu);
      out << line << '\n';
    }
    return;
  }

  const QftSweepContext ctx = make_qft_context(theta, config.x, config.p);
  out << kQftSweepHeader << '\n';
  for (double tau : grid) {
    const QftSweepRow row = qft_sweep_row(ctx, tau);
    std::string line = format_number(row.tau);
    for (double s : row.s_1v3) append(line, s);
    append(line, row.avg_1v3);
    for (double s : row.s_2v2) append(line, s);
    append(line, row.avg_2v2);
    for (double s : row.coeff_sq) append(line, s);
    out << line << '\n';
  }
}

}  // namespace nuent
