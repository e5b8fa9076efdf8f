// sweep.hpp
// Parameter sweeps over the scaled time tau, emitted as deterministic CSV
// tables that reproduce the model's entropy and population curves.
#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace nuent {

// Locale-free decimal rendering, at most 12 significant digits, trailing
// zeros elided. The CSV byte-format contract.
std::string format_number(double value);

enum class SweepModel { qm, qft };

struct SweepConfig {
  SweepModel model = SweepModel::qft;
  double sin2_theta = 0.314;
  double x = 10.0;
  double p = 5.0;
  double tau_max = 4 * 3.14159265358979323846;
  int steps = 800;
};

// Throws std::invalid_argument on out-of-domain fields.
void validate(const SweepConfig& config);

// Uniform grid over [0, tau_max], inclusive of both endpoints.
std::vector<double> tau_grid(double tau_max, int steps);

extern const char* const kQmSweepHeader;
extern const char* const kQftSweepHeader;

struct QmSweepRow {
  double tau;
  double s_mass;    // mass-basis linear entropy, constant in tau
  double s_flavor;  // flavor-basis linear entropy
  double n_e;       // electron-neutrino survival population
  double n_mu;      // muon-neutrino appearance population
};

QmSweepRow qm_sweep_row(double theta, double tau);

// Tau-independent context for a qft sweep: the Bogoliubov magnitudes and
// frequencies are fixed by (x, p).
struct QftSweepContext {
  double theta;
  double U;
  double V;
  double omega1;
  double omega2;
};

QftSweepContext make_qft_context(double theta, double x, double p);

struct QftSweepRow {
  double tau;
  std::array<double, 4> s_1v3;  // (nue, numu, nuebar, numubar) vs. the rest
  double avg_1v3;
  std::array<double, 3> s_2v2;  // partner of nue: numu, nuebar, numubar
  double avg_2v2;
  std::array<double, 4> coeff_sq;  // |ee|^2, |emu|^2, |emu_eebar|^2, |ee_mumubar|^2
};

QftSweepRow qft_sweep_row(const QftSweepContext& ctx, double tau);

// Header plus one row per grid point, ascending tau, '\n' line endings.
// Byte-identical across reruns with equal config.
void write_sweep(const SweepConfig& config, std::ostream& out);

}  // namespace nuent
