#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "nuent/qft.hpp"
#include "nuent/sweep.hpp"

using namespace nuent;
using C = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

qft::OscillationParams<double> reference_params(double tau) {
  return {qm::theta_from_sin2(0.314), 10.0, 5.0, tau};
}

Bipartition mode_vs_rest(const PureState<double>& state, std::string_view mode) {
  std::set<std::string> rest;
  for (const ModeLabel& m : state.modes())
    if (m.name != mode) rest.insert(m.name);
  return Bipartition({std::string(mode)}, rest);
}

}  // namespace

TEST_SUITE("qft") {

TEST_CASE("coefficients at tau = 0 reduce to the pure survival channel") {
  const auto cf = qft::flavor_coeffs(reference_params(0.0));
  CHECK(std::abs(cf.ee - C(1, 0)) < 1e-14);
  CHECK(std::abs(cf.emu) == 0.0);
  CHECK(std::abs(cf.emu_eebar) == 0.0);
  CHECK(std::abs(cf.ee_mumubar) == 0.0);
  CHECK(std::abs(cf.norm2() - 1.0) < 1e-14);
}

TEST_CASE("coefficient magnitudes at the reference parameters") {
  const auto cf1 = qft::flavor_coeffs(reference_params(1.0));
  CHECK(std::abs(std::norm(cf1.ee) - 0.800129784911169) < 1e-12);
  CHECK(std::abs(std::norm(cf1.emu) - 0.185882467970591) < 1e-12);
  CHECK(std::abs(std::norm(cf1.emu_eebar) - 0.003338650418696) < 1e-12);
  CHECK(std::abs(std::norm(cf1.ee_mumubar) - 0.010649096699544) < 1e-12);

  const auto cf2 = qft::flavor_coeffs(reference_params(2.0));
  CHECK(std::abs(std::norm(cf2.ee) - 0.392220660337076) < 1e-12);
  CHECK(std::abs(std::norm(cf2.emu) - 0.572630388071122) < 1e-12);
  CHECK(std::abs(cf2.norm2() - 1.0) < 1e-14);
}

TEST_CASE("(U, V) = (1, 0) recovers the Pontecorvo propagator entries") {
  const double theta = qm::theta_from_sin2(0.314);
  const double omega1 = 2.0, omega2 = 3.5, t = 1.7;
  const auto evolution = qm::evolution_matrix(theta, omega1, omega2, t);
  const auto cf = qft::flavor_coeffs_from(theta, 1.0, 0.0, omega1 * t,
                                          (omega2 - omega1) * t, 0.0);
  CHECK(std::abs(cf.ee - evolution(0, 0)) < 1e-14);
  CHECK(std::abs(cf.emu - evolution(0, 1)) < 1e-14);
  CHECK(std::abs(cf.emu_eebar) == 0.0);
  CHECK(std::abs(cf.ee_mumubar) == 0.0);
}

TEST_CASE("coefficient normalization holds across random parameters") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> draw_theta(0.01, kPi / 2 - 0.01);
  std::uniform_real_distribution<double> draw_x(1.0 + 1e-6, 100.0);
  std::uniform_real_distribution<double> draw_p(0.01, 100.0);
  std::uniform_real_distribution<double> draw_tau(0.0, 4 * kPi);
  double err = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const qft::OscillationParams<double> prm{draw_theta(rng), draw_x(rng), draw_p(rng),
                                             draw_tau(rng)};
    err = std::max(err, std::abs(qft::flavor_coeffs(prm).norm2() - 1.0));
  }
  CHECK(err < 1e-12);
}

TEST_CASE("mass-basis state: support, norm, vanishing antiparticle mode") {
  const auto psi = qft::state_mass_basis(reference_params(1.0));
  for (std::size_t i = 0; i < 16; ++i) {
    if (i == 8 || i == 4 || i == 14) continue;
    CHECK(std::abs(psi.amplitudes()[static_cast<std::int64_t>(i)]) == 0.0);
  }
  CHECK(std::abs(psi.amplitudes().squaredNorm() - 1.0) < 1e-14);
  CHECK(occupation_probability(psi, "nu2bar") == 0.0);

  // purity of the nu1 cut matches 1 - S/2 with S the 1:3 closed form
  const double s_nu1 = qft::entropy_1v3_closed(Basis::mass, "nu1", reference_params(1.0));
  CHECK(std::abs(purity(partial_trace(psi, {"nu1"})) - (1.0 - s_nu1 / 2)) < 1e-12);
  CHECK(std::abs(purity(partial_trace(psi, {"nu1"})) - 0.584278427930038) < 1e-12);
}

TEST_CASE("theta = 0 gives the bare mass eigenstate") {
  const qft::OscillationParams<double> prm{0.0, 10.0, 5.0, 3.0};
  const auto psi = qft::state_mass_basis(prm);
  CHECK(std::abs(std::abs(psi.amplitudes()[8]) - 1.0) < 1e-15);
  for (std::string_view mode : qft::kMassModes)
    CHECK(std::abs(qft::entropy_1v3_closed(Basis::mass, mode, prm)) < 1e-15);
}

TEST_CASE("flavor-basis state: support matches the four channels") {
  const auto psi = qft::state_flavor_basis(reference_params(2.0));
  for (std::size_t i = 0; i < 16; ++i) {
    if (i == 8 || i == 4 || i == 14 || i == 13) continue;
    CHECK(std::abs(psi.amplitudes()[static_cast<std::int64_t>(i)]) == 0.0);
  }
  CHECK(std::abs(psi.amplitudes().squaredNorm() - 1.0) < 1e-14);
}

TEST_CASE("x = 1 only admits tau = 0") {
  const qft::OscillationParams<double> degenerate{0.5, 1.0, 5.0, 1.0};
  CHECK_THROWS_AS(qft::flavor_coeffs(degenerate), std::invalid_argument);
  const qft::OscillationParams<double> frozen{0.5, 1.0, 5.0, 0.0};
  const auto cf = qft::flavor_coeffs(frozen);
  CHECK(std::abs(cf.ee - C(1, 0)) < 1e-14);
}

TEST_CASE("1:3 closed forms: special values") {
  const double theta = qm::theta_from_sin2(0.314);
  const double s2t = std::sin(2 * theta) * std::sin(2 * theta);
  for (double tau : {0.3, 1.7, 9.4}) {
    const auto prm = reference_params(tau);
    CHECK(qft::entropy_1v3_closed(Basis::mass, "nu2bar", prm) == 0.0);
    CHECK(std::abs(qft::entropy_1v3_closed(Basis::mass, "nu2", prm) - s2t) < 1e-14);
  }
  CHECK_THROWS_AS(qft::entropy_1v3_closed(Basis::mass, "nope", reference_params(1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(qft::entropy_1v3_closed(Basis::flavor, "nu1", reference_params(1.0)),
                  std::invalid_argument);
}

TEST_CASE("1:3 closed form for the antiparticle mode, cross-checked by the oracle") {
  const auto prm = reference_params(2.0);
  const auto cf = qft::flavor_coeffs(prm);
  const double q = std::norm(cf.emu_eebar);
  const double closed = qft::entropy_1v3_closed(Basis::flavor, "nuebar", prm);
  CHECK(std::abs(closed - 4 * q * (1 - q)) < 1e-14);
  CHECK(std::abs(closed - 0.049420854327636) < 1e-12);

  const auto psi = qft::state_flavor_basis(prm);
  CHECK(std::abs(closed - linear_entropy(psi, mode_vs_rest(psi, "nuebar"))) < 1e-12);
}

TEST_CASE("2:2 closed forms: special values and errors") {
  const double theta = qm::theta_from_sin2(0.314);
  const double s2t = std::sin(2 * theta) * std::sin(2 * theta);

  const Bipartition particle_pair({"nu1", "nu1bar"}, {"nu2", "nu2bar"});
  for (double tau : {0.0, 1.0, 5.2}) {
    const double s = qft::entropy_2v2_closed(Basis::mass, particle_pair, reference_params(tau));
    CHECK(std::abs(s - 2.0 / 3.0 * s2t) < 1e-14);
    CHECK(std::abs(s - 0.574410666666667) < 1e-12);
  }

  // V = 0 at zero momentum: no antiparticle correlations across (nu1,nu2 ; rest)
  const qft::OscillationParams<double> qm_like{theta, 10.0, 0.0, 2.0};
  CHECK(qft::entropy_2v2_closed(Basis::mass, Bipartition({"nu1", "nu2"}, {"nu1bar", "nu2bar"}),
                                qm_like) == 0.0);

  CHECK_THROWS_AS(qft::entropy_2v2_closed(
                      Basis::flavor, Bipartition({"nue"}, {"numu", "nuebar", "numubar"}),
                      reference_params(1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(qft::entropy_2v2_closed(Basis::flavor,
                                          Bipartition({"nue", "nu1"}, {"numu", "nuebar"}),
                                          reference_params(1.0)),
                  std::invalid_argument);
}

TEST_CASE("balanced flavor split against the explicit probability formula") {
  const auto prm = reference_params(2.0);
  const auto cf = qft::flavor_coeffs(prm);
  const double a = std::norm(cf.ee), b = std::norm(cf.emu);
  const double c = std::norm(cf.emu_eebar), d = std::norm(cf.ee_mumubar);
  const Bipartition split({"nue", "nuebar"}, {"numu", "numubar"});
  const double closed = qft::entropy_2v2_closed(Basis::flavor, split, prm);
  CHECK(std::abs(closed - 4.0 / 3.0 * (1 - (a + d) * (a + d) - (b + c) * (b + c))) < 1e-14);
  CHECK(std::abs(closed - 0.647335506720032) < 1e-12);
}

TEST_CASE("all fourteen closed forms match the oracle across the tau grid") {
  const auto taus = tau_grid(4 * kPi, 200);
  const auto splits_mass = qft::balanced_splits(Basis::mass);
  const auto splits_flavor = qft::balanced_splits(Basis::flavor);
  double err = 0;
  for (double tau : taus) {
    const auto prm = reference_params(tau);
    const auto mass_state = qft::state_mass_basis(prm);
    const auto flavor_state = qft::state_flavor_basis(prm);
    for (std::string_view mode : qft::kMassModes)
      err = std::max(err, std::abs(qft::entropy_1v3_closed(Basis::mass, mode, prm) -
                                   linear_entropy(mass_state, mode_vs_rest(mass_state, mode))));
    for (std::string_view mode : qft::kFlavorModes)
      err = std::max(err,
                     std::abs(qft::entropy_1v3_closed(Basis::flavor, mode, prm) -
                              linear_entropy(flavor_state, mode_vs_rest(flavor_state, mode))));
    for (const Bipartition& split : splits_mass)
      err = std::max(err, std::abs(qft::entropy_2v2_closed(Basis::mass, split, prm) -
                                   linear_entropy(mass_state, split)));
    for (const Bipartition& split : splits_flavor)
      err = std::max(err, std::abs(qft::entropy_2v2_closed(Basis::flavor, split, prm) -
                                   linear_entropy(flavor_state, split)));
  }
  CHECK(err < 1e-10);
}

TEST_CASE("bipartition averages agree with the closed-form means and the oracle") {
  const auto prm = reference_params(1.3);
  const auto flavor_state = qft::state_flavor_basis(prm);

  double sum_1v3 = 0;
  for (std::string_view mode : qft::kFlavorModes)
    sum_1v3 += qft::entropy_1v3_closed(Basis::flavor, mode, prm);
  CHECK(std::abs(qft::average_entropy_1v3_closed(Basis::flavor, prm) - sum_1v3 / 4) < 1e-14);
  CHECK(std::abs(average_linear_entropy(flavor_state, 1) - sum_1v3 / 4) < 1e-10);

  double sum_2v2 = 0;
  for (const Bipartition& split : qft::balanced_splits(Basis::flavor))
    sum_2v2 += qft::entropy_2v2_closed(Basis::flavor, split, prm);
  CHECK(std::abs(qft::average_entropy_2v2_closed(Basis::flavor, prm) - sum_2v2 / 3) < 1e-14);
  CHECK(std::abs(average_linear_entropy(flavor_state, 2) - sum_2v2 / 3) < 1e-10);
}

TEST_CASE("variances vanish at tau = 0") {
  const auto prm = reference_params(0.0);
  for (std::string_view mode : qft::kFlavorModes)
    CHECK(std::abs(qft::number_variance(Basis::flavor, mode, prm)) < 1e-14);
  CHECK(std::abs(qft::number_variance(qft::PairObservable::charge_e, prm)) < 1e-14);
}

TEST_CASE("single-mode variance equals a quarter of the 1:3 entropy") {
  const auto taus = tau_grid(4 * kPi, 50);
  double err = 0;
  for (double tau : taus) {
    const auto prm = reference_params(tau);
    const auto mass_state = qft::state_mass_basis(prm);
    const auto flavor_state = qft::state_flavor_basis(prm);
    for (std::string_view mode : qft::kMassModes)
      err = std::max(err, std::abs(qft::number_variance(Basis::mass, mode, prm) -
                                   linear_entropy(mass_state, mode_vs_rest(mass_state, mode)) /
                                       4));
    for (std::string_view mode : qft::kFlavorModes)
      err = std::max(err,
                     std::abs(qft::number_variance(Basis::flavor, mode, prm) -
                              linear_entropy(flavor_state, mode_vs_rest(flavor_state, mode)) /
                                  4));
  }
  CHECK(err < 1e-12);
}

TEST_CASE("pair variances track the balanced entropies with a fixed ratio") {
  const auto taus = tau_grid(4 * kPi, 200);
  for (auto kind : {qft::PairObservable::n_e_plus_n_mu, qft::PairObservable::charge_e,
                    qft::PairObservable::n_e_minus_n_mubar}) {
    const Bipartition split = qft::split_of(kind);
    double err = 0;
    for (double tau : taus) {
      const auto prm = reference_params(tau);
      const double entropy = qft::entropy_2v2_closed(Basis::flavor, split, prm);
      if (entropy <= 1e-8) continue;
      err = std::max(err, std::abs(qft::number_variance(kind, prm) / entropy - 0.375));
    }
    CHECK(err < 1e-10);  // measured constant, frozen
  }
}

TEST_CASE("large momentum recovers the Pontecorvo entropies") {
  const double theta = qm::theta_from_sin2(0.314);
  const auto taus = tau_grid(4 * kPi, 200);
  const auto splits = qft::balanced_splits(Basis::flavor);
  double err = 0, err_antiparticle = 0;
  for (double tau : taus) {
    const qft::OscillationParams<double> prm{theta, 10.0, 1e4, tau};
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

    // the particle-mode limits are the two-mode closed forms themselves
    err = std::max(err, std::abs(qft::entropy_1v3_flavor("nue", limit) -
                                 qm::entropy_flavor_closed(theta, tau)));
  }
  CHECK(err < 1e-3);
  CHECK(err_antiparticle < 1e-3);
}

}  // TEST_SUITE
