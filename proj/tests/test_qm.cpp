#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "nuent/qm.hpp"
#include "nuent/sweep.hpp"

using namespace nuent;
using C = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

double theta314() { return qm::theta_from_sin2(0.314); }

}  // namespace

TEST_SUITE("qm") {

TEST_CASE("theta_from_sin2 matches the reporting convention") {
  const double theta = theta314();
  CHECK(std::abs(std::sin(theta) - 0.560357029044876) < 1e-14);
  CHECK(std::abs(std::cos(theta) - 0.828251169633946) < 1e-14);
  CHECK_THROWS_AS(qm::theta_from_sin2(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(qm::theta_from_sin2(1.5), std::invalid_argument);
}

TEST_CASE("mixing matrix is a rotation") {
  const auto identity = qm::mixing_matrix(0.0);
  CHECK(identity(0, 0) == 1.0);
  CHECK(identity(0, 1) == 0.0);
  CHECK(identity(1, 0) == 0.0);
  CHECK(identity(1, 1) == 1.0);

  const auto maximal = qm::mixing_matrix(kPi / 4);
  const double r = std::sqrt(2.0) / 2.0;
  CHECK(std::abs(maximal(0, 0) - r) < 1e-15);
  CHECK(std::abs(maximal(0, 1) - r) < 1e-15);
  CHECK(std::abs(maximal(1, 0) + r) < 1e-15);
  CHECK(std::abs(maximal(1, 1) - r) < 1e-15);

  const auto rot = qm::mixing_matrix(theta314());
  CHECK(std::abs(rot.determinant() - 1.0) < 1e-15);
  CHECK((rot * rot.transpose() - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(qm::mixing_matrix(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(qm::mixing_matrix(2.0), std::invalid_argument);
}

TEST_CASE("evolution matrix: identity at t = 0, unitary, oscillation formula") {
  const double theta = theta314();
  const auto at_zero = qm::evolution_matrix(theta, 1.3, 2.9, 0.0);
  CHECK((at_zero - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  const double s2t = std::sin(2 * theta) * std::sin(2 * theta);
  for (double t : {0.1, 0.9, 2.2, 5.5}) {
    const double omega1 = 1.3, omega2 = 2.9;
    const auto evolution = qm::evolution_matrix(theta, omega1, omega2, t);
    CHECK((evolution.adjoint() * evolution - Eigen::Matrix2cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
    const double tau = (omega2 - omega1) * t;
    const double half = std::sin(tau / 2);
    CHECK(std::abs(std::norm(evolution(0, 1)) - s2t * half * half) < 1e-14);
    // <N_a>_b = |entry(b, a)|^2 sums to 1 across a
    CHECK(std::abs(std::norm(evolution(0, 0)) + std::norm(evolution(0, 1)) - 1.0) < 1e-14);
    CHECK(std::abs(std::norm(evolution(1, 0)) + std::norm(evolution(1, 1)) - 1.0) < 1e-14);
  }
  CHECK_THROWS_AS(qm::evolution_matrix(theta, 1.0, 2.0, -1.0), std::invalid_argument);
}

TEST_CASE("oscillation maximum at tau = pi") {
  const double theta = theta314();
  CHECK(std::abs(qm::transition_probability(theta, kPi) - 0.861616) < 1e-14);
}

TEST_CASE("electron state at tau = 0 is the factorized |10>") {
  const auto psi = qm::electron_state(theta314(), 0.0, Basis::flavor);
  CHECK(std::abs(psi.amplitudes()[2] - C(1, 0)) < 1e-15);
  CHECK(std::abs(psi.amplitudes()[1]) == 0.0);
  CHECK(std::abs(linear_entropy(psi, Bipartition({"nue"}, {"numu"}))) < 1e-14);
}

TEST_CASE("mass-basis amplitudes carry the literal phases") {
  const double theta = theta314();
  const double tau = 2.3, phi1 = 1.1;
  const auto psi = qm::electron_state(theta, tau, Basis::mass, phi1);
  CHECK(std::abs(psi.amplitudes()[2] - std::exp(C(0, -phi1)) * std::cos(theta)) < 1e-15);
  CHECK(std::abs(psi.amplitudes()[1] - std::exp(C(0, -(phi1 + tau))) * std::sin(theta)) < 1e-15);
}

TEST_CASE("flavor-basis amplitudes equal the propagator's electron row") {
  const double theta = theta314();
  const double omega1 = 2.0, omega2 = 3.5, t = 1.7;
  const auto evolution = qm::evolution_matrix(theta, omega1, omega2, t);
  const auto psi =
      qm::electron_state(theta, (omega2 - omega1) * t, Basis::flavor, omega1 * t);
  CHECK(std::abs(psi.amplitudes()[2] - evolution(0, 0)) < 1e-14);
  CHECK(std::abs(psi.amplitudes()[1] - evolution(0, 1)) < 1e-14);

  // <N_a>_e = |entry(e, a)|^2, and the variance is a quarter of the entropy
  NumberObservable<double> n_e;
  n_e.weights["nue"] = 1.0;
  const auto moments = observable_moments(psi, n_e);
  CHECK(std::abs(moments.mean - std::norm(evolution(0, 0))) < 1e-14);
  CHECK(std::abs(moments.variance -
                 qm::entropy_flavor_closed(theta, (omega2 - omega1) * t) / 4) < 1e-14);
}

TEST_CASE("closed entropies: fixed values") {
  const double theta = theta314();
  CHECK(std::abs(qm::entropy_mass_closed(theta) - 0.861616) < 1e-14);
  CHECK(qm::entropy_flavor_closed(theta, 0.0) == 0.0);
  CHECK(std::abs(qm::entropy_flavor_closed(theta, kPi) - 0.476935474176) < 1e-12);
}

TEST_CASE("entanglement is maximal where the populations cross 0.5") {
  const double theta = theta314();
  const double s2t = std::sin(2 * theta) * std::sin(2 * theta);
  const double tau_star = 2 * std::asin(std::sqrt(0.5 / s2t));
  CHECK(std::abs(tau_star - 1.732104800527575) < 1e-12);
  CHECK(std::abs(qm::transition_probability(theta, tau_star) - 0.5) < 1e-14);
  CHECK(std::abs(qm::entropy_flavor_closed(theta, tau_star) - 1.0) < 1e-12);
  const auto psi = qm::electron_state(theta, tau_star, Basis::flavor);
  CHECK(std::abs(linear_entropy(psi, Bipartition({"nue"}, {"numu"})) - 1.0) < 1e-12);
}

TEST_CASE("closed forms equal the partial-trace oracle over the full grid") {
  const auto taus = tau_grid(4 * kPi, 200);
  double err_mass = 0, err_flavor = 0, err_var = 0, err_prob = 0, drift = 0;
  for (int j = 0; j < 20; ++j) {
    const double theta = kPi / 2 * (j + 0.5) / 20;
    double mass_lo = 2.0, mass_hi = -1.0;
    for (double tau : taus) {
      const auto mass_state = qm::electron_state(theta, tau, Basis::mass);
      const auto flavor_state = qm::electron_state(theta, tau, Basis::flavor);
      const double s_mass = linear_entropy(mass_state, Bipartition({"nu1"}, {"nu2"}));
      const double s_flavor = linear_entropy(flavor_state, Bipartition({"nue"}, {"numu"}));
      err_mass = std::max(err_mass, std::abs(s_mass - qm::entropy_mass_closed(theta)));
      const double closed = qm::entropy_flavor_closed(theta, tau);
      err_flavor = std::max(err_flavor, std::abs(s_flavor - closed));
      mass_lo = std::min(mass_lo, s_mass);
      mass_hi = std::max(mass_hi, s_mass);

      NumberObservable<double> n_e, n_mu;
      n_e.weights["nue"] = 1.0;
      n_mu.weights["numu"] = 1.0;
      const auto me = observable_moments(flavor_state, n_e);
      const auto mmu = observable_moments(flavor_state, n_mu);
      err_var = std::max({err_var, std::abs(me.variance - closed / 4),
                          std::abs(mmu.variance - closed / 4)});
      err_prob = std::max(err_prob, std::abs(me.mean + mmu.mean - 1.0));
    }
    drift = std::max(drift, mass_hi - mass_lo);
  }
  CHECK(err_mass < 1e-12);
  CHECK(err_flavor < 1e-12);
  CHECK(err_var < 1e-12);
  CHECK(err_prob < 1e-12);
  CHECK(drift < 1e-12);
}

}  // TEST_SUITE
