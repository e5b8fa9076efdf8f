// qm.hpp
// Two-flavor quantum-mechanical (Pontecorvo) oscillation model: mixing
// matrix, time evolution, the evolved electron-neutrino state as a
// two-qubit vector in the mass or flavor basis, and the closed-form
// linear entropies of both bases.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "nuent/multiqubit.hpp"

namespace nuent {

enum class Basis { mass, flavor };

namespace qm {

// Mixing angle from the reporting convention sin^2(theta).
template <typename Scalar = double>
Scalar theta_from_sin2(Scalar sin2_theta) {
  if (!(sin2_theta >= Scalar(0)) || !(sin2_theta <= Scalar(1)))
    throw std::invalid_argument("sin^2(theta) must lie in [0, 1]");
  return std::asin(std::sqrt(sin2_theta));
}

namespace detail {

template <typename Scalar>
void check_angle(Scalar theta) {
  if (!(theta >= Scalar(0)) || !(theta <= std::numbers::pi_v<Scalar> / 2))
    throw std::invalid_argument("mixing angle must lie in [0, pi/2]");
}

}  // namespace detail

// The 2x2 flavor-mass rotation; orthogonal with determinant 1.
template <typename Scalar = double>
Eigen::Matrix<Scalar, 2, 2> mixing_matrix(Scalar theta) {
  detail::check_angle(theta);
  const Scalar c = std::cos(theta);
  const Scalar s = std::sin(theta);
  Eigen::Matrix<Scalar, 2, 2> rot;
  rot << c, s, -s, c;
  return rot;
}

// Flavor-basis propagator rot(theta) diag(e^{-i w1 t}, e^{-i w2 t}) rot(theta)^T;
// unitary, rows and columns indexed (e, mu).
template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, 2, 2> evolution_matrix(Scalar theta, Scalar omega1,
                                                           Scalar omega2, Scalar t) {
  detail::check_angle(theta);
  if (!(t >= Scalar(0))) throw std::invalid_argument("time must be >= 0");
  using C = std::complex<Scalar>;
  const Eigen::Matrix<Scalar, 2, 2> rot = mixing_matrix(theta);
  Eigen::Matrix<C, 2, 2> free = Eigen::Matrix<C, 2, 2>::Zero();
  free(0, 0) = std::exp(C(0, -omega1 * t));
  free(1, 1) = std::exp(C(0, -omega2 * t));
  return rot.template cast<C>() * free * rot.transpose().template cast<C>();
}

// Survival-channel leakage |U_emu(t)|^2 = sin^2(2 theta) sin^2(tau/2); the
// whole tau dependence of the flavor-basis populations.
template <typename Scalar = double>
Scalar transition_probability(Scalar theta, Scalar tau) {
  detail::check_angle(theta);
  const Scalar s2t = std::sin(2 * theta);
  const Scalar half = std::sin(tau / 2);
  return s2t * s2t * half * half;
}

// Evolved electron-neutrino state as a two-qubit vector. Mass basis carries
// modes (nu1, nu2) with amplitudes (e^{-i phi1} cos, e^{-i (phi1+tau)} sin);
// flavor basis carries (nue, numu) with the propagator's first row. phi1 is
// the optional absolute phase omega1*t; it cancels in every observable.
template <typename Scalar = double>
PureState<Scalar> electron_state(Scalar theta, Scalar tau, Basis basis, Scalar phi1 = Scalar(0)) {
  detail::check_angle(theta);
  using C = std::complex<Scalar>;
  const Scalar c = std::cos(theta);
  const Scalar s = std::sin(theta);
  const C e1 = std::exp(C(0, -phi1));
  const C e_tau = std::exp(C(0, -tau));

  VectorX<Scalar> amps = VectorX<Scalar>::Zero(4);
  if (basis == Basis::mass) {
    amps[2] = e1 * c;          // |10>
    amps[1] = e1 * e_tau * s;  // |01>
    return PureState<Scalar>::from_names({"nu1", "nu2"}, std::move(amps));
  }
  amps[2] = e1 * (c * c + s * s * e_tau);      // U_ee(t)
  amps[1] = e1 * c * s * (e_tau - Scalar(1));  // U_emu(t)
  return PureState<Scalar>::from_names({"nue", "numu"}, std::move(amps));
}

// Mass-basis linear entropy sin^2(2 theta); tau-independent.
template <typename Scalar = double>
Scalar entropy_mass_closed(Scalar theta) {
  detail::check_angle(theta);
  const Scalar s2t = std::sin(2 * theta);
  return s2t * s2t;
}

// Flavor-basis linear entropy 4 |U_ee(t)|^2 |U_emu(t)|^2.
template <typename Scalar = double>
Scalar entropy_flavor_closed(Scalar theta, Scalar tau) {
  const Scalar q = transition_probability(theta, tau);
  return 4 * q * (1 - q);
}

}  // namespace qm
}  // namespace nuent
