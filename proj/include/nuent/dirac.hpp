// dirac.hpp
// Helicity-basis Dirac spinors for momentum along +z and the Bogoliubov
// coefficient magnitudes |U_k|, |V_k| obtained from spinor inner products.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace nuent::dirac {

// Two mass parameters and a shared momentum magnitude along +z, in energy
// units with m1 canonically 1.
template <typename Scalar = double>
struct MassMomentum {
  Scalar m1;
  Scalar m2;
  Scalar k;

  MassMomentum(Scalar m1_, Scalar m2_, Scalar k_) : m1(m1_), m2(m2_), k(k_) {
    if (!(m1 > Scalar(0)) || !(m2 > Scalar(0)))
      throw std::invalid_argument("masses must be positive");
    if (!(k >= Scalar(0))) throw std::invalid_argument("momentum magnitude must be >= 0");
  }

  Scalar omega1() const { return std::sqrt(k * k + m1 * m1); }
  Scalar omega2() const { return std::sqrt(k * k + m2 * m2); }
  Scalar omega(int which_mass) const { return which_mass == 1 ? omega1() : omega2(); }
  Scalar mass(int which_mass) const { return which_mass == 1 ? m1 : m2; }
};

// Canonical unit m1 = 1: x = m2/m1, p = |k|/sqrt(m1 m2).
template <typename Scalar = double>
MassMomentum<Scalar> from_dimensionless(Scalar x, Scalar p) {
  if (!(x > Scalar(0))) throw std::invalid_argument("mass ratio x must be positive");
  if (!(p >= Scalar(0))) throw std::invalid_argument("momentum parameter p must be >= 0");
  return MassMomentum<Scalar>(Scalar(1), x, p * std::sqrt(x));
}

template <typename Scalar = double>
using Spinor = Eigen::Matrix<std::complex<Scalar>, 4, 1>;

namespace detail {

inline void check_indices(int which_mass, int helicity) {
  if (which_mass != 1 && which_mass != 2)
    throw std::invalid_argument("which_mass must be 1 or 2");
  if (helicity != 1 && helicity != 2) throw std::invalid_argument("helicity must be 1 or 2");
}

}  // namespace detail

// Positive-frequency solution u^r_{k,i} of the free Dirac equation at energy
// omega_i, Dirac representation, momentum (0,0,k), normalized to u^+ u = 1.
// The helicity two-spinors are the sigma_z eigenvectors: r=1 -> (1,0),
// r=2 -> (0,1).
template <typename Scalar = double>
Spinor<Scalar> spinor_u(const MassMomentum<Scalar>& mm, int which_mass, int helicity) {
  detail::check_indices(which_mass, helicity);
  const Scalar m = mm.mass(which_mass);
  const Scalar w = mm.omega(which_mass);
  const Scalar norm = std::sqrt((w + m) / (2 * w));
  const Scalar kappa = mm.k / (w + m);
  Spinor<Scalar> u = Spinor<Scalar>::Zero();
  if (helicity == 1) {
    u(0) = norm;
    u(2) = norm * kappa;
  } else {
    u(1) = norm;
    u(3) = -norm * kappa;
  }
  return u;
}

// Negative-frequency solution v^r_{-k,i} (momentum (0,0,-k)), normalized to
// v^+ v = 1, same two-spinor convention as spinor_u.
template <typename Scalar = double>
Spinor<Scalar> spinor_v(const MassMomentum<Scalar>& mm, int which_mass, int helicity) {
  detail::check_indices(which_mass, helicity);
  const Scalar m = mm.mass(which_mass);
  const Scalar w = mm.omega(which_mass);
  const Scalar norm = std::sqrt((w + m) / (2 * w));
  const Scalar kappa = mm.k / (w + m);
  Spinor<Scalar> v = Spinor<Scalar>::Zero();
  if (helicity == 1) {
    v(0) = -norm * kappa;
    v(2) = norm;
  } else {
    v(1) = norm * kappa;
    v(3) = norm;
  }
  return v;
}

// Magnitudes of the Bogoliubov coefficients; U^2 + V^2 = 1.
template <typename Scalar = double>
struct Bogoliubov {
  Scalar U;
  Scalar V;
};

// |U_k| = |u^{r+}_{k,1} u^r_{k,2}| and |V_k| = |u^{r+}_{k,1} v^r_{-k,2}|,
// computed from explicit spinors. Both defining inner products of each
// coefficient are evaluated and must agree; the result does not depend on
// the helicity index.
template <typename Scalar = double>
Bogoliubov<Scalar> bogoliubov(const MassMomentum<Scalar>& mm, int helicity = 2) {
  const Spinor<Scalar> u1 = spinor_u(mm, 1, helicity);
  const Spinor<Scalar> u2 = spinor_u(mm, 2, helicity);
  const Spinor<Scalar> v1 = spinor_v(mm, 1, helicity);
  const Spinor<Scalar> v2 = spinor_v(mm, 2, helicity);

  const std::complex<Scalar> uu = u1.dot(u2);
  const std::complex<Scalar> vv = v1.dot(v2);
  const Scalar eps = helicity == 1 ? Scalar(-1) : Scalar(1);
  const std::complex<Scalar> uv_12 = eps * u1.dot(v2);
  const std::complex<Scalar> uv_21 = -eps * u2.dot(v1);

  if (std::abs(uu - vv) > Scalar(1e-12) || std::abs(uv_12 - uv_21) > Scalar(1e-12))
    throw std::logic_error("bogoliubov: defining inner products disagree");

  return {std::abs(uu), std::abs(uv_12)};
}

template <typename Scalar = double>
Bogoliubov<Scalar> bogoliubov(Scalar x, Scalar p, int helicity = 2) {
  return bogoliubov(from_dimensionless(x, p), helicity);
}

}  // namespace nuent::dirac
