// qft.hpp
// Field-theoretic two-flavor oscillation model. The evolved electron-neutrino
// state is a four-qubit vector over particle and antiparticle modes, in the
// mass basis (nu1, nu2, nu1bar, nu2bar) or the flavor basis (nue, numu,
// nuebar, numubar). Closed-form linear entropies for every 1:3 and balanced
// 2:2 bipartition are plain coefficient formulas, independent of the
// partial-trace machinery that checks them.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nuent/dirac.hpp"
#include "nuent/multiqubit.hpp"
#include "nuent/qm.hpp"

namespace nuent::qft {

inline constexpr std::array<std::string_view, 4> kMassModes{"nu1", "nu2", "nu1bar", "nu2bar"};
inline constexpr std::array<std::string_view, 4> kFlavorModes{"nue", "numu", "nuebar", "numubar"};

// Mixing angle, mass ratio x = m2/m1, momentum p = |k|/sqrt(m1 m2), and
// scaled time tau = (omega2 - omega1) t.
template <typename Scalar = double>
struct OscillationParams {
  Scalar theta;
  Scalar x;
  Scalar p;
  Scalar tau;
};

namespace detail {

template <typename Scalar>
void check_params(const OscillationParams<Scalar>& prm) {
  qm::detail::check_angle(prm.theta);
  if (!(prm.x > Scalar(0))) throw std::invalid_argument("mass ratio x must be positive");
  if (!(prm.p >= Scalar(0))) throw std::invalid_argument("momentum parameter p must be >= 0");
  if (prm.x == Scalar(1) && prm.tau != Scalar(0))
    throw std::invalid_argument("tau cannot advance with degenerate masses (x = 1)");
}

}  // namespace detail

// The four amplitudes of the evolved electron-neutrino state in the flavor
// basis: survival (ee), transition (emu), and the two pair channels carrying
// an extra e-ebar or mu-mubar pair. Squared magnitudes sum to 1.
template <typename Scalar = double>
struct FlavorCoeffs {
  std::complex<Scalar> ee;
  std::complex<Scalar> emu;
  std::complex<Scalar> emu_eebar;
  std::complex<Scalar> ee_mumubar;

  Scalar norm2() const {
    return std::norm(ee) + std::norm(emu) + std::norm(emu_eebar) + std::norm(ee_mumubar);
  }
};

// Literal coefficient block for given Bogoliubov magnitudes and the three
// phases phi1 = omega1 t, phi_minus = (omega2 - omega1) t = tau,
// phi_plus = (omega2 + omega1) t.
template <typename Scalar = double>
FlavorCoeffs<Scalar> flavor_coeffs_from(Scalar theta, Scalar U, Scalar V, Scalar phi1,
                                        Scalar phi_minus, Scalar phi_plus) {
  using C = std::complex<Scalar>;
  const Scalar c = std::cos(theta);
  const Scalar s = std::sin(theta);
  const C e1 = std::exp(C(0, -phi1));
  const C em = std::exp(C(0, -phi_minus));
  const C ep = std::exp(C(0, -phi_plus));
  FlavorCoeffs<Scalar> out;
  out.ee = e1 * (c * c + s * s * (em * U * U + ep * V * V));
  out.emu = e1 * U * c * s * (em - Scalar(1));
  out.emu_eebar = e1 * V * c * s * (Scalar(1) - ep);
  out.ee_mumubar = e1 * U * V * s * s * (ep - em);
  return out;
}

// Pontecorvo limit (U, V) = (1, 0): the pair channels vanish and (ee, emu)
// match the quantum-mechanical propagator entries.
template <typename Scalar = double>
FlavorCoeffs<Scalar> pontecorvo_coeffs(Scalar theta, Scalar tau, Scalar phi1 = Scalar(0)) {
  return flavor_coeffs_from(theta, Scalar(1), Scalar(0), phi1, tau, Scalar(0));
}

namespace detail {

template <typename Scalar>
struct PhaseSet {
  Scalar phi1;
  Scalar phi_minus;
  Scalar phi_plus;
};

// Reconstructs the absolute phases from tau via t = tau / (omega2 - omega1).
template <typename Scalar>
PhaseSet<Scalar> phases(const dirac::MassMomentum<Scalar>& mm, Scalar tau) {
  const Scalar w1 = mm.omega1();
  const Scalar w2 = mm.omega2();
  if (w1 == w2) return {Scalar(0), Scalar(0), Scalar(0)};  // only reachable at tau = 0
  const Scalar t = tau / (w2 - w1);
  return {w1 * t, tau, (w2 + w1) * t};
}

}  // namespace detail

template <typename Scalar = double>
FlavorCoeffs<Scalar> flavor_coeffs(const OscillationParams<Scalar>& prm) {
  detail::check_params(prm);
  const dirac::MassMomentum<Scalar> mm = dirac::from_dimensionless(prm.x, prm.p);
  const dirac::Bogoliubov<Scalar> bg = dirac::bogoliubov(mm);
  const auto ph = detail::phases(mm, prm.tau);
  return flavor_coeffs_from(prm.theta, bg.U, bg.V, ph.phi1, ph.phi_minus, ph.phi_plus);
}

// Four-qubit state over (nu1, nu2, nu1bar, nu2bar); support is exactly
// {|1000>, |0100>, |1110>} with amplitudes (e^{-i w1 t} cos, e^{-i w2 t} U sin,
// e^{-i (w2+w1) t} V sin). The nu2bar mode is never occupied.
template <typename Scalar = double>
PureState<Scalar> state_mass_basis(const OscillationParams<Scalar>& prm) {
  detail::check_params(prm);
  using C = std::complex<Scalar>;
  const dirac::MassMomentum<Scalar> mm = dirac::from_dimensionless(prm.x, prm.p);
  const dirac::Bogoliubov<Scalar> bg = dirac::bogoliubov(mm);
  const auto ph = detail::phases(mm, prm.tau);
  const Scalar c = std::cos(prm.theta);
  const Scalar s = std::sin(prm.theta);

  VectorX<Scalar> amps = VectorX<Scalar>::Zero(16);
  amps[8] = std::exp(C(0, -ph.phi1)) * c;                          // |1000>
  amps[4] = std::exp(C(0, -(ph.phi1 + ph.phi_minus))) * bg.U * s;  // |0100>
  amps[14] = std::exp(C(0, -ph.phi_plus)) * bg.V * s;              // |1110>
  std::vector<std::string> names(kMassModes.begin(), kMassModes.end());
  return PureState<Scalar>::from_names(names, std::move(amps));
}

// Four-qubit state over (nue, numu, nuebar, numubar); support is exactly
// {|1000>, |0100>, |1110>, |1101>} with the FlavorCoeffs amplitudes.
template <typename Scalar = double>
PureState<Scalar> state_flavor_basis(const OscillationParams<Scalar>& prm) {
  const FlavorCoeffs<Scalar> cf = flavor_coeffs(prm);
  VectorX<Scalar> amps = VectorX<Scalar>::Zero(16);
  amps[8] = cf.ee;           // |1000>
  amps[4] = cf.emu;          // |0100>
  amps[14] = cf.emu_eebar;   // |1110>
  amps[13] = cf.ee_mumubar;  // |1101>
  std::vector<std::string> names(kFlavorModes.begin(), kFlavorModes.end());
  return PureState<Scalar>::from_names(names, std::move(amps));
}

// ---- closed-form linear entropies ------------------------------------------
// Plain formulas in the coefficient magnitudes; no state is built and no
// partial trace runs here.

// 1:3 split (single flavor-basis mode vs. the rest): 4 q (1 - q) with q the
// mode's occupancy probability.
template <typename Scalar = double>
Scalar entropy_1v3_flavor(std::string_view mode, const FlavorCoeffs<Scalar>& cf) {
  const Scalar a = std::norm(cf.ee);
  const Scalar b = std::norm(cf.emu);
  const Scalar c = std::norm(cf.emu_eebar);
  const Scalar d = std::norm(cf.ee_mumubar);
  Scalar q;
  if (mode == "nue")
    q = b;  // 4|emu|^2 (1-|emu|^2)
  else if (mode == "numu")
    q = a;  // 4|ee|^2 (1-|ee|^2)
  else if (mode == "nuebar")
    q = c;
  else if (mode == "numubar")
    q = d;
  else
    throw std::invalid_argument("unknown flavor mode: " + std::string(mode));
  return 4 * q * (1 - q);
}

// 1:3 split of the mass-basis state.
template <typename Scalar = double>
Scalar entropy_1v3_mass(std::string_view mode, Scalar theta, Scalar U, Scalar V) {
  const Scalar s2 = std::sin(theta) * std::sin(theta);
  if (mode == "nu1") {
    const Scalar q = U * U * s2;
    return 4 * q * (1 - q);
  }
  if (mode == "nu2") {
    const Scalar s2t = std::sin(2 * theta);
    return s2t * s2t;  // tau-independent
  }
  if (mode == "nu1bar") {
    const Scalar q = V * V * s2;
    return 4 * q * (1 - q);
  }
  if (mode == "nu2bar") return Scalar(0);
  throw std::invalid_argument("unknown mass mode: " + std::string(mode));
}

namespace detail {

// Identifies one of the three balanced splits by the partner sharing a side
// with `anchor` ("nue" or "nu1"). Validates the split covers the basis.
template <std::size_t N>
std::string balanced_partner(const Bipartition& split,
                             const std::array<std::string_view, N>& basis_modes,
                             std::string_view anchor) {
  if (split.side_a().size() != 2 || split.side_b().size() != 2)
    throw std::invalid_argument("balanced split must have two modes per side");
  for (std::string_view m : basis_modes)
    if (!split.side_a().count(std::string(m)) && !split.side_b().count(std::string(m)))
      throw std::invalid_argument("split does not cover mode: " + std::string(m));
  const std::set<std::string>& anchor_side =
      split.side_a().count(std::string(anchor)) ? split.side_a() : split.side_b();
  if (!anchor_side.count(std::string(anchor)))
    throw std::invalid_argument("split does not contain mode: " + std::string(anchor));
  for (const std::string& name : anchor_side)
    if (name != anchor) return name;
  throw std::invalid_argument("degenerate split");
}

}  // namespace detail

// Balanced 2:2 split of the flavor-basis state, prefactor 4/3.
template <typename Scalar = double>
Scalar entropy_2v2_flavor(const Bipartition& split, const FlavorCoeffs<Scalar>& cf) {
  const Scalar a = std::norm(cf.ee);
  const Scalar b = std::norm(cf.emu);
  const Scalar c = std::norm(cf.emu_eebar);
  const Scalar d = std::norm(cf.ee_mumubar);
  const std::string partner = detail::balanced_partner(split, kFlavorModes, "nue");
  Scalar lhs, rhs;
  if (partner == "numu") {
    lhs = a + b;
    rhs = c + d;
  } else if (partner == "nuebar") {
    lhs = a + d;
    rhs = b + c;
  } else {  // numubar
    lhs = a + c;
    rhs = b + d;
  }
  return Scalar(4) / Scalar(3) * (1 - lhs * lhs - rhs * rhs);
}

// Balanced 2:2 split of the mass-basis state.
template <typename Scalar = double>
Scalar entropy_2v2_mass(const Bipartition& split, Scalar theta, Scalar U, Scalar V) {
  const Scalar s2 = std::sin(theta) * std::sin(theta);
  const Scalar cos2t = std::cos(2 * theta);
  const std::string partner = detail::balanced_partner(split, kMassModes, "nu1");
  if (partner == "nu2")
    return Scalar(4) / Scalar(3) * V * V * s2 * (2 - V * V + V * V * cos2t);
  if (partner == "nu1bar") {
    const Scalar s2t = std::sin(2 * theta);
    return Scalar(2) / Scalar(3) * s2t * s2t;  // tau-independent
  }
  // nu2bar
  return Scalar(4) / Scalar(3) * U * U * s2 * (2 - U * U + U * U * cos2t);
}

// ---- parameter-level dispatchers -------------------------------------------

template <typename Scalar = double>
Scalar entropy_1v3_closed(Basis basis, std::string_view mode,
                          const OscillationParams<Scalar>& prm) {
  if (basis == Basis::flavor) return entropy_1v3_flavor(mode, flavor_coeffs(prm));
  detail::check_params(prm);
  const dirac::Bogoliubov<Scalar> bg = dirac::bogoliubov(dirac::from_dimensionless(prm.x, prm.p));
  return entropy_1v3_mass(mode, prm.theta, bg.U, bg.V);
}

template <typename Scalar = double>
Scalar entropy_2v2_closed(Basis basis, const Bipartition& split,
                          const OscillationParams<Scalar>& prm) {
  if (basis == Basis::flavor) return entropy_2v2_flavor(split, flavor_coeffs(prm));
  detail::check_params(prm);
  const dirac::Bogoliubov<Scalar> bg = dirac::bogoliubov(dirac::from_dimensionless(prm.x, prm.p));
  return entropy_2v2_mass(split, prm.theta, bg.U, bg.V);
}

// The three distinct balanced splits, each anchored at the first basis mode.
inline std::array<Bipartition, 3> balanced_splits(Basis basis) {
  const auto& m = basis == Basis::mass ? kMassModes : kFlavorModes;
  auto mk = [&](int partner) {
    std::set<std::string> a{std::string(m[0]), std::string(m[static_cast<std::size_t>(partner)])};
    std::set<std::string> b;
    for (int q = 1; q < 4; ++q)
      if (q != partner) b.insert(std::string(m[static_cast<std::size_t>(q)]));
    return Bipartition(std::move(a), std::move(b));
  };
  return {mk(1), mk(2), mk(3)};
}

// Mean of the four 1:3 closed forms; equals the binomially weighted average
// over all size-1 subsets.
template <typename Scalar = double>
Scalar average_entropy_1v3_closed(Basis basis, const OscillationParams<Scalar>& prm) {
  const auto& m = basis == Basis::mass ? kMassModes : kFlavorModes;
  Scalar sum(0);
  for (std::string_view mode : m) sum += entropy_1v3_closed(basis, mode, prm);
  return sum / Scalar(4);
}

// Mean of the three distinct 2:2 closed forms; the six size-2 subsets count
// every split twice, so the binomial average reduces to this mean.
template <typename Scalar = double>
Scalar average_entropy_2v2_closed(Basis basis, const OscillationParams<Scalar>& prm) {
  Scalar sum(0);
  for (const Bipartition& split : balanced_splits(basis))
    sum += entropy_2v2_closed(basis, split, prm);
  return sum / Scalar(3);
}

// ---- number and charge variances -------------------------------------------

// Variance of the single-mode number operator N_mode on the basis state,
// computed through the diagonal-observable moments.
template <typename Scalar = double>
Scalar number_variance(Basis basis, std::string_view mode, const OscillationParams<Scalar>& prm) {
  const PureState<Scalar> state =
      basis == Basis::mass ? state_mass_basis(prm) : state_flavor_basis(prm);
  NumberObservable<Scalar> obs;
  obs.weights[std::string(mode)] = Scalar(1);
  return observable_moments(state, obs).variance;
}

// Two-mode combinations paired with the balanced flavor splits.
enum class PairObservable {
  n_e_plus_n_mu,     // N_e + N_mu      <-> (nue,numu ; nuebar,numubar)
  charge_e,          // N_e - N_ebar    <-> (nue,nuebar ; numu,numubar)
  n_e_minus_n_mubar  // N_e - N_mubar   <-> (nue,numubar ; numu,nuebar)
};

template <typename Scalar = double>
Scalar number_variance(PairObservable kind, const OscillationParams<Scalar>& prm) {
  NumberObservable<Scalar> obs;
  switch (kind) {
    case PairObservable::n_e_plus_n_mu:
      obs.weights["nue"] = Scalar(1);
      obs.weights["numu"] = Scalar(1);
      break;
    case PairObservable::charge_e:
      obs.weights["nue"] = Scalar(1);
      obs.weights["nuebar"] = Scalar(-1);
      break;
    case PairObservable::n_e_minus_n_mubar:
      obs.weights["nue"] = Scalar(1);
      obs.weights["numubar"] = Scalar(-1);
      break;
  }
  return observable_moments(state_flavor_basis(prm), obs).variance;
}

// Balanced split associated with each pair observable.
inline Bipartition split_of(PairObservable kind) {
  switch (kind) {
    case PairObservable::n_e_plus_n_mu:
      return Bipartition({"nue", "numu"}, {"nuebar", "numubar"});
    case PairObservable::charge_e:
      return Bipartition({"nue", "nuebar"}, {"numu", "numubar"});
    default:
      return Bipartition({"nue", "numubar"}, {"numu", "nuebar"});
  }
}

}  // namespace nuent::qft
