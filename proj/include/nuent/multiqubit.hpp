// multiqubit.hpp
// Dense N-qubit occupation-number machinery over labeled fermionic modes:
// basis indexing, partial trace, purity, linear entropy, bipartition
// averages, and diagonal number-observable statistics.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nuent {

inline constexpr double kAlgebraTol = 1e-12;  // algebraic identities
inline constexpr double kOracleTol = 1e-10;   // closed form vs. brute-force comparisons

template <typename Scalar = double>
using VectorX = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar = double>
using MatrixX = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

// A named mode bound to one basis slot. Slot 0 is the most significant bit
// of a basis index, so |1000> over four modes has index 8.
struct ModeLabel {
  std::string name;
  int position = 0;

  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

// Basis index of an occupation tuple ordered by mode position.
inline std::size_t basis_index(std::span<const int> occupations) {
  std::size_t index = 0;
  for (int bit : occupations) {
    if (bit != 0 && bit != 1)
      throw std::invalid_argument("basis_index: occupations must be 0/1 bits");
    index = (index << 1) | static_cast<std::size_t>(bit);
  }
  return index;
}

// Inverse of basis_index for a register of n_modes slots.
inline std::vector<int> occupations_of(std::size_t index, std::size_t n_modes) {
  if (n_modes == 0 || n_modes >= 8 * sizeof(std::size_t))
    throw std::invalid_argument("occupations_of: unsupported mode count");
  if (index >= (std::size_t{1} << n_modes))
    throw std::invalid_argument("occupations_of: index out of range");
  std::vector<int> occ(n_modes);
  for (std::size_t i = 0; i < n_modes; ++i)
    occ[i] = static_cast<int>((index >> (n_modes - 1 - i)) & 1u);
  return occ;
}

namespace detail {

// Scatters the bits of `sub` (MSB-first over `positions`) into a full index
// of an n_total-slot register.
inline std::size_t scatter_bits(std::size_t sub, std::span<const int> positions,
                                std::size_t n_total) {
  std::size_t full = 0;
  const std::size_t n = positions.size();
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t bit = (sub >> (n - 1 - j)) & 1u;
    full |= bit << (n_total - 1 - static_cast<std::size_t>(positions[j]));
  }
  return full;
}

inline void check_mode_list(const std::vector<ModeLabel>& modes) {
  if (modes.empty()) throw std::invalid_argument("mode list must be non-empty");
  std::set<std::string> names;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i].position != static_cast<int>(i))
      throw std::invalid_argument("mode positions must be contiguous from 0");
    if (!names.insert(modes[i].name).second)
      throw std::invalid_argument("mode names must be unique: " + modes[i].name);
  }
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

// Normalized pure state of N labeled modes; amplitude i belongs to the
// occupation tuple occupations_of(i, N). Zero-norm and non-unit vectors are
// rejected, never renormalized.
template <typename Scalar = double>
class PureState {
 public:
  PureState(std::vector<ModeLabel> modes, VectorX<Scalar> amplitudes)
      : modes_(std::move(modes)), amps_(std::move(amplitudes)) {
    std::sort(modes_.begin(), modes_.end(),
              [](const ModeLabel& a, const ModeLabel& b) { return a.position < b.position; });
    detail::check_mode_list(modes_);
    const auto dim = std::size_t{1} << modes_.size();
    if (static_cast<std::size_t>(amps_.size()) != dim)
      throw std::invalid_argument("amplitude vector length must be 2^N");
    if (std::abs(amps_.squaredNorm() - Scalar(1)) > Scalar(kAlgebraTol))
      throw std::invalid_argument("state must be normalized to 1 within 1e-12");
  }

  // Positions assigned in list order.
  static PureState from_names(const std::vector<std::string>& names, VectorX<Scalar> amplitudes) {
    std::vector<ModeLabel> modes;
    modes.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
      modes.push_back({names[i], static_cast<int>(i)});
    return PureState(std::move(modes), std::move(amplitudes));
  }

  static PureState basis_state(const std::vector<std::string>& names,
                               std::span<const int> occupations) {
    if (occupations.size() != names.size())
      throw std::invalid_argument("basis_state: occupation length mismatch");
    VectorX<Scalar> amps = VectorX<Scalar>::Zero(std::int64_t{1} << names.size());
    amps[static_cast<std::int64_t>(basis_index(occupations))] = std::complex<Scalar>(1, 0);
    return from_names(names, std::move(amps));
  }

  int num_modes() const { return static_cast<int>(modes_.size()); }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const std::vector<ModeLabel>& modes() const { return modes_; }
  const VectorX<Scalar>& amplitudes() const { return amps_; }

  bool has_mode(std::string_view name) const {
    return std::any_of(modes_.begin(), modes_.end(),
                       [&](const ModeLabel& m) { return m.name == name; });
  }

  int position_of(std::string_view name) const {
    for (const ModeLabel& m : modes_)
      if (m.name == name) return m.position;
    throw std::invalid_argument("unknown mode: " + std::string(name));
  }

  std::vector<std::string> mode_names() const {
    std::vector<std::string> out;
    out.reserve(modes_.size());
    for (const ModeLabel& m : modes_) out.push_back(m.name);
    return out;
  }

  // Index of an occupation tuple; length must equal the mode count.
  std::size_t index_of(std::span<const int> occupations) const {
    if (occupations.size() != modes_.size())
      throw std::invalid_argument("index_of: occupation length mismatch");
    return basis_index(occupations);
  }

 private:
  std::vector<ModeLabel> modes_;
  VectorX<Scalar> amps_;
};

// Hermitian, unit-trace, positive-semidefinite matrix on a subset of modes.
template <typename Scalar = double>
class DensityMatrix {
 public:
  DensityMatrix(std::vector<ModeLabel> modes, MatrixX<Scalar> entries)
      : modes_(std::move(modes)), entries_(std::move(entries)) {
    std::sort(modes_.begin(), modes_.end(),
              [](const ModeLabel& a, const ModeLabel& b) { return a.position < b.position; });
    detail::check_mode_list(modes_);
    const auto dim = std::int64_t{1} << modes_.size();
    if (entries_.rows() != dim || entries_.cols() != dim)
      throw std::invalid_argument("density matrix must be 2^n x 2^n");
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > Scalar(kAlgebraTol))
      throw std::invalid_argument("density matrix must be Hermitian within 1e-12");
    if (std::abs(entries_.trace() - std::complex<Scalar>(1, 0)) > Scalar(kAlgebraTol))
      throw std::invalid_argument("density matrix must have unit trace within 1e-12");
    Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < Scalar(-kAlgebraTol))
      throw std::invalid_argument("density matrix must be positive semidefinite within 1e-12");
  }

  int num_modes() const { return static_cast<int>(modes_.size()); }
  const std::vector<ModeLabel>& modes() const { return modes_; }
  const MatrixX<Scalar>& entries() const { return entries_; }

 private:
  std::vector<ModeLabel> modes_;
  MatrixX<Scalar> entries_;
};

// Unordered split of a mode set into two non-empty sides.
class Bipartition {
 public:
  Bipartition(std::set<std::string> side_a, std::set<std::string> side_b)
      : side_a_(std::move(side_a)), side_b_(std::move(side_b)) {
    if (side_a_.empty() || side_b_.empty())
      throw std::invalid_argument("bipartition sides must be non-empty");
    for (const std::string& name : side_a_)
      if (side_b_.count(name))
        throw std::invalid_argument("bipartition sides must be disjoint: " + name);
  }

  const std::set<std::string>& side_a() const { return side_a_; }
  const std::set<std::string>& side_b() const { return side_b_; }

  // (A;B) and (B;A) denote the same split.
  bool same_split_as(const Bipartition& other) const {
    return (side_a_ == other.side_a_ && side_b_ == other.side_b_) ||
           (side_a_ == other.side_b_ && side_b_ == other.side_a_);
  }

 private:
  std::set<std::string> side_a_;
  std::set<std::string> side_b_;
};

// Diagonal observable sum_a weight(a) * N_a over the occupation basis.
template <typename Scalar = double>
struct NumberObservable {
  std::map<std::string, Scalar, std::less<>> weights;
};

template <typename Scalar>
struct Moments {
  Scalar mean;
  Scalar variance;
};

// Reduced density matrix over `keep` after tracing out the complement.
// Kept modes retain their relative order and are re-based to positions 0..n-1.
template <typename Scalar>
DensityMatrix<Scalar> partial_trace(const PureState<Scalar>& state,
                                    const std::set<std::string>& keep) {
  const std::size_t n_total = static_cast<std::size_t>(state.num_modes());
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be non-empty");
  if (keep.size() >= n_total)
    throw std::invalid_argument("partial_trace: keep set must be a proper subset");

  std::vector<int> kept_positions;
  kept_positions.reserve(keep.size());
  for (const std::string& name : keep) kept_positions.push_back(state.position_of(name));
  std::sort(kept_positions.begin(), kept_positions.end());

  std::vector<int> traced_positions;
  for (int q = 0; q < static_cast<int>(n_total); ++q)
    if (!std::binary_search(kept_positions.begin(), kept_positions.end(), q))
      traced_positions.push_back(q);

  const std::size_t nk = kept_positions.size();
  const std::size_t nt = traced_positions.size();
  const std::size_t dim_k = std::size_t{1} << nk;
  const std::size_t dim_t = std::size_t{1} << nt;

  const VectorX<Scalar>& amps = state.amplitudes();
  MatrixX<Scalar> rho = MatrixX<Scalar>::Zero(dim_k, dim_k);
  for (std::size_t a = 0; a < dim_k; ++a) {
    const std::size_t full_a = detail::scatter_bits(a, kept_positions, n_total);
    for (std::size_t b = 0; b < dim_k; ++b) {
      const std::size_t full_b = detail::scatter_bits(b, kept_positions, n_total);
      std::complex<Scalar> sum(0, 0);
      for (std::size_t t = 0; t < dim_t; ++t) {
        const std::size_t env = detail::scatter_bits(t, traced_positions, n_total);
        sum += amps[static_cast<std::int64_t>(full_a | env)] *
               std::conj(amps[static_cast<std::int64_t>(full_b | env)]);
      }
      rho(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)) = sum;
    }
  }

  std::vector<ModeLabel> kept_modes;
  kept_modes.reserve(nk);
  const std::vector<ModeLabel>& parent = state.modes();
  for (std::size_t j = 0; j < nk; ++j)
    kept_modes.push_back({parent[static_cast<std::size_t>(kept_positions[j])].name,
                          static_cast<int>(j)});
  return DensityMatrix<Scalar>(std::move(kept_modes), std::move(rho));
}

// Tr[rho^2].
template <typename Scalar>
Scalar purity(const DensityMatrix<Scalar>& dm) {
  return (dm.entries() * dm.entries()).trace().real();
}

namespace detail {

// Side of the bipartition that gets traced-to: the smaller side, or on ties
// the side holding the position-0 mode, so that (A;B) and (B;A) run the
// identical computation.
template <typename Scalar>
const std::set<std::string>& canonical_side(const PureState<Scalar>& state,
                                            const Bipartition& split) {
  if (split.side_a().size() != split.side_b().size())
    return split.side_a().size() < split.side_b().size() ? split.side_a() : split.side_b();
  const std::string& first = state.modes().front().name;
  return split.side_a().count(first) ? split.side_a() : split.side_b();
}

}  // namespace detail

// Linear entropy (d/(d-1)) (1 - Tr[rho_A^2]) with d = min(2^n, 2^(N-n)).
template <typename Scalar>
Scalar linear_entropy(const PureState<Scalar>& state, const Bipartition& split) {
  const std::size_t n_total = static_cast<std::size_t>(state.num_modes());
  if (split.side_a().size() + split.side_b().size() != n_total)
    throw std::invalid_argument("bipartition must cover exactly the state's modes");
  for (const std::string& name : split.side_a())
    if (!state.has_mode(name)) throw std::invalid_argument("unknown mode in bipartition: " + name);
  for (const std::string& name : split.side_b())
    if (!state.has_mode(name)) throw std::invalid_argument("unknown mode in bipartition: " + name);

  const std::set<std::string>& keep = detail::canonical_side(state, split);
  const std::size_t n_small = std::min(split.side_a().size(), split.side_b().size());
  const Scalar d = static_cast<Scalar>(std::size_t{1} << n_small);
  return (d / (d - Scalar(1))) * (Scalar(1) - purity(partial_trace(state, keep)));
}

// Binomially weighted average of linear_entropy over all size-n subsets as
// side A. At n = N/2 every distinct split appears twice in the sum; the
// average is unchanged.
template <typename Scalar>
Scalar average_linear_entropy(const PureState<Scalar>& state, int n) {
  const int n_total = state.num_modes();
  if (n < 1 || n >= n_total)
    throw std::invalid_argument("average_linear_entropy: subset size out of range");

  const std::vector<ModeLabel>& modes = state.modes();
  Scalar sum(0);
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n_total); ++mask) {
    if (std::popcount(mask) != n) continue;
    std::set<std::string> side_a, side_b;
    for (int q = 0; q < n_total; ++q) {
      if (mask & (std::size_t{1} << q))
        side_a.insert(modes[static_cast<std::size_t>(q)].name);
      else
        side_b.insert(modes[static_cast<std::size_t>(q)].name);
    }
    sum += linear_entropy(state, Bipartition(std::move(side_a), std::move(side_b)));
    ++count;
  }
  return sum / static_cast<Scalar>(count);
}

// Mean and variance of a diagonal number observable, computed exactly from
// the occupation eigenvalues.
template <typename Scalar>
Moments<Scalar> observable_moments(const PureState<Scalar>& state,
                                   const NumberObservable<Scalar>& obs) {
  const std::size_t n_total = static_cast<std::size_t>(state.num_modes());
  std::vector<Scalar> weight_at(n_total, Scalar(0));
  for (const auto& [name, w] : obs.weights)
    weight_at[static_cast<std::size_t>(state.position_of(name))] = w;

  const VectorX<Scalar>& amps = state.amplitudes();
  Scalar mean(0), second(0);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    Scalar eigenvalue(0);
    for (std::size_t q = 0; q < n_total; ++q)
      if (i & (std::size_t{1} << (n_total - 1 - q))) eigenvalue += weight_at[q];
    const Scalar prob = std::norm(amps[static_cast<std::int64_t>(i)]);
    mean += prob * eigenvalue;
    second += prob * eigenvalue * eigenvalue;
  }
  return {mean, second - mean * mean};
}

// Probability that mode `name` is occupied.
template <typename Scalar>
Scalar occupation_probability(const PureState<Scalar>& state, std::string_view name) {
  const std::size_t n_total = static_cast<std::size_t>(state.num_modes());
  const std::size_t bit = std::size_t{1}
                          << (n_total - 1 - static_cast<std::size_t>(state.position_of(name)));
  const VectorX<Scalar>& amps = state.amplitudes();
  Scalar q(0);
  for (std::size_t i = 0; i < state.dim(); ++i)
    if (i & bit) q += std::norm(amps[static_cast<std::int64_t>(i)]);
  return q;
}

// The same physical state with its tensor factors re-ordered to `order`.
template <typename Scalar>
PureState<Scalar> with_mode_order(const PureState<Scalar>& state,
                                  const std::vector<std::string>& order) {
  const std::size_t n_total = static_cast<std::size_t>(state.num_modes());
  if (order.size() != n_total)
    throw std::invalid_argument("with_mode_order: order must list every mode once");
  std::vector<int> new_position_of_old(n_total, -1);
  for (std::size_t j = 0; j < n_total; ++j) {
    const int old_pos = state.position_of(order[j]);
    if (new_position_of_old[static_cast<std::size_t>(old_pos)] != -1)
      throw std::invalid_argument("with_mode_order: duplicate mode " + order[j]);
    new_position_of_old[static_cast<std::size_t>(old_pos)] = static_cast<int>(j);
  }

  const VectorX<Scalar>& amps = state.amplitudes();
  VectorX<Scalar> out = VectorX<Scalar>::Zero(amps.size());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    std::size_t j = 0;
    for (std::size_t q = 0; q < n_total; ++q)
      if (i & (std::size_t{1} << (n_total - 1 - q)))
        j |= std::size_t{1}
             << (n_total - 1 - static_cast<std::size_t>(new_position_of_old[q]));
    out[static_cast<std::int64_t>(j)] = amps[static_cast<std::int64_t>(i)];
  }

  std::vector<ModeLabel> modes;
  modes.reserve(n_total);
  for (std::size_t j = 0; j < n_total; ++j) modes.push_back({order[j], static_cast<int>(j)});
  return PureState<Scalar>(std::move(modes), std::move(out));
}

// Density-matrix analogue of with_mode_order.
template <typename Scalar>
DensityMatrix<Scalar> with_mode_order(const DensityMatrix<Scalar>& dm,
                                      const std::vector<std::string>& order) {
  const std::size_t n_total = static_cast<std::size_t>(dm.num_modes());
  if (order.size() != n_total)
    throw std::invalid_argument("with_mode_order: order must list every mode once");
  std::vector<int> old_position_of(n_total, -1);
  for (std::size_t j = 0; j < n_total; ++j) {
    int found = -1;
    for (const ModeLabel& m : dm.modes())
      if (m.name == order[j]) found = m.position;
    if (found < 0) throw std::invalid_argument("with_mode_order: unknown mode " + order[j]);
    old_position_of[j] = found;
  }

  const std::size_t dim = std::size_t{1} << n_total;
  auto permute = [&](std::size_t i) {
    std::size_t j = 0;
    for (std::size_t q = 0; q < n_total; ++q) {
      const std::size_t bit =
          (i >> (n_total - 1 - static_cast<std::size_t>(old_position_of[q]))) & 1u;
      j |= bit << (n_total - 1 - q);
    }
    return j;
  };

  MatrixX<Scalar> out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      out(static_cast<std::int64_t>(permute(r)), static_cast<std::int64_t>(permute(c))) =
          dm.entries()(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c));

  std::vector<ModeLabel> modes;
  modes.reserve(n_total);
  for (std::size_t j = 0; j < n_total; ++j) modes.push_back({order[j], static_cast<int>(j)});
  return DensityMatrix<Scalar>(std::move(modes), std::move(out));
}

}  // namespace nuent
