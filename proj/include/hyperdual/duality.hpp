#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdual/css.hpp"
#include "hyperdual/spin_model.hpp"

namespace hyperdual {

/// <alpha|CSS> for the CSS state on dual(model.graph()), where
/// |alpha> = prod_m exp(-beta J_m Z_m) |+>^N and qubit m is edge m of the
/// model. Evaluated as 2^{-(N+M)/2} sum over the X group of
/// prod_m exp(-beta J_m sigma_m), sigma_m = -1 on the support, +1 off it.
/// Throws IsolatedVertexError; CapacityError when M > 26.
[[nodiscard]] double overlap_group_sum(const SpinModel& model);
[[nodiscard]] double log_overlap_group_sum(const SpinModel& model);

/// Brute-force Z against 2^{K-M} 2^{(N+M)/2} <alpha|CSS>.
struct DualityReport {
  double z_bruteforce = 0.0;
  double overlap = 0.0;
  /// 2^{K-M} 2^{(N+M)/2}.
  double constant = 0.0;
  /// 2^{(N+M)/2}, the prefactor without the spin-to-edge multiplicity.
  double constant_without_multiplicity = 0.0;
  double relative_error = 0.0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t m = 0;

  [[nodiscard]] bool passed(double tolerance = 1e-9) const { return relative_error <= tolerance; }
};

[[nodiscard]] DualityReport verify_duality(const SpinModel& model);

/// sum_l count(l) p^l (1-p)^{n-l}.
[[nodiscard]] double stability_from_distribution(const WeightDistribution& dist, double p);

/// Probability that i.i.d. bit flips with rate p land on an X stabilizer.
[[nodiscard]] double stability_bitflip_direct(const CssState& c, double p);
/// Probability that i.i.d. phase flips with rate p land on a Z stabilizer.
[[nodiscard]] double stability_phaseflip_direct(const CssState& c, double p);

// The noise maps below pair p with the ferromagnetic weight exp(+beta J S)
// for a coupling strength J > 0, i.e. with the partition function of the
// model whose couplings are all -J in the exp(-beta H) convention above.

/// [p(1-p)]^{N/2} Z / 2^{K-M} with p/(1-p) = exp(-2 beta J). Requires all
/// couplings equal and positive (NonUniformCouplingError) and p in (0, 1/2)
/// (DomainError). The model's own beta is ignored.
[[nodiscard]] double stability_bitflip_via_z(const SpinModel& model, double p);

/// (1-2p)^{N/2} Z / 2^K with 1-2p = exp(-2 beta J).
[[nodiscard]] double stability_phaseflip_via_z(const SpinModel& model, double p);

[[nodiscard]] double p_from_beta_bitflip(double beta, double j);
[[nodiscard]] double beta_from_p_bitflip(double p, double j);
[[nodiscard]] double p_from_beta_phaseflip(double beta, double j);
[[nodiscard]] double beta_from_p_phaseflip(double p, double j);

/// Phase-flip rate sharing its beta J with bit-flip rate p_b:
/// 1/2 - (p_b/2)/(1-p_b). Fixed point at 1 - sqrt(2)/2.
[[nodiscard]] double critical_pf_from_pb(double p_b);

enum class NoiseKind { bit_flip, phase_flip };

[[nodiscard]] std::string_view to_string(NoiseKind kind);
[[nodiscard]] std::optional<NoiseKind> parse_noise_kind(std::string_view text);

struct StabilityRow {
  double p = 0.0;
  double value = 0.0;
};

struct StabilityCurve {
  NoiseKind noise = NoiseKind::bit_flip;
  std::string model_id;
  std::size_t n_qubits = 0;
  std::size_t m_rank = 0;
  std::vector<StabilityRow> rows;
};

/// Evenly spaced grid from pmin to pmax inclusive; a single point at pmin
/// when steps == 1, empty when steps == 0.
[[nodiscard]] std::vector<double> linear_grid(double pmin, double pmax, std::size_t steps);

/// Direct stability values of c on each grid point (each in [0, 1/2]),
/// rows in grid order. The weight distribution is enumerated once.
[[nodiscard]] StabilityCurve sweep_stability(const CssState& c, std::span<const double> grid,
                                             NoiseKind noise, std::string model_id = {});

/// Sweep over the CSS state on dual(model.graph()); the model must have a
/// uniform positive coupling.
[[nodiscard]] StabilityCurve sweep_stability(const SpinModel& model, std::span<const double> grid,
                                             NoiseKind noise, std::string model_id = {});

}  // namespace hyperdual
