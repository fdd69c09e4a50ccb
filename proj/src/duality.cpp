#include "hyperdual/duality.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "hyperdual/detail/gray_code.hpp"
#include "hyperdual/detail/log_sum_exp.hpp"
#include "hyperdual/detail/parallel.hpp"
#include "hyperdual/errors.hpp"

namespace hyperdual {

namespace {

constexpr std::size_t kMaxGroupRank = 26;
constexpr double kLn2 = std::numbers::ln2;

// Sum of per-bit weights over the set bits of a 64-bit word, via eight
// byte-indexed tables.
class ByteSumTable {
 public:
  explicit ByteSumTable(const std::vector<double>& weights) {
    for (std::size_t b = 0; b < 8; ++b) {
      for (std::size_t v = 0; v < 256; ++v) {
        double s = 0.0;
        for (std::size_t bit = 0; bit < 8; ++bit) {
          const std::size_t idx = 8 * b + bit;
          if (((v >> bit) & 1) && idx < weights.size()) s += weights[idx];
        }
        tables_[b][v] = s;
      }
    }
  }

  double operator()(std::uint64_t w) const {
    double s = 0.0;
    for (std::size_t b = 0; b < 8 && w != 0; ++b, w >>= 8) s += tables_[b][w & 0xff];
    return s;
  }

 private:
  std::array<std::array<double, 256>, 8> tables_{};
};

void check_probability(double p, double lo, double hi, bool open_lo, bool open_hi) {
  const bool below = open_lo ? !(p > lo) : !(p >= lo);
  const bool above = open_hi ? !(p < hi) : !(p <= hi);
  if (below || above) {
    throw DomainError("probability " + std::to_string(p) + " outside " + (open_lo ? "(" : "[") +
                      std::to_string(lo) + ", " + std::to_string(hi) + (open_hi ? ")" : "]"));
  }
}

void check_coupling(double j) {
  if (!(j > 0.0) || !std::isfinite(j)) throw DomainError("coupling J must be positive and finite");
}

double uniform_positive_coupling(const SpinModel& model) {
  const auto& js = model.couplings();
  if (js.empty()) throw NonUniformCouplingError("model has no couplings");
  for (std::size_t m = 1; m < js.size(); ++m) {
    if (js[m] != js[0]) {
      throw NonUniformCouplingError("edge " + std::to_string(m) + " has coupling " +
                                    std::to_string(js[m]) + ", edge 0 has " + std::to_string(js[0]));
    }
  }
  if (!(js[0] > 0.0)) throw NonUniformCouplingError("uniform coupling must be positive");
  return js[0];
}

}  // namespace

double log_overlap_group_sum(const SpinModel& model) {
  const CssState css = css_from_hypergraph(dual(model.graph()));
  const std::size_t n = css.num_qubits();
  const std::size_t m = css.x_rank();
  if (m > kMaxGroupRank) {
    throw CapacityError("group sum needs rank at most " + std::to_string(kMaxGroupRank) +
                        ", got " + std::to_string(m));
  }
  std::vector<std::uint64_t> words;
  for (const auto& g : css.x_generators()) words.push_back(g.word());

  const auto& couplings = model.couplings();
  const double beta = model.beta();
  double j_total = 0.0;
  for (double j : couplings) j_total += j;
  const ByteSumTable support_sum(couplings);

  // -beta sum_m J_m sigma_m = -beta (J_total - 2 sum_{m in support} J_m)
  auto acc = detail::chunked_reduce<detail::LogSumExp>(
      std::uint64_t{1} << m,
      [&](std::uint64_t begin, std::uint64_t end) {
        detail::LogSumExp part;
        detail::for_each_combination(words, begin, end, [&](std::uint64_t e) {
          part.add(-beta * (j_total - 2.0 * support_sum(e)));
        });
        return part;
      },
      [](detail::LogSumExp& into, const detail::LogSumExp& from) { into.merge(from); });

  return acc.log() - 0.5 * static_cast<double>(n + m) * kLn2;
}

double overlap_group_sum(const SpinModel& model) { return std::exp(log_overlap_group_sum(model)); }

DualityReport verify_duality(const SpinModel& model) {
  DualityReport r;
  r.k = model.num_spins();
  r.n = model.num_terms();
  r.m = rank(edge_matrix(model.graph()));

  const double log_z = log_partition_function(model);
  const double log_overlap = log_overlap_group_sum(model);
  const double log_plain = 0.5 * static_cast<double>(r.n + r.m) * kLn2;
  const double log_constant = static_cast<double>(r.k - r.m) * kLn2 + log_plain;

  r.z_bruteforce = std::exp(log_z);
  r.overlap = std::exp(log_overlap);
  r.constant = std::exp(log_constant);
  r.constant_without_multiplicity = std::exp(log_plain);
  r.relative_error = std::fabs(std::expm1(log_constant + log_overlap - log_z));
  return r;
}

double stability_from_distribution(const WeightDistribution& dist, double p) {
  check_probability(p, 0.0, 1.0, false, false);
  const std::size_t n = dist.num_qubits();
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t l = 0; l <= n; ++l) {
    const auto count = dist.count(l);
    if (count == 0) continue;
    const double term = static_cast<double>(count) * std::pow(p, static_cast<double>(l)) *
                        std::pow(1.0 - p, static_cast<double>(n - l));
    const double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double stability_bitflip_direct(const CssState& c, double p) {
  check_probability(p, 0.0, 1.0, false, false);
  return stability_from_distribution(x_weight_distribution(c), p);
}

double stability_phaseflip_direct(const CssState& c, double p) {
  check_probability(p, 0.0, 1.0, false, false);
  return stability_from_distribution(z_weight_distribution(c), p);
}

double stability_bitflip_via_z(const SpinModel& model, double p) {
  const double j = uniform_positive_coupling(model);
  check_probability(p, 0.0, 0.5, true, true);
  const double beta = beta_from_p_bitflip(p, j);
  const SpinModel ferro = model.flipped_couplings().with_beta(beta);

  const auto k = static_cast<double>(model.num_spins());
  const auto n = static_cast<double>(model.num_terms());
  const auto m = static_cast<double>(rank(edge_matrix(model.graph())));
  const double log_w =
      0.5 * n * std::log(p * (1.0 - p)) + log_partition_function(ferro) - (k - m) * kLn2;
  return std::exp(log_w);
}

double stability_phaseflip_via_z(const SpinModel& model, double p) {
  const double j = uniform_positive_coupling(model);
  check_probability(p, 0.0, 0.5, true, true);
  const double beta = beta_from_p_phaseflip(p, j);
  const SpinModel ferro = model.flipped_couplings().with_beta(beta);

  const auto k = static_cast<double>(model.num_spins());
  const auto n = static_cast<double>(model.num_terms());
  const double log_v = 0.5 * n * std::log1p(-2.0 * p) + log_partition_function(ferro) - k * kLn2;
  return std::exp(log_v);
}

double p_from_beta_bitflip(double beta, double j) {
  check_coupling(j);
  if (!(beta >= 0.0)) throw DomainError("beta must be non-negative");
  // p/(1-p) = exp(-2 beta J)
  return 1.0 / (1.0 + std::exp(2.0 * beta * j));
}

double beta_from_p_bitflip(double p, double j) {
  check_coupling(j);
  check_probability(p, 0.0, 0.5, true, false);
  return (std::log1p(-p) - std::log(p)) / (2.0 * j);
}

double p_from_beta_phaseflip(double beta, double j) {
  check_coupling(j);
  if (!(beta >= 0.0)) throw DomainError("beta must be non-negative");
  // 1 - 2p = exp(-2 beta J)
  return -0.5 * std::expm1(-2.0 * beta * j);
}

double beta_from_p_phaseflip(double p, double j) {
  check_coupling(j);
  check_probability(p, 0.0, 0.5, false, true);
  return -std::log1p(-2.0 * p) / (2.0 * j);
}

double critical_pf_from_pb(double p_b) {
  check_probability(p_b, 0.0, 0.5, false, false);
  return 0.5 - 0.5 * p_b / (1.0 - p_b);
}

std::string_view to_string(NoiseKind kind) {
  return kind == NoiseKind::bit_flip ? "bitflip" : "phaseflip";
}

std::optional<NoiseKind> parse_noise_kind(std::string_view text) {
  if (text == "bitflip") return NoiseKind::bit_flip;
  if (text == "phaseflip") return NoiseKind::phase_flip;
  return std::nullopt;
}

std::vector<double> linear_grid(double pmin, double pmax, std::size_t steps) {
  std::vector<double> grid;
  grid.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    if (steps == 1) {
      grid.push_back(pmin);
    } else if (i + 1 == steps) {
      grid.push_back(pmax);
    } else {
      grid.push_back(pmin + (pmax - pmin) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
  }
  return grid;
}

StabilityCurve sweep_stability(const CssState& c, std::span<const double> grid, NoiseKind noise,
                               std::string model_id) {
  for (double p : grid) check_probability(p, 0.0, 0.5, false, false);

  StabilityCurve curve;
  curve.noise = noise;
  curve.model_id = std::move(model_id);
  curve.n_qubits = c.num_qubits();
  curve.m_rank = c.x_rank();
  if (grid.empty()) return curve;

  const WeightDistribution dist =
      noise == NoiseKind::bit_flip ? x_weight_distribution(c) : z_weight_distribution(c);
  curve.rows.reserve(grid.size());
  for (double p : grid) curve.rows.push_back({p, stability_from_distribution(dist, p)});
  return curve;
}

StabilityCurve sweep_stability(const SpinModel& model, std::span<const double> grid,
                               NoiseKind noise, std::string model_id) {
  uniform_positive_coupling(model);
  return sweep_stability(css_from_hypergraph(dual(model.graph())), grid, noise,
                         std::move(model_id));
}

}  // namespace hyperdual
