#include "hyperdual/spin_model.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "hyperdual/detail/log_sum_exp.hpp"
#include "hyperdual/detail/parallel.hpp"
#include "hyperdual/errors.hpp"

namespace hyperdual {

namespace {

constexpr std::size_t kMaxSpins = 24;
constexpr std::size_t kMaxEdgeVariables = 20;

std::vector<std::uint64_t> edge_masks(const Hypergraph& h) {
  std::vector<std::uint64_t> masks;
  masks.reserve(h.num_edges());
  const BitMatrix incidence = edge_matrix(h);
  for (const auto& row : incidence.rows()) masks.push_back(row.word());
  return masks;
}

// exponent of exp(-beta * sum_m J_m * (-1)^{|bits & mask_m|})
double boltzmann_exponent(const std::vector<std::uint64_t>& masks,
                          const std::vector<double>& couplings, double beta,
                          std::uint64_t bits) {
  double e = 0.0;
  for (std::size_t m = 0; m < masks.size(); ++m) {
    e += (std::popcount(bits & masks[m]) & 1) ? -couplings[m] : couplings[m];
  }
  return -beta * e;
}

}  // namespace

SpinModel::SpinModel(Hypergraph graph, std::vector<double> couplings, double beta)
    : graph_(std::move(graph)), couplings_(std::move(couplings)), beta_(beta) {
  if (couplings_.size() != graph_.num_edges()) {
    throw ValidationError("expected " + std::to_string(graph_.num_edges()) +
                          " couplings, got " + std::to_string(couplings_.size()));
  }
  for (std::size_t m = 0; m < couplings_.size(); ++m) {
    if (!std::isfinite(couplings_[m])) {
      throw ValidationError("edge " + std::to_string(m) + ": coupling is not finite");
    }
  }
  if (!std::isfinite(beta_) || beta_ < 0.0) {
    throw ValidationError("beta must be finite and non-negative");
  }
}

SpinModel SpinModel::flipped_couplings() const {
  auto flipped = couplings_;
  for (auto& j : flipped) j = -j;
  return SpinModel(graph_, std::move(flipped), beta_);
}

SpinModel SpinModel::with_beta(double beta) const { return SpinModel(graph_, couplings_, beta); }

SpinConfig::SpinConfig(std::vector<int> values) : values_(std::move(values)) {
  for (auto s : values_) {
    if (s != 1 && s != -1) throw ValidationError("spin values must be +1 or -1");
  }
}

SpinConfig SpinConfig::from_bits(std::size_t num_spins, std::uint64_t bits) {
  std::vector<int> values(num_spins);
  for (std::size_t i = 0; i < num_spins; ++i) values[i] = ((bits >> i) & 1) ? -1 : 1;
  return SpinConfig(std::move(values));
}

double energy(const SpinModel& model, const SpinConfig& config) {
  if (config.size() != model.num_spins()) {
    throw ValidationError("configuration has " + std::to_string(config.size()) +
                          " spins, model has " + std::to_string(model.num_spins()));
  }
  double total = 0.0;
  for (std::size_t m = 0; m < model.num_terms(); ++m) {
    int product = 1;
    for (auto v : model.graph().edge(m)) product *= config[v];
    total += model.couplings()[m] * product;
  }
  return total;
}

namespace {

detail::LogSumExp boltzmann_sum(const SpinModel& model) {
  const std::size_t k = model.num_spins();
  if (k > kMaxSpins) {
    throw CapacityError("brute-force partition function needs at most " +
                        std::to_string(kMaxSpins) + " spins, got " + std::to_string(k));
  }
  const auto masks = edge_masks(model.graph());
  const auto& couplings = model.couplings();
  const double beta = model.beta();

  auto acc = detail::chunked_reduce<detail::LogSumExp>(
      std::uint64_t{1} << k,
      [&](std::uint64_t begin, std::uint64_t end) {
        detail::LogSumExp part;
        for (std::uint64_t s = begin; s < end; ++s) {
          part.add(boltzmann_exponent(masks, couplings, beta, s));
        }
        return part;
      },
      [](detail::LogSumExp& into, const detail::LogSumExp& from) { into.merge(from); });
  return acc;
}

}  // namespace

double log_partition_function(const SpinModel& model) { return boltzmann_sum(model).log(); }

double partition_function(const SpinModel& model) { return boltzmann_sum(model).value(); }

double partition_function_edge_vars(const SpinModel& model) {
  const std::size_t n = model.num_terms();
  if (n > kMaxEdgeVariables) {
    throw CapacityError("edge-variable partition function needs at most " +
                        std::to_string(kMaxEdgeVariables) + " edges, got " + std::to_string(n));
  }
  const BitMatrix incidence = edge_matrix(model.graph());
  const std::size_t k = model.num_spins();
  const std::size_t m_rank = rank(incidence);

  // Parity constraints on the edge variables: edge sets covering every
  // vertex an even number of times.
  std::vector<std::uint64_t> constraints;
  for (const auto& c : null_space_basis(incidence.transpose())) constraints.push_back(c.word());

  std::vector<std::uint64_t> unit(n);
  for (std::size_t m = 0; m < n; ++m) unit[m] = std::uint64_t{1} << m;
  const auto& couplings = model.couplings();
  const double beta = model.beta();

  detail::LogSumExp acc;
  for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << n); ++flips) {
    bool admissible = true;
    for (auto c : constraints) {
      if (std::popcount(flips & c) & 1) {
        admissible = false;
        break;
      }
    }
    if (admissible) acc.add(boltzmann_exponent(unit, couplings, beta, flips));
  }
  return acc.value(static_cast<int>(k - m_rank));
}

}  // namespace hyperdual
