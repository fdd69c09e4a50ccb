#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperdual/hypergraph.hpp"

namespace hyperdual {

/// Classical spin model H(s) = sum_m J_m prod_{i in e_m} s_i on a hypergraph.
/// Spins sit on vertices, one coupling per edge, Boltzmann weight
/// exp(-beta H). With this sign a negative J is ferromagnetic.
class SpinModel {
 public:
  /// Throws ValidationError when the coupling count differs from the edge
  /// count, a coupling is not finite, or beta is negative or not finite.
  SpinModel(Hypergraph graph, std::vector<double> couplings, double beta);

  [[nodiscard]] const Hypergraph& graph() const noexcept { return graph_; }
  [[nodiscard]] const std::vector<double>& couplings() const noexcept { return couplings_; }
  [[nodiscard]] double beta() const noexcept { return beta_; }

  [[nodiscard]] std::size_t num_spins() const noexcept { return graph_.num_vertices(); }
  [[nodiscard]] std::size_t num_terms() const noexcept { return graph_.num_edges(); }

  /// Same model with every coupling negated.
  [[nodiscard]] SpinModel flipped_couplings() const;
  [[nodiscard]] SpinModel with_beta(double beta) const;

 private:
  Hypergraph graph_;
  std::vector<double> couplings_;
  double beta_;
};

/// One +1/-1 value per spin.
class SpinConfig {
 public:
  /// Throws ValidationError on any value other than +1 or -1.
  explicit SpinConfig(std::vector<int> values);
  /// Bit i set means spin i is -1.
  static SpinConfig from_bits(std::size_t num_spins, std::uint64_t bits);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] int operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] const std::vector<int>& values() const noexcept { return values_; }

 private:
  std::vector<int> values_;
};

[[nodiscard]] double energy(const SpinModel& model, const SpinConfig& config);

/// Z = sum over all 2^K spin configurations of exp(-beta H). K <= 24.
[[nodiscard]] double partition_function(const SpinModel& model);
[[nodiscard]] double log_partition_function(const SpinModel& model);

/// Z computed over edge variables S_m = prod_{i in e_m} s_i instead of spins.
/// An assignment of the S_m is admissible when it satisfies every parity
/// constraint prod_{m in C} S_m = 1 (C ranging over a basis of edge sets
/// covering each vertex evenly). Each admissible assignment is reached by
/// exactly 2^{K-M} spin configurations, M = rank of the edge matrix, and that
/// multiplicity is included. N <= 20.
[[nodiscard]] double partition_function_edge_vars(const SpinModel& model);

}  // namespace hyperdual
