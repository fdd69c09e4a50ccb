#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperdual/gf2.hpp"
#include "hyperdual/hypergraph.hpp"

namespace hyperdual {

/// CSS stabilizer state on the vertices of a hypergraph. Qubit i is vertex i.
/// X-type generators come from a maximal independent set of edges, Z-type
/// generators from the orthogonal hypergraph. Stabilizers are identified
/// with their GF(2) support.
class CssState {
 public:
  /// Checks only that every generator has one coordinate per qubit. Use
  /// css_from_hypergraph for a state that satisfies the stabilizer
  /// invariants; see also satisfies_invariants().
  CssState(Hypergraph graph, std::vector<BitVector> x_generators,
           std::vector<BitVector> z_generators);

  [[nodiscard]] const Hypergraph& graph() const noexcept { return graph_; }
  [[nodiscard]] std::size_t num_qubits() const noexcept { return graph_.num_vertices(); }
  [[nodiscard]] std::size_t x_rank() const noexcept { return x_generators_.size(); }
  [[nodiscard]] const std::vector<BitVector>& x_generators() const noexcept { return x_generators_; }
  [[nodiscard]] const std::vector<BitVector>& z_generators() const noexcept { return z_generators_; }

  /// Generators independent, X count = rank of the edge matrix, Z count =
  /// qubits - X count, every X generator commutes with every Z generator.
  [[nodiscard]] bool satisfies_invariants() const;

 private:
  Hypergraph graph_;
  std::vector<BitVector> x_generators_;
  std::vector<BitVector> z_generators_;
};

/// X generators from independent_row_indices of the edge matrix.
[[nodiscard]] CssState css_from_hypergraph(const Hypergraph& g);

/// X generators from the given edges, which must form a maximal independent
/// subset of the edges of g (ValidationError otherwise).
[[nodiscard]] CssState css_from_hypergraph(const Hypergraph& g,
                                           std::span<const std::size_t> x_edges);

/// count(l) = number of group elements of Hamming weight l, l = 0..n.
class WeightDistribution {
 public:
  explicit WeightDistribution(std::vector<std::uint64_t> counts);

  [[nodiscard]] std::size_t num_qubits() const noexcept { return counts_.size() - 1; }
  [[nodiscard]] std::uint64_t count(std::size_t weight) const;
  [[nodiscard]] std::uint64_t total() const;
  [[nodiscard]] const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

/// Tallies the Hamming weights of all 2^r combinations of the generators
/// (Gray-code order). r <= 26.
[[nodiscard]] WeightDistribution span_weight_distribution(std::span<const BitVector> generators,
                                                          std::size_t num_qubits);
[[nodiscard]] WeightDistribution x_weight_distribution(const CssState& c);
[[nodiscard]] WeightDistribution z_weight_distribution(const CssState& c);

/// Amplitudes over the 2^n computational basis states, basis index bit i =
/// qubit i. Uniform 2^{-M/2} on the X group applied to |0...0>. n <= 20.
[[nodiscard]] std::vector<double> statevector(const CssState& c);

/// The same state built from the Z generators acting on |+...+>, via a
/// Walsh-Hadamard transform of the Z group indicator. n <= 20.
[[nodiscard]] std::vector<double> statevector_from_z_generators(const CssState& c);

/// Applies each X generator (index permutation) and each Z generator (sign
/// flips) to the statevector and checks it is reproduced exactly.
[[nodiscard]] bool verify_stabilized(const CssState& c);

}  // namespace hyperdual
