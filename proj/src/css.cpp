#include "hyperdual/css.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "hyperdual/detail/gray_code.hpp"
#include "hyperdual/detail/parallel.hpp"
#include "hyperdual/errors.hpp"

namespace hyperdual {

namespace {

constexpr std::size_t kMaxGroupRank = 26;
constexpr std::size_t kMaxStatevectorQubits = 20;

void check_statevector_size(std::size_t n) {
  if (n > kMaxStatevectorQubits) {
    throw CapacityError("statevector needs at most " + std::to_string(kMaxStatevectorQubits) +
                        " qubits, got " + std::to_string(n));
  }
}

bool independent(const std::vector<BitVector>& vs, std::size_t cols) {
  return rank(BitMatrix(cols, vs)) == vs.size();
}

}  // namespace

CssState::CssState(Hypergraph graph, std::vector<BitVector> x_generators,
                   std::vector<BitVector> z_generators)
    : graph_(std::move(graph)),
      x_generators_(std::move(x_generators)),
      z_generators_(std::move(z_generators)) {
  auto check = [n = graph_.num_vertices()](const std::vector<BitVector>& gens, const char* kind) {
    for (const auto& g : gens) {
      if (g.size() != n) {
        throw ValidationError(std::string(kind) + " generator has " + std::to_string(g.size()) +
                              " coordinates, expected " + std::to_string(n));
      }
    }
  };
  check(x_generators_, "X");
  check(z_generators_, "Z");
}

bool CssState::satisfies_invariants() const {
  const std::size_t n = num_qubits();
  if (x_generators_.size() != rank(edge_matrix(graph_))) return false;
  if (x_generators_.size() + z_generators_.size() != n) return false;
  if (!independent(x_generators_, n) || !independent(z_generators_, n)) return false;
  for (const auto& x : x_generators_) {
    for (const auto& z : z_generators_) {
      if (dot(x, z)) return false;
    }
  }
  return true;
}

CssState css_from_hypergraph(const Hypergraph& g) {
  const auto indices = independent_row_indices(edge_matrix(g));
  return css_from_hypergraph(g, indices);
}

CssState css_from_hypergraph(const Hypergraph& g, std::span<const std::size_t> x_edges) {
  const BitMatrix incidence = edge_matrix(g);
  std::vector<BitVector> x;
  x.reserve(x_edges.size());
  for (auto m : x_edges) {
    if (m >= g.num_edges()) throw ValidationError("edge index " + std::to_string(m) + " out of range");
    x.push_back(incidence.row(m));
  }
  if (!independent(x, g.num_vertices()) || x.size() != rank(incidence)) {
    throw ValidationError("selected edges are not a maximal independent subset");
  }
  return CssState(g, std::move(x), null_space_basis(incidence));
}

WeightDistribution::WeightDistribution(std::vector<std::uint64_t> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty()) throw ValidationError("weight distribution needs at least weight 0");
}

std::uint64_t WeightDistribution::count(std::size_t weight) const {
  return weight < counts_.size() ? counts_[weight] : 0;
}

std::uint64_t WeightDistribution::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

WeightDistribution span_weight_distribution(std::span<const BitVector> generators,
                                            std::size_t num_qubits) {
  if (generators.size() > kMaxGroupRank) {
    throw CapacityError("group enumeration needs at most " + std::to_string(kMaxGroupRank) +
                        " generators, got " + std::to_string(generators.size()));
  }
  std::vector<std::uint64_t> words;
  words.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != num_qubits) throw ValidationError("generator length does not match qubit count");
    words.push_back(g.word());
  }

  using Tally = std::vector<std::uint64_t>;
  auto counts = detail::chunked_reduce<Tally>(
      std::uint64_t{1} << words.size(),
      [&](std::uint64_t begin, std::uint64_t end) {
        Tally part(num_qubits + 1, 0);
        detail::for_each_combination(words, begin, end,
                                     [&](std::uint64_t e) { ++part[std::popcount(e)]; });
        return part;
      },
      [](Tally& into, const Tally& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });
  return WeightDistribution(std::move(counts));
}

WeightDistribution x_weight_distribution(const CssState& c) {
  return span_weight_distribution(c.x_generators(), c.num_qubits());
}

WeightDistribution z_weight_distribution(const CssState& c) {
  return span_weight_distribution(c.z_generators(), c.num_qubits());
}

std::vector<double> statevector(const CssState& c) {
  const std::size_t n = c.num_qubits();
  check_statevector_size(n);
  std::vector<std::uint64_t> words;
  for (const auto& g : c.x_generators()) words.push_back(g.word());

  std::vector<double> amplitudes(std::size_t{1} << n, 0.0);
  const double amplitude = std::pow(2.0, -0.5 * static_cast<double>(words.size()));
  detail::for_each_combination(words, 0, std::uint64_t{1} << words.size(),
                               [&](std::uint64_t e) { amplitudes[e] += amplitude; });
  return amplitudes;
}

std::vector<double> statevector_from_z_generators(const CssState& c) {
  const std::size_t n = c.num_qubits();
  check_statevector_size(n);
  std::vector<std::uint64_t> words;
  for (const auto& g : c.z_generators()) words.push_back(g.word());

  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> f(dim, 0.0);
  detail::for_each_combination(words, 0, std::uint64_t{1} << words.size(),
                               [&](std::uint64_t e) { f[e] += 1.0; });
  // f(x) <- sum_g f(g) (-1)^{g.x}
  for (std::size_t h = 1; h < dim; h <<= 1) {
    for (std::size_t i = 0; i < dim; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = f[j];
        const double b = f[j + h];
        f[j] = a + b;
        f[j + h] = a - b;
      }
    }
  }
  const double scale =
      std::pow(2.0, -0.5 * static_cast<double>(n) - 0.5 * static_cast<double>(words.size()));
  for (auto& a : f) a *= scale;
  return f;
}

bool verify_stabilized(const CssState& c) {
  const auto psi = statevector(c);
  for (const auto& g : c.x_generators()) {
    const std::uint64_t w = g.word();
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if (psi[i ^ w] != psi[i]) return false;
    }
  }
  for (const auto& g : c.z_generators()) {
    const std::uint64_t w = g.word();
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if ((std::popcount(i & w) & 1) && psi[i] != 0.0) return false;
    }
  }
  return true;
}

}  // namespace hyperdual
