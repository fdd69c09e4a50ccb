#include "hyperdual/hypergraph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hyperdual/errors.hpp"

namespace hyperdual {

namespace {

constexpr std::size_t kMaxBruteforceEdges = 20;

}  // namespace

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  for (std::size_t m = 0; m < edges_.size(); ++m) {
    auto& e = edges_[m];
    const std::string where = "edge " + std::to_string(m) + ": ";
    if (e.empty()) throw ValidationError(where + "edge is empty");
    std::sort(e.begin(), e.end());
    if (e.back() >= num_vertices_) {
      throw ValidationError(where + "vertex " + std::to_string(e.back()) +
                            " out of range (k=" + std::to_string(num_vertices_) + ")");
    }
    if (auto dup = std::adjacent_find(e.begin(), e.end()); dup != e.end()) {
      throw ValidationError(where + "vertex " + std::to_string(*dup) + " repeated");
    }
  }
}

std::optional<std::size_t> Hypergraph::first_isolated_vertex() const {
  std::vector<bool> seen(num_vertices_, false);
  for (const auto& e : edges_) {
    for (auto v : e) seen[v] = true;
  }
  auto it = std::find(seen.begin(), seen.end(), false);
  if (it == seen.end()) return std::nullopt;
  return static_cast<std::size_t>(it - seen.begin());
}

Hypergraph hypergraph_from_vectors(std::size_t num_vertices,
                                   const std::vector<BitVector>& vectors) {
  std::vector<Hypergraph::Edge> edges;
  edges.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != num_vertices) throw ValidationError("vector length does not match vertex count");
    edges.push_back(v.support());
  }
  return Hypergraph(num_vertices, std::move(edges));
}

BitMatrix edge_matrix(const Hypergraph& h) {
  BitMatrix m(h.num_vertices());
  for (const auto& e : h.edges()) {
    m.push_back(BitVector::from_support(h.num_vertices(), e));
  }
  return m;
}

Hypergraph dual(const Hypergraph& h) {
  if (auto v = h.first_isolated_vertex()) throw IsolatedVertexError(*v);
  std::vector<Hypergraph::Edge> edges(h.num_vertices());
  for (std::size_t m = 0; m < h.num_edges(); ++m) {
    for (auto v : h.edge(m)) edges[v].push_back(static_cast<std::uint32_t>(m));
  }
  return Hypergraph(h.num_edges(), std::move(edges));
}

Hypergraph orthogonal(const Hypergraph& h) {
  return hypergraph_from_vectors(h.num_vertices(), null_space_basis(edge_matrix(h)));
}

std::vector<BitVector> constraint_space_bruteforce(const Hypergraph& h) {
  const std::size_t n = h.num_edges();
  if (n > kMaxBruteforceEdges) {
    throw CapacityError("constraint enumeration needs at most " +
                        std::to_string(kMaxBruteforceEdges) + " edges, got " + std::to_string(n));
  }
  if (h.num_vertices() > kMaxBits) {
    throw CapacityError("constraint enumeration needs at most " + std::to_string(kMaxBits) +
                        " vertices");
  }

  std::vector<std::uint64_t> masks;
  masks.reserve(n);
  for (const auto& e : h.edges()) {
    std::uint64_t w = 0;
    for (auto v : e) w |= std::uint64_t{1} << v;
    masks.push_back(w);
  }

  BitMatrix even_covers(n);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t subset = 1; subset < subsets; ++subset) {
    std::uint64_t cover = 0;
    for (std::size_t m = 0; m < n; ++m) {
      if ((subset >> m) & 1) cover ^= masks[m];
    }
    if (cover == 0) even_covers.push_back(BitVector::from_word(n, subset));
  }
  return reduced_row_echelon(even_covers).rows();
}

bool labeled_equal(const Hypergraph& a, const Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto ea = a.edges();
  auto eb = b.edges();
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

}  // namespace hyperdual
