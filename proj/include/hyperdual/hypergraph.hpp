#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperdual/gf2.hpp"

namespace hyperdual {

/// A hypergraph on vertices 0..K-1 with an ordered list of hyperedges.
///
/// Each edge is stored as a strictly increasing list of vertex indices.
/// Identical edges may appear more than once; they stay distinct entries.
/// Empty edges are rejected. Isolated vertices are allowed.
class Hypergraph {
 public:
  using Edge = std::vector<std::uint32_t>;

  Hypergraph() = default;
  /// Sorts each edge. Throws ValidationError on an empty edge, a repeated
  /// vertex within an edge, or a vertex index >= num_vertices.
  Hypergraph(std::size_t num_vertices, std::vector<Edge> edges);

  [[nodiscard]] std::size_t num_vertices() const noexcept { return num_vertices_; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(std::size_t m) const { return edges_.at(m); }

  /// Lowest-indexed vertex contained in no edge, if any.
  [[nodiscard]] std::optional<std::size_t> first_isolated_vertex() const;

  /// Exact equality, edge order included. See labeled_equal for the
  /// order-insensitive comparison.
  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

/// Hypergraph whose edges are the supports of the given nonzero vectors.
[[nodiscard]] Hypergraph hypergraph_from_vectors(std::size_t num_vertices,
                                                 const std::vector<BitVector>& vectors);

/// Row m is the indicator vector of edge m; N rows, K columns.
[[nodiscard]] BitMatrix edge_matrix(const Hypergraph& h);

/// Swaps the roles of vertices and edges: edge i of the result is the set
/// of edges of h that contain vertex i. Throws IsolatedVertexError when
/// some vertex lies in no edge.
[[nodiscard]] Hypergraph dual(const Hypergraph& h);

/// Same vertex set; edges are the canonical null-space basis of
/// edge_matrix(h), so every result edge meets every edge of h evenly.
[[nodiscard]] Hypergraph orthogonal(const Hypergraph& h);

/// Enumerates all 2^N edge subsets and keeps those covering every vertex an
/// even number of times. Returns the reduced echelon basis of that space as
/// indicator vectors over the N edges. Throws CapacityError for N > 20.
[[nodiscard]] std::vector<BitVector> constraint_space_bruteforce(const Hypergraph& h);

/// Same K and same multiset of edges.
[[nodiscard]] bool labeled_equal(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperdual
