#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperdual/hypergraph.hpp"
#include "hyperdual/spin_model.hpp"

namespace hyperdual {

/// Undirected multigraph; parallel edges allowed, self-loops not.
class Graph {
 public:
  using EdgeEnds = std::pair<std::uint32_t, std::uint32_t>;

  Graph(std::size_t num_vertices, std::vector<EdgeEnds> edges);

  [[nodiscard]] std::size_t num_vertices() const noexcept { return num_vertices_; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<EdgeEnds>& edges() const noexcept { return edges_; }

  /// The graph as a 2-uniform hypergraph, edges in the same order.
  [[nodiscard]] Hypergraph as_hypergraph() const;

 private:
  std::size_t num_vertices_;
  std::vector<EdgeEnds> edges_;
};

/// Edges {i, i+1 mod n}. n = 2 gives a double bond.
[[nodiscard]] Graph cycle_graph(std::size_t n);

/// Periodic Lx x Ly square lattice. Vertex (x, y) is y*Lx + x; each vertex
/// contributes its +x bond then its +y bond.
[[nodiscard]] Graph square_torus(std::size_t lx, std::size_t ly);

/// Periodic L^3 cubic lattice, vertex (x, y, z) = (z*L + y)*L + x, bonds
/// +x, +y, +z per vertex.
[[nodiscard]] Graph cubic_torus(std::size_t l);

/// Qubits on the graph edges; hyperedge v is the set of edges incident to
/// graph vertex v. Throws IsolatedVertexError.
[[nodiscard]] Hypergraph toric_code_hypergraph(const Graph& g);

/// Uniform coupling J on every bond of g.
[[nodiscard]] SpinModel ising_model(const Graph& g, double j, double beta);

/// Hexagonal 2-colex on an Lx x Ly torus: 2 Lx Ly vertices (two per unit
/// cell, A = 2 * cell, B = 2 * cell + 1, cell = y*Lx + x) and one hexagonal
/// face per cell. Face (x, y) holds A(x,y), A(x-1,y), A(x,y-1),
/// B(x-1,y-1), B(x-1,y), B(x,y-1). Throws NotThreeColorableError unless the
/// faces admit a proper 3-coloring; that happens when Lx and Ly are
/// multiples of 3.
[[nodiscard]] Hypergraph hexagonal_2colex(std::size_t lx, std::size_t ly);

/// Colors the edges of h with 0, 1, 2 so that any two edges sharing a
/// vertex get different colors, or nullopt if impossible.
[[nodiscard]] std::optional<std::vector<int>> three_color_edges(const Hypergraph& h);

}  // namespace hyperdual
