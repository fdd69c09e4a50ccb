#include "hyperdual/zoo.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "hyperdual/errors.hpp"

namespace hyperdual {

namespace {

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

}  // namespace

Graph::Graph(std::size_t num_vertices, std::vector<EdgeEnds> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [a, b] = edges_[i];
    if (a >= num_vertices_ || b >= num_vertices_) {
      throw ValidationError("graph edge " + std::to_string(i) + ": endpoint out of range");
    }
    if (a == b) throw ValidationError("graph edge " + std::to_string(i) + ": self-loop");
  }
}

Hypergraph Graph::as_hypergraph() const {
  std::vector<Hypergraph::Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& [a, b] : edges_) edges.push_back({a, b});
  return Hypergraph(num_vertices_, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 2) throw ValidationError("cycle needs at least 2 vertices");
  std::vector<Graph::EdgeEnds> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(u32(i), u32((i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph square_torus(std::size_t lx, std::size_t ly) {
  if (lx < 2 || ly < 2) throw ValidationError("square torus needs Lx, Ly >= 2");
  std::vector<Graph::EdgeEnds> edges;
  for (std::size_t y = 0; y < ly; ++y) {
    for (std::size_t x = 0; x < lx; ++x) {
      const std::size_t v = y * lx + x;
      edges.emplace_back(u32(v), u32(y * lx + (x + 1) % lx));
      edges.emplace_back(u32(v), u32(((y + 1) % ly) * lx + x));
    }
  }
  return Graph(lx * ly, std::move(edges));
}

Graph cubic_torus(std::size_t l) {
  if (l < 2) throw ValidationError("cubic torus needs L >= 2");
  auto index = [l](std::size_t x, std::size_t y, std::size_t z) { return u32((z * l + y) * l + x); };
  std::vector<Graph::EdgeEnds> edges;
  for (std::size_t z = 0; z < l; ++z) {
    for (std::size_t y = 0; y < l; ++y) {
      for (std::size_t x = 0; x < l; ++x) {
        const auto v = index(x, y, z);
        edges.emplace_back(v, index((x + 1) % l, y, z));
        edges.emplace_back(v, index(x, (y + 1) % l, z));
        edges.emplace_back(v, index(x, y, (z + 1) % l));
      }
    }
  }
  return Graph(l * l * l, std::move(edges));
}

Hypergraph toric_code_hypergraph(const Graph& g) {
  std::vector<Hypergraph::Edge> stars(g.num_vertices());
  for (std::size_t q = 0; q < g.num_edges(); ++q) {
    const auto [a, b] = g.edges()[q];
    stars[a].push_back(u32(q));
    stars[b].push_back(u32(q));
  }
  for (std::size_t v = 0; v < stars.size(); ++v) {
    if (stars[v].empty()) throw IsolatedVertexError(v);
  }
  return Hypergraph(g.num_edges(), std::move(stars));
}

SpinModel ising_model(const Graph& g, double j, double beta) {
  return SpinModel(g.as_hypergraph(), std::vector<double>(g.num_edges(), j), beta);
}

Hypergraph hexagonal_2colex(std::size_t lx, std::size_t ly) {
  if (lx < 2 || ly < 2) throw ValidationError("hexagonal 2-colex needs Lx, Ly >= 2");
  // Cell one step back along x and/or y, wrapping around the torus.
  auto cell = [lx, ly](std::size_t x, std::size_t y, bool back_x, bool back_y) {
    const std::size_t xx = back_x ? (x + lx - 1) % lx : x;
    const std::size_t yy = back_y ? (y + ly - 1) % ly : y;
    return yy * lx + xx;
  };
  auto a = [&](std::size_t x, std::size_t y, bool bx, bool by) { return u32(2 * cell(x, y, bx, by)); };
  auto b = [&](std::size_t x, std::size_t y, bool bx, bool by) {
    return u32(2 * cell(x, y, bx, by) + 1);
  };

  std::vector<Hypergraph::Edge> faces;
  faces.reserve(lx * ly);
  for (std::size_t y = 0; y < ly; ++y) {
    for (std::size_t x = 0; x < lx; ++x) {
      faces.push_back({a(x, y, false, false), a(x, y, true, false), a(x, y, false, true),
                       b(x, y, true, true), b(x, y, true, false), b(x, y, false, true)});
    }
  }
  Hypergraph h(2 * lx * ly, std::move(faces));
  if (!three_color_edges(h)) {
    throw NotThreeColorableError("faces of the " + std::to_string(lx) + "x" + std::to_string(ly) +
                                 " hexagonal torus admit no proper 3-coloring");
  }
  return h;
}

std::optional<std::vector<int>> three_color_edges(const Hypergraph& h) {
  const std::size_t n = h.num_edges();
  std::vector<std::vector<std::size_t>> incident(h.num_vertices());
  for (std::size_t m = 0; m < n; ++m) {
    for (auto v : h.edge(m)) incident[v].push_back(m);
  }
  std::vector<std::vector<std::size_t>> conflicts(n);
  for (const auto& edges_at_v : incident) {
    for (auto i : edges_at_v) {
      for (auto j : edges_at_v) {
        if (i != j) conflicts[i].push_back(j);
      }
    }
  }
  for (auto& c : conflicts) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }

  // Breadth-first order keeps most choices forced by already-colored
  // neighbours.
  std::vector<std::size_t> order;
  std::vector<bool> queued(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (queued[root]) continue;
    std::deque<std::size_t> queue{root};
    queued[root] = true;
    while (!queue.empty()) {
      const auto e = queue.front();
      queue.pop_front();
      order.push_back(e);
      for (auto f : conflicts[e]) {
        if (!queued[f]) {
          queued[f] = true;
          queue.push_back(f);
        }
      }
    }
  }

  std::vector<int> color(n, -1);
  std::size_t pos = 0;
  while (pos < n) {
    const auto e = order[pos];
    int c = color[e] + 1;
    for (; c < 3; ++c) {
      const bool clash = std::any_of(conflicts[e].begin(), conflicts[e].end(),
                                     [&](std::size_t f) { return color[f] == c; });
      if (!clash) break;
    }
    if (c < 3) {
      color[e] = c;
      ++pos;
    } else {
      color[e] = -1;
      if (pos == 0) return std::nullopt;
      --pos;
    }
  }
  return color;
}

}  // namespace hyperdual
