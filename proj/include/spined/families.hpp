#pragma once

#include <cstddef>
#include <vector>

#include "spined/errors.hpp"
#include "spined/graph.hpp"

namespace spined {

// P_n: n vertices in a line.
inline SimpleGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return SimpleGraph(n, std::move(edges));
}

// C_n for n >= 3.
inline SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3)
    throw PreconditionViolation("cycles need at least 3 vertices, got " +
                                std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return SimpleGraph(n, std::move(edges));
}

// rows x cols grid; vertex (r, c) has index r*cols + c.
inline SimpleGraph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  const auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<Vertex>(r * cols + c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return SimpleGraph(rows * cols, std::move(edges));
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline SimpleGraph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    edges.push_back({static_cast<Vertex>(5 + i),
                     static_cast<Vertex>(5 + (i + 2) % 5)});
    edges.push_back({i, static_cast<Vertex>(i + 5)});
  }
  return SimpleGraph(10, std::move(edges));
}

}  // namespace spined
