#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "kdis/graph.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline kdis::Graph gnp(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  kdis::GraphBuilder b(n);
  for (kdis::Vertex u = 0; u < n; ++u)
    for (kdis::Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Order uniform in [lo, hi], edge density uniform in [0.1, 0.9].
inline kdis::Graph random_graph(std::size_t lo, std::size_t hi, Rng& rng) {
  const auto n = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
  return gnp(n, p, rng);
}

/// Random labeled tree: each vertex after the first in a shuffled order
/// attaches to a uniformly chosen earlier one.
inline std::vector<kdis::Edge> random_tree_edges(std::size_t n, Rng& rng) {
  std::vector<kdis::Vertex> order(n);
  for (kdis::Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<kdis::Edge> edges;
  edges.reserve(n ? n - 1 : 0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    edges.emplace_back(order[j], order[i]);
  }
  return edges;
}

}  // namespace testgen
