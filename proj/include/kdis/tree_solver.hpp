#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kdis/graph.hpp"

namespace kdis {

/// Input graph contains a cycle; cycle() lists its vertices in order.
class NotAForestError : public GraphError {
 public:
  NotAForestError(const std::string& what, std::vector<Vertex> cycle)
      : GraphError(what), cycle_(std::move(cycle)) {}
  const std::vector<Vertex>& cycle() const { return cycle_; }

 private:
  std::vector<Vertex> cycle_;
};

struct ForestSolution {
  /// The unique k-DIS (sorted original vertices), or nullopt if none exists.
  std::optional<std::vector<Vertex>> dis;
  /// Vertices certified as dominated (outside the set) before termination.
  std::vector<Vertex> dominated;
  /// Number of vertex copies made while splitting forced neighbors.
  std::size_t copies = 0;
};

/// Leaf-peeling solver for forests, k >= 2. Runs in O(n + m).
///
/// Repeatedly takes a leaf-neighbor q with at most one non-leaf neighbor.
/// If q has >= k leaves they join the set and q is dominated. If it has
/// exactly k-1 leaves and one non-leaf neighbor u, then u is forced into
/// the set: u's remaining edges are split onto fresh copies of u, each a
/// leaf, so later steps place u in the set through any copy. Anything else
/// certifies that no k-DIS exists. Eligible q are taken in FIFO order.
ForestSolution solve_forest_kdis(std::size_t n, std::span<const Edge> edges, int k);

std::optional<VertexSet> solve_tree_kdis(const Graph& g, int k);

}  // namespace kdis
