#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kdis/graph.hpp"

namespace kdis {

// Labeling conventions (golden tests depend on them):
//   star(t): center 0, leaves 1..t.
//   complete_multipartite: parts occupy consecutive index ranges in order.
//   turan(n, r): the first n % r parts get the extra vertex.
//   kneser(n, t): t-subsets of {0..n-1} in colexicographic order.
//   cartesian_product(G, H): (a, x) -> a * |V(H)| + x.
//   power(G, t): power(G, t-1) x G.
//   disjoint_union(G, H): H shifted by |V(G)|.
//   cone(G): apex is vertex |V(G)|.

Graph empty_graph(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t t);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph complete_multipartite(std::span<const std::size_t> sizes);
Graph turan(std::size_t n, std::size_t r);
Graph kneser(std::size_t n, std::size_t t);
Graph petersen();

Graph cartesian_product(const Graph& g, const Graph& h);
Graph power(const Graph& g, std::size_t t);
Graph disjoint_union(const Graph& g, const Graph& h);
/// t disjoint copies of g.
Graph copies(const Graph& g, std::size_t t);
Graph cone(const Graph& g);

/// Labeled tree on n = seq.size() + 2 vertices.
Graph pruefer_tree(std::size_t n, std::span<const Vertex> seq);

/// Star-assembly input: star i has leaf_counts[i] leaves, addressed as
/// (star, leaf index).
struct LeafRef {
  std::size_t star;
  std::size_t leaf;
};

struct AssembledGraph {
  Graph graph;
  /// The leaves after identification; a k-DIS of graph.
  VertexSet dis;
};

/// Builds a graph from disjoint stars K_{1,t_i} (t_i >= k) by merging leaves
/// of distinct stars and joining centers. Centers get indices 0..s-1; merged
/// leaf classes follow in order of their smallest (star, leaf) address.
AssembledGraph construction1_assemble(std::span<const std::size_t> leaf_counts,
                                      std::span<const std::pair<LeafRef, LeafRef>> identifications,
                                      std::span<const std::pair<std::size_t, std::size_t>> center_edges,
                                      int k);

}  // namespace kdis
