#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kdis/graph.hpp"

namespace kdis {

/// Largest order accepted by the branch-and-bound search.
inline constexpr std::size_t kMaxSearchVertices = 256;
/// Largest order accepted by the 2^n subset scan.
inline constexpr std::size_t kMaxBruteForceVertices = 25;

bool is_independent(const Graph& g, const VertexSet& s);

/// Every vertex outside s has at least k neighbors in s.
bool is_k_dominating(const Graph& g, const VertexSet& s, int k);

bool is_kdis(const Graph& g, const VertexSet& s, int k);

/// All k-DISes, sorted lexicographically by ascending member lists.
std::vector<VertexSet> enumerate_kdis(const Graph& g, int k);

/// Number of k-DISes. The empty graph has exactly one (the empty set).
/// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t count_kdis(const Graph& g, int k);

/// Oracle: scans all 2^n subsets. Rejects n > kMaxBruteForceVertices.
std::uint64_t count_kdis_bruteforce(const Graph& g, int k);

/// Calls visit(const VertexSet&) for every k-DIS, in search order.
void for_each_kdis(const Graph& g, int k, const std::function<void(const VertexSet&)>& visit);

/// alpha(G).
std::size_t max_independent_set_size(const Graph& g);

struct Star {
  Vertex center;
  VertexSet leaves;
  friend bool operator==(const Star&, const Star&) = default;
};

/// For each v outside the k-DIS d, the star (v, N(v) & d). Together these
/// stars rebuild G minus the edges inside V \ d.
std::vector<Star> star_witness(const Graph& g, const VertexSet& d, int k);

/// Counts k-DISes of a graph on n <= 64 vertices given as adjacency rows.
/// This is the allocation-free path used by the exhaustive scans.
std::uint64_t count_kdis_small(std::span<const std::uint64_t> rows, int k);

}  // namespace kdis
