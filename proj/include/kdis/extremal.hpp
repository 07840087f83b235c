#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace kdis {

inline constexpr std::size_t kMaxWitnesses = 100;

struct SearchReport {
  int n = 0;
  int k = 0;
  std::uint64_t max_count = 0;
  /// graph6 strings, at most kMaxWitnesses, in increasing scan order.
  std::vector<std::string> witnesses;
  std::uint64_t graphs_scanned = 0;
  double elapsed_seconds = 0.0;
};

struct ExtremalOptions {
  /// Number of contiguous shards of the graph-index space (>= 1).
  unsigned shards = 1;
  /// Worker threads; 0 means min(shards, hardware concurrency).
  unsigned threads = 0;
  /// Required for n = 9.
  bool allow_long_run = false;
  /// Restrict the scan to connected graphs.
  bool connected_only = false;
  /// n = 9 only: file of "shard_id max_in_shard" lines. Listed shards are
  /// skipped on restart (their witnesses are not recovered); every finished
  /// shard is appended.
  std::optional<std::string> checkpoint_path;
};

/// Labeled graph index: bit j(j-1)/2 + i is the edge {i, j}, i < j (the
/// graph6 bit order).
///
/// Scan scheme: a graph on n vertices is a graph H on the first n-1
/// vertices plus a neighborhood S of vertex n-1. For each H the independent
/// sets I of H in which every other vertex has >= k-1 neighbors are listed
/// once, with A(I) = the vertices having exactly k-1. Then the k-DISes of
/// H + S are exactly
///   I with n-1 excluded: A(I) empty and |I & S| >= k, and
///   I + {n-1}:           I & S empty and A(I) subset of S,
/// so every S costs one pass over the list.
SearchReport max_kdis_count(int n, int k, const ExtremalOptions& options = {});

/// Maximum over all n^(n-2) labeled trees (Pruefer order), 2 <= n <= 9.
SearchReport max_kdis_count_trees(int n, int k);

/// {n, k, max, witnesses, scanned, seconds}
nlohmann::json to_json(const SearchReport& report);

}  // namespace kdis
