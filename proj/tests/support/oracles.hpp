#pragma once

// Reference implementations used only by tests. They share no code with the
// library beyond reading adjacency through Graph::has_edge.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "kdis/graph.hpp"

namespace oracle {

using AdjMatrix = std::vector<std::vector<bool>>;

inline AdjMatrix matrix(const kdis::Graph& g) {
  const auto n = g.order();
  AdjMatrix m(n, std::vector<bool>(n, false));
  for (kdis::Vertex u = 0; u < n; ++u)
    for (kdis::Vertex v = 0; v < n; ++v) m[u][v] = g.has_edge(u, v);
  return m;
}

/// Whether the subset given as a bitmask is a k-DIS.
inline bool is_kdis_mask(const AdjMatrix& m, std::uint64_t s, int k) {
  const auto n = m.size();
  for (std::size_t v = 0; v < n; ++v) {
    int inside = 0;
    for (std::size_t u = 0; u < n; ++u) inside += m[v][u] && ((s >> u) & 1u);
    if ((s >> v) & 1u) {
      if (inside) return false;
    } else if (inside < k) {
      return false;
    }
  }
  return true;
}

/// All k-DISes as sorted vertex lists, in lexicographic order.
inline std::vector<std::vector<kdis::Vertex>> all_kdis(const kdis::Graph& g, int k) {
  const auto m = matrix(g);
  std::vector<std::vector<kdis::Vertex>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    if (!is_kdis_mask(m, s, k)) continue;
    std::vector<kdis::Vertex> set;
    for (kdis::Vertex v = 0; v < g.order(); ++v)
      if ((s >> v) & 1u) set.push_back(v);
    out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t count_kdis(const kdis::Graph& g, int k) { return all_kdis(g, k).size(); }

/// Maximal independent sets by checking every independent set for
/// extendability.
inline std::uint64_t count_maximal_independent(const kdis::Graph& g) {
  const auto m = matrix(g);
  const auto n = g.order();
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true;
    for (std::size_t u = 0; u < n && independent; ++u)
      for (std::size_t v = u + 1; v < n && independent; ++v)
        if (((s >> u) & 1u) && ((s >> v) & 1u) && m[u][v]) independent = false;
    if (!independent) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      if ((s >> v) & 1u) continue;
      bool free = true;
      for (std::size_t u = 0; u < n; ++u)
        if (((s >> u) & 1u) && m[u][v]) free = false;
      if (free) maximal = false;
    }
    total += maximal;
  }
  return total;
}

inline bool isomorphic(const kdis::Graph& a, const kdis::Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const auto ma = matrix(a), mb = matrix(b);
  std::vector<std::size_t> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::size_t u = 0; u < perm.size() && same; ++u)
      for (std::size_t v = 0; v < perm.size() && same; ++v)
        if (ma[u][v] != mb[perm[u]][perm[v]]) same = false;
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Maximum number of maximal independent sets on n >= 2 vertices.
inline std::uint64_t moon_moser(unsigned n) {
  if (n % 3 == 0) return ipow(3, n / 3);
  if (n % 3 == 1) return 4 * ipow(3, (n - 4) / 3);
  return 2 * ipow(3, (n - 2) / 3);
}

/// Maximum number of maximal independent sets over trees on n >= 2 vertices.
inline std::uint64_t trees_max_mis(unsigned n) {
  if (n % 2 == 0) return ipow(2, n / 2) / 2 + 1;
  return ipow(2, (n - 1) / 2);
}

/// Number of codes of length k, size 3^(k-1), min distance >= 2 over F_3,
/// by assigning a last coordinate to every (k-1)-prefix.
inline std::uint64_t count_mds_by_prefix_assignment(int k) {
  const std::size_t prefixes = ipow(3, k - 1);
  std::vector<int> last(prefixes, 0);
  auto digit = [](std::size_t x, int i) {
    for (int j = 0; j < i; ++j) x /= 3;
    return static_cast<int>(x % 3);
  };
  std::uint64_t total = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t a = 0; a < prefixes && ok; ++a) {
      for (std::size_t b = a + 1; b < prefixes && ok; ++b) {
        int d = last[a] != last[b];
        for (int i = 0; i < k - 1; ++i) d += digit(a, i) != digit(b, i);
        if (d < 2) ok = false;
      }
    }
    total += ok;
    std::size_t pos = 0;
    while (pos < prefixes && ++last[pos] == 3) last[pos++] = 0;
    if (pos == prefixes) break;
  }
  return total;
}

}  // namespace oracle
