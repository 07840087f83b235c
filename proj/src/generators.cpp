#include "kdis/generators.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "kdis/search.hpp"

namespace kdis {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

void require_order(std::size_t n, const char* what) {
  require(n <= kMaxVertices, std::string(what) + ": result has " + std::to_string(n) +
                                 " vertices, cap is " + std::to_string(kMaxVertices));
}

}  // namespace

Graph empty_graph(std::size_t n) {
  require_order(n, "empty");
  return Graph(n);
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete: n must be positive");
  require_order(n, "complete");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph path(std::size_t n) {
  require(n >= 1, "path: n must be positive");
  require_order(n, "path");
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle: n must be at least 3");
  require_order(n, "cycle");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

Graph star(std::size_t t) {
  require(t >= 1, "star: t must be positive");
  require_order(t + 1, "star");
  GraphBuilder b(t + 1);
  for (Vertex v = 1; v <= t; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  const std::size_t sizes[] = {a, b};
  return complete_multipartite(sizes);
}

Graph complete_multipartite(std::span<const std::size_t> sizes) {
  require(!sizes.empty(), "complete_multipartite: no parts");
  std::vector<std::size_t> part;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    require(sizes[i] >= 1, "complete_multipartite: part sizes must be positive");
    part.insert(part.end(), sizes[i], i);
    require_order(part.size(), "complete_multipartite");
  }
  GraphBuilder b(part.size());
  for (Vertex u = 0; u < part.size(); ++u)
    for (Vertex v = u + 1; v < part.size(); ++v)
      if (part[u] != part[v]) b.add_edge(u, v);
  return std::move(b).build();
}

Graph turan(std::size_t n, std::size_t r) {
  require(n >= 1 && r >= 1, "turan: parameters must be positive");
  require(r <= n, "turan: more parts than vertices");
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];
  return complete_multipartite(sizes);
}

Graph kneser(std::size_t n, std::size_t t) {
  require(t >= 1, "kneser: t must be positive");
  require(2 * t < n, "kneser: requires t < n/2");
  require(n <= 63, "kneser: n too large");
  // Increasing bitmask order of t-subsets is colexicographic order.
  std::vector<std::uint64_t> subsets;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << t) - 1; s < limit;) {
    subsets.push_back(s);
    require_order(subsets.size(), "kneser");
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  GraphBuilder b(subsets.size());
  for (Vertex u = 0; u < subsets.size(); ++u)
    for (Vertex v = u + 1; v < subsets.size(); ++v)
      if ((subsets[u] & subsets[v]) == 0) b.add_edge(u, v);
  return std::move(b).build();
}

Graph petersen() { return kneser(5, 2); }

Graph cartesian_product(const Graph& g, const Graph& h) {
  require(g.order() >= 1 && h.order() >= 1, "cartesian_product: factors must be nonempty");
  const std::size_t m = h.order();
  require_order(g.order() * m, "cartesian_product");
  GraphBuilder b(g.order() * m);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (const auto& [x, y] : h.edges()) {
      b.add_edge(static_cast<Vertex>(a * m + x), static_cast<Vertex>(a * m + y));
    }
  }
  for (const auto& [a, c] : g.edges()) {
    for (Vertex x = 0; x < m; ++x) {
      b.add_edge(static_cast<Vertex>(a * m + x), static_cast<Vertex>(c * m + x));
    }
  }
  return std::move(b).build();
}

Graph power(const Graph& g, std::size_t t) {
  require(t >= 1, "power: exponent must be positive");
  Graph out = g;
  for (std::size_t i = 1; i < t; ++i) out = cartesian_product(out, g);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t off = g.order();
  require_order(off + h.order(), "union");
  GraphBuilder b(off + h.order());
  for (const auto& [u, v] : g.edges()) b.add_edge(u, v);
  for (const auto& [u, v] : h.edges())
    b.add_edge(static_cast<Vertex>(u + off), static_cast<Vertex>(v + off));
  return std::move(b).build();
}

Graph copies(const Graph& g, std::size_t t) {
  Graph out(0);
  for (std::size_t i = 0; i < t; ++i) out = disjoint_union(out, g);
  return out;
}

Graph cone(const Graph& g) {
  const std::size_t n = g.order();
  require_order(n + 1, "cone");
  GraphBuilder b(n + 1);
  for (const auto& [u, v] : g.edges()) b.add_edge(u, v);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>(n));
  return std::move(b).build();
}

Graph pruefer_tree(std::size_t n, std::span<const Vertex> seq) {
  require(n >= 2, "pruefer_tree: n must be at least 2");
  require(seq.size() + 2 == n, "pruefer_tree: sequence length must be n - 2");
  require_order(n, "pruefer_tree");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) {
    require(x < n, "pruefer_tree: label " + std::to_string(x) + " out of range");
    ++degree[x];
  }
  GraphBuilder b(n);
  // Linear decoding: `ptr` scans for the smallest leaf; a freshly created
  // leaf smaller than ptr is consumed immediately.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex x : seq) {
    b.add_edge(static_cast<Vertex>(leaf), x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  b.add_edge(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return std::move(b).build();
}

AssembledGraph construction1_assemble(std::span<const std::size_t> leaf_counts,
                                      std::span<const std::pair<LeafRef, LeafRef>> identifications,
                                      std::span<const std::pair<std::size_t, std::size_t>> center_edges,
                                      int k) {
  require(k >= 1, "construction1_assemble: k must be positive");
  const std::size_t s = leaf_counts.size();
  std::vector<std::size_t> first(s + 1, 0);
  for (std::size_t i = 0; i < s; ++i) {
    require(leaf_counts[i] >= static_cast<std::size_t>(k),
            "construction1_assemble: star " + std::to_string(i) + " has fewer than k leaves");
    first[i + 1] = first[i] + leaf_counts[i];
  }
  const std::size_t total = first[s];
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto flat = [&](const LeafRef& r) {
    require(r.star < s && r.leaf < leaf_counts[r.star],
            "construction1_assemble: leaf reference out of range");
    return first[r.star] + r.leaf;
  };
  for (const auto& [a, b] : identifications) {
    require(a.star != b.star, "construction1_assemble: identification within one star");
    const auto ra = find(flat(a)), rb = find(flat(b));
    parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  // Each merged class may hold at most one leaf per star.
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = first[i]; j < first[i + 1]; ++j) classes[find(j)].push_back(i);
  std::vector<std::size_t> class_vertex(total);
  std::size_t next = s;
  for (auto& [root, stars] : classes) {
    auto sorted = stars;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "construction1_assemble: identifications merge two leaves of one star");
    class_vertex[root] = next++;
  }
  require_order(next, "construction1_assemble");
  GraphBuilder b(next);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = first[i]; j < first[i + 1]; ++j)
      b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(class_vertex[find(j)]));
  for (const auto& [u, v] : center_edges) {
    require(u < s && v < s && u != v, "construction1_assemble: bad center edge");
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  AssembledGraph out{std::move(b).build(), VertexSet(next)};
  for (std::size_t v = s; v < next; ++v) out.dis.insert(static_cast<Vertex>(v));
  if (!is_kdis(out.graph, out.dis, k)) {
    throw std::logic_error("construction1_assemble: leaf set is not a k-DIS");
  }
  return out;
}

}  // namespace kdis
