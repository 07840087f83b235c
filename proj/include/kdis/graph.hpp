#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kdis {

/// Hard cap on graph order. Adjacency rows are ceil(n/64) words, so small
/// graphs stay on a single-word fast path.
inline constexpr std::size_t kMaxVertices = 1024;

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

/// Subset of {0, ..., n-1}. Bits at or above n are never set.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_(words_for(n), 0) {}
  VertexSet(std::size_t n, std::initializer_list<Vertex> members);
  static VertexSet from_words(std::size_t n, std::span<const std::uint64_t> words);
  static VertexSet from_list(std::size_t n, std::span<const Vertex> members);
  static VertexSet full(std::size_t n);

  std::size_t universe() const { return n_; }
  bool contains(Vertex v) const {
    return v < n_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t size() const;
  bool empty() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::vector<Vertex> to_vector() const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic on the ascending member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

  std::string to_string() const;

 private:
  void check_same_universe(const VertexSet& o) const;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Neighborhood {
  std::size_t degree;
  VertexSet open;
  VertexSet closed;
};

/// Undirected simple graph with bit-packed adjacency rows. Immutable once
/// built; every constructor checks symmetry and irreflexivity on exit.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return wpr_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * wpr_, wpr_};
  }
  bool has_edge(Vertex u, Vertex v) const {
    return (adj_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;
  std::size_t min_degree() const;
  VertexSet neighbors(Vertex v) const;
  /// Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

  /// Throws GraphError if adjacency is asymmetric, reflexive or out of range.
  void validate() const;

 private:
  friend class GraphBuilder;
  std::size_t n_ = 0;
  std::size_t wpr_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Mutable edge accumulator; build() freezes into a validated Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  std::size_t order() const { return g_.n_; }
  void add_edge(Vertex u, Vertex v);
  Graph build() &&;

 private:
  Graph g_;
};

Neighborhood neighborhood_query(const Graph& g, Vertex v);

struct Subgraph {
  Graph graph;
  /// old vertex -> new vertex, or kRemoved.
  std::vector<std::int64_t> remap;
  static constexpr std::int64_t kRemoved = -1;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Induced subgraph on V minus the union of N[v] over v in s.
Subgraph delete_closed_neighborhoods(const Graph& g, const VertexSet& s);

/// Edge-list text: "n m" then m lines "u v". '#' starts a comment.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace kdis
