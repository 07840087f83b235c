#include "kdis/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace kdis {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxVertices) {
    throw GraphError("graph order " + std::to_string(n) + " exceeds cap " +
                     std::to_string(kMaxVertices));
  }
}

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t n, std::initializer_list<Vertex> members)
    : VertexSet(n) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_words(std::size_t n, std::span<const std::uint64_t> words) {
  VertexSet s(n);
  const std::size_t w = std::min(words.size(), s.words_.size());
  std::copy_n(words.begin(), w, s.words_.begin());
  if (n % 64 != 0 && !s.words_.empty()) {
    s.words_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  }
  return s;
}

VertexSet VertexSet::from_list(std::size_t n, std::span<const Vertex> members) {
  VertexSet s(n);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(std::size_t n) {
  VertexSet s(n);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (n % 64 != 0) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " outside universe of size " +
                     std::to_string(n_));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < n_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void VertexSet::check_same_universe(const VertexSet& o) const {
  if (o.n_ != n_) throw GraphError("vertex sets over different universes");
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : to_vector()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

// -------------------------------------------------------------------- Graph

Graph::Graph(std::size_t n) : n_(n), wpr_(words_for(n)) {
  check_order(n);
  adj_.assign(n_ * wpr_, 0);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : adj_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::size_t Graph::min_degree() const {
  std::size_t best = n_ == 0 ? 0 : n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

VertexSet Graph::neighbors(Vertex v) const {
  if (v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return VertexSet::from_words(n_, row(v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : VertexSet::from_words(n_, row(u)).to_vector()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::validate() const {
  if (adj_.size() != n_ * wpr_) throw GraphError("adjacency storage size mismatch");
  for (Vertex u = 0; u < n_; ++u) {
    if (has_edge(u, u)) throw GraphError("self-loop at vertex " + std::to_string(u));
    auto r = row(u);
    if (n_ % 64 != 0 && wpr_ > 0 && (r[wpr_ - 1] >> (n_ % 64)) != 0) {
      throw GraphError("adjacency bit beyond order at vertex " + std::to_string(u));
    }
    for (Vertex v : VertexSet::from_words(n_, r).to_vector()) {
      if (!has_edge(v, u)) {
        throw GraphError("asymmetric adjacency " + std::to_string(u) + "->" +
                         std::to_string(v));
      }
    }
  }
}

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  const auto n = g_.n_;
  if (u >= n || v >= n) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has endpoint out of range for n=" + std::to_string(n));
  }
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  g_.adj_[u * g_.wpr_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  g_.adj_[v * g_.wpr_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

Graph GraphBuilder::build() && {
  g_.validate();
  return std::move(g_);
}

// --------------------------------------------------------------- operations

Neighborhood neighborhood_query(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(g.order()));
  }
  VertexSet open = g.neighbors(v);
  VertexSet closed = open;
  closed.insert(v);
  return {open.size(), std::move(open), std::move(closed)};
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order()) throw GraphError("vertex set does not match graph");
  const auto kept = keep.to_vector();
  Subgraph out{Graph(kept.size()), std::vector<std::int64_t>(g.order(), Subgraph::kRemoved)};
  for (std::size_t i = 0; i < kept.size(); ++i) {
    out.remap[kept[i]] = static_cast<std::int64_t>(i);
  }
  GraphBuilder b(kept.size());
  for (const auto& [u, v] : g.edges()) {
    if (out.remap[u] >= 0 && out.remap[v] >= 0) {
      b.add_edge(static_cast<Vertex>(out.remap[u]), static_cast<Vertex>(out.remap[v]));
    }
  }
  out.graph = std::move(b).build();
  return out;
}

Subgraph delete_closed_neighborhoods(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw GraphError("vertex set does not match graph");
  VertexSet removed(g.order());
  for (Vertex v : s.to_vector()) {
    removed |= g.neighbors(v);
    removed.insert(v);
  }
  return induced_subgraph(g, VertexSet::full(g.order()) - removed);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<long long> nums;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long x = std::stoll(tok, &used);
        if (used != tok.size() || x < 0) throw std::invalid_argument(tok);
        nums.push_back(x);
      } catch (const std::exception&) {
        throw GraphError("edge list: bad token '" + tok + "'");
      }
    }
  }
  if (nums.size() < 2) throw GraphError("edge list: missing 'n m' header");
  const auto n = static_cast<std::size_t>(nums[0]);
  const auto m = static_cast<std::size_t>(nums[1]);
  if (nums.size() != 2 + 2 * m) {
    throw GraphError("edge list: header declares " + std::to_string(m) + " edges, found " +
                     std::to_string((nums.size() - 2) / 2) +
                     ((nums.size() % 2) ? " and a dangling endpoint" : ""));
  }
  if (n > kMaxVertices) throw GraphError("edge list: order exceeds cap");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < m; ++i) {
    auto u = nums[2 + 2 * i];
    auto v = nums[3 + 2 * i];
    if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw GraphError("edge list: edge " + std::to_string(i) + " endpoint out of range");
    }
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return std::move(b).build();
}

std::string format_edge_list(const Graph& g) {
  const auto es = g.edges();
  std::ostringstream os;
  os << g.order() << ' ' << es.size() << '\n';
  for (const auto& [u, v] : es) os << u << ' ' << v << '\n';
  return os.str();
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet seen(g.order());
  std::vector<Vertex> stack{0};
  seen.insert(0);
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u).to_vector()) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen.size() == g.order();
}

}  // namespace kdis
