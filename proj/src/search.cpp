#include "kdis/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "kdis/detail/engine.hpp"

namespace kdis {

namespace {

using u128 = unsigned __int128;

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer, got " + std::to_string(k));
}

void check_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw GraphError("vertex set universe " + std::to_string(s.universe()) +
                     " does not match graph order " + std::to_string(g.order()));
  }
}

void check_search_order(const Graph& g) {
  if (g.order() > kMaxSearchVertices) {
    throw std::invalid_argument("search supports at most " + std::to_string(kMaxSearchVertices) +
                                " vertices, got " + std::to_string(g.order()));
  }
}

int and_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

template <std::size_t W>
std::vector<detail::FixedBits<W>> rows_of(const Graph& g) {
  std::vector<detail::FixedBits<W>> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = detail::FixedBits<W>::from_span(g.row(v));
  return rows;
}

/// Instantiates F<W> with the smallest width holding g.
template <template <std::size_t> class F, class... Args>
auto dispatch_width(const Graph& g, Args&&... args) {
  if (g.order() <= 64) return F<1>{}(g, std::forward<Args>(args)...);
  if (g.order() <= 128) return F<2>{}(g, std::forward<Args>(args)...);
  return F<4>{}(g, std::forward<Args>(args)...);
}

template <std::size_t W>
struct CountOp {
  std::uint64_t operator()(const Graph& g, int k) const {
    const auto rows = rows_of<W>(g);
    u128 total = 0;
    detail::KdisEngine<W>(rows.data(), g.order(), k).run([&](const auto&) { ++total; });
    if (total > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("k-DIS count exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(total);
  }
};

template <std::size_t W>
struct VisitOp {
  void operator()(const Graph& g, int k, const std::function<void(const VertexSet&)>& visit) const {
    const auto rows = rows_of<W>(g);
    detail::KdisEngine<W>(rows.data(), g.order(), k).run([&](const detail::FixedBits<W>& b) {
      visit(VertexSet::from_words(g.order(), b.w));
    });
  }
};

template <std::size_t W>
struct MisOp {
  std::size_t operator()(const Graph& g) const {
    const auto rows = rows_of<W>(g);
    return static_cast<std::size_t>(detail::MisEngine<W>(rows.data(), g.order()).run());
  }
};

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  for (Vertex v : s.to_vector()) {
    if (and_count(g.row(v), s.words()) != 0) return false;
  }
  return true;
}

bool is_k_dominating(const Graph& g, const VertexSet& s, int k) {
  check_set(g, s);
  check_k(k);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v) && and_count(g.row(v), s.words()) < k) return false;
  }
  return true;
}

bool is_kdis(const Graph& g, const VertexSet& s, int k) {
  return is_independent(g, s) && is_k_dominating(g, s, k);
}

void for_each_kdis(const Graph& g, int k, const std::function<void(const VertexSet&)>& visit) {
  check_k(k);
  check_search_order(g);
  if (g.order() == 0) {
    visit(VertexSet(0));
    return;
  }
  dispatch_width<VisitOp>(g, k, visit);
}

std::vector<VertexSet> enumerate_kdis(const Graph& g, int k) {
  std::vector<VertexSet> out;
  for_each_kdis(g, k, [&](const VertexSet& s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
  return out;
}

std::uint64_t count_kdis(const Graph& g, int k) {
  check_k(k);
  check_search_order(g);
  if (g.order() == 0) return 1;
  // The count is multiplicative over connected components.
  std::vector<VertexSet> components;
  VertexSet seen(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.order());
    std::vector<Vertex> stack{s};
    comp.insert(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : (g.neighbors(x) - comp).to_vector()) {
        comp.insert(y);
        stack.push_back(y);
      }
    }
    seen |= comp;
    components.push_back(std::move(comp));
  }
  if (components.size() == 1) return dispatch_width<CountOp>(g, k);
  u128 total = 1;
  for (const auto& comp : components) {
    const Graph part = induced_subgraph(g, comp).graph;
    total *= dispatch_width<CountOp>(part, k);
    if (total == 0) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("k-DIS count exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t count_kdis_small(std::span<const std::uint64_t> rows, int k) {
  check_k(k);
  if (rows.size() > 64) throw std::invalid_argument("count_kdis_small: n > 64");
  if (rows.empty()) return 1;
  std::array<detail::FixedBits<1>, 64> adj;
  for (std::size_t i = 0; i < rows.size(); ++i) adj[i].w[0] = rows[i];
  std::uint64_t total = 0;
  detail::KdisEngine<1>(adj.data(), rows.size(), k).run([&](const auto&) { ++total; });
  return total;
}

std::uint64_t count_kdis_bruteforce(const Graph& g, int k) {
  check_k(k);
  const std::size_t n = g.order();
  if (n > kMaxBruteForceVertices) {
    throw std::invalid_argument("brute force supports n <= " +
                                std::to_string(kMaxBruteForceVertices) + ", got " +
                                std::to_string(n));
  }
  std::vector<std::uint32_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = n ? static_cast<std::uint32_t>(g.row(v)[0]) : 0;
  std::uint64_t total = 0;
  const std::uint32_t limit = n == 32 ? 0 : (std::uint32_t{1} << n);
  for (std::uint32_t s = 0;; ++s) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      const int hits = std::popcount(adj[v] & s);
      ok = ((s >> v) & 1u) ? hits == 0 : hits >= k;
    }
    if (ok) ++total;
    if (s + 1 == limit) break;
  }
  return total;
}

std::size_t max_independent_set_size(const Graph& g) {
  check_search_order(g);
  if (g.order() == 0) return 0;
  return dispatch_width<MisOp>(g);
}

std::vector<Star> star_witness(const Graph& g, const VertexSet& d, int k) {
  if (!is_kdis(g, d, k)) {
    throw std::invalid_argument("star_witness: " + d.to_string() + " is not a " +
                                std::to_string(k) + "-DIS");
  }
  std::vector<Star> stars;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!d.contains(v)) stars.push_back({v, g.neighbors(v) & d});
  }
  return stars;
}

}  // namespace kdis
