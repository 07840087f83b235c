#include "kdis/tree_solver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kdis {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  std::vector<std::size_t> parent;
};

/// Path between u and v in the forest formed by edges[0, upto).
std::vector<Vertex> forest_path(std::size_t n, std::span<const Edge> edges, std::size_t upto,
                                Vertex u, Vertex v) {
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t i = 0; i < upto; ++i) {
    adj[edges[i].first].push_back(edges[i].second);
    adj[edges[i].second].push_back(edges[i].first);
  }
  std::vector<std::int64_t> prev(n, -1);
  std::deque<Vertex> queue{u};
  prev[u] = u;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (Vertex y : adj[x]) {
      if (prev[y] < 0) {
        prev[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex x = v;; x = static_cast<Vertex>(prev[x])) {
    path.push_back(x);
    if (x == u) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

void require_forest(std::size_t n, std::span<const Edge> edges) {
  UnionFind uf(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= n || v >= n) throw GraphError("edge endpoint out of range");
    if (u == v) throw NotAForestError("self-loop at vertex " + std::to_string(u), {u});
    const auto ru = uf.find(u);
    const auto rv = uf.find(v);
    if (ru == rv) {
      auto cycle = forest_path(n, edges, i, u, v);
      std::string text;
      for (Vertex x : cycle) text += std::to_string(x) + "-";
      text += std::to_string(u);
      throw NotAForestError("input is not a forest: cycle " + text, std::move(cycle));
    }
    uf.parent[ru] = rv;
  }
}

class Peeler {
 public:
  Peeler(std::size_t n, std::span<const Edge> edges, int k)
      : n_(n), k_(k), ends_(edges.begin(), edges.end()), edge_alive_(edges.size(), 1) {
    const std::size_t cap = n + edges.size();
    origin_.resize(n);
    std::iota(origin_.begin(), origin_.end(), Vertex{0});
    origin_.reserve(cap);
    deg_.assign(n, 0);
    leafnbrs_.assign(n, 0);
    state_.assign(n, kLive);
    queued_.assign(n, 0);
    counted_leaf_.assign(n, 0);
    for (const auto& [u, v] : edges) {
      ++deg_[u];
      ++deg_[v];
    }
    offset_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + deg_[v];
    incidence_.resize(2 * edges.size());
    std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      incidence_[fill[edges[e].first]++] = e;
      incidence_[fill[edges[e].second]++] = e;
    }
  }

  ForestSolution run() {
    ForestSolution out;
    for (Vertex v = 0; v < n_; ++v) {
      if (deg_[v] == 0) to_set(v);
    }
    for (Vertex v = 0; v < n_ && !failed_; ++v) {
      if (state_[v] == kLive && deg_[v] == 1) became_leaf(v);
    }
    for (Vertex v = 0; v < n_; ++v) consider(v);

    while (!failed_ && !work_.empty()) {
      const Vertex q = work_.front();
      work_.pop_front();
      queued_[q] = 0;
      if (!eligible(q)) continue;
      step(q);
    }
    out.copies = origin_.size() - n_;
    if (!failed_) {
      for (std::size_t v = 0; v < state_.size(); ++v) {
        if (state_[v] == kLive) throw std::logic_error("forest peeling stalled with live vertices");
      }
    }
    auto finish = [](std::vector<Vertex> vs) {
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      return vs;
    };
    out.dominated = finish(std::move(dominated_));
    if (!failed_) {
      auto d = finish(std::move(in_set_));
      std::vector<Vertex> both;
      std::set_intersection(d.begin(), d.end(), out.dominated.begin(), out.dominated.end(),
                            std::back_inserter(both));
      if (!both.empty()) throw std::logic_error("vertex both in and out of the k-DIS");
      out.dis = std::move(d);
    }
    return out;
  }

 private:
  enum State : unsigned char { kLive, kInSet, kDominated };

  template <class F>
  void for_each_live_edge(Vertex v, F&& f) const {
    auto visit = [&](std::size_t e) {
      if (edge_alive_[e] && (ends_[e].first == v || ends_[e].second == v)) f(e);
    };
    if (v < n_) {
      for (std::size_t i = offset_[v]; i < offset_[v + 1]; ++i) visit(incidence_[i]);
    } else {
      visit(copy_edge_[v - n_]);
    }
  }

  Vertex other(std::size_t e, Vertex v) const {
    return ends_[e].first == v ? ends_[e].second : ends_[e].first;
  }

  Vertex live_neighbor(Vertex v) const {
    Vertex w = v;
    for_each_live_edge(v, [&](std::size_t e) { w = other(e, v); });
    return w;
  }

  bool eligible(Vertex q) const {
    return state_[q] == kLive && leafnbrs_[q] >= 1 && deg_[q] >= 2 && deg_[q] - leafnbrs_[q] <= 1;
  }

  void consider(Vertex v) {
    if (!queued_[v] && eligible(v)) {
      queued_[v] = 1;
      work_.push_back(v);
    }
  }

  void to_set(Vertex v) {
    state_[v] = kInSet;
    in_set_.push_back(origin_[v]);
  }

  void became_leaf(Vertex v) {
    const Vertex w = live_neighbor(v);
    if (deg_[w] == 1) {
      // Two adjacent leaves: both must join the set, yet they are adjacent.
      failed_ = true;
      return;
    }
    counted_leaf_[v] = 1;
    ++leafnbrs_[w];
    consider(w);
  }

  void mark(Vertex v, State final_state) {
    if (final_state == kInSet) {
      to_set(v);
    } else {
      state_[v] = kDominated;
      dominated_.push_back(origin_[v]);
    }
  }

  /// Deletes the remaining edges of an already-marked vertex v.
  void detach(Vertex v) {
    std::vector<Vertex> touched;
    for_each_live_edge(v, [&](std::size_t e) {
      edge_alive_[e] = 0;
      const Vertex w = other(e, v);
      --deg_[w];
      if (counted_leaf_[v]) --leafnbrs_[w];
      touched.push_back(w);
    });
    deg_[v] = 0;
    for (Vertex w : touched) {
      if (state_[w] != kLive) continue;
      if (deg_[w] == 0) {
        to_set(w);
      } else if (deg_[w] == 1 && !failed_) {
        became_leaf(w);
      }
      consider(w);
    }
  }

  Vertex make_copy(Vertex u) {
    const Vertex c = static_cast<Vertex>(origin_.size());
    origin_.push_back(origin_[u]);
    deg_.push_back(1);
    leafnbrs_.push_back(0);
    state_.push_back(kLive);
    queued_.push_back(0);
    counted_leaf_.push_back(0);
    copy_edge_.push_back(0);
    return c;
  }

  /// Splits every remaining edge of u but one onto a fresh leaf copy of u.
  void split(Vertex u) {
    std::vector<std::size_t> edges;
    for_each_live_edge(u, [&](std::size_t e) { edges.push_back(e); });
    std::vector<Vertex> copies;
    for (std::size_t i = 1; i < edges.size(); ++i) {
      const std::size_t e = edges[i];
      const Vertex c = make_copy(u);
      copy_edge_[c - n_] = e;
      if (ends_[e].first == u) {
        ends_[e].first = c;
      } else {
        ends_[e].second = c;
      }
      --deg_[u];
      const Vertex w = other(e, c);
      if (counted_leaf_[w]) --leafnbrs_[u];
      copies.push_back(c);
    }
    for (Vertex c : copies) {
      if (deg_[c] != 1) throw std::logic_error("vertex copy is not a leaf");
      if (failed_) return;
      became_leaf(c);
    }
    if (!failed_ && deg_[u] == 1) became_leaf(u);
    consider(u);
  }

  void step(Vertex q) {
    const std::size_t leaves = leafnbrs_[q];
    const std::size_t others = deg_[q] - leaves;
    const auto k = static_cast<std::size_t>(k_);
    if (leaves < k && !(leaves + 1 == k && others == 1)) {
      failed_ = true;
      return;
    }
    std::vector<Vertex> leaf_list;
    Vertex forced = q;
    for_each_live_edge(q, [&](std::size_t e) {
      const Vertex w = other(e, q);
      if (deg_[w] == 1) {
        leaf_list.push_back(w);
      } else {
        forced = w;
      }
    });
    mark(q, kDominated);
    for (Vertex l : leaf_list) {
      mark(l, kInSet);
      detach(l);
    }
    detach(q);
    if (failed_ || leaves >= k) return;
    // q still needs its k-th dominator: the single non-leaf neighbor.
    if (state_[forced] == kLive && deg_[forced] >= 2) split(forced);
  }

  std::size_t n_;
  int k_;
  std::vector<Edge> ends_;
  std::vector<unsigned char> edge_alive_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> incidence_;
  std::vector<std::size_t> copy_edge_;
  std::vector<Vertex> origin_;
  std::vector<std::size_t> deg_;
  std::vector<std::size_t> leafnbrs_;
  std::vector<State> state_;
  std::vector<unsigned char> queued_;
  std::vector<unsigned char> counted_leaf_;
  std::deque<Vertex> work_;
  std::vector<Vertex> in_set_;
  std::vector<Vertex> dominated_;
  bool failed_ = false;
};

}  // namespace

ForestSolution solve_forest_kdis(std::size_t n, std::span<const Edge> edges, int k) {
  if (k < 2) {
    throw std::invalid_argument(
        "tree solver requires k >= 2; for k = 1 the 1-DISes are the maximal independent sets, "
        "use enumeration instead");
  }
  require_forest(n, edges);
  return Peeler(n, edges, k).run();
}

std::optional<VertexSet> solve_tree_kdis(const Graph& g, int k) {
  const auto edges = g.edges();
  auto sol = solve_forest_kdis(g.order(), edges, k);
  if (!sol.dis) return std::nullopt;
  return VertexSet::from_list(g.order(), *sol.dis);
}

}  // namespace kdis
