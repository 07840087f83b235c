#include <doctest.h>

#include <algorithm>
#include <random>

#include "kdis/generators.hpp"
#include "kdis/search.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace kdis;

namespace {
const Graph kP3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
const Graph kK22 = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});

std::vector<std::vector<Vertex>> lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) out.push_back(s.to_vector());
  return out;
}
}  // namespace

TEST_CASE("is_independent") {
  CHECK(is_independent(kP3, VertexSet(3, {0, 2})));
  CHECK_FALSE(is_independent(kP3, VertexSet(3, {0, 1})));
  CHECK(is_independent(petersen(), VertexSet(10)));
}

TEST_CASE("is_k_dominating") {
  CHECK(is_k_dominating(kP3, VertexSet(3, {0, 2}), 2));
  const Graph c5 = cycle(5);
  for (std::uint64_t s = 0; s < 32; ++s) {
    VertexSet set(5);
    for (Vertex v = 0; v < 5; ++v)
      if ((s >> v) & 1u) set.insert(v);
    if (is_independent(c5, set)) CHECK_FALSE(is_k_dominating(c5, set, 2));
  }
  CHECK(is_k_dominating(petersen(), VertexSet::full(10), 7));
}

TEST_CASE("is_kdis") {
  CHECK(is_kdis(kK22, VertexSet(4, {0, 1}), 2));
  CHECK_FALSE(is_kdis(kK22, VertexSet(4, {0, 2}), 2));
  CHECK(is_kdis(Graph(3), VertexSet(3, {0, 1, 2}), 5));
}

TEST_CASE("enumerate_kdis examples") {
  const std::size_t parts[] = {2, 2, 2};
  const auto octa = enumerate_kdis(complete_multipartite(parts), 2);
  CHECK(lists(octa) == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}, {4, 5}});
  CHECK(enumerate_kdis(cartesian_product(complete(3), complete(3)), 2).size() == 6);
  CHECK(enumerate_kdis(complete(5), 2).empty());
}

TEST_CASE("enumerate_kdis matches the subset oracle including order") {
  testgen::Rng rng(11);
  for (int iter = 0; iter < 150; ++iter) {
    const Graph g = testgen::random_graph(0, 12, rng);
    for (int k = 1; k <= 3; ++k) {
      const auto sets = enumerate_kdis(g, k);
      REQUIRE(lists(sets) == oracle::all_kdis(g, k));
      for (const auto& s : sets) CHECK(is_kdis(g, s, k));
    }
  }
}

TEST_CASE("count_kdis examples") {
  CHECK(count_kdis(cartesian_product(complete(4), complete(4)), 2) == 24);
  CHECK(count_kdis(turan(9, 3), 3) == 3);
  CHECK(count_kdis(complete_bipartite(4, 4), 4) == 2);
  CHECK(count_kdis(Graph(0), 3) == 1);
  CHECK(count_kdis_bruteforce(Graph(0), 3) == 1);
  CHECK(count_kdis(Graph(6), 2) == 1);
  CHECK_THROWS_AS(count_kdis(kP3, 0), std::invalid_argument);
}

TEST_CASE("count_kdis on multi-word graphs") {
  // 40 disjoint copies of K_{1,2}: each has exactly one 2-DIS.
  CHECK(count_kdis(copies(star(2), 40), 2) == 1);
  // 70 disjoint edges: 2^70 maximal independent sets overflow 64 bits.
  CHECK_THROWS_AS(count_kdis(copies(complete(2), 70), 1), std::overflow_error);
  CHECK(count_kdis(copies(complete(2), 63), 1) == (std::uint64_t{1} << 63));
  CHECK_THROWS_AS(count_kdis(Graph(257), 1), std::invalid_argument);
}

TEST_CASE("brute force limits") {
  CHECK(count_kdis_bruteforce(cartesian_product(complete(3), complete(3)), 2) == 6);
  CHECK_THROWS_AS(count_kdis_bruteforce(Graph(26), 1), std::invalid_argument);
}

TEST_CASE("count_kdis_small agrees with count_kdis") {
  testgen::Rng rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    const Graph g = testgen::random_graph(0, 20, rng);
    std::vector<std::uint64_t> rows;
    for (Vertex v = 0; v < g.order(); ++v) rows.push_back(g.row(v)[0]);
    for (int k = 1; k <= 3; ++k) CHECK(count_kdis_small(rows, k) == count_kdis(g, k));
  }
}

TEST_CASE("k = 1 counts maximal independent sets") {
  testgen::Rng rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    const Graph g = testgen::random_graph(0, 14, rng);
    CHECK(count_kdis(g, 1) == oracle::count_maximal_independent(g));
  }
}

TEST_CASE("max_independent_set_size") {
  CHECK(max_independent_set_size(petersen()) == 4);
  CHECK(max_independent_set_size(complete(7)) == 1);
  CHECK(max_independent_set_size(Graph(9)) == 9);
  CHECK(max_independent_set_size(Graph(0)) == 0);
  testgen::Rng rng(9);
  for (int iter = 0; iter < 100; ++iter) {
    const Graph g = testgen::random_graph(1, 14, rng);
    std::size_t best = 0;
    for (const auto& s : oracle::all_kdis(g, 1)) best = std::max(best, s.size());
    CHECK(max_independent_set_size(g) == best);
  }
}

TEST_CASE("star_witness") {
  auto stars = star_witness(kP3, VertexSet(3, {0, 2}), 2);
  REQUIRE(stars.size() == 1);
  CHECK(stars[0] == Star{1, VertexSet(3, {0, 2})});

  stars = star_witness(kK22, VertexSet(4, {0, 1}), 2);
  CHECK(stars == std::vector<Star>{{2, VertexSet(4, {0, 1})}, {3, VertexSet(4, {0, 1})}});

  const Graph rook = cartesian_product(complete(3), complete(3));
  const VertexSet diagonal(9, {0, 4, 8});
  REQUIRE(is_kdis(rook, diagonal, 2));
  stars = star_witness(rook, diagonal, 2);
  CHECK(stars.size() == 6);
  for (const auto& s : stars) CHECK(s.leaves.size() == 2);

  CHECK_THROWS(star_witness(kP3, VertexSet(3, {0}), 2));
}

TEST_CASE("star_witness rebuilds every edge touching the set") {
  testgen::Rng rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    const Graph g = testgen::random_graph(1, 12, rng);
    for (int k = 1; k <= 2; ++k) {
      for (const auto& d : enumerate_kdis(g, k)) {
        std::size_t edges = 0;
        for (const auto& s : star_witness(g, d, k)) {
          CHECK_FALSE(d.contains(s.center));
          CHECK(s.leaves.size() >= static_cast<std::size_t>(k));
          edges += s.leaves.size();
        }
        std::size_t touching = 0;
        for (const auto& [u, v] : g.edges()) touching += d.contains(u) || d.contains(v);
        CHECK(edges == touching);
      }
    }
  }
}
