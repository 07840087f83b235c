#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "kdis/bounds.hpp"
#include "kdis/extremal.hpp"
#include "kdis/generators.hpp"
#include "kdis/graph6.hpp"
#include "kdis/search.hpp"
#include "support/oracles.hpp"

using namespace kdis;

namespace {

Graph graph_of_index(int n, std::uint64_t index) {
  GraphBuilder b(static_cast<std::size_t>(n));
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((index >> bit) & 1u) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

bool has_witness_like(const SearchReport& r, const Graph& shape) {
  for (const auto& w : r.witnesses)
    if (oracle::isomorphic(graph6_decode(w), shape)) return true;
  return false;
}

SearchReport naive_scan(int n, int k, bool connected_only) {
  SearchReport r;
  r.n = n;
  r.k = k;
  bool any = false;
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Graph g = graph_of_index(n, idx);
    if (connected_only && !is_connected(g)) continue;
    const auto c = oracle::count_kdis(g, k);
    if (!any || c > r.max_count) {
      r.max_count = c;
      r.witnesses.clear();
      any = true;
    }
    if (c == r.max_count && r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(graph6_encode(g));
  }
  return r;
}

}  // namespace

TEST_CASE("max_kdis_count examples") {
  auto r = max_kdis_count(3, 2);
  CHECK(r.max_count == 1);
  CHECK(has_witness_like(r, path(3)));
  r = max_kdis_count(6, 2);
  CHECK(r.max_count == 3);
  const std::size_t parts[] = {2, 2, 2};
  CHECK(has_witness_like(r, complete_multipartite(parts)));
  r = max_kdis_count(5, 1);
  CHECK(r.max_count == 6);
  CHECK(r.graphs_scanned == 1024);
  CHECK(max_kdis_count(0, 2).max_count == 1);
  CHECK(max_kdis_count(1, 2).max_count == 1);
  CHECK(max_kdis_count(2, 1).max_count == 2);
}

TEST_CASE("extension scan matches the per-graph oracle scan") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (bool conn : {false, true}) {
        ExtremalOptions opts;
        opts.connected_only = conn;
        const auto fast = max_kdis_count(n, k, opts);
        const auto slow = naive_scan(n, k, conn);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(fast.max_count == slow.max_count);
        CHECK(fast.witnesses == slow.witnesses);
      }
    }
  }
}

TEST_CASE("results do not depend on shards or threads") {
  for (int k = 1; k <= 2; ++k) {
    const auto base = max_kdis_count(6, k);
    for (unsigned shards : {2u, 3u, 7u, 64u, 5000u}) {
      for (unsigned threads : {1u, 4u}) {
        ExtremalOptions opts;
        opts.shards = shards;
        opts.threads = threads;
        const auto r = max_kdis_count(6, k, opts);
        CHECK(r.max_count == base.max_count);
        CHECK(r.witnesses == base.witnesses);
        CHECK(r.graphs_scanned == base.graphs_scanned);
      }
    }
  }
}

TEST_CASE("witnesses are capped and attain the maximum") {
  const auto r = max_kdis_count(7, 1);
  CHECK(r.max_count == 12);
  CHECK(r.witnesses.size() == kMaxWitnesses);
  for (const auto& w : r.witnesses) CHECK(count_kdis(graph6_decode(w), 1) == 12);
}

TEST_CASE("argument checks") {
  CHECK_THROWS(max_kdis_count(10, 2));
  CHECK_THROWS(max_kdis_count(9, 2));
  CHECK_THROWS(max_kdis_count(5, 0));
  ExtremalOptions opts;
  opts.shards = 0;
  CHECK_THROWS(max_kdis_count(4, 2, opts));
  opts.shards = 1;
  opts.checkpoint_path = "unused";
  CHECK_THROWS(max_kdis_count(6, 2, opts));
}

TEST_CASE("n = 9 checkpoint resume") {
  const auto path = std::filesystem::temp_directory_path() / "kdis_checkpoint_test.txt";
  const unsigned shards = 1u << 20;  // 256 base graphs per shard
  {
    std::ofstream out(path);
    for (unsigned i = 0; i + 1 < shards; ++i) out << i << ' ' << (i == 17 ? 6 : 2) << '\n';
  }
  ExtremalOptions opts;
  opts.shards = shards;
  opts.threads = 1;
  opts.allow_long_run = true;
  opts.checkpoint_path = path.string();
  const auto r = max_kdis_count(9, 2, opts);
  CHECK(r.max_count == 6);
  std::ifstream in(path);
  std::string line, last;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    last = line;
  }
  CHECK(lines == shards);
  CHECK(last.rfind(std::to_string(shards - 1) + " ", 0) == 0);
  std::filesystem::remove(path);

  {
    std::ofstream out(path);
    out << "garbage\n";
  }
  CHECK_THROWS(max_kdis_count(9, 2, opts));
  std::filesystem::remove(path);
}

TEST_CASE("tree maxima") {
  CHECK(max_kdis_count_trees(8, 2).max_count == 1);
  CHECK(max_kdis_count_trees(8, 1).max_count == 9);
  const auto r = max_kdis_count_trees(7, 1);
  CHECK(r.max_count == 8);
  CHECK(r.graphs_scanned == 16807);
  for (const auto& w : r.witnesses) {
    const Graph t = graph6_decode(w);
    CHECK(t.edge_count() == 6);
    CHECK(is_connected(t));
  }
  for (unsigned n = 2; n <= 7; ++n) CHECK(max_kdis_count_trees(static_cast<int>(n), 1).max_count == oracle::trees_max_mis(n));
  CHECK_THROWS(max_kdis_count_trees(1, 2));
  CHECK_THROWS(max_kdis_count_trees(10, 2));
}

TEST_CASE("report JSON shape") {
  const auto j = to_json(max_kdis_count(4, 2));
  CHECK(j.size() == 6);
  CHECK(j.at("n") == 4);
  CHECK(j.at("k") == 2);
  CHECK(j.at("max") == 2);
  CHECK(j.at("scanned") == 64);
  CHECK(j.at("witnesses").is_array());
  CHECK(j.at("seconds").is_number());
}

TEST_CASE("alpha_bound") {
  auto a = alpha_bound(1);
  CHECK(a.value == doctest::Approx(std::cbrt(3.0)).epsilon(1e-12));
  CHECK(a.d == 2);
  a = alpha_bound(2);
  CHECK(std::abs(a.value - std::pow(3.0, 0.2)) < 1e-12);
  CHECK(a.d == 4);
  a = alpha_bound(3);
  CHECK(std::abs(a.value - std::pow(2.0, 0.25)) < 1e-12);
  CHECK(a.d == 3);
  a = alpha_bound_all_degrees(2);
  CHECK(std::abs(a.value - std::cbrt(2.0)) < 1e-12);
  CHECK(a.d == 2);
  for (int k = 1; k <= 10; ++k) {
    const auto b = alpha_bound(k);
    // The maximizer sits well inside the scanned window.
    CHECK(b.d < 8 * k + 8);
    CHECK(b.value > 1.0);
  }
  CHECK_THROWS(alpha_bound(0));
}

TEST_CASE("poly_root") {
  const double p1[] = {1, 0, 0, -1, -1};
  const double r1 = poly_root(p1, 1, 2);
  CHECK(std::abs(poly_eval(p1, r1)) < 1e-10);
  CHECK(r1 == doctest::Approx(1.2207).epsilon(1e-4));
  const double p2[] = {1, 0, 0, 0, -1, 0, 0, -1, -2};
  const double r2 = poly_root(p2, 1, 2);
  CHECK(std::abs(poly_eval(p2, r2)) < 1e-10);
  CHECK(r2 == doctest::Approx(1.2406).epsilon(1e-4));
  const double p3[] = {1, 0, 0, 0, -1, 0, 0, -2};
  const double r3 = poly_root(p3, 1, 2);
  CHECK(std::abs(poly_eval(p3, r3)) < 1e-10);
  CHECK(r3 < std::pow(3.0, 0.2));
  CHECK_THROWS(poly_root(p1, 2, 3));
  const double linear[] = {2, -1};
  CHECK(poly_root(linear, 0, 1) == doctest::Approx(0.5));
  const auto t = tau_roots();
  CHECK(t.tau1 == r1);
  CHECK(t.tau1 < t.tau2);
  CHECK(t.tau2 < std::pow(3.0, 0.2));
  CHECK(t.tau_pair < std::pow(3.0, 0.2));
}

TEST_CASE("expected_kdis_count") {
  RandomModelParams p;
  p.n = p.t = 5;
  p.k = 2;
  p.p = 0.3;
  CHECK(expected_kdis_count(p) == doctest::Approx(std::pow(0.7, 10)));
  p = {};
  p.n = 2;
  p.t = 1;
  p.k = 1;
  p.p = 0.5;
  CHECK(expected_kdis_count(p) == doctest::Approx(1.0));
  p.n = 6;
  p.t = 3;
  p.k = 3;
  p.p = 1.0;
  CHECK(expected_kdis_count(p) == 0.0);
  p.p = 1.5;
  CHECK_THROWS(expected_kdis_count(p));
}

TEST_CASE("expected count equals the exact average over all graphs on 5 vertices") {
  const int n = 5;
  const double prob = 0.3;
  for (int t = 1; t <= n; ++t) {
    for (int k = 1; k <= t; ++k) {
      double exact = 0.0;
      for (std::uint64_t idx = 0; idx < 1024; ++idx) {
        const Graph g = graph_of_index(n, idx);
        const auto m = static_cast<int>(g.edge_count());
        std::size_t hits = 0;
        for (const auto& s : oracle::all_kdis(g, k)) hits += s.size() == static_cast<std::size_t>(t);
        exact += hits * std::pow(prob, m) * std::pow(1 - prob, 10 - m);
      }
      RandomModelParams p{n, t, k, prob, 1000, 0};
      CHECK(expected_kdis_count(p) == doctest::Approx(exact).epsilon(1e-9));
    }
  }
}

TEST_CASE("monte_carlo_expected") {
  RandomModelParams p{8, 3, 2, 0.5, 20000, 7};
  const auto a = monte_carlo_expected(p);
  CHECK(std::abs(a.mean - expected_kdis_count(p)) < 4 * a.standard_error);
  const auto b = monte_carlo_expected(p);
  CHECK(a.mean == b.mean);
  p.seed = 8;
  CHECK(monte_carlo_expected(p).mean != a.mean);

  RandomModelParams zero{6, 6, 2, 0.0, 1000, 1};
  CHECK(monte_carlo_expected(zero).mean == 1.0);
  zero.t = 4;
  CHECK(monte_carlo_expected(zero).mean == 0.0);
  RandomModelParams one{6, 1, 2, 1.0, 1000, 1};
  CHECK(monte_carlo_expected(one).mean == 0.0);
  one.samples = 999;
  CHECK_THROWS(monte_carlo_expected(one));
}

TEST_CASE("SplitMix64 reference output") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(SplitMix64::stream(5, 3).next() == SplitMix64::stream(5, 3).next());
  CHECK(SplitMix64::stream(5, 3).next() != SplitMix64::stream(5, 4).next());
  SplitMix64 u(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}
