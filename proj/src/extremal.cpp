#include "kdis/extremal.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "kdis/graph.hpp"
#include "kdis/graph6.hpp"
#include "kdis/search.hpp"

namespace kdis {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Keeps the running maximum and the smallest kMaxWitnesses keys attaining it.
class Best {
 public:
  void offer(std::uint64_t count, std::uint64_t key) {
    if (count < max_ || (count == max_ && full() && key > keys_.top())) return;
    if (count > max_ || !seen_) {
      max_ = count;
      seen_ = true;
      keys_ = {};
    }
    keys_.push(key);
    if (keys_.size() > kMaxWitnesses) keys_.pop();
  }

  bool seen() const { return seen_; }
  std::uint64_t max() const { return max_; }

  std::vector<std::uint64_t> sorted_keys() const {
    auto copy = keys_;
    std::vector<std::uint64_t> out;
    while (!copy.empty()) {
      out.push_back(copy.top());
      copy.pop();
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  bool full() const { return keys_.size() >= kMaxWitnesses; }

  bool seen_ = false;
  std::uint64_t max_ = 0;
  std::priority_queue<std::uint64_t> keys_;  // max-heap: top is the largest kept key
};

Graph graph_from_rows(std::span<const std::uint64_t> rows) {
  GraphBuilder b(rows.size());
  for (Vertex v = 0; v < rows.size(); ++v) {
    for (std::uint64_t r = rows[v] >> v >> 1; r; r &= r - 1) {
      b.add_edge(v, static_cast<Vertex>(v + 1 + std::countr_zero(r)));
    }
  }
  return std::move(b).build();
}

std::vector<std::uint64_t> rows_from_index(int n, std::uint64_t index) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((index >> bit) & 1u) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return rows;
}

bool connected(std::span<const std::uint64_t> rows) {
  const std::size_t n = rows.size();
  if (n <= 1) return true;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

struct Candidate {
  std::uint32_t set;
  std::uint32_t tight;  // A(I)
};

class ExtensionScanner {
 public:
  ExtensionScanner(int n, int k, bool connected_only)
      : n_(n), m_(n - 1), k_(k), connected_only_(connected_only),
        base_bits_(m_ * (m_ - 1) / 2), counts_(std::size_t{1} << m_) {}

  std::uint64_t base_count() const { return std::uint64_t{1} << base_bits_; }

  void scan(std::uint64_t lo, std::uint64_t hi, Best& best) {
    std::array<std::uint32_t, 64> base{};
    const std::uint32_t subsets = std::uint32_t{1} << m_;
    for (std::uint64_t b = lo; b < hi; ++b) {
      load_base(b, base);
      candidates_.clear();
      collect(base, 0, 0);
      std::fill(counts_.begin(), counts_.end(), 0);
      for (const auto& c : candidates_) {
        if (c.tight == 0) {
          for (std::uint32_t s = 0; s < subsets; ++s) {
            counts_[s] += (std::popcount(c.set & s) >= k_) + ((c.set & s) == 0);
          }
        } else {
          for (std::uint32_t s = 0; s < subsets; ++s) {
            counts_[s] += ((c.set & s) | (c.tight & ~s)) == 0;
          }
        }
      }
      for (std::uint32_t s = 0; s < subsets; ++s) {
        if (counts_[s] < best.max() && best.seen()) continue;
        if (connected_only_ && !full_connected(base, s)) continue;
        best.offer(counts_[s], b | (std::uint64_t{s} << base_bits_));
      }
    }
  }

 private:
  void load_base(std::uint64_t b, std::array<std::uint32_t, 64>& base) const {
    std::fill(base.begin(), base.begin() + m_, 0);
    int bit = 0;
    for (int j = 1; j < m_; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if ((b >> bit) & 1u) {
          base[i] |= 1u << j;
          base[j] |= 1u << i;
        }
      }
    }
  }

  void collect(const std::array<std::uint32_t, 64>& base, int v, std::uint32_t set) {
    if (v == m_) {
      std::uint32_t tight = 0;
      for (int u = 0; u < m_; ++u) {
        if ((set >> u) & 1u) continue;
        const int c = std::popcount(base[u] & set);
        if (c < k_ - 1) return;
        if (c == k_ - 1) tight |= 1u << u;
      }
      candidates_.push_back({set, tight});
      return;
    }
    collect(base, v + 1, set);
    if ((base[v] & set) == 0) collect(base, v + 1, set | (1u << v));
  }

  bool full_connected(const std::array<std::uint32_t, 64>& base, std::uint32_t s) const {
    std::array<std::uint64_t, 64> rows{};
    for (int v = 0; v < m_; ++v) rows[v] = base[v] | (((s >> v) & 1u) ? std::uint64_t{1} << m_ : 0);
    rows[m_] = s;
    return connected(std::span<const std::uint64_t>(rows.data(), n_));
  }

  int n_, m_, k_;
  bool connected_only_;
  int base_bits_;
  std::vector<std::uint32_t> counts_;
  std::vector<Candidate> candidates_;
};

std::map<unsigned, std::uint64_t> read_checkpoint(const std::string& path, unsigned shards) {
  std::map<unsigned, std::uint64_t> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    unsigned id = 0;
    std::uint64_t value = 0;
    if (!(ls >> id >> value) || id >= shards) {
      throw std::runtime_error("malformed checkpoint line: \"" + line + "\"");
    }
    done[id] = value;
  }
  return done;
}

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
}

}  // namespace

SearchReport max_kdis_count(int n, int k, const ExtremalOptions& options) {
  check_k(k);
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > 9) throw std::invalid_argument("exhaustive search supports n <= 9");
  if (n == 9 && !options.allow_long_run) {
    throw std::invalid_argument("n = 9 scans 2^36 graphs; pass the long-run flag to allow it");
  }
  if (options.shards < 1) throw std::invalid_argument("shard count must be positive");
  if (options.checkpoint_path && n != 9) {
    throw std::invalid_argument("checkpoint files are only used for n = 9");
  }
  const auto start = Clock::now();
  SearchReport report;
  report.n = n;
  report.k = k;
  if (n == 0) {
    report.max_count = 1;
    report.witnesses = {graph6_encode(Graph(0))};
    report.graphs_scanned = 1;
    report.elapsed_seconds = seconds_since(start);
    return report;
  }

  const unsigned shards = options.shards;
  std::map<unsigned, std::uint64_t> finished;
  if (options.checkpoint_path) finished = read_checkpoint(*options.checkpoint_path, shards);

  const std::uint64_t bases = ExtensionScanner(n, k, false).base_count();
  auto shard_begin = [&](unsigned i) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(bases) * i / shards);
  };

  std::vector<Best> results(shards);
  std::atomic<unsigned> next{0};
  std::mutex checkpoint_mutex;
  auto worker = [&] {
    ExtensionScanner scanner(n, k, options.connected_only);
    for (unsigned i; (i = next.fetch_add(1)) < shards;) {
      if (finished.count(i)) continue;
      scanner.scan(shard_begin(i), shard_begin(i + 1), results[i]);
      if (options.checkpoint_path) {
        std::lock_guard lock(checkpoint_mutex);
        std::ofstream out(*options.checkpoint_path, std::ios::app);
        out << i << ' ' << results[i].max() << '\n';
      }
    }
  };
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, shards);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  bool any = false;
  for (unsigned i = 0; i < shards; ++i) {
    if (auto it = finished.find(i); it != finished.end()) {
      report.max_count = std::max(report.max_count, it->second);
      any = true;
    } else if (results[i].seen()) {
      report.max_count = any ? std::max(report.max_count, results[i].max()) : results[i].max();
      any = true;
    }
  }
  std::vector<std::uint64_t> keys;
  for (unsigned i = 0; i < shards; ++i) {
    if (results[i].seen() && results[i].max() == report.max_count) {
      auto k_i = results[i].sorted_keys();
      keys.insert(keys.end(), k_i.begin(), k_i.end());
    }
  }
  std::sort(keys.begin(), keys.end());
  if (keys.size() > kMaxWitnesses) keys.resize(kMaxWitnesses);
  for (std::uint64_t key : keys) {
    const auto rows = rows_from_index(n, key);
    const Graph g = graph_from_rows(rows);
    if (count_kdis(g, k) != report.max_count) {
      throw std::logic_error("witness " + std::to_string(key) + " does not attain the maximum");
    }
    report.witnesses.push_back(graph6_encode(g));
  }
  report.graphs_scanned = std::uint64_t{1} << (n * (n - 1) / 2);
  report.elapsed_seconds = seconds_since(start);
  return report;
}

SearchReport max_kdis_count_trees(int n, int k) {
  check_k(k);
  if (n < 2 || n > 9) throw std::invalid_argument("tree search supports 2 <= n <= 9");
  const auto start = Clock::now();
  const int len = n - 2;
  std::vector<int> seq(static_cast<std::size_t>(len), 0);
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  Best best;
  std::uint64_t ordinal = 0;

  auto decode = [&] {
    std::fill(degree.begin(), degree.end(), 1);
    std::fill(rows.begin(), rows.end(), 0);
    for (int x : seq) ++degree[x];
    auto link = [&](int a, int b) {
      rows[a] |= std::uint64_t{1} << b;
      rows[b] |= std::uint64_t{1} << a;
    };
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
      link(leaf, x);
      if (--degree[x] == 1 && x < ptr) {
        leaf = x;
      } else {
        ++ptr;
        while (degree[ptr] != 1) ++ptr;
        leaf = ptr;
      }
    }
    link(leaf, n - 1);
  };

  for (;;) {
    decode();
    const std::uint64_t count = count_kdis_small(rows, k);
    best.offer(count, ordinal);
    ++ordinal;
    int pos = len - 1;
    while (pos >= 0 && ++seq[pos] == n) seq[pos--] = 0;
    if (pos < 0) break;
  }

  SearchReport report;
  report.n = n;
  report.k = k;
  report.max_count = best.max();
  report.graphs_scanned = ordinal;
  for (std::uint64_t key : best.sorted_keys()) {
    std::uint64_t rest = key;
    for (int i = len - 1; i >= 0; --i) {
      seq[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    decode();
    const Graph g = graph_from_rows(rows);
    if (count_kdis(g, k) != report.max_count) throw std::logic_error("tree witness mismatch");
    report.witnesses.push_back(graph6_encode(g));
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

nlohmann::json to_json(const SearchReport& report) {
  return {{"n", report.n},
          {"k", report.k},
          {"max", report.max_count},
          {"witnesses", report.witnesses},
          {"scanned", report.graphs_scanned},
          {"seconds", report.elapsed_seconds}};
}

}  // namespace kdis
