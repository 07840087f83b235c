#include "kdis/codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "kdis/generators.hpp"
#include "kdis/search.hpp"

namespace kdis {

namespace {

std::uint32_t pow3(std::size_t e) {
  std::uint32_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 3;
  return r;
}

void check_range(int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi) {
    throw std::invalid_argument(std::string(what) + ": k must be in [" + std::to_string(lo) + "," +
                                std::to_string(hi) + "], got " + std::to_string(k));
  }
}

}  // namespace

TernaryCode::TernaryCode(std::size_t length, std::vector<Word> words)
    : length_(length), words_(std::move(words)) {
  if (length_ > 19) throw std::invalid_argument("ternary code length too large");
  const Word limit = pow3(length_);
  for (Word w : words_) {
    if (w >= limit) throw std::invalid_argument("codeword out of range for length " + std::to_string(length_));
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

TernaryCode TernaryCode::from_strings(std::span<const std::string> words) {
  if (words.empty()) throw std::invalid_argument("empty code");
  const std::size_t len = words.front().size();
  std::vector<Word> out;
  for (const auto& s : words) {
    if (s.size() != len) throw std::invalid_argument("codewords of unequal length");
    Word w = 0;
    for (char c : s) {
      if (c < '0' || c > '2') throw std::invalid_argument("codeword digit outside {0,1,2}: " + s);
      w = w * 3 + static_cast<Word>(c - '0');
    }
    out.push_back(w);
  }
  return TernaryCode(len, std::move(out));
}

bool TernaryCode::contains(Word w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::vector<std::uint8_t> TernaryCode::digits(Word w) const {
  std::vector<std::uint8_t> d(length_);
  for (std::size_t i = length_; i-- > 0; w /= 3) d[i] = static_cast<std::uint8_t>(w % 3);
  return d;
}

TernaryCode::Word TernaryCode::from_digits(std::span<const std::uint8_t> d) const {
  Word w = 0;
  for (auto x : d) w = w * 3 + x;
  return w;
}

std::string TernaryCode::word_string(Word w) const {
  std::string s;
  for (auto x : digits(w)) s.push_back(static_cast<char>('0' + x));
  return s;
}

std::string TernaryCode::to_string() const {
  std::string s;
  for (Word w : words_) s += word_string(w) + "\n";
  return s;
}

TernaryCode TernaryCode::translate(std::span<const std::uint8_t> v) const {
  if (v.size() != length_) throw std::invalid_argument("translation vector has wrong length");
  std::vector<Word> out;
  for (Word w : words_) {
    auto d = digits(w);
    for (std::size_t i = 0; i < length_; ++i) d[i] = static_cast<std::uint8_t>((d[i] + v[i]) % 3);
    out.push_back(from_digits(d));
  }
  return TernaryCode(length_, std::move(out));
}

std::size_t hamming_distance(const TernaryCode& c, TernaryCode::Word a, TernaryCode::Word b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < c.length(); ++i, a /= 3, b /= 3) d += (a % 3) != (b % 3);
  return d;
}

std::size_t min_distance(const TernaryCode& c) {
  if (c.size() == 0) throw std::invalid_argument("min_distance of an empty code");
  if (c.size() == 1) return kInfiniteDistance;
  // Neighbor lookups settle distances 1 and 2 without the quadratic scan.
  std::vector<unsigned char> member(pow3(c.length()), 0);
  for (auto w : c.words()) member[w] = 1;
  const std::size_t n = c.length();
  auto shifted = [&](TernaryCode::Word w, std::size_t pos, std::uint32_t delta) {
    const std::uint32_t place = pow3(n - 1 - pos);
    const std::uint32_t digit = (w / place) % 3;
    return w - digit * place + ((digit + delta) % 3) * place;
  };
  for (auto w : c.words())
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t d = 1; d <= 2; ++d)
        if (member[shifted(w, i, d)]) return 1;
  for (auto w : c.words())
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t di = 1; di <= 2; ++di) {
        const auto wi = shifted(w, i, di);
        for (std::size_t j = i + 1; j < n; ++j)
          for (std::uint32_t dj = 1; dj <= 2; ++dj)
            if (member[shifted(wi, j, dj)]) return 2;
      }
  std::size_t best = kInfiniteDistance;
  const auto& ws = c.words();
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) best = std::min(best, hamming_distance(c, ws[i], ws[j]));
  return best;
}

bool is_mds2(const TernaryCode& c) {
  if (c.length() == 0) return false;
  return c.size() == pow3(c.length() - 1) && min_distance(c) >= 2;
}

std::uint64_t count_mds_via_kdis(int k) {
  check_range(k, 1, 4, "count_mds_via_kdis");
  return count_kdis(power(complete(3), static_cast<std::size_t>(k)), k);
}

std::uint64_t count_mds_bruteforce(int k) {
  check_range(k, 1, 3, "count_mds_bruteforce");
  const std::size_t dim = static_cast<std::size_t>(k - 1);
  const std::uint32_t points = pow3(dim);
  // Hamming-adjacent pairs of F_3^dim.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> adjacent;
  for (std::uint32_t a = 0; a < points; ++a)
    for (std::uint32_t b = a + 1; b < points; ++b) {
      std::size_t diff = 0;
      for (std::uint32_t x = a, y = b, i = 0; i < dim; ++i, x /= 3, y /= 3) diff += (x % 3) != (y % 3);
      if (diff == 1) adjacent.emplace_back(a, b);
    }
  std::vector<std::uint8_t> f(points, 0);
  std::uint64_t total = 0;
  for (;;) {
    bool proper = std::all_of(adjacent.begin(), adjacent.end(),
                              [&](const auto& e) { return f[e.first] != f[e.second]; });
    if (proper) ++total;
    std::size_t i = 0;
    while (i < points && f[i] == 2) f[i++] = 0;
    if (i == points) break;
    ++f[i];
  }
  return total;
}

TernaryCode kernel_code(std::span<const std::uint8_t> functional) {
  const std::size_t n = functional.size();
  std::vector<TernaryCode::Word> words;
  const TernaryCode shape(n, {});
  for (TernaryCode::Word w = 0; w < pow3(n); ++w) {
    const auto d = shape.digits(w);
    unsigned s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<unsigned>(d[i]) * functional[i];
    if (s % 3 == 0) words.push_back(w);
  }
  return TernaryCode(n, std::move(words));
}

std::vector<TernaryCode> linear_mds_codes(int k) {
  check_range(k, 1, 8, "count_linear_mds_q3");
  const std::size_t n = static_cast<std::size_t>(k);
  std::vector<TernaryCode> out;
  // Coefficients in {1,2}; scaling by 2 swaps them, so fixing a_1 = 1 picks
  // one representative per class.
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<std::uint8_t> a(n, 1);
    for (std::size_t i = 1; i < n; ++i) a[i] = ((mask >> (i - 1)) & 1u) ? 2 : 1;
    auto code = kernel_code(a);
    if (!is_mds2(code)) throw std::logic_error("kernel code failed the MDS check");
    out.push_back(std::move(code));
  }
  return out;
}

std::uint64_t count_linear_mds_q3(int k) { return linear_mds_codes(k).size(); }

TernaryCode kdis_to_code(const VertexSet& d, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (d.universe() != pow3(static_cast<std::size_t>(k))) {
    throw std::invalid_argument("vertex set is not over (K3)^k");
  }
  std::vector<TernaryCode::Word> words;
  for (Vertex v : d.to_vector()) words.push_back(v);
  return TernaryCode(static_cast<std::size_t>(k), std::move(words));
}

VertexSet code_to_kdis(const TernaryCode& c) {
  VertexSet d(pow3(c.length()));
  for (auto w : c.words()) d.insert(w);
  return d;
}

std::vector<TernaryCode> enumerate_mds_codes(int k) {
  check_range(k, 1, 4, "enumerate_mds_codes");
  std::vector<TernaryCode> out;
  for (const auto& d : enumerate_kdis(power(complete(3), static_cast<std::size_t>(k)), k)) {
    out.push_back(kdis_to_code(d, k));
  }
  return out;
}

Graph residual_graph(const TernaryCode& c) {
  if (c.length() < 2) throw std::invalid_argument("residual graph needs length >= 2");
  const std::uint32_t lead = pow3(c.length() - 1);
  std::vector<TernaryCode::Word> tails;
  for (auto w : c.words())
    if (w / lead != 0) tails.push_back(w % lead);
  const TernaryCode shape(c.length() - 1, {});
  GraphBuilder b(tails.size());
  for (Vertex i = 0; i < tails.size(); ++i)
    for (Vertex j = i + 1; j < tails.size(); ++j)
      if (hamming_distance(shape, tails[i], tails[j]) == 1) b.add_edge(i, j);
  return std::move(b).build();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u).to_vector()) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace kdis
