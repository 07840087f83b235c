#include "kdis/graph6.hpp"

namespace kdis {

namespace {

constexpr int kBias = 63;

int sextet(std::string_view s, std::size_t pos) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw Graph6Error("character out of graph6 range", pos);
  return c - kBias;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(sextet(text, 0));
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw Graph6Error("8-byte size header not supported", 1);
    }
    if (text.size() < 4) throw Graph6Error("truncated size header", text.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text, i));
    if (n < 63) throw Graph6Error("non-canonical size header", 0);
    pos = 4;
  }
  if (n > kMaxVertices) throw Graph6Error("order " + std::to_string(n) + " exceeds cap", 0);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos < need) throw Graph6Error("truncated adjacency data", text.size());
  if (text.size() - pos > need) throw Graph6Error("trailing characters", pos + need);

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + need - 1;
    const int byte = sextet(text, last);
    const int pad = static_cast<int>(6 - bits % 6);
    if (byte & ((1 << pad) - 1)) throw Graph6Error("nonzero padding bits", last);
  }
  return std::move(b).build();
}

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int fill = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        fill = 0;
      }
    }
  }
  if (fill > 0) out.push_back(static_cast<char>((acc << (6 - fill)) + kBias));
  return out;
}

}  // namespace kdis
