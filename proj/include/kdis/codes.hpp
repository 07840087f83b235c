#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "kdis/graph.hpp"

namespace kdis {

/// Set of length-k words over F_3. A word is stored as its base-3 value
/// with the first coordinate most significant, which is also its vertex
/// index in power(K3, k).
class TernaryCode {
 public:
  using Word = std::uint32_t;

  TernaryCode(std::size_t length, std::vector<Word> words);
  /// Parses words like "012" (all of equal length).
  static TernaryCode from_strings(std::span<const std::string> words);

  std::size_t length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  bool contains(Word w) const;

  std::vector<std::uint8_t> digits(Word w) const;
  Word from_digits(std::span<const std::uint8_t> d) const;
  std::string word_string(Word w) const;
  /// One word per line, digits concatenated.
  std::string to_string() const;

  /// Adds v coordinate-wise (mod 3) to every word.
  TernaryCode translate(std::span<const std::uint8_t> v) const;

  friend bool operator==(const TernaryCode&, const TernaryCode&) = default;

 private:
  std::size_t length_;
  std::vector<Word> words_;
};

inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

std::size_t hamming_distance(const TernaryCode& c, TernaryCode::Word a, TernaryCode::Word b);

/// Minimum pairwise Hamming distance; kInfiniteDistance for a single word.
std::size_t min_distance(const TernaryCode& c);

/// |C| = 3^(k-1) and minimum distance >= 2.
bool is_mds2(const TernaryCode& c);

/// Number of k-DISes of (K3)^k, k in [1,4].
std::uint64_t count_mds_via_kdis(int k);

/// Proper 3-colorings of the Hamming graph H(k-1, 3) by exhaustive scan,
/// k in [1,3]. Each coloring f gives the code {(x, f(x))}.
std::uint64_t count_mds_bruteforce(int k);

/// Kernel of sum a_i x_i over F_3.
TernaryCode kernel_code(std::span<const std::uint8_t> functional);

/// Linear (k, 3^(k-1), 2)_3 codes: kernels of functionals with all
/// coefficients nonzero, one per scalar class, each verified with is_mds2.
std::vector<TernaryCode> linear_mds_codes(int k);
std::uint64_t count_linear_mds_q3(int k);

/// Codes obtained from the k-DISes of (K3)^k, sorted.
std::vector<TernaryCode> enumerate_mds_codes(int k);

TernaryCode kdis_to_code(const VertexSet& d, int k);
VertexSet code_to_kdis(const TernaryCode& c);

/// Codewords with nonzero first coordinate, first coordinate dropped,
/// adjacent at Hamming distance 1. Vertices follow the code's word order.
Graph residual_graph(const TernaryCode& c);

bool is_bipartite(const Graph& g);

}  // namespace kdis
