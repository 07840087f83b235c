#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kdis/graph.hpp"

namespace kdis {

/// Malformed graph6 input. offset() is the index of the offending byte.
class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line. A single trailing '\n' (or "\r\n") is accepted.
Graph graph6_decode(std::string_view text);

/// Canonical graph6 encoding (no trailing newline).
std::string graph6_encode(const Graph& g);

}  // namespace kdis
