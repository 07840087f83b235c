#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "kdis/graph.hpp"

namespace kdis {

class ExprError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluates a generator expression such as "cart(K3,K3)" or
/// "union(cone(Kb(2,2)),kneser(5,2))". Whitespace is ignored.
///
///   K<n> | K(n)          complete graph
///   Kb(a,b)              complete bipartite
///   Km(a,b,...)          complete multipartite
///   turan(n,r)  kneser(n,t)  path(n)  cycle(n)  star(t)  empty(n)  petersen
///   cart(A,B)  pow(A,t)  union(A,B,...)  copies(A,t)  cone(A)
Graph parse_graph_expr(std::string_view text);

}  // namespace kdis
