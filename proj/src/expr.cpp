#include "kdis/expr.hpp"

#include <cctype>
#include <variant>
#include <vector>

#include "kdis/generators.hpp"

namespace kdis {

namespace {

using Value = std::variant<std::size_t, Graph>;

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
  }

  Graph parse() {
    Graph g = as_graph(expr(), 0);
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExprError("graph expression: " + what + " at position " + std::to_string(pos_) +
                    " in '" + src_ + "'");
  }

  bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(src_[pos_++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  Value expr() {
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) return number();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string name = src_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a generator name");
    std::vector<Value> args;
    std::size_t arg_pos = pos_;
    if (name == "K" && pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      args.emplace_back(number());
    } else if (peek('(')) {
      ++pos_;
      arg_pos = pos_;
      if (!peek(')')) {
        args.push_back(expr());
        while (peek(',')) {
          ++pos_;
          args.push_back(expr());
        }
      }
      expect(')');
    }
    return apply(name, args, arg_pos);
  }

  std::size_t as_int(const Value& v, std::size_t at) {
    if (auto p = std::get_if<std::size_t>(&v)) return *p;
    pos_ = at;
    fail("expected an integer argument");
  }

  Graph as_graph(Value v, std::size_t at) {
    if (auto p = std::get_if<Graph>(&v)) return std::move(*p);
    pos_ = at;
    fail("expected a graph argument");
  }

  void arity(const std::string& name, const std::vector<Value>& args, std::size_t lo,
             std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      fail(name + " takes " + std::to_string(lo) + (lo == hi ? "" : "+") + " argument(s), got " +
           std::to_string(args.size()));
    }
  }

  Graph apply(const std::string& name, std::vector<Value>& args, std::size_t at) {
    try {
      return build(name, args, at);
    } catch (const GraphError& e) {
      fail(e.what());
    }
  }

  Graph build(const std::string& name, std::vector<Value>& args, std::size_t at) {
    constexpr std::size_t many = static_cast<std::size_t>(-1);
    auto i = [&](std::size_t idx) { return as_int(args[idx], at); };
    auto g = [&](std::size_t idx) { return as_graph(std::move(args[idx]), at); };
    if (name == "K") { arity(name, args, 1, 1); return complete(i(0)); }
    if (name == "Kb") { arity(name, args, 2, 2); return complete_bipartite(i(0), i(1)); }
    if (name == "Km") {
      arity(name, args, 1, many);
      std::vector<std::size_t> sizes;
      for (std::size_t j = 0; j < args.size(); ++j) sizes.push_back(i(j));
      return complete_multipartite(sizes);
    }
    if (name == "turan") { arity(name, args, 2, 2); return turan(i(0), i(1)); }
    if (name == "kneser") { arity(name, args, 2, 2); return kneser(i(0), i(1)); }
    if (name == "path") { arity(name, args, 1, 1); return path(i(0)); }
    if (name == "cycle") { arity(name, args, 1, 1); return cycle(i(0)); }
    if (name == "star") { arity(name, args, 1, 1); return star(i(0)); }
    if (name == "empty") { arity(name, args, 1, 1); return empty_graph(i(0)); }
    if (name == "petersen") { arity(name, args, 0, 0); return petersen(); }
    if (name == "cart") { arity(name, args, 2, 2); return cartesian_product(g(0), g(1)); }
    if (name == "pow") { arity(name, args, 2, 2); return power(g(0), i(1)); }
    if (name == "copies") { arity(name, args, 2, 2); return copies(g(0), i(1)); }
    if (name == "cone") { arity(name, args, 1, 1); return cone(g(0)); }
    if (name == "union") {
      arity(name, args, 1, many);
      Graph out = g(0);
      for (std::size_t j = 1; j < args.size(); ++j) out = disjoint_union(out, g(j));
      return out;
    }
    pos_ = at;
    fail("unknown generator '" + name + "'");
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace kdis
