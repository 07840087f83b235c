#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kdis/bounds.hpp"
#include "kdis/codes.hpp"
#include "kdis/expr.hpp"
#include "kdis/extremal.hpp"
#include "kdis/geometry.hpp"
#include "kdis/graph.hpp"
#include "kdis/graph6.hpp"
#include "kdis/search.hpp"
#include "kdis/tree_solver.hpp"

namespace kdis::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool file_exists(const std::string& path) { return static_cast<bool>(std::ifstream(path)); }

struct GraphInput {
  std::string expr, g6, edges;

  void attach(CLI::App* sub) {
    auto* a = sub->add_option("--graph", expr, "generator expression, e.g. cart(K3,K3)");
    auto* b = sub->add_option("--g6", g6, "graph6 string or file");
    auto* c = sub->add_option("--edges", edges, "edge-list file");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  enum class Kind { kExpr, kGraph6, kEdges };

  Kind kind() const {
    if (!expr.empty()) return Kind::kExpr;
    if (!g6.empty()) return Kind::kGraph6;
    if (!edges.empty()) return Kind::kEdges;
    throw UsageError("a graph is required: pass --graph, --g6 or --edges");
  }

  Graph load() const {
    switch (kind()) {
      case Kind::kExpr:
        return parse_graph_expr(expr);
      case Kind::kGraph6: {
        std::string text = g6;
        if (file_exists(g6)) {
          std::istringstream lines(read_file(g6));
          text.clear();
          while (text.empty() && std::getline(lines, text)) {
            if (!text.empty() && text.back() == '\r') text.pop_back();
          }
        }
        return graph6_decode(text);
      }
      case Kind::kEdges:
        return parse_edge_list(read_file(edges));
    }
    throw std::logic_error("unreachable");
  }
};

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string format_real(double x) {
  std::ostringstream ss;
  ss << std::setprecision(12) << x;
  return ss.str();
}

unsigned default_shards() {
  if (const char* env = std::getenv("KDIS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("KDIS_THREADS must be a positive integer, got \"") + env + "\"");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void print_report(std::ostream& out, const SearchReport& r, bool as_json, std::size_t shown) {
  if (as_json) {
    out << to_json(r).dump() << '\n';
    return;
  }
  out << r.max_count << '\n';
  for (std::size_t i = 0; i < r.witnesses.size() && i < shown; ++i) out << r.witnesses[i] << '\n';
}

void print_codes(std::ostream& out, const std::vector<TernaryCode>& codes) {
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out << '\n';
    out << codes[i].to_string();
  }
}

json codes_json(const std::vector<TernaryCode>& codes) {
  json list = json::array();
  for (const auto& c : codes) {
    json words = json::array();
    for (auto w : c.words()) words.push_back(c.word_string(w));
    list.push_back(words);
  }
  return list;
}

json point_list(const ProjectivePlane& plane, std::span<const std::size_t> pts) {
  json list = json::array();
  for (auto p : pts) {
    const auto& t = plane.points()[p];
    list.push_back(std::to_string(t[0]) + ":" + std::to_string(t[1]) + ":" + std::to_string(t[2]));
  }
  return list;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting and enumerating k-dominating independent sets", "kdis"};
  app.require_subcommand(1);
  app.fallthrough(false);

  bool as_json = false;
  int k = 1;
  int n = 0;
  GraphInput input;

  auto* count = app.add_subcommand("count", "number of k-DISes of a graph");
  auto* enumerate = app.add_subcommand("enumerate", "count, then every k-DIS on its own line");
  auto* tree = app.add_subcommand("tree", "the k-DIS of a forest (k >= 2), or NONE");
  for (auto* sub : {count, enumerate, tree}) {
    input.attach(sub);
    sub->add_option("-k", k, "domination threshold")->required();
  }

  unsigned shards = 0;
  bool long_run = false, connected = false;
  std::string checkpoint;
  std::size_t shown = kMaxWitnesses;
  auto* extremal = app.add_subcommand("extremal", "maximum k-DIS count over all graphs on n vertices");
  extremal->add_option("--shards", shards, "shards of the graph-index space (default $KDIS_THREADS)");
  extremal->add_flag("--long-run", long_run, "allow n = 9");
  extremal->add_flag("--connected", connected, "scan connected graphs only");
  extremal->add_option("--checkpoint", checkpoint, "checkpoint file (n = 9)");
  auto* extremal_trees = app.add_subcommand("extremal-trees", "maximum k-DIS count over labeled trees");
  for (auto* sub : {extremal, extremal_trees}) {
    sub->add_option("-n", n, "order")->required();
    sub->add_option("-k", k, "domination threshold")->required();
    sub->add_option("--witnesses", shown, "witness lines to print");
  }

  bool list = false, oracle = false;
  auto* mds = app.add_subcommand("mds", "number of (k, 3^(k-1), 2)_3 MDS codes");
  mds->add_flag("--oracle", oracle, "count proper 3-colorings of H(k-1,3) instead");
  auto* mds_linear = app.add_subcommand("mds-linear", "number of linear (k, 3^(k-1), 2)_3 MDS codes");
  for (auto* sub : {mds, mds_linear}) {
    sub->add_option("-k", k, "code length")->required();
    sub->add_flag("--list", list, "print the codes");
  }

  unsigned q = 0;
  std::string format = "none", points_file;
  auto* geometry = app.add_subcommand("geometry", "PG(2,q) incidence graphs and hyperovals");
  geometry->require_subcommand(1);
  auto* g_build = geometry->add_subcommand("build", "point count, field modulus, incidence graph");
  g_build->add_option("--format", format, "incidence graph output")->check(CLI::IsMember({"none", "g6", "edges"}));
  auto* g_hyper = geometry->add_subcommand("hyperoval", "regular hyperoval points (q even)");
  auto* g_check = geometry->add_subcommand("check", "arc conditions for a point set");
  g_check->add_option("--points", points_file, "file with one x:y:z point per line")->required();
  g_check->add_option("-k", k, "domination threshold")->required();
  for (auto* sub : {g_build, g_hyper, g_check}) sub->add_option("-q", q, "plane order")->required();

  RandomModelParams params;
  std::uint64_t seed = 0;
  auto* expect = app.add_subcommand("expect", "expected number of size-t k-DISes in G(n,p)");
  auto* montecarlo = app.add_subcommand("montecarlo", "sampled estimate of the same expectation");
  for (auto* sub : {expect, montecarlo}) {
    sub->add_option("-n", params.n)->required();
    sub->add_option("-t", params.t)->required();
    sub->add_option("-k", params.k)->required();
    sub->add_option("-p", params.p)->required();
  }
  montecarlo->add_option("--samples", params.samples, "number of sampled graphs (>= 1000)");
  montecarlo->add_option("--seed", seed, "generator seed")->required();

  bool all_degrees = false, tau = false;
  auto* bounds = app.add_subcommand("bounds", "alpha_k and the 2-DIS recurrence roots");
  bounds->add_option("-k", k, "domination threshold");
  bounds->add_flag("--all-degrees", all_degrees, "maximize over every d >= 1");
  bounds->add_flag("--tau", tau, "print the recurrence roots instead");

  std::string to;
  auto* convert = app.add_subcommand("convert", "graph6 <-> edge list");
  input.attach(convert);
  convert->add_option("--to", to, "output format")->check(CLI::IsMember({"g6", "edges"}));

  for (auto* sub : app.get_subcommands({})) {
    if (sub != geometry) sub->add_flag("--json", as_json, "JSON output");
  }
  for (auto* sub : {g_build, g_hyper, g_check}) sub->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (count->parsed()) {
      const Graph g = input.load();
      const auto c = count_kdis(g, k);
      if (as_json) {
        out << json{{"n", g.order()}, {"k", k}, {"count", c}}.dump() << '\n';
      } else {
        out << c << '\n';
      }
    } else if (enumerate->parsed()) {
      const Graph g = input.load();
      const auto sets = enumerate_kdis(g, k);
      if (as_json) {
        json list = json::array();
        for (const auto& s : sets) list.push_back(s.to_vector());
        out << json{{"n", g.order()}, {"k", k}, {"count", sets.size()}, {"sets", list}}.dump() << '\n';
      } else {
        out << sets.size() << '\n';
        for (const auto& s : sets) out << join(s.to_vector()) << '\n';
      }
    } else if (tree->parsed()) {
      const Graph g = input.load();
      const auto edges = g.edges();
      const auto sol = solve_forest_kdis(g.order(), edges, k);
      if (as_json) {
        out << json{{"n", g.order()}, {"k", k}, {"dis", sol.dis ? json(*sol.dis) : json(nullptr)},
                    {"copies", sol.copies}}
                   .dump()
            << '\n';
      } else {
        out << (sol.dis ? join(*sol.dis) : std::string("NONE")) << '\n';
      }
    } else if (extremal->parsed()) {
      ExtremalOptions opts;
      opts.shards = shards ? shards : default_shards();
      opts.allow_long_run = long_run;
      opts.connected_only = connected;
      if (!checkpoint.empty()) opts.checkpoint_path = checkpoint;
      print_report(out, max_kdis_count(n, k, opts), as_json, shown);
    } else if (extremal_trees->parsed()) {
      print_report(out, max_kdis_count_trees(n, k), as_json, shown);
    } else if (mds->parsed()) {
      if (list) {
        const auto codes = enumerate_mds_codes(k);
        if (as_json) {
          out << json{{"k", k}, {"count", codes.size()}, {"codes", codes_json(codes)}}.dump() << '\n';
        } else {
          out << codes.size() << '\n';
          print_codes(out, codes);
        }
      } else {
        const auto c = oracle ? count_mds_bruteforce(k) : count_mds_via_kdis(k);
        if (as_json) {
          out << json{{"k", k}, {"count", c}}.dump() << '\n';
        } else {
          out << c << '\n';
        }
      }
    } else if (mds_linear->parsed()) {
      const auto codes = linear_mds_codes(k);
      if (as_json) {
        json j{{"k", k}, {"count", codes.size()}};
        if (list) j["codes"] = codes_json(codes);
        out << j.dump() << '\n';
      } else {
        out << codes.size() << '\n';
        if (list) print_codes(out, codes);
      }
    } else if (g_build->parsed()) {
      const auto plane = build_pg2(q);
      if (as_json) {
        json j{{"q", q}, {"points", plane.size()}, {"modulus", plane.field().modulus_string()}};
        if (format == "g6") j["graph6"] = graph6_encode(incidence_graph(plane));
        out << j.dump() << '\n';
      } else {
        out << plane.size() << '\n' << "modulus " << plane.field().modulus_string() << '\n';
        if (format == "g6") out << graph6_encode(incidence_graph(plane)) << '\n';
        if (format == "edges") out << format_edge_list(incidence_graph(plane));
      }
    } else if (g_hyper->parsed()) {
      const auto plane = build_pg2(q);
      const auto oval = regular_hyperoval(plane);
      const auto skew = skew_lines(plane, oval);
      const bool dis_ok = is_kdis(incidence_graph(plane), hyperoval_dis(plane, oval), 2);
      if (as_json) {
        out << json{{"q", q},
                    {"points", point_list(plane, oval)},
                    {"skew_lines", skew.size()},
                    {"dis_size", oval.size() + skew.size()},
                    {"is_2dis", dis_ok}}
                   .dump()
            << '\n';
      } else {
        out << format_point_set(plane, oval) << "# skew lines: " << skew.size() << '\n';
      }
    } else if (g_check->parsed()) {
      const auto plane = build_pg2(q);
      const auto pts = parse_point_set(plane, read_file(points_file));
      const auto res = check_arc_conditions(plane, pts, k);
      if (as_json) {
        out << json{{"ok", res.ok},
                    {"bad_lines", point_list(plane, res.bad_lines)},
                    {"bad_points", point_list(plane, res.bad_points)},
                    {"tangent_free", res.tangent_free},
                    {"within_tangent_free_bound", res.within_tangent_free_bound}}
                   .dump()
            << '\n';
      } else {
        out << (res.ok ? "ok" : "fail") << '\n';
        const auto bl = point_list(plane, res.bad_lines);
        const auto bp = point_list(plane, res.bad_points);
        for (const auto& l : bl) out << "line " << l.get<std::string>() << '\n';
        for (const auto& p : bp) out << "point " << p.get<std::string>() << '\n';
      }
      if (res.tangent_free && !res.within_tangent_free_bound) {
        err << "note: tangent-free set larger than 2q-2 points\n";
      }
    } else if (expect->parsed()) {
      const double v = expected_kdis_count(params);
      if (as_json) {
        out << json{{"expected", v}}.dump() << '\n';
      } else {
        out << format_real(v) << '\n';
      }
    } else if (montecarlo->parsed()) {
      params.seed = seed;
      const auto est = monte_carlo_expected(params);
      if (as_json) {
        out << json{{"mean", est.mean}, {"stderr", est.standard_error}, {"samples", params.samples},
                    {"seed", seed}}
                   .dump()
            << '\n';
      } else {
        out << format_real(est.mean) << ' ' << format_real(est.standard_error) << '\n';
      }
    } else if (bounds->parsed()) {
      if (tau) {
        const auto t = tau_roots();
        if (as_json) {
          out << json{{"tau1", t.tau1}, {"tau2", t.tau2}, {"tau3", t.tau3}, {"tau_pair", t.tau_pair}}.dump()
              << '\n';
        } else {
          out << "tau1 " << format_real(t.tau1) << '\n'
              << "tau2 " << format_real(t.tau2) << '\n'
              << "tau3 " << format_real(t.tau3) << '\n'
              << "tau_pair " << format_real(t.tau_pair) << '\n';
        }
      } else {
        const auto a = all_degrees ? alpha_bound_all_degrees(k) : alpha_bound(k);
        if (as_json) {
          out << json{{"k", k}, {"alpha", a.value}, {"d", a.d}}.dump() << '\n';
        } else {
          out << format_real(a.value) << ' ' << a.d << '\n';
        }
      }
    } else if (convert->parsed()) {
      const Graph g = input.load();
      if (to.empty()) to = input.kind() == GraphInput::Kind::kGraph6 ? "edges" : "g6";
      const std::string text = to == "g6" ? graph6_encode(g) + "\n" : format_edge_list(g);
      if (as_json) {
        out << json{{"format", to}, {"text", text}}.dump() << '\n';
      } else {
        out << text;
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace kdis::cli
