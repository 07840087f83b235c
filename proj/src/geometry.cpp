#include "kdis/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace kdis {

namespace {

constexpr unsigned kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

struct PrimePower {
  unsigned p, m;
};

PrimePower factor(unsigned q) {
  if (std::find(std::begin(kOrders), std::end(kOrders), q) == std::end(kOrders)) {
    throw std::invalid_argument("unsupported field order q=" + std::to_string(q) +
                                " (supported: 2,3,4,5,7,8,9,11,13,16)");
  }
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p == 0) {
      unsigned m = 0;
      for (unsigned r = q; r > 1; r /= p) ++m;
      return {p, m};
    }
  }
  return {q, 1};
}

std::vector<unsigned> digits(unsigned x, unsigned p, unsigned m) {
  std::vector<unsigned> d(m);
  for (unsigned i = 0; i < m; ++i, x /= p) d[i] = x % p;
  return d;
}

unsigned from_digits(const std::vector<unsigned>& d, unsigned p) {
  unsigned x = 0;
  for (unsigned i = static_cast<unsigned>(d.size()); i-- > 0;) x = x * p + d[i];
  return x;
}

/// a * b in GF(p)[x] / (x^m + tail).
unsigned poly_mul(unsigned a, unsigned b, unsigned p, unsigned m, const std::vector<unsigned>& tail) {
  const auto da = digits(a, p, m);
  const auto db = digits(b, p, m);
  std::vector<unsigned> prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // x^m = -tail
  for (unsigned deg = 2 * m - 1; deg >= m && deg < 2 * m; --deg) {
    const unsigned c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (unsigned i = 0; i < m; ++i) {
      prod[deg - m + i] = (prod[deg - m + i] + (p - tail[i]) % p * c) % p;
    }
  }
  prod.resize(m);
  return from_digits(prod, p);
}

}  // namespace

// ------------------------------------------------------------- FiniteField

FiniteField::FiniteField(unsigned q) : q_(q) {
  const auto [p, m] = factor(q);
  p_ = p;
  m_ = m;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const auto da = digits(a, p, m);
    for (unsigned b = 0; b < q; ++b) {
      const auto db = digits(b, p, m);
      std::vector<unsigned> s(m);
      for (unsigned i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = static_cast<Element>(from_digits(s, p));
    }
    std::vector<unsigned> n(m);
    for (unsigned i = 0; i < m; ++i) n[i] = (p - da[i]) % p;
    neg_[a] = static_cast<Element>(from_digits(n, p));
  }
  // Smallest tail (as a base-p integer) giving a product without zero
  // divisors, i.e. the least monic irreducible of degree m.
  for (unsigned t = 0; t < q; ++t) {
    tail_ = digits(t, p, m);
    if (m == 1 && t != 0) break;
    bool domain = true;
    for (unsigned a = 1; a < q && domain; ++a) {
      for (unsigned b = 1; b < q; ++b) {
        const unsigned c = poly_mul(a, b, p, m, tail_);
        mul_[a * q + b] = static_cast<Element>(c);
        if (c == 0) {
          domain = false;
          break;
        }
      }
    }
    if (domain) break;
  }
  for (unsigned a = 0; a < q; ++a) {
    mul_[a] = 0;
    mul_[a * q] = 0;
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Element>(b);
  verify();
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

std::string FiniteField::modulus_string() const {
  std::string s = m_ == 1 ? "x" : "x^" + std::to_string(m_);
  for (unsigned i = m_; i-- > 0;) {
    const unsigned c = tail_[i];
    if (c == 0) continue;
    s += "+";
    if (c != 1 || i == 0) s += std::to_string(c);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

void FiniteField::verify() const {
  auto fail = [&](const std::string& what) {
    throw std::logic_error("GF(" + std::to_string(q_) + ") table check failed: " + what);
  };
  for (unsigned a = 0; a < q_; ++a) {
    const auto ea = static_cast<Element>(a);
    if (add(ea, 0) != ea || mul(ea, 1) != ea) fail("identity");
    if (add(ea, neg(ea)) != 0) fail("additive inverse");
    if (a != 0 && mul(ea, inv_[a]) != 1) fail("multiplicative inverse");
    for (unsigned b = 0; b < q_; ++b) {
      const auto eb = static_cast<Element>(b);
      if (add(ea, eb) != add(eb, ea) || mul(ea, eb) != mul(eb, ea)) fail("commutativity");
      for (unsigned c = 0; c < q_; ++c) {
        const auto ec = static_cast<Element>(c);
        if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) fail("additive associativity");
        if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) fail("multiplicative associativity");
        if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) fail("distributivity");
      }
    }
  }
}

// --------------------------------------------------------- ProjectivePlane

ProjectivePlane::ProjectivePlane(unsigned q) : field_(q) {
  const unsigned qq = q;
  for (unsigned x = 0; x <= 1; ++x) {
    for (unsigned y = 0; y < qq; ++y) {
      for (unsigned z = 0; z < qq; ++z) {
        if (x == 0 && y > 1) continue;
        if (x == 0 && y == 0 && z != 1) continue;
        points_.push_back({static_cast<FiniteField::Element>(x), static_cast<FiniteField::Element>(y),
                           static_cast<FiniteField::Element>(z)});
      }
    }
  }
  std::sort(points_.begin(), points_.end());
  const std::size_t n = points_.size();
  index_of_code_.assign(qq * qq * qq, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = points_[i];
    index_of_code_[(t[0] * qq + t[1]) * qq + t[2]] = i;
  }
  incidence_.assign(n * n, 0);
  points_on_.assign(n, {});
  lines_through_.assign(n, {});
  for (std::size_t pi = 0; pi < n; ++pi) {
    for (std::size_t li = 0; li < n; ++li) {
      const auto& a = points_[pi];
      const auto& b = points_[li];
      const auto dot =
          field_.add(field_.add(field_.mul(a[0], b[0]), field_.mul(a[1], b[1])), field_.mul(a[2], b[2]));
      if (dot == 0) {
        incidence_[pi * n + li] = 1;
        points_on_[li].push_back(pi);
        lines_through_[pi].push_back(li);
      }
    }
  }
  verify();
}

Triple ProjectivePlane::normalize(Triple t) const {
  for (auto c : t) {
    if (c >= field_.order()) throw std::invalid_argument("coordinate outside the field");
  }
  std::size_t lead = 0;
  while (lead < 3 && t[lead] == 0) ++lead;
  if (lead == 3) throw std::invalid_argument("(0,0,0) is not a projective point");
  const auto s = field_.inv(t[lead]);
  for (auto& c : t) c = field_.mul(c, s);
  return t;
}

std::size_t ProjectivePlane::point_index(Triple t) const {
  const auto u = normalize(t);
  const unsigned qq = q();
  return index_of_code_[(u[0] * qq + u[1]) * qq + u[2]];
}

void ProjectivePlane::verify() const {
  const std::size_t qq = q();
  const std::size_t n = size();
  auto fail = [&](const std::string& what) {
    throw std::logic_error("PG(2," + std::to_string(qq) + ") check failed: " + what);
  };
  if (n != qq * qq + qq + 1) fail("point count");
  for (std::size_t i = 0; i < n; ++i) {
    if (points_on_[i].size() != qq + 1) fail("points per line");
    if (lines_through_[i].size() != qq + 1) fail("lines per point");
  }
  std::vector<unsigned> pair_count(n * n, 0);
  for (std::size_t l = 0; l < n; ++l) {
    const auto& pts = points_on_[l];
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) ++pair_count[pts[i] * n + pts[j]];
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (pair_count[a * n + b] != 1) fail("two points not on exactly one common line");
}

std::span<const unsigned> supported_plane_orders() { return kOrders; }

ProjectivePlane build_pg2(unsigned q) { return ProjectivePlane(q); }

Graph incidence_graph(const ProjectivePlane& plane) {
  const std::size_t n = plane.size();
  GraphBuilder b(2 * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t p : plane.points_on(l)) b.add_edge(static_cast<Vertex>(p), static_cast<Vertex>(n + l));
  return std::move(b).build();
}

std::vector<std::size_t> regular_hyperoval(const ProjectivePlane& plane) {
  const unsigned q = plane.q();
  if (q % 2 != 0 || q == 2) {
    throw std::invalid_argument("regular hyperoval needs q even and q > 2, got q=" + std::to_string(q));
  }
  const auto& f = plane.field();
  std::vector<std::size_t> pts;
  for (unsigned t = 0; t < q; ++t) {
    const auto e = static_cast<FiniteField::Element>(t);
    pts.push_back(plane.point_index({1, e, f.mul(e, e)}));
  }
  pts.push_back(plane.point_index({0, 0, 1}));
  pts.push_back(plane.point_index({0, 1, 0}));
  std::sort(pts.begin(), pts.end());
  for (std::size_t l = 0; l < plane.size(); ++l) {
    std::size_t hits = 0;
    for (std::size_t p : pts) hits += plane.incident(p, l);
    if (hits != 0 && hits != 2) throw std::logic_error("hyperoval check failed: line meets it in " +
                                                       std::to_string(hits) + " points");
  }
  return pts;
}

namespace {

std::vector<unsigned char> membership(const ProjectivePlane& plane, std::span<const std::size_t> points) {
  std::vector<unsigned char> in(plane.size(), 0);
  for (std::size_t p : points) {
    if (p >= plane.size()) throw std::invalid_argument("point index out of range");
    in[p] = 1;
  }
  return in;
}

std::vector<std::size_t> hits_per_line(const ProjectivePlane& plane, const std::vector<unsigned char>& in) {
  std::vector<std::size_t> hits(plane.size(), 0);
  for (std::size_t l = 0; l < plane.size(); ++l)
    for (std::size_t p : plane.points_on(l)) hits[l] += in[p];
  return hits;
}

}  // namespace

std::vector<std::size_t> skew_lines(const ProjectivePlane& plane, std::span<const std::size_t> points) {
  const auto hits = hits_per_line(plane, membership(plane, points));
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < plane.size(); ++l)
    if (hits[l] == 0) out.push_back(l);
  return out;
}

VertexSet hyperoval_dis(const ProjectivePlane& plane, std::span<const std::size_t> points) {
  const std::size_t n = plane.size();
  VertexSet d(2 * n);
  for (std::size_t p : points) d.insert(static_cast<Vertex>(p));
  for (std::size_t l : skew_lines(plane, points)) d.insert(static_cast<Vertex>(n + l));
  return d;
}

ArcCheck check_arc_conditions(const ProjectivePlane& plane, std::span<const std::size_t> points, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const auto in = membership(plane, points);
  const auto hits = hits_per_line(plane, in);
  const auto kk = static_cast<std::size_t>(k);
  ArcCheck out;
  out.tangent_free = true;
  for (std::size_t l = 0; l < plane.size(); ++l) {
    if (hits[l] != 0 && hits[l] < kk) out.bad_lines.push_back(l);
    if (hits[l] == 1) out.tangent_free = false;
  }
  for (std::size_t p = 0; p < plane.size(); ++p) {
    if (in[p]) continue;
    std::size_t skew = 0;
    for (std::size_t l : plane.lines_through(p)) skew += hits[l] == 0;
    if (skew < kk) out.bad_points.push_back(p);
  }
  std::size_t distinct = 0;
  for (auto b : in) distinct += b;
  out.within_tangent_free_bound = out.tangent_free && distinct <= 2 * plane.q() - 2;
  out.ok = out.bad_lines.empty() && out.bad_points.empty();
  return out;
}

std::vector<std::size_t> parse_point_set(const ProjectivePlane& plane, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::size_t> out;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
               line.end());
    if (line.empty()) continue;
    Triple t{};
    std::istringstream ls(line);
    std::string part;
    std::size_t i = 0;
    try {
      while (std::getline(ls, part, ':')) {
        if (i >= 3) throw std::invalid_argument("too many coordinates");
        std::size_t used = 0;
        const unsigned long v = std::stoul(part, &used);
        if (used != part.size() || v >= plane.q()) throw std::invalid_argument("bad coordinate");
        t[i++] = static_cast<FiniteField::Element>(v);
      }
      if (i != 3) throw std::invalid_argument("expected x:y:z");
      out.push_back(plane.point_index(t));
    } catch (const std::exception& e) {
      throw std::invalid_argument("point set line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_point_set(const ProjectivePlane& plane, std::span<const std::size_t> points) {
  std::ostringstream os;
  for (std::size_t p : points) {
    const auto& t = plane.points()[p];
    os << unsigned(t[0]) << ':' << unsigned(t[1]) << ':' << unsigned(t[2]) << '\n';
  }
  return os.str();
}

}  // namespace kdis
