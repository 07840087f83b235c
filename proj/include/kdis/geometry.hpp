#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kdis/graph.hpp"

namespace kdis {

/// GF(q), q = p^m <= 16. Elements are integers 0..q-1 read as polynomials
/// over GF(p) in base p (digit i is the coefficient of x^i), reduced modulo
/// the least monic irreducible polynomial of degree m.
class FiniteField {
 public:
  using Element = std::uint8_t;

  explicit FiniteField(unsigned q);

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  /// Coefficients c_0..c_{m-1} of the reduction polynomial x^m + sum c_i x^i.
  const std::vector<unsigned>& modulus_tail() const { return tail_; }
  /// The reduction polynomial as text, e.g. "x^3+x+1".
  std::string modulus_string() const;

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element inv(Element a) const;

  /// Exhaustive check of the field axioms on the tables.
  void verify() const;

 private:
  unsigned q_, p_, m_;
  std::vector<unsigned> tail_;
  std::vector<Element> add_, mul_, neg_, inv_;
};

using Triple = std::array<FiniteField::Element, 3>;

/// PG(2,q): points and lines are homogeneous triples normalized so the first
/// nonzero coordinate is 1, indexed in lexicographic order. A point lies on a
/// line iff their dot product vanishes.
class ProjectivePlane {
 public:
  explicit ProjectivePlane(unsigned q);

  unsigned q() const { return field_.order(); }
  const FiniteField& field() const { return field_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Triple>& points() const { return points_; }
  const std::vector<Triple>& lines() const { return points_; }
  bool incident(std::size_t point, std::size_t line) const { return incidence_[point * size() + line]; }
  const std::vector<std::size_t>& points_on(std::size_t line) const { return points_on_[line]; }
  const std::vector<std::size_t>& lines_through(std::size_t point) const { return lines_through_[point]; }

  /// Index of the point with these homogeneous coordinates (any scaling).
  std::size_t point_index(Triple t) const;

  /// Checks sizes, regularity and that two points share exactly one line.
  void verify() const;

 private:
  Triple normalize(Triple t) const;

  FiniteField field_;
  std::vector<Triple> points_;
  std::vector<std::size_t> index_of_code_;
  std::vector<unsigned char> incidence_;
  std::vector<std::vector<std::size_t>> points_on_;
  std::vector<std::vector<std::size_t>> lines_through_;
};

/// Prime powers with built-in field tables.
std::span<const unsigned> supported_plane_orders();

ProjectivePlane build_pg2(unsigned q);

/// Bipartite point-line incidence graph: points 0..N-1, lines N..2N-1.
Graph incidence_graph(const ProjectivePlane& plane);

/// Conic {(1,t,t^2)} + (0,0,1) plus nucleus (0,1,0); q even, q > 2.
std::vector<std::size_t> regular_hyperoval(const ProjectivePlane& plane);

/// Lines missing every point of the set.
std::vector<std::size_t> skew_lines(const ProjectivePlane& plane, std::span<const std::size_t> points);

/// The point set together with its skew lines, as incidence-graph vertices.
VertexSet hyperoval_dis(const ProjectivePlane& plane, std::span<const std::size_t> points);

struct ArcCheck {
  bool ok = false;
  /// Lines meeting the set in 1..k-1 points.
  std::vector<std::size_t> bad_lines;
  /// Points outside the set lying on fewer than k skew lines.
  std::vector<std::size_t> bad_points;
  /// No line meets the set in exactly one point.
  bool tangent_free = false;
  /// A tangent-free set of at most 2q-2 points always passes with k = 2.
  bool within_tangent_free_bound = false;
};

/// The point set plus its skew lines is a k-DIS of the incidence graph iff
/// (1) every line meets it in 0 or >= k points and (2) every outside point
/// lies on >= k skew lines.
ArcCheck check_arc_conditions(const ProjectivePlane& plane, std::span<const std::size_t> points, int k);

/// One point per line as "x:y:z" (field element codes). '#' comments.
std::vector<std::size_t> parse_point_set(const ProjectivePlane& plane, const std::string& text);
std::string format_point_set(const ProjectivePlane& plane, std::span<const std::size_t> points);

}  // namespace kdis
