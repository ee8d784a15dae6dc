#pragma once

// Analytic miquelian Laguerre plane over GF(q).
//
// Points are the affine points (x, y) together with the ideal points (inf, a);
// the circle (a, b, c) is the parabola y = a x^2 + b x + c plus the ideal
// point (inf, a). Parallel points share a generator: equal x, or both ideal.

#include <compare>
#include <cstdint>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "laguerre/field.hpp"
#include "laguerre/report.hpp"
#include "laguerre/sweep.hpp"

namespace laguerre {

struct Point {
  bool ideal = false;
  int x = 0;  ///< first coordinate, or the ideal height a for (inf, a)
  int y = 0;  ///< zero for ideal points

  static constexpr Point affine(int x, int y) { return {false, x, y}; }
  static constexpr Point at_infinity(int a) { return {true, a, 0}; }

  int height() const { return ideal ? x : y; }

  friend constexpr auto operator<=>(const Point& l, const Point& r) {
    return std::tuple(l.ideal, l.x, l.y) <=> std::tuple(r.ideal, r.x, r.y);
  }
  friend constexpr bool operator==(const Point&, const Point&) = default;
};

struct Generator {
  bool ideal = false;
  int x = 0;

  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

struct Circle {
  int a = 0;
  int b = 0;
  int c = 0;

  friend constexpr auto operator<=>(const Circle&, const Circle&) = default;
};

/// Circles tangent to K at p, together with K.
struct Pencil {
  Point p;
  Circle K;
};

std::string to_string(const Point& p);
std::string to_string(const Circle& c);
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const Circle& c);
nlohmann::json to_json(const Generator& g);
nlohmann::json to_json(const Pencil& pencil);

struct PencilTangency {
  Circle member;
  Point point;
};

class Plane {
 public:
  explicit Plane(FieldRef field);

  const FieldSpec& field() const noexcept { return *field_; }
  const FieldRef& field_ref() const noexcept { return field_; }
  int q() const noexcept { return q_; }

  int num_points() const noexcept { return q_ * q_ + q_; }
  int num_affine_points() const noexcept { return q_ * q_; }
  int num_circles() const noexcept { return q_ * q_ * q_; }

  const std::vector<Point>& points() const noexcept { return points_; }
  const std::vector<Circle>& circles() const noexcept { return circles_; }
  std::vector<Generator> generators() const;

  int index(const Point& p) const noexcept { return p.ideal ? q_ * q_ + p.x : p.x * q_ + p.y; }
  int index(const Circle& c) const noexcept { return (c.a * q_ + c.b) * q_ + c.c; }
  int generator_index(const Generator& g) const noexcept { return g.ideal ? q_ : g.x; }
  const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  const Circle& circle(int i) const { return circles_[static_cast<std::size_t>(i)]; }

  Generator generator_of(const Point& p) const noexcept { return p.ideal ? Generator{true, 0} : Generator{false, p.x}; }
  std::vector<Point> points_on(const Generator& g) const;

  bool parallel(const Point& u, const Point& v) const noexcept {
    return u.ideal == v.ideal && (u.ideal || u.x == v.x);
  }
  bool incident(const Point& p, const Circle& c) const noexcept {
    if (p.ideal) return p.x == c.a;
    return p.y == eval(c, p.x);
  }
  int eval(const Circle& c, int x) const noexcept {
    return field_->reduce((static_cast<long long>(c.a) * x + c.b) * x + c.c);
  }

  /// Affine points in increasing x, then the ideal point.
  std::vector<Point> circle_points(const Circle& c) const;

  /// Throws Error{parallel_points} if two of the points are parallel.
  Circle circle_through(const Point& p1, const Point& p2, const Point& p3) const;

  /// Exact common points by enumeration. Throws Error{identical_circles}.
  std::vector<Point> intersection(const Circle& c1, const Circle& c2) const;

  /// |c1 ∩ c2|. Discriminant fast path for odd q, enumeration in char 2.
  int intersection_size(const Circle& c1, const Circle& c2) const;

  /// |c1 ∩ c2| = 1. Throws Error{identical_circles}.
  bool tangent(const Circle& c1, const Circle& c2) const;
  bool tangent_by_enumeration(const Circle& c1, const Circle& c2) const;

  /// Unique circle through r touching K at p.
  Circle touching_circle(const Point& p, const Circle& K, const Point& r) const;

  /// The point of K on the generator of x.
  Point parallel_point(const Point& x, const Circle& K) const;

  /// The q circles meeting K exactly in p, K included. Throws Error{not_incident}.
  std::vector<Circle> pencil(const Point& p, const Circle& K) const;
  std::vector<Circle> pencil(const Pencil& pencil) const { return this->pencil(pencil.p, pencil.K); }

  /// All q circles through nonparallel x, y. Throws Error{parallel_points}.
  std::vector<Circle> joining_pencil(const Point& x, const Point& y) const;

  /// Pencil members tangent to M, in pencil order.
  std::vector<Circle> tangent_members(const Circle& M, const Pencil& pencil) const;

  /// The unique member of the pencil tangent to M and the tangency point.
  /// Throws Error{incident} if pencil.p lies on M and Error{a3_failure} (with
  /// the tangent members as detail) when the member is not unique.
  PencilTangency pencil_tangent(const Circle& M, const Pencil& pencil) const;

 private:
  FieldRef field_;
  int q_;
  std::vector<Point> points_;
  std::vector<Circle> circles_;
};

/// Base point of M = (a, b, c), a != 0, for the pencil <(inf,0), y=0>:
/// (-b/2a, c - b^2/4a). Odd q only.
Point canonical_base_point(const FieldSpec& field, const Circle& M);

Pencil canonical_pencil();

/// Exhaustive check of the Laguerre axioms (1)-(4). Kernel form: joins are
/// counted circle-by-circle and touches pencil-by-pencil.
Report verify_laguerre_axioms(const Plane& plane, Exec exec = default_exec());

/// Serial reference: every quantifier evaluated by direct scan over all
/// circles. Slow; kept as the oracle for the kernel above.
Report verify_laguerre_axioms_reference(const Plane& plane);

struct DerivedAffinePlane {
  Point center;
  std::vector<Point> points;
  std::vector<std::vector<int>> lines;  ///< indices into points, sorted
};

/// Derived affine plane at p with an exhaustive check of the affine axioms.
std::pair<DerivedAffinePlane, Report> derived_affine_plane(const Plane& plane, const Point& p,
                                                           Exec exec = default_exec());

}  // namespace laguerre
