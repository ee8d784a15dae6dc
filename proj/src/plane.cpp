#include "laguerre/plane.hpp"

#include <algorithm>

#include "laguerre/error.hpp"

namespace laguerre {

std::string to_string(const Point& p) {
  if (p.ideal) return "(inf," + std::to_string(p.x) + ")";
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string to_string(const Circle& c) {
  return "[" + std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(c.c) + "]";
}

nlohmann::json to_json(const Point& p) {
  if (p.ideal) return {{"t", "I"}, {"a", p.x}};
  return {{"t", "A"}, {"x", p.x}, {"y", p.y}};
}

nlohmann::json to_json(const Circle& c) { return nlohmann::json::array({c.a, c.b, c.c}); }

nlohmann::json to_json(const Generator& g) {
  if (g.ideal) return {{"t", "I"}};
  return {{"t", "A"}, {"x", g.x}};
}

nlohmann::json to_json(const Pencil& pencil) { return {{"p", to_json(pencil.p)}, {"K", to_json(pencil.K)}}; }

Pencil canonical_pencil() { return {Point::at_infinity(0), Circle{0, 0, 0}}; }

Plane::Plane(FieldRef field) : field_(std::move(field)), q_(field_->q()) {
  points_.reserve(static_cast<std::size_t>(num_points()));
  for (int x = 0; x < q_; ++x)
    for (int y = 0; y < q_; ++y) points_.push_back(Point::affine(x, y));
  for (int a = 0; a < q_; ++a) points_.push_back(Point::at_infinity(a));
  circles_.reserve(static_cast<std::size_t>(num_circles()));
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b)
      for (int c = 0; c < q_; ++c) circles_.push_back({a, b, c});
}

std::vector<Generator> Plane::generators() const {
  std::vector<Generator> out;
  for (int x = 0; x < q_; ++x) out.push_back({false, x});
  out.push_back({true, 0});
  return out;
}

std::vector<Point> Plane::points_on(const Generator& g) const {
  std::vector<Point> out;
  for (int t = 0; t < q_; ++t) out.push_back(g.ideal ? Point::at_infinity(t) : Point::affine(g.x, t));
  return out;
}

std::vector<Point> Plane::circle_points(const Circle& c) const {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(q_ + 1));
  for (int x = 0; x < q_; ++x) out.push_back(Point::affine(x, eval(c, x)));
  out.push_back(Point::at_infinity(c.a));
  return out;
}

Circle Plane::circle_through(const Point& p1, const Point& p2, const Point& p3) const {
  if (parallel(p1, p2) || parallel(p1, p3) || parallel(p2, p3))
    throw Error(Errc::parallel_points, "circle_through: parallel points among " + to_string(p1) + ", " +
                                           to_string(p2) + ", " + to_string(p3));
  const FieldSpec& f = *field_;
  Point pts[3] = {p1, p2, p3};
  std::sort(pts, pts + 3);  // affine points first, the ideal point (if any) last
  const Point& u = pts[0];
  const Point& v = pts[1];
  int slope = f.div(f.sub(v.y, u.y), f.sub(v.x, u.x));
  int a;
  if (pts[2].ideal) {
    a = pts[2].x;
  } else {
    const Point& w = pts[2];
    int slope2 = f.div(f.sub(w.y, u.y), f.sub(w.x, u.x));
    a = f.div(f.sub(slope2, slope), f.sub(w.x, v.x));
  }
  int b = f.sub(slope, f.mul(a, f.add(u.x, v.x)));
  int c = f.sub(f.sub(u.y, f.mul(a, f.mul(u.x, u.x))), f.mul(b, u.x));
  return {a, b, c};
}

std::vector<Point> Plane::intersection(const Circle& c1, const Circle& c2) const {
  if (c1 == c2) throw Error(Errc::identical_circles, "intersection of a circle with itself");
  std::vector<Point> out;
  for (int x = 0; x < q_; ++x) {
    int y = eval(c1, x);
    if (y == eval(c2, x)) out.push_back(Point::affine(x, y));
  }
  if (c1.a == c2.a) out.push_back(Point::at_infinity(c1.a));
  return out;
}

int Plane::intersection_size(const Circle& c1, const Circle& c2) const {
  if (q_ == 2) {
    int n = c1.a == c2.a ? 1 : 0;
    for (int x = 0; x < q_; ++x) n += eval(c1, x) == eval(c2, x);
    return n;
  }
  const FieldSpec& f = *field_;
  int da = f.sub(c1.a, c2.a);
  int db = f.sub(c1.b, c2.b);
  int dc = f.sub(c1.c, c2.c);
  if (da == 0) {
    if (db != 0) return 2;
    return dc != 0 ? 1 : q_ + 1;
  }
  int disc = f.sub(f.mul(db, db), f.mul(4, f.mul(da, dc)));
  switch (f.square_class(disc)) {
    case SquareClass::zero: return 1;
    case SquareClass::square: return 2;
    case SquareClass::nonsquare: return 0;
  }
  return 0;
}

bool Plane::tangent(const Circle& c1, const Circle& c2) const {
  if (c1 == c2) throw Error(Errc::identical_circles, "tangency of a circle with itself");
  return intersection_size(c1, c2) == 1;
}

bool Plane::tangent_by_enumeration(const Circle& c1, const Circle& c2) const {
  return intersection(c1, c2).size() == 1;
}

Circle Plane::touching_circle(const Point& p, const Circle& K, const Point& r) const {
  if (!incident(p, K)) throw Error(Errc::not_incident, to_string(p) + " is not on " + to_string(K));
  if (incident(r, K)) throw Error(Errc::incident, to_string(r) + " lies on " + to_string(K));
  if (parallel(p, r)) throw Error(Errc::parallel_points, to_string(p) + " and " + to_string(r) + " are parallel");
  for (const Circle& L : joining_pencil(p, r))
    if (L != K && tangent(L, K)) return L;
  throw Error(Errc::a3_failure, "no touching circle through " + to_string(r));
}

Point Plane::parallel_point(const Point& x, const Circle& K) const {
  if (x.ideal) return Point::at_infinity(K.a);
  return Point::affine(x.x, eval(K, x.x));
}

std::vector<Circle> Plane::pencil(const Point& p, const Circle& K) const {
  if (!incident(p, K)) throw Error(Errc::not_incident, to_string(p) + " is not on " + to_string(K));
  std::vector<Circle> out;
  for (const Circle& L : circles_) {
    if (L == K) {
      out.push_back(L);
      continue;
    }
    if (incident(p, L) && intersection_size(L, K) == 1) out.push_back(L);
  }
  return out;
}

std::vector<Circle> Plane::joining_pencil(const Point& x, const Point& y) const {
  if (parallel(x, y)) throw Error(Errc::parallel_points, to_string(x) + " and " + to_string(y) + " are parallel");
  const FieldSpec& f = *field_;
  std::vector<Circle> out;
  Point u = std::min(x, y);
  Point v = std::max(x, y);
  if (v.ideal) {
    int a = v.x;
    for (int b = 0; b < q_; ++b)
      out.push_back({a, b, f.sub(f.sub(u.y, f.mul(a, f.mul(u.x, u.x))), f.mul(b, u.x))});
  } else {
    int slope = f.div(f.sub(v.y, u.y), f.sub(v.x, u.x));
    for (int a = 0; a < q_; ++a) {
      int b = f.sub(slope, f.mul(a, f.add(u.x, v.x)));
      out.push_back({a, b, f.sub(f.sub(u.y, f.mul(a, f.mul(u.x, u.x))), f.mul(b, u.x))});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Circle> Plane::tangent_members(const Circle& M, const Pencil& pencil) const {
  std::vector<Circle> out;
  for (const Circle& L : this->pencil(pencil))
    if (L != M && tangent(L, M)) out.push_back(L);
  return out;
}

PencilTangency Plane::pencil_tangent(const Circle& M, const Pencil& pencil) const {
  if (incident(pencil.p, M))
    throw Error(Errc::incident, "pencil point " + to_string(pencil.p) + " lies on " + to_string(M));
  std::vector<Circle> members = tangent_members(M, pencil);
  if (members.size() != 1) {
    nlohmann::json detail = {{"circle", to_json(M)}, {"tangent_members", nlohmann::json::array()}};
    for (const Circle& L : members) detail["tangent_members"].push_back(to_json(L));
    throw Error(Errc::a3_failure,
                "A3 fails: " + to_string(M) + " is tangent to " + std::to_string(members.size()) + " pencil members",
                detail);
  }
  return {members.front(), intersection(members.front(), M).front()};
}

Point canonical_base_point(const FieldSpec& f, const Circle& M) {
  if (f.char_two()) throw Error(Errc::char_two, "base points need division by 2");
  if (M.a == 0) throw Error(Errc::incident, "circle " + to_string(M) + " passes through (inf,0)");
  int x = f.div(f.neg(M.b), f.mul(2, M.a));
  int y = f.sub(M.c, f.div(f.mul(M.b, M.b), f.mul(4, M.a)));
  return Point::affine(x, y);
}

}  // namespace laguerre
