#include "laguerre/skewaffine.hpp"

#include <algorithm>

#include "laguerre/error.hpp"

namespace laguerre {

using nlohmann::json;

const char* to_string(LineKind k) {
  switch (k) {
    case LineKind::circle_line: return "circle_line";
    case LineKind::straight_pencil: return "straight_pencil";
    case LineKind::special: return "special";
  }
  return "unknown";
}

GroupSpace GroupSpace::build(const DeltaGroup& group, Exec exec) {
  const Plane& plane = group.plane();
  {
    std::vector<Report> axioms = verify_group_axioms(plane, group.pencil(), &group, exec);
    if (!axioms[0].ok() || !axioms[1].ok())
      throw Error(Errc::group_axioms, "A1/A2 fail; the group space is not defined",
                  json::array({to_json(axioms[0]), to_json(axioms[1])}));
  }

  GroupSpace gs;
  gs.group_ = &group;
  gs.points_ = group.residual_points();
  gs.local_.assign(static_cast<std::size_t>(plane.num_points()), -1);
  const int n = gs.num_points();
  for (int i = 0; i < n; ++i) gs.local_[static_cast<std::size_t>(gs.points_[static_cast<std::size_t>(i)])] = i;

  // Joins by orbit enumeration under the point stabilizers.
  std::vector<LineKey> provisional;
  std::map<LineKey, int> provisional_index;
  std::vector<int> join(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (int xl = 0; xl < n; ++xl) {
    const int x = gs.points_[static_cast<std::size_t>(xl)];
    std::vector<std::size_t> stab = group.stabilizer(x);
    for (int yl = 0; yl < n; ++yl) {
      if (yl == xl || join[static_cast<std::size_t>(xl * n + yl)] >= 0) continue;
      const int y = gs.points_[static_cast<std::size_t>(yl)];
      std::vector<int> orbit = group.orbit(stab, y);
      LineKey key;
      key.points = orbit;
      key.points.push_back(x);
      std::sort(key.points.begin(), key.points.end());
      if (plane.parallel(plane.point(x), plane.point(y))) key.special_base = x;
      auto [it, inserted] = provisional_index.try_emplace(key, static_cast<int>(provisional.size()));
      if (inserted) provisional.push_back(key);
      for (int z : orbit) join[static_cast<std::size_t>(xl * n + gs.local(z))] = it->second;
    }
  }

  // Canonical (lexicographic) line ids.
  std::vector<int> remap(provisional.size());
  for (auto& [key, pid] : provisional_index) {
    remap[static_cast<std::size_t>(pid)] = static_cast<int>(gs.lines_.size());
    gs.index_.emplace(key, static_cast<int>(gs.lines_.size()));
    Line line;
    line.points = key.points;
    gs.lines_.push_back(std::move(line));
  }
  gs.join_.assign(join.size(), -1);
  for (int xl = 0; xl < n; ++xl)
    for (int yl = 0; yl < n; ++yl) {
      if (xl == yl) continue;
      int id = remap[static_cast<std::size_t>(join[static_cast<std::size_t>(xl * n + yl)])];
      gs.join_[static_cast<std::size_t>(xl * n + yl)] = id;
      auto& bp = gs.lines_[static_cast<std::size_t>(id)].basepoints;
      int x = gs.points_[static_cast<std::size_t>(xl)];
      if (std::find(bp.begin(), bp.end(), x) == bp.end()) bp.push_back(x);
    }
  for (auto& [key, id] : gs.index_) {
    Line& line = gs.lines_[static_cast<std::size_t>(id)];
    std::sort(line.basepoints.begin(), line.basepoints.end());
    line.basepoint = key.special_base >= 0 ? key.special_base : line.basepoints.front();
    if (key.special_base >= 0)
      line.kind = LineKind::special;
    else if (line.basepoints.size() == line.points.size())
      line.kind = LineKind::straight_pencil;
    else
      line.kind = LineKind::circle_line;
  }

  gs.membership_.assign(gs.lines_.size() * static_cast<std::size_t>(n), 0);
  for (std::size_t id = 0; id < gs.lines_.size(); ++id)
    for (int z : gs.lines_[id].points) gs.membership_[id * static_cast<std::size_t>(n) + static_cast<std::size_t>(gs.local(z))] = 1;

  // Action of the group on lines.
  const std::size_t nl = gs.lines_.size();
  gs.images_.assign(group.size() * nl, -1);
  auto image_of = [&](std::size_t e, std::size_t id) {
    const Line& line = gs.lines_[id];
    LineKey key;
    for (int z : line.points) key.points.push_back(group.apply_point(e, z));
    std::sort(key.points.begin(), key.points.end());
    if (line.kind == LineKind::special) key.special_base = group.apply_point(e, line.basepoint);
    auto it = gs.index_.find(key);
    return it == gs.index_.end() ? -1 : it->second;
  };
  const auto ne = static_cast<std::int64_t>(group.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t e = 0; e < ne; ++e)
      for (std::size_t id = 0; id < nl; ++id) gs.images_[static_cast<std::size_t>(e) * nl + id] = image_of(static_cast<std::size_t>(e), id);
  } else {
    for (std::int64_t e = 0; e < ne; ++e)
      for (std::size_t id = 0; id < nl; ++id) gs.images_[static_cast<std::size_t>(e) * nl + id] = image_of(static_cast<std::size_t>(e), id);
  }
  if (std::find(gs.images_.begin(), gs.images_.end(), -1) != gs.images_.end())
    throw Error(Errc::group_axioms, "a group element maps a line outside the line set");

  // Parallel classes: orbits on lines, numbered by their least member.
  for (std::size_t id = 0; id < nl; ++id) {
    if (gs.lines_[id].class_index >= 0) continue;
    const int cls = gs.num_classes_++;
    std::vector<int> members;
    for (std::size_t e = 0; e < group.size(); ++e) {
      int img = gs.images_[e * nl + id];
      Line& target = gs.lines_[static_cast<std::size_t>(img)];
      if (target.class_index < 0) {
        target.class_index = cls;
        target.class_id = static_cast<int>(id);
        members.push_back(img);
      }
    }
    std::sort(members.begin(), members.end());
    gs.classes_.push_back(std::move(members));
  }
  gs.class_pairs_.assign(static_cast<std::size_t>(gs.num_classes_), {});
  for (int xl = 0; xl < n; ++xl)
    for (int yl = 0; yl < n; ++yl)
      if (xl != yl)
        gs.class_pairs_[static_cast<std::size_t>(gs.lines_[static_cast<std::size_t>(gs.join_local(xl, yl))].class_index)]
            .emplace_back(xl, yl);
  return gs;
}

int GroupSpace::join(int x, int y) const {
  if (x == y) throw Error(Errc::invalid_argument, "join of a point with itself");
  if (!contains(x) || !contains(y))
    throw Error(Errc::on_ideal_generator, "join argument lies on the pencil generator");
  return join_local(local(x), local(y));
}

bool GroupSpace::on_line(int plane_point, int line_id) const {
  int l = local(plane_point);
  return l >= 0 && membership_[static_cast<std::size_t>(line_id) * points_.size() + static_cast<std::size_t>(l)] != 0;
}

std::optional<int> GroupSpace::find(const LineKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> GroupSpace::line_of_circle(const Circle& M) const {
  LineKey key;
  for (const Point& z : plane().circle_points(M))
    if (contains(plane().index(z))) key.points.push_back(plane().index(z));
  std::sort(key.points.begin(), key.points.end());
  return find(key);
}

LineClassification classify_line(const GroupSpace& gs, int line_id) {
  const Line& line = gs.line(line_id);
  LineClassification out{LineKind::circle_line, {}};
  for (int x : line.points)
    for (int y : line.points)
      if (x != y && gs.join(x, y) == line_id) {
        out.basepoints.push_back(x);
        break;
      }
  const Plane& plane = gs.plane();
  bool parallel_join = line.points.size() >= 2 &&
                       plane.parallel(plane.point(line.points[0]), plane.point(line.points[1]));
  if (parallel_join)
    out.kind = LineKind::special;
  else if (out.basepoints.size() == line.points.size())
    out.kind = LineKind::straight_pencil;
  return out;
}

std::vector<int> closed_form_join(const Plane& plane, const Point& x, const Point& y) {
  if (x.ideal || y.ideal) throw Error(Errc::on_ideal_generator, "closed-form join is for affine points");
  if (x == y) throw Error(Errc::invalid_argument, "join of a point with itself");
  const FieldSpec& f = plane.field();
  std::vector<int> out;
  if (x.x != y.x) {
    int dx = f.sub(y.x, x.x);
    int A = f.div(f.sub(y.y, x.y), f.mul(dx, dx));
    Circle M{A, f.neg(f.mul(2, f.mul(A, x.x))), f.add(f.mul(A, f.mul(x.x, x.x)), x.y)};
    for (const Point& z : plane.circle_points(M))
      if (!z.ideal) out.push_back(plane.index(z));
  } else {
    int dy = f.sub(y.y, x.y);
    out.push_back(plane.index(x));
    for (int s : f.nonzero_squares()) out.push_back(plane.index(Point::affine(x.x, f.add(x.y, f.mul(s, dy)))));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool parallel_by_invariant(const GroupSpace& gs, int l1, int l2) {
  const Line& a = gs.line(l1);
  const Line& b = gs.line(l2);
  if (a.kind != b.kind) return false;
  const Plane& plane = gs.plane();
  const FieldSpec& f = plane.field();
  switch (a.kind) {
    case LineKind::straight_pencil: return true;
    case LineKind::circle_line: {
      auto lead = [&](const Line& l) {
        return plane.circle_through(plane.point(l.points[0]), plane.point(l.points[1]), plane.point(l.points[2])).a;
      };
      return lead(a) == lead(b);
    }
    case LineKind::special: {
      auto offset_class = [&](const Line& l) {
        const Point& base = plane.point(l.basepoint);
        int other = l.points[0] == l.basepoint ? l.points[1] : l.points[0];
        return f.square_class(f.sub(plane.point(other).y, base.y));
      };
      return offset_class(a) == offset_class(b);
    }
  }
  return false;
}

json space_to_json(const GroupSpace& gs) {
  const Plane& plane = gs.plane();
  json lines = json::array();
  for (const Line& line : gs.lines()) {
    json pts = json::array();
    for (int z : line.points) pts.push_back(to_json(plane.point(z)));
    lines.push_back({{"base", to_json(plane.point(line.basepoint))},
                     {"kind", to_string(line.kind)},
                     {"class", line.class_id},
                     {"points", pts}});
  }
  return {{"q", plane.q()}, {"pencil", to_json(gs.group().pencil())}, {"lines", lines}};
}

}  // namespace laguerre
