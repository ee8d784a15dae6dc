#include <algorithm>

#include "laguerre/error.hpp"
#include "laguerre/plane.hpp"

namespace laguerre {

namespace {

using nlohmann::json;

void record(Report& report, const char* axiom, const Tally& tally) {
  report.absorb(tally);
  report.stats[axiom] = {{"cases", tally.cases()}, {"violations", tally.violations()}};
}

Report finish(Report report) {
  if (report.status != Status::fail) report.status = Status::pass;
  return report;
}

// Axiom (4): a circle with at least three points, but not all of them.
Tally axiom_four(const Plane& plane) {
  Tally t;
  t.count();
  bool found = false;
  for (const Circle& c : plane.circles()) {
    auto n = static_cast<int>(plane.circle_points(c).size());
    if (n >= 3 && n < plane.num_points()) {
      found = true;
      break;
    }
  }
  if (!found) t.fail(0, 0, {{"axiom", "4"}, {"reason", "every circle has < 3 points or all points"}});
  return t;
}

}  // namespace

Report verify_laguerre_axioms(const Plane& plane, Exec exec) {
  const int n = plane.num_points();
  const auto& pts = plane.points();
  Report report;
  report.check_id = "LAG";
  report.q = plane.q();

  // (1) every pairwise nonparallel triple i < j < k lies on exactly one circle.
  Tally join = sweep(n, exec, [&](std::int64_t i, Tally& t) {
    const Point& u = pts[static_cast<std::size_t>(i)];
    for (int j = static_cast<int>(i) + 1; j < n; ++j) {
      const Point& v = pts[static_cast<std::size_t>(j)];
      if (plane.parallel(u, v)) continue;
      std::vector<Circle> through = plane.joining_pencil(u, v);
      for (int k = j + 1; k < n; ++k) {
        const Point& w = pts[static_cast<std::size_t>(k)];
        if (plane.parallel(u, w) || plane.parallel(v, w)) continue;
        t.count();
        int hits = 0;
        for (const Circle& c : through) hits += plane.incident(w, c);
        if (hits != 1)
          t.fail(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j * n + k),
                 {{"axiom", "1"}, {"points", {to_json(u), to_json(v), to_json(w)}}, {"circles", hits}});
      }
    }
  });
  record(report, "axiom1", join);

  // (2) for K, p in K, r off K with r not parallel to p: one circle through r touches K at p.
  const int nc = plane.num_circles();
  Tally touch = sweep(nc, exec, [&](std::int64_t ci, Tally& t) {
    const Circle& K = plane.circle(static_cast<int>(ci));
    for (const Point& p : plane.circle_points(K)) {
      std::vector<int> hits(static_cast<std::size_t>(n), 0);
      for (const Circle& L : plane.circles()) {
        if (L == K || !plane.incident(p, L) || plane.intersection_size(L, K) != 1) continue;
        for (const Point& z : plane.circle_points(L)) ++hits[static_cast<std::size_t>(plane.index(z))];
      }
      for (int ri = 0; ri < n; ++ri) {
        const Point& r = pts[static_cast<std::size_t>(ri)];
        if (plane.incident(r, K) || plane.parallel(p, r)) continue;
        t.count();
        if (hits[static_cast<std::size_t>(ri)] != 1)
          t.fail(static_cast<std::uint64_t>(ci), static_cast<std::uint64_t>(plane.index(p) * n + ri),
                 {{"axiom", "2"}, {"K", to_json(K)}, {"p", to_json(p)}, {"r", to_json(r)},
                  {"circles", hits[static_cast<std::size_t>(ri)]}});
      }
    }
  });
  record(report, "axiom2", touch);

  // (3) every point has exactly one parallel point on every circle.
  Tally meet = sweep(nc, exec, [&](std::int64_t ci, Tally& t) {
    const Circle& K = plane.circle(static_cast<int>(ci));
    std::vector<int> per_generator(static_cast<std::size_t>(plane.q() + 1), 0);
    for (const Point& z : plane.circle_points(K))
      ++per_generator[static_cast<std::size_t>(plane.generator_index(plane.generator_of(z)))];
    for (int xi = 0; xi < n; ++xi) {
      const Point& x = pts[static_cast<std::size_t>(xi)];
      t.count();
      int on = per_generator[static_cast<std::size_t>(plane.generator_index(plane.generator_of(x)))];
      if (on != 1)
        t.fail(static_cast<std::uint64_t>(ci), static_cast<std::uint64_t>(xi),
               {{"axiom", "3"}, {"x", to_json(x)}, {"K", to_json(K)}, {"parallel_points", on}});
    }
  });
  record(report, "axiom3", meet);
  record(report, "axiom4", axiom_four(plane));
  return finish(std::move(report));
}

Report verify_laguerre_axioms_reference(const Plane& plane) {
  const int n = plane.num_points();
  const auto& pts = plane.points();
  Report report;
  report.check_id = "LAG";
  report.q = plane.q();

  Tally join;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Point &u = pts[i], &v = pts[j], &w = pts[k];
        if (plane.parallel(u, v) || plane.parallel(u, w) || plane.parallel(v, w)) continue;
        join.count();
        int hits = 0;
        for (const Circle& c : plane.circles())
          hits += plane.incident(u, c) && plane.incident(v, c) && plane.incident(w, c);
        if (hits != 1)
          join.fail(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j * n + k),
                    {{"axiom", "1"}, {"points", {to_json(u), to_json(v), to_json(w)}}, {"circles", hits}});
      }
  record(report, "axiom1", join);

  Tally touch;
  for (int ci = 0; ci < plane.num_circles(); ++ci) {
    const Circle& K = plane.circle(ci);
    for (int pi = 0; pi < n; ++pi) {
      const Point& p = pts[pi];
      if (!plane.incident(p, K)) continue;
      for (int ri = 0; ri < n; ++ri) {
        const Point& r = pts[ri];
        if (plane.incident(r, K) || plane.parallel(p, r)) continue;
        touch.count();
        int hits = 0;
        for (const Circle& L : plane.circles()) {
          if (!plane.incident(p, L) || !plane.incident(r, L)) continue;
          auto common = plane.intersection(L, K);
          hits += common.size() == 1 && common.front() == p;
        }
        if (hits != 1)
          touch.fail(static_cast<std::uint64_t>(ci), static_cast<std::uint64_t>(pi * n + ri),
                     {{"axiom", "2"}, {"K", to_json(K)}, {"p", to_json(p)}, {"r", to_json(r)}, {"circles", hits}});
      }
    }
  }
  record(report, "axiom2", touch);

  Tally meet;
  for (int ci = 0; ci < plane.num_circles(); ++ci) {
    const Circle& K = plane.circle(ci);
    for (int xi = 0; xi < n; ++xi) {
      meet.count();
      int on = 0;
      for (const Point& z : pts) on += plane.parallel(pts[xi], z) && plane.incident(z, K);
      if (on != 1)
        meet.fail(static_cast<std::uint64_t>(ci), static_cast<std::uint64_t>(xi),
                  {{"axiom", "3"}, {"x", to_json(pts[xi])}, {"K", to_json(K)}, {"parallel_points", on}});
    }
  }
  record(report, "axiom3", meet);
  record(report, "axiom4", axiom_four(plane));
  return finish(std::move(report));
}

std::pair<DerivedAffinePlane, Report> derived_affine_plane(const Plane& plane, const Point& p, Exec exec) {
  DerivedAffinePlane A;
  A.center = p;
  std::vector<int> local(static_cast<std::size_t>(plane.num_points()), -1);
  for (const Point& z : plane.points())
    if (!plane.parallel(z, p)) {
      local[static_cast<std::size_t>(plane.index(z))] = static_cast<int>(A.points.size());
      A.points.push_back(z);
    }
  auto add_line = [&](const std::vector<Point>& pts) {
    std::vector<int> line;
    for (const Point& z : pts)
      if (int li = local[static_cast<std::size_t>(plane.index(z))]; li >= 0) line.push_back(li);
    std::sort(line.begin(), line.end());
    A.lines.push_back(std::move(line));
  };
  for (const Circle& c : plane.circles())
    if (plane.incident(p, c)) add_line(plane.circle_points(c));
  for (const Generator& g : plane.generators())
    if (g != plane.generator_of(p)) add_line(plane.points_on(g));

  const auto np = static_cast<int>(A.points.size());
  const auto nl = static_cast<int>(A.lines.size());
  std::vector<std::uint8_t> on(static_cast<std::size_t>(np) * static_cast<std::size_t>(nl), 0);
  auto cell = [&](int line, int point) -> std::uint8_t& {
    return on[static_cast<std::size_t>(line) * static_cast<std::size_t>(np) + static_cast<std::size_t>(point)];
  };
  for (int l = 0; l < nl; ++l)
    for (int z : A.lines[static_cast<std::size_t>(l)]) cell(l, z) = 1;

  Report report;
  report.check_id = "AFF";
  report.q = plane.q();
  report.stats["center"] = to_json(p);
  report.stats["points"] = np;
  report.stats["lines"] = nl;

  Tally join = sweep(np, exec, [&](std::int64_t x, Tally& t) {
    for (int y = static_cast<int>(x) + 1; y < np; ++y) {
      t.count();
      int hits = 0;
      for (int l = 0; l < nl; ++l) hits += cell(l, static_cast<int>(x)) && cell(l, y);
      if (hits != 1)
        t.fail(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y),
               {{"axiom", "join"}, {"x", to_json(A.points[static_cast<std::size_t>(x)])},
                {"y", to_json(A.points[static_cast<std::size_t>(y)])}, {"lines", hits}});
    }
  });
  report.absorb(join);

  Tally playfair = sweep(nl, exec, [&](std::int64_t l, Tally& t) {
    const auto& line = A.lines[static_cast<std::size_t>(l)];
    for (int x = 0; x < np; ++x) {
      if (cell(static_cast<int>(l), x)) continue;
      t.count();
      int parallels = 0;
      for (int m = 0; m < nl; ++m) {
        if (!cell(m, x)) continue;
        bool disjoint = std::none_of(line.begin(), line.end(), [&](int z) { return cell(m, z) != 0; });
        parallels += disjoint;
      }
      if (parallels != 1)
        t.fail(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(x),
               {{"axiom", "playfair"}, {"x", to_json(A.points[static_cast<std::size_t>(x)])}, {"parallels", parallels}});
    }
  });
  report.absorb(playfair);

  Tally triangle;
  triangle.count();
  bool found = false;
  for (int x = 0; x < np && !found; ++x)
    for (int y = x + 1; y < np && !found; ++y)
      for (int z = y + 1; z < np && !found; ++z) {
        bool collinear = false;
        for (int l = 0; l < nl && !collinear; ++l) collinear = cell(l, x) && cell(l, y) && cell(l, z);
        found = !collinear;
      }
  if (!found) triangle.fail(0, 0, {{"axiom", "triangle"}});
  report.absorb(triangle);

  if (report.status != Status::fail) report.status = Status::pass;
  return {std::move(A), std::move(report)};
}

}  // namespace laguerre
