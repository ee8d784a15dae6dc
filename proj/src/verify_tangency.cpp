// Tangency configurations, the tangent-circle equivalence and tangency loci.

#include <set>

#include "verify_internal.hpp"

namespace laguerre::detail {

using nlohmann::json;

namespace {

// Circle off the pencil point with its line and base point.
struct CircleLine {
  Circle M;
  int line = -1;
  Point base;
  int base_member = -1;  ///< index into ctx.members() of the pencil circle through the base point
};

std::vector<CircleLine> proper_circle_lines(const TheoremContext& ctx) {
  const Plane& plane = ctx.plane();
  std::vector<CircleLine> out;
  for (const Circle& M : plane.circles()) {
    if (plane.incident(ctx.pencil().p, M)) continue;
    CircleLine c;
    c.M = M;
    c.line = ctx.space().line_of_circle(M).value_or(-1);
    c.base = plane.pencil_tangent(M, ctx.pencil()).point;
    const Circle B = ctx.member_through(c.base);
    c.base_member = static_cast<int>(std::find(ctx.members().begin(), ctx.members().end(), B) - ctx.members().begin());
    out.push_back(c);
  }
  return out;
}

std::size_t position(const EquivPartition& E, int plane_point) {
  auto it = std::lower_bound(E.points.begin(), E.points.end(), plane_point);
  if (it == E.points.end() || *it != plane_point) throw Error(Errc::incident, "point lies on the base circle");
  return static_cast<std::size_t>(it - E.points.begin());
}

bool on_pencil_generator(const TheoremContext& ctx, const Point& z) { return ctx.plane().parallel(z, ctx.pencil().p); }

// (L, M, N) pairwise tangent at three distinct points never has M ∩ N on the
// pencil generator; more strongly, M and N meeting there meet off it too.
Tally no_tangent_triangle(const TheoremContext& ctx, const Budget& budget) {
  const Plane& plane = ctx.plane();
  std::vector<std::vector<Tangent>> tangents;
  std::vector<std::pair<int, int>> outer;
  for (std::size_t li = 0; li < ctx.members().size(); ++li) {
    tangents.push_back(tangents_of(plane, ctx.members()[li]));
    for (std::size_t mi = 0; mi < tangents.back().size(); ++mi) outer.emplace_back(static_cast<int>(li), static_cast<int>(mi));
  }
  return outer_sweep(static_cast<std::int64_t>(outer.size()), budget, ctx.exec(), [&](std::int64_t oi, Tally& tally) {
    auto [li, mi] = outer[static_cast<std::size_t>(oi)];
    const auto& T = tangents[static_cast<std::size_t>(li)];
    const Tangent& M = T[static_cast<std::size_t>(mi)];
    for (std::size_t ni = 0; ni < T.size(); ++ni) {
      const Tangent& N = T[ni];
      if (N.point == M.point) continue;
      tally.count();
      std::vector<Point> common = plane.intersection(M.circle, N.circle);
      bool on_gen = std::any_of(common.begin(), common.end(), [&](const Point& z) { return on_pencil_generator(ctx, z); });
      bool off_gen = std::any_of(common.begin(), common.end(), [&](const Point& z) { return !on_pencil_generator(ctx, z); });
      bool triangle = common.size() == 1 && common.front() != M.point && common.front() != N.point && on_gen;
      if (triangle || (on_gen && !off_gen))
        tally.fail(static_cast<std::uint64_t>(oi), ni,
                   {{"L", to_json(ctx.members()[static_cast<std::size_t>(li)])}, {"M", to_json(M.circle)}, {"N", to_json(N.circle)},
                    {"tangent_triangle", triangle}});
    }
  });
}

template <typename Pred>
Tally over_parallel_circle_pairs(const TheoremContext& ctx, const Budget& budget, Pred&& pred) {
  const GroupSpace& S = ctx.space();
  std::vector<CircleLine> cl = proper_circle_lines(ctx);
  return outer_sweep(static_cast<std::int64_t>(cl.size()), budget, ctx.exec(), [&](std::int64_t i, Tally& tally) {
    const CircleLine& a = cl[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < cl.size(); ++j) {
      const CircleLine& b = cl[j];
      if (a.line < 0 || b.line < 0) {
        tally.count();
        tally.fail(static_cast<std::uint64_t>(i), j, {{"M", to_json(a.M)}, {"N", to_json(b.M)}, {"reason", "circle is not a line"}});
        return;
      }
      if (!S.parallel(a.line, b.line)) continue;
      pred(a, b, static_cast<std::uint64_t>(i), j, tally);
    }
  });
}

json pair_json(const CircleLine& a, const CircleLine& b) {
  return {{"M", to_json(a.M)}, {"N", to_json(b.M)}, {"base_M", to_json(a.base)}, {"base_N", to_json(b.base)}};
}

Tally common_point_same_straight(const TheoremContext& ctx, const Budget& budget) {
  const GroupSpace& S = ctx.space();
  return over_parallel_circle_pairs(ctx, budget, [&](const CircleLine& a, const CircleLine& b, std::uint64_t k, std::uint64_t s, Tally& t) {
    if (a.base_member != b.base_member) return;
    t.count();
    if (!sets_meet(S.line(a.line).points, S.line(b.line).points)) t.fail(k, s, pair_json(a, b));
  });
}

Tally disjoint_iff_parallel_bases(const TheoremContext& ctx, const Budget& budget) {
  const GroupSpace& S = ctx.space();
  const Plane& plane = ctx.plane();
  return over_parallel_circle_pairs(ctx, budget, [&](const CircleLine& a, const CircleLine& b, std::uint64_t k, std::uint64_t s, Tally& t) {
    if (a.line == b.line) return;
    t.count();
    bool disjoint = !sets_meet(S.line(a.line).points, S.line(b.line).points);
    bool bases = a.base != b.base && plane.parallel(a.base, b.base);
    if (disjoint != bases) {
      json d = pair_json(a, b);
      d["disjoint"] = disjoint;
      t.fail(k, s, d);
    }
  });
}

Tally straight_meets_both(const TheoremContext& ctx, const Budget& budget) {
  const GroupSpace& S = ctx.space();
  std::vector<int> straight;
  for (const Circle& C : ctx.members()) straight.push_back(S.line_of_circle(C).value_or(-1));
  return over_parallel_circle_pairs(ctx, budget, [&](const CircleLine& a, const CircleLine& b, std::uint64_t k, std::uint64_t s, Tally& t) {
    if (a.base_member != b.base_member) return;
    for (std::size_t ci = 0; ci < straight.size(); ++ci) {
      const std::vector<int>& C = S.line(straight[ci]).points;
      if (!sets_meet(C, S.line(a.line).points)) continue;
      t.count();
      if (!sets_meet(C, S.line(b.line).points)) {
        json d = pair_json(a, b);
        d["C"] = to_json(ctx.members()[ci]);
        t.fail(k, s * 64 + ci, d);
      }
    }
  });
}

Tally tangent_circles_meet(const TheoremContext& ctx, const Budget& budget) {
  const Plane& plane = ctx.plane();
  std::vector<std::vector<Tangent>> tangents;
  std::vector<std::pair<int, int>> outer;
  for (std::size_t li = 0; li < ctx.members().size(); ++li) {
    tangents.push_back(tangents_of(plane, ctx.members()[li]));
    for (std::size_t qi = 0; qi < tangents.back().size(); ++qi) outer.emplace_back(static_cast<int>(li), static_cast<int>(qi));
  }
  return outer_sweep(static_cast<std::int64_t>(outer.size()), budget, ctx.exec(), [&](std::int64_t oi, Tally& tally) {
    auto [li, qi] = outer[static_cast<std::size_t>(oi)];
    const auto& T = tangents[static_cast<std::size_t>(li)];
    const Tangent& Q = T[static_cast<std::size_t>(qi)];
    std::vector<std::size_t> meeting;
    for (std::size_t i = 0; i < T.size(); ++i)
      if (T[i].point != Q.point && meets(plane, Q.circle, T[i].circle)) meeting.push_back(i);
    for (std::size_t pi : meeting)
      for (std::size_t ri : meeting) {
        if (T[pi].point == T[ri].point) continue;
        tally.count();
        if (!meets(plane, T[pi].circle, T[ri].circle))
          tally.fail(static_cast<std::uint64_t>(oi), pi * T.size() + ri,
                     {{"L", to_json(ctx.members()[static_cast<std::size_t>(li)])}, {"P", to_json(T[pi].circle)},
                      {"Q", to_json(Q.circle)}, {"R", to_json(T[ri].circle)}});
      }
  });
}

Tally equivalence_axioms(const TheoremContext& ctx, const Budget& budget) {
  const Plane& plane = ctx.plane();
  Tally tally;
  for (std::size_t li = 0; li < ctx.members().size(); ++li) {
    const EquivPartition& E = ctx.equiv(ctx.members()[li]);
    const std::size_t n = E.size();
    const json L = to_json(E.L);
    tally.merge(outer_sweep(static_cast<std::int64_t>(n), budget, ctx.exec(), [&](std::int64_t ai, Tally& t) {
      const auto a = static_cast<std::size_t>(ai);
      const std::uint64_t key = li * n + a;
      t.count();
      if (!E.related(a, a)) t.fail(key, 0, {{"L", L}, {"a", pt(plane, E.points[a])}, {"reason", "not reflexive"}});
      for (std::size_t b = 0; b < n; ++b) {
        t.count();
        if (E.related(a, b) != E.related(b, a))
          t.fail(key, 1 + b, {{"L", L}, {"a", pt(plane, E.points[a])}, {"b", pt(plane, E.points[b])}, {"reason", "not symmetric"}});
        if (!E.related(a, b)) continue;
        for (std::size_t c = 0; c < n; ++c) {
          t.count();
          if (E.related(b, c) && !E.related(a, c))
            t.fail(key, 1 + n + b * n + c,
                   {{"L", L}, {"a", pt(plane, E.points[a])}, {"b", pt(plane, E.points[b])}, {"c", pt(plane, E.points[c])},
                    {"reason", "not transitive"}});
        }
      }
    }));
  }
  return tally;
}

// Per point off L: tangent circles through it.
std::vector<std::vector<Tangent>> tangents_through(const Plane& plane, const std::vector<Tangent>& T, const std::vector<int>& points) {
  std::vector<std::vector<Tangent>> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (const Tangent& t : T)
      if (plane.incident(plane.point(points[i]), t.circle)) out[i].push_back(t);
  return out;
}

bool witness_pair(const Plane& plane, const std::vector<Tangent>& A, const std::vector<Tangent>& B) {
  for (const Tangent& P : A)
    for (const Tangent& Q : B)
      if (P.point != Q.point && meets(plane, P.circle, Q.circle)) return true;
  return false;
}

bool all_pairs_meet(const Plane& plane, const std::vector<Tangent>& A, const std::vector<Tangent>& B) {
  for (const Tangent& P : A)
    for (const Tangent& Q : B)
      if (!meets(plane, P.circle, Q.circle)) return false;
  return true;
}

int common_tangent_count(const std::vector<Tangent>& A, const std::vector<Tangent>& B) {
  int n = 0;
  for (const Tangent& P : A)
    for (const Tangent& Q : B)
      if (P.circle == Q.circle) ++n;
  return n;
}

Tally equivalence_by_witness(const TheoremContext& ctx, const Budget& budget) {
  const Plane& plane = ctx.plane();
  Tally tally;
  for (std::size_t li = 0; li < ctx.members().size(); ++li) {
    const EquivPartition& E = ctx.equiv(ctx.members()[li]);
    auto through = tangents_through(plane, tangents_of(plane, E.L), E.points);
    const std::size_t n = E.size();
    tally.merge(outer_sweep(static_cast<std::int64_t>(n), budget, ctx.exec(), [&](std::int64_t ai, Tally& t) {
      const auto a = static_cast<std::size_t>(ai);
      for (std::size_t b = 0; b < n; ++b) {
        t.count();
        bool w = witness_pair(plane, through[a], through[b]);
        if (w != E.related(a, b))
          t.fail(li * n + a, b, {{"L", to_json(E.L)}, {"a", pt(plane, E.points[a])}, {"b", pt(plane, E.points[b])},
                                 {"equivalent", E.related(a, b)}, {"witness_pair", w}});
      }
    }));
  }
  return tally;
}

Tally special_line_classes(const TheoremContext& ctx, const Budget& budget) {
  const Plane& plane = ctx.plane();
  const GroupSpace& S = ctx.space();
  return outer_sweep(S.num_points(), budget, ctx.exec(), [&](std::int64_t xi, Tally& tally) {
    const int x = S.points()[static_cast<std::size_t>(xi)];
    const Point& xp = plane.point(x);
    const EquivPartition& E = ctx.equiv(ctx.member_through(xp));
    std::vector<int> gen;
    for (const Point& z : plane.points_on(plane.generator_of(xp)))
      if (z != xp) gen.push_back(plane.index(z));
    for (int y : gen) {
      const std::vector<int>& line = S.line(S.join(x, y)).points;
      for (int z : gen) {
        tally.count();
        bool on = std::binary_search(line.begin(), line.end(), z);
        bool eq = E.related(position(E, z), position(E, y));
        if (on != eq)
          tally.fail(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y * plane.num_points() + z),
                     {{"x", to_json(xp)}, {"y", pt(plane, y)}, {"z", pt(plane, z)}, {"on_line", on}, {"equivalent", eq}});
      }
    }
  });
}

Tally two_tangent_circles(const TheoremContext& ctx, const Budget& budget, json& stats) {
  const Plane& plane = ctx.plane();
  Tally tally;
  std::uint64_t two = 0;
  for (std::size_t li = 0; li < ctx.members().size(); ++li) {
    const EquivPartition& E = ctx.equiv(ctx.members()[li]);
    auto through = tangents_through(plane, tangents_of(plane, E.L), E.points);
    std::vector<std::size_t> xs;
    for (std::size_t i = 0; i < E.size(); ++i) {
      const Point& z = plane.point(E.points[i]);
      if (on_pencil_generator(ctx, z) && z != ctx.pencil().p) xs.push_back(i);
    }
    Tally part = outer_sweep(static_cast<std::int64_t>(xs.size()), budget, ctx.exec(), [&](std::int64_t k, Tally& t) {
      const std::size_t a = xs[static_cast<std::size_t>(k)];
      const Point& xp = plane.point(E.points[a]);
      for (std::size_t b = 0; b < E.size(); ++b) {
        if (plane.parallel(plane.point(E.points[b]), xp)) continue;
        t.count();
        int n = common_tangent_count(through[a], through[b]);
        if (E.related(a, b) != (n == 2))
          t.fail(li * E.size() + a, b, {{"L", to_json(E.L)}, {"x", to_json(xp)}, {"y", pt(plane, E.points[b])},
                                        {"equivalent", E.related(a, b)}, {"common_tangent_circles", n}});
      }
    });
    tally.merge(std::move(part));
    for (std::size_t a : xs)
      for (std::size_t b = 0; b < E.size(); ++b)
        if (!plane.parallel(plane.point(E.points[b]), plane.point(E.points[a])) && common_tangent_count(through[a], through[b]) == 2) ++two;
  }
  stats["pairs_with_exactly_two"] = two;
  return tally;
}

Tally square_class_rule(const TheoremContext& ctx, const Budget& budget, json& stats) {
  const Plane& plane = ctx.plane();
  Tally tally;
  json blocks = json::array();
  for (std::size_t li = 0; li < ctx.members().size(); ++li) {
    const EquivPartition& E = ctx.equiv(ctx.members()[li]);
    blocks.push_back(E.blocks.size());
    tally.count();
    if (E.blocks.size() != 2) tally.fail(li * (E.size() + 1), 0, {{"L", to_json(E.L)}, {"blocks", E.blocks.size()}});
    tally.merge(outer_sweep(static_cast<std::int64_t>(E.size()), budget, ctx.exec(), [&](std::int64_t ai, Tally& t) {
      const auto a = static_cast<std::size_t>(ai);
      for (std::size_t b = 0; b < E.size(); ++b) {
        t.count();
        bool rule = equiv_by_square_class(plane, E.L, plane.point(E.points[a]), plane.point(E.points[b]));
        if (rule != E.related(a, b))
          t.fail(li * (E.size() + 1) + 1 + a, b, {{"L", to_json(E.L)}, {"a", pt(plane, E.points[a])}, {"b", pt(plane, E.points[b])},
                                                  {"brute_force", E.related(a, b)}, {"square_class_rule", rule}});
      }
    }));
  }
  stats["blocks_per_pencil_circle"] = blocks;
  return tally;
}

// For q = (inf, beta): every q' on the pencil generator forced by some (x, y).
// The lemma holds for beta iff exactly one point is forced.
std::vector<Point> forced_partners(const TheoremContext& ctx, int beta, const Budget& budget, Tally& tally) {
  const Plane& plane = ctx.plane();
  const GroupSpace& S = ctx.space();
  const Point qi = Point::at_infinity(beta);
  const int n = S.num_points();
  std::vector<std::vector<int>> forced(static_cast<std::size_t>(n));
  tally.merge(outer_sweep(n, budget, ctx.exec(), [&](std::int64_t xi, Tally& t) {
    const Point& x = plane.point(S.points()[static_cast<std::size_t>(xi)]);
    const Circle Lx = ctx.member_through(x);
    std::set<int> local;
    for (int y : S.points()) {
      const Point& yp = plane.point(y);
      if (plane.parallel(x, yp) || plane.incident(yp, Lx)) continue;
      t.count();
      if (!plane.incident(qi, plane.touching_circle(x, Lx, yp))) continue;
      Circle back = plane.touching_circle(yp, ctx.member_through(yp), x);
      local.insert(plane.index(plane.parallel_point(ctx.pencil().p, back)));
    }
    forced[static_cast<std::size_t>(xi)].assign(local.begin(), local.end());
  }));
  std::set<int> all;
  for (auto& f : forced) all.insert(f.begin(), f.end());
  std::vector<Point> out;
  for (int z : all) out.push_back(plane.point(z));
  return out;
}

constexpr const char* kPartnerReading =
    "Read as: q on the circle through y touching the pencil circle of x at x implies q' on the circle through x "
    "touching the pencil circle of y at y; pairs with y on the pencil circle of x are skipped.";

Report unique_partner(const TheoremContext& ctx, const Budget& budget) {
  Tally tally;
  json partners = json::object();
  for (int beta = 1; beta < ctx.q(); ++beta) {
    std::vector<Point> forced = forced_partners(ctx, beta, budget, tally);
    if (forced.size() == 1) {
      partners[std::to_string(beta)] = forced.front().x;
    } else {
      json f = json::array();
      for (const Point& z : forced) f.push_back(to_json(z));
      tally.fail(static_cast<std::uint64_t>(beta), 0, {{"q", to_json(Point::at_infinity(beta))}, {"forced", f}});
    }
  }
  Report r = finish(CheckId::L4_2, ctx, tally, budget);
  r.stats["partner_height"] = partners;
  r.reading_notes = kPartnerReading;
  return r;
}

Report tangency_loci(const TheoremContext& ctx, const Budget& budget, bool through_partner) {
  const Plane& plane = ctx.plane();
  const GroupSpace& S = ctx.space();
  const int q = ctx.q();
  std::vector<int> partner(static_cast<std::size_t>(q), -1);
  Tally tally;
  if (through_partner) {
    Tally lemma;
    for (int beta = 1; beta < q; ++beta) {
      std::vector<Point> forced = forced_partners(ctx, beta, Budget::exhaustive_budget(), lemma);
      if (forced.size() == 1) partner[static_cast<std::size_t>(beta)] = forced.front().x;
    }
  }
  const std::int64_t n = static_cast<std::int64_t>(q - 1) * S.num_points();
  tally.merge(outer_sweep(n, budget, ctx.exec(), [&](std::int64_t k, Tally& t) {
    const int beta = 1 + static_cast<int>(k / S.num_points());
    const Point& x = plane.point(S.points()[static_cast<std::size_t>(k % S.num_points())]);
    const Point qi = Point::at_infinity(beta);
    TangencyLocus locus = tangency_locus(plane, ctx.pencil(), qi, x);
    t.count();
    json d = {{"q", to_json(qi)}, {"x", to_json(x)}};
    if (!locus.circle) {
      d["reason"] = "base points are not the points of one circle off the pencil generator";
      t.fail(static_cast<std::uint64_t>(k), 0, d);
      return;
    }
    if (!through_partner) return;
    const int h = partner[static_cast<std::size_t>(beta)];
    if (h < 0 || !plane.incident(Point::at_infinity(h), *locus.circle)) {
      d["locus"] = to_json(*locus.circle);
      d["partner_height"] = h;
      t.fail(static_cast<std::uint64_t>(k), 1, d);
    }
  }));
  Report r = finish(through_partner ? CheckId::C4_2 : CheckId::T4_1, ctx, tally, budget);
  if (through_partner) r.reading_notes = kPartnerReading;
  return r;
}

// Circles through x touching L, one per point of L not parallel to x.
std::vector<Tangent> touching_through(const Plane& plane, const Circle& L, const Point& x) {
  std::vector<Tangent> out;
  for (const Point& t : plane.circle_points(L))
    if (!plane.parallel(t, x)) out.push_back({plane.touching_circle(t, L, x), t});
  return out;
}

void tangent_conditions_case(const Plane& plane, const Circle& L, const Point& x, const Point& y,
                             const std::vector<Tangent>& tx, const std::vector<Tangent>& ty, Tally& tally,
                             std::uint64_t key, std::uint64_t sub) {
  tally.count();
  bool c1 = common_tangent_count(tx, ty) == 2;
  bool c2 = all_pairs_meet(plane, tx, ty);
  bool c3 = witness_pair(plane, tx, ty);
  if (c1 != c2 || c2 != c3)
    tally.fail(key, sub, {{"L", to_json(L)}, {"x", to_json(x)}, {"y", to_json(y)},
                          {"exactly_two", c1}, {"all_meet", c2}, {"meeting_pair", c3}});
}

// Three characterizations of x ≡_L y for an arbitrary circle L. Sampling
// draws single configurations (L, x, y).
Tally tangent_conditions(const TheoremContext& ctx, const Budget& budget) {
  const Plane& plane = ctx.plane();
  if (!budget.exhaustive) {
    return sweep(static_cast<std::int64_t>(budget.samples), ctx.exec(), [&](std::int64_t j, Tally& tally) {
      SplitMix64 rng = SplitMix64::for_draw(budget.seed, static_cast<std::uint64_t>(j));
      const Circle& L = plane.circle(static_cast<int>(rng.below(static_cast<std::uint64_t>(plane.num_circles()))));
      auto draw_off = [&] {
        for (;;) {
          const Point& z = plane.point(static_cast<int>(rng.below(static_cast<std::uint64_t>(plane.num_points()))));
          if (!plane.incident(z, L)) return z;
        }
      };
      Point x = draw_off();
      Point y = draw_off();
      while (plane.parallel(x, y)) y = draw_off();
      tangent_conditions_case(plane, L, x, y, touching_through(plane, L, x), touching_through(plane, L, y), tally,
                              static_cast<std::uint64_t>(j), 0);
    });
  }
  return sweep(plane.num_circles(), ctx.exec(), [&](std::int64_t li, Tally& tally) {
    const Circle& L = plane.circle(static_cast<int>(li));
    std::vector<int> off;
    for (int i = 0; i < plane.num_points(); ++i)
      if (!plane.incident(plane.point(i), L)) off.push_back(i);
    auto through = tangents_through(plane, tangents_of(plane, L), off);
    for (std::size_t a = 0; a < off.size(); ++a)
      for (std::size_t b = 0; b < off.size(); ++b) {
        if (plane.parallel(plane.point(off[a]), plane.point(off[b]))) continue;
        tangent_conditions_case(plane, L, plane.point(off[a]), plane.point(off[b]), through[a], through[b], tally,
                                static_cast<std::uint64_t>(li), a * off.size() + b);
      }
  });
}

}  // namespace

Report run_tangency_checks(const TheoremContext& ctx, CheckId id, const Budget& budget) {
  switch (id) {
    case CheckId::P4_1: {
      Report r = finish(id, ctx, no_tangent_triangle(ctx, budget), budget);
      r.reading_notes =
          "Also asserted: two circles tangent to a pencil circle at distinct points that meet on the pencil "
          "generator meet off it as well.";
      return r;
    }
    case CheckId::C4_1: return finish(id, ctx, common_point_same_straight(ctx, budget), budget);
    case CheckId::P4_2: return finish(id, ctx, disjoint_iff_parallel_bases(ctx, budget), budget);
    case CheckId::P4_3: return finish(id, ctx, straight_meets_both(ctx, budget), budget);
    case CheckId::L4_1: return finish(id, ctx, tangent_circles_meet(ctx, budget), budget);
    case CheckId::P4_4: return finish(id, ctx, equivalence_axioms(ctx, budget), budget);
    case CheckId::P4_5: return finish(id, ctx, equivalence_by_witness(ctx, budget), budget);
    case CheckId::P4_6: return finish(id, ctx, special_line_classes(ctx, budget), budget);
    case CheckId::P4_7: {
      json stats = json::object();
      Report r = finish(id, ctx, two_tangent_circles(ctx, budget, stats), budget);
      r.stats.update(stats);
      r.reading_notes = "Checked for y not parallel to x; for parallel x, y no circle passes through both.";
      return r;
    }
    case CheckId::L4_2: return unique_partner(ctx, budget);
    case CheckId::T4_1: return tangency_loci(ctx, budget, false);
    case CheckId::C4_2: return tangency_loci(ctx, budget, true);
    case CheckId::T4_2: return finish(id, ctx, tangent_conditions(ctx, budget), budget);
    case CheckId::R4_1: {
      json stats = json::object();
      Report r = finish(id, ctx, square_class_rule(ctx, budget, stats), budget);
      r.stats.update(stats);
      return r;
    }
    default: break;
  }
  throw Error(Errc::unknown_id, std::string("not a tangency check: ") + to_string(id));
}

}  // namespace laguerre::detail
