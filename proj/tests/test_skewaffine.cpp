#include <algorithm>
#include <memory>
#include <set>
#include <vector>

#include "doctest.h"
#include "laguerre/export.hpp"
#include "laguerre/skewaffine.hpp"
#include "test_util.hpp"

using namespace laguerre;

namespace {

struct World {
  FieldRef field;
  Plane plane;
  DeltaGroup group;
  GroupSpace space;

  explicit World(int q, Exec exec = Exec::parallel)
      : field(FieldSpec::make(q)),
        plane(field),
        group(DeltaGroup::build(plane, canonical_pencil())),
        space(GroupSpace::build(group, exec)) {}
};

std::vector<int> ids(const Plane& pl, std::initializer_list<Point> pts) {
  std::vector<int> out;
  for (const Point& p : pts) out.push_back(pl.index(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("line and class census") {
  for (int q : {3, 5, 7, 11}) {
    World w(q);
    const auto& gs = w.space;
    int circle = 0, straight = 0, special = 0;
    for (const Line& l : gs.lines()) {
      switch (l.kind) {
        case LineKind::circle_line: ++circle; break;
        case LineKind::straight_pencil: ++straight; break;
        case LineKind::special: ++special; break;
      }
    }
    CHECK(gs.num_points() == q * q);
    CHECK(circle == q * q * (q - 1));
    CHECK(straight == q);
    CHECK(special == 2 * q * q);
    CHECK(gs.num_classes() == q + 2);
  }
  World w3(3);
  CHECK(w3.space.num_lines() == 39);
  CHECK(w3.space.num_classes() == 5);
  World w7(7);
  CHECK(w7.space.num_lines() == 399);
  CHECK(w7.space.num_classes() == 9);
}

TEST_CASE("joins from orbits equal the closed forms") {
  for (int q : {3, 5, 7}) {
    World w(q);
    const auto& gs = w.space;
    for (int x : gs.points())
      for (int y : gs.points()) {
        if (x == y) continue;
        CHECK(gs.line(gs.join(x, y)).points == closed_form_join(w.plane, w.plane.point(x), w.plane.point(y)));
        CHECK(gs.on_line(x, gs.join(x, y)));
        CHECK(gs.on_line(y, gs.join(x, y)));
      }
  }
}

TEST_CASE("worked joins at q = 5") {
  World w(5);
  const auto& pl = w.plane;
  const auto& gs = w.space;
  auto A = [](int x, int y) { return Point::affine(x, y); };
  auto J = [&](Point x, Point y) { return gs.line(gs.join(pl.index(x), pl.index(y))).points; };
  CHECK(J(A(0, 0), A(1, 1)) == ids(pl, {A(0, 0), A(1, 1), A(2, 4), A(3, 4), A(4, 1)}));
  CHECK(J(A(0, 0), A(0, 1)) == ids(pl, {A(0, 0), A(0, 1), A(0, 4)}));
  CHECK(J(A(0, 1), A(0, 0)) == ids(pl, {A(0, 1), A(0, 0), A(0, 2)}));
  CHECK(code_of([&] { gs.join(pl.index(A(1, 1)), pl.index(A(1, 1))); }) == Errc::invalid_argument);
  CHECK(code_of([&] { gs.join(pl.index(Point::at_infinity(1)), pl.index(A(1, 1))); }) == Errc::on_ideal_generator);
}

TEST_CASE("line kinds and basepoints at q = 5") {
  World w(5);
  const auto& pl = w.plane;
  const auto& gs = w.space;
  auto A = [](int x, int y) { return Point::affine(x, y); };

  auto member = gs.line_of_circle(Circle{0, 0, 2});
  REQUIRE(member.has_value());
  auto cls = classify_line(gs, *member);
  CHECK(cls.kind == LineKind::straight_pencil);
  CHECK(cls.basepoints.size() == 5);
  CHECK(gs.straight(*member));

  auto par = gs.line_of_circle(Circle{1, 0, 0});
  REQUIRE(par.has_value());
  cls = classify_line(gs, *par);
  CHECK(cls.kind == LineKind::circle_line);
  CHECK(cls.proper());
  CHECK(cls.basepoints == std::vector<int>{pl.index(A(0, 0))});

  auto sp = gs.find(LineKey{ids(pl, {A(0, 0), A(0, 1), A(0, 4)}), pl.index(A(0, 0))});
  REQUIRE(sp.has_value());
  cls = classify_line(gs, *sp);
  CHECK(cls.kind == LineKind::special);
  CHECK(cls.basepoints == std::vector<int>{pl.index(A(0, 0))});
}

TEST_CASE("stored metadata agrees with classification from the join") {
  for (int q : {3, 5, 7}) {
    World w(q);
    const auto& gs = w.space;
    for (int l = 0; l < gs.num_lines(); ++l) {
      auto cls = classify_line(gs, l);
      CHECK(cls.kind == gs.line(l).kind);
      CHECK(cls.basepoints == gs.line(l).basepoints);
      const auto& bp = gs.line(l).basepoints;
      CHECK(std::find(bp.begin(), bp.end(), gs.line(l).basepoint) != bp.end());
      if (gs.line(l).kind != LineKind::straight_pencil) CHECK(cls.proper());
    }
  }
}

TEST_CASE("straight lines are exactly the pencil member lines") {
  for (int q : {3, 5, 7}) {
    World w(q);
    const auto& gs = w.space;
    std::set<int> member_lines;
    for (const Circle& m : w.plane.pencil(canonical_pencil())) {
      auto l = gs.line_of_circle(m);
      REQUIRE(l.has_value());
      member_lines.insert(*l);
    }
    std::set<int> straight;
    for (int l = 0; l < gs.num_lines(); ++l)
      if (gs.straight(l)) straight.insert(l);
    CHECK(straight == member_lines);
  }
}

TEST_CASE("orbit parallelism equals the invariants") {
  for (int q : {3, 5, 7}) {
    World w(q);
    const auto& gs = w.space;
    for (int a = 0; a < gs.num_lines(); ++a)
      for (int b = 0; b < gs.num_lines(); ++b) CHECK(gs.parallel(a, b) == parallel_by_invariant(gs, a, b));
  }
}

TEST_CASE("circle lines are parallel iff they share the ideal point") {
  for (int q : {3, 5, 7}) {
    World w(q);
    const auto& gs = w.space;
    for (const Circle& c1 : w.plane.circles()) {
      if (c1.a == 0) continue;
      auto l1 = gs.line_of_circle(c1);
      REQUIRE(l1.has_value());
      for (const Circle& c2 : w.plane.circles()) {
        if (c2.a == 0) continue;
        auto l2 = gs.line_of_circle(c2);
        CHECK(gs.parallel(*l1, *l2) == (c1.a == c2.a));
      }
    }
  }
  World w(5);
  auto l = [&](Circle c) { return *w.space.line_of_circle(c); };
  CHECK(w.space.parallel(l({1, 0, 0}), l({1, 3, 1})));
  CHECK_FALSE(w.space.parallel(l({1, 0, 0}), l({2, 0, 0})));
}

TEST_CASE("parallel lines are related by a translation") {
  for (int q : {3, 5}) {
    World w(q);
    const auto& gs = w.space;
    const auto& G = w.group;
    for (int a = 0; a < gs.num_lines(); ++a)
      for (int b = 0; b < gs.num_lines(); ++b) {
        if (!gs.parallel(a, b)) continue;
        bool found = false;
        for (std::size_t i = 0; i < G.size() && !found; ++i)
          if (G.element(i).k == 1 && gs.image(i, a) == b) found = true;
        CHECK(found);
      }
  }
}

TEST_CASE("axioms hold exhaustively at q = 3 and q = 5") {
  for (int q : {3, 5}) {
    World w(q);
    for (Axiom ax : all_axioms()) {
      Report r = check_axiom(w.space, ax, Budget::exhaustive_budget());
      CAPTURE(to_string(ax));
      CHECK(r.status == Status::pass);
      CHECK(r.cases_checked > 0);
    }
  }
}

TEST_CASE("serial and parallel sweeps give identical reports") {
  omp_set_num_threads(4);
  World ser(5, Exec::serial);
  World par(5, Exec::parallel);
  CHECK(space_to_json(ser.space) == space_to_json(par.space));
  for (Axiom ax : all_axioms()) {
    Budget b = ax == Axiom::T || ax == Axiom::Des || ax == Axiom::Pap ? Budget::sampled(20000, 7)
                                                                     : Budget::exhaustive_budget();
    CHECK(to_json(check_axiom(ser.space, ax, b, Exec::serial)) ==
          to_json(check_axiom(par.space, ax, b, Exec::parallel)));
  }
}

TEST_CASE("seeded sampling") {
  World w(5);
  Report r = check_axiom(w.space, Axiom::T, Budget::sampled(1000000, 42));
  CHECK(r.status == Status::pass);
  CHECK(r.cases_checked == 1000000);
  CHECK(r.stats["seed"] == 42);
  Report again = check_axiom(w.space, Axiom::T, Budget::sampled(1000000, 42));
  CHECK(to_json(r) == to_json(again));

  World w7(7);
  for (Axiom ax : {Axiom::T, Axiom::Des, Axiom::Pap}) {
    Report s = check_axiom(w7.space, ax, Budget::sampled(200000, 3));
    CHECK(s.status == Status::pass);
    CHECK(s.cases_checked == 200000);
  }
}

TEST_CASE("the degenerate Pap reading is reported, not asserted") {
  World w(5);
  Report r = check_axiom(w.space, Axiom::Pap, Budget::exhaustive_budget());
  CHECK(r.status == Status::pass);
  CHECK(r.reading_notes.has_value());
  CHECK(r.stats["degenerate_same_line_failures"].get<long long>() > 0);
}

TEST_CASE("default budgets") {
  CHECK(default_budget(Axiom::T, 5).exhaustive);
  CHECK_FALSE(default_budget(Axiom::T, 7).exhaustive);
  CHECK(default_budget(Axiom::T, 7).samples == 1000000);
  CHECK(default_budget(Axiom::Pgm, 11).exhaustive);
  CHECK(parse_axiom("Des") == Axiom::Des);
  CHECK(code_of([] { parse_axiom("Q"); }) == Errc::unknown_id);
  CHECK(code_of([] { Budget::parse("sample:x"); }) == Errc::invalid_argument);
  CHECK(Budget::parse("sample:12", 3).samples == 12);
  CHECK(Budget::parse("exhaustive").exhaustive);
}

TEST_CASE("a non-canonical pencil gives the same census and axioms") {
  auto f = FieldSpec::make(5);
  Plane pl(f);
  auto G = DeltaGroup::build(pl, parse_pencil(pl, "p:2,3"));
  auto gs = GroupSpace::build(G);
  CHECK(gs.num_lines() == 155);
  CHECK(gs.num_classes() == 7);
  for (int p : gs.points()) CHECK_FALSE(pl.parallel(pl.point(p), Point::affine(2, 3)));
  for (Axiom ax : {Axiom::L1, Axiom::L2, Axiom::P1, Axiom::P2, Axiom::V, Axiom::Pgm})
    CHECK(check_axiom(gs, ax, Budget::exhaustive_budget()).status == Status::pass);
}

TEST_CASE("export lists every line") {
  World w(3);
  auto j = space_to_json(w.space);
  CHECK(j["q"] == 3);
  REQUIRE(j["lines"].size() == 39);
  for (const auto& l : j["lines"]) {
    CHECK(l.contains("base"));
    CHECK(l.contains("kind"));
    CHECK(l.contains("class"));
    CHECK(l.contains("points"));
  }
}
