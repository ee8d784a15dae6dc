#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "laguerre/verify.hpp"
#include "test_util.hpp"

using namespace laguerre;

namespace {

// a ≡_L b straight from the definition, no shared code with equiv_relation.
bool related(const Plane& pl, const Circle& L, const Point& a, const Point& b) {
  auto tangent_through = [&](const Point& x) {
    std::vector<Circle> out;
    for (const Circle& c : pl.circles()) {
      if (c == L || !pl.incident(x, c)) continue;
      int n = 0;
      for (const Point& p : pl.points()) n += pl.incident(p, c) && pl.incident(p, L);
      if (n == 1) out.push_back(c);
    }
    return out;
  };
  for (const Circle& P : tangent_through(a))
    for (const Circle& Q : tangent_through(b)) {
      if (P == Q) continue;
      bool meet = false;
      for (const Point& p : pl.points()) meet = meet || (pl.incident(p, P) && pl.incident(p, Q));
      if (!meet) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("catalog") {
  const auto& all = all_checks();
  CHECK(all.size() == 29);
  std::set<std::string> names;
  for (CheckId id : all) {
    names.insert(to_string(id));
    CHECK(parse_check(to_string(id)) == id);
  }
  CHECK(names.size() == 29);
  CHECK(std::string(to_string(CheckId::T4_2)) == "T4.2");
  CHECK(code_of([] { parse_check("X9.9"); }) == Errc::unknown_id);
}

TEST_CASE("equivalence relation against a direct evaluation") {
  auto f = FieldSpec::make(5);
  Plane pl(f);
  for (Circle L : {Circle{0, 0, 0}, Circle{1, 2, 3}}) {
    auto E = equiv_relation(pl, L);
    CHECK(E.size() == 24);
    for (std::size_t i = 0; i < E.size(); i += 3)
      for (std::size_t j = 0; j < E.size(); j += 2)
        CHECK(E.related(i, j) == related(pl, L, pl.point(E.points[i]), pl.point(E.points[j])));
    CHECK(E.blocks.size() == 2);
  }
}

TEST_CASE("equivalence examples at q = 5") {
  TheoremContext ctx(5);
  const auto& pl = ctx.plane();
  Circle L{0, 0, 0};
  const auto& E = ctx.equiv(L);
  auto at = [&](const Point& p) {
    for (std::size_t i = 0; i < E.size(); ++i)
      if (E.points[i] == pl.index(p)) return i;
    FAIL("point on L");
    return std::size_t{0};
  };
  CHECK(E.related(at(Point::affine(0, 1)), at(Point::affine(3, 4))));
  CHECK_FALSE(E.related(at(Point::affine(0, 1)), at(Point::affine(0, 2))));
  CHECK(E.related(at(Point::at_infinity(1)), at(Point::affine(2, 4))));
  CHECK(equiv_by_square_class(pl, L, Point::affine(0, 1), Point::affine(3, 4)));
  CHECK_FALSE(equiv_by_square_class(pl, L, Point::affine(0, 1), Point::affine(0, 2)));

  // Ideal(1) and (2,4) share exactly two tangent circles
  int shared = 0;
  for (const Circle& c : pl.circles())
    if (c != L && pl.incident(Point::at_infinity(1), c) && pl.incident(Point::affine(2, 4), c) && pl.tangent(c, L))
      ++shared;
  CHECK(shared == 2);
}

TEST_CASE("equivalence classes are the square classes of the height") {
  for (int q : {5, 7, 11}) {
    auto f = FieldSpec::make(q);
    Plane pl(f);
    for (int c = 0; c < q; c += 2) {
      Circle L{0, 0, c};
      auto E = equiv_relation(pl, L);
      CHECK(E.blocks.size() == 2);
      for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = 0; j < E.size(); ++j) {
          const Point& a = pl.point(E.points[i]);
          const Point& b = pl.point(E.points[j]);
          int ha = f->sub(a.height(), a.ideal ? 0 : c);
          int hb = f->sub(b.height(), b.ideal ? 0 : c);
          CHECK(E.related(i, j) == (f->square_class(ha) == f->square_class(hb)));
          CHECK(E.related(i, j) == equiv_by_square_class(pl, L, a, b));
        }
    }
  }
}

TEST_CASE("tangency loci") {
  for (int q : {5, 7}) {
    auto f = FieldSpec::make(q);
    Plane pl(f);
    Pencil pen = canonical_pencil();
    for (int beta = 1; beta < q; ++beta)
      for (int x0 = 0; x0 < q; ++x0)
        for (int y0 = 0; y0 < q; ++y0) {
          auto loc = tangency_locus(pl, pen, Point::at_infinity(beta), Point::affine(x0, y0));
          REQUIRE(loc.circle.has_value());
          Circle expect{f->neg(beta), f->mul(2 * beta, x0), f->add(f->neg(f->mul(beta, f->mul(x0, x0))), y0)};
          CHECK(*loc.circle == expect);
          CHECK(pl.incident(Point::at_infinity(f->neg(beta)), *loc.circle));
          CHECK(loc.base_points.size() == static_cast<std::size_t>(q));
          for (const Point& b : loc.base_points) CHECK(pl.incident(b, *loc.circle));
        }
  }
  auto f5 = FieldSpec::make(5);
  Plane p5(f5);
  auto l1 = tangency_locus(p5, canonical_pencil(), Point::at_infinity(1), Point::affine(0, 0));
  CHECK(*l1.circle == Circle{4, 0, 0});
  auto l2 = tangency_locus(p5, canonical_pencil(), Point::at_infinity(2), Point::affine(1, 1));
  CHECK(l2.circle->a == 3);
  Plane p7(FieldSpec::make(7));
  CHECK(*tangency_locus(p7, canonical_pencil(), Point::at_infinity(1), Point::affine(0, 0)).circle ==
        Circle{6, 0, 0});
  CHECK(code_of([&] { tangency_locus(p5, canonical_pencil(), Point::at_infinity(0), Point::affine(0, 0)); }) ==
        Errc::invalid_argument);
  CHECK(code_of([&] { tangency_locus(p5, canonical_pencil(), Point::affine(1, 0), Point::affine(0, 0)); }) ==
        Errc::invalid_argument);
  CHECK(code_of([&] { tangency_locus(p5, canonical_pencil(), Point::at_infinity(1), Point::at_infinity(2)); }) ==
        Errc::invalid_argument);
}

TEST_CASE("context") {
  TheoremContext ctx(5);
  CHECK(ctx.members().size() == 5);
  CHECK(ctx.translations().size() == 25);
  for (std::size_t i = 0; i < ctx.group().size(); ++i)
    CHECK(ctx.is_translation(i) == (ctx.group().element(i).k == 1));
  for (int x : ctx.space().points()) {
    Circle m = ctx.member_through(ctx.plane().point(x));
    CHECK(ctx.is_member(m));
    CHECK(ctx.plane().incident(ctx.plane().point(x), m));
    auto s = ctx.symmetry(x);
    REQUIRE(s.has_value());
    CHECK(ctx.group().is_involution(*s));
  }
  CHECK(code_of([] { TheoremContext(2); }) == Errc::char_two);
}

TEST_CASE("known counts") {
  Report p25 = thm_check(CheckId::P2_5, 5, Budget::exhaustive_budget());
  CHECK(p25.status == Status::pass);
  CHECK(p25.cases_checked == 105);

  for (int q : {3, 5, 7}) {
    Report l31 = thm_check(CheckId::L3_1, q, Budget::exhaustive_budget());
    CHECK(l31.status == Status::report_only);
    CHECK(l31.stats["fixpoint_free_glides"] == q * (q - 1));
    CHECK(l31.stats["fixpoint_free_translations"] == q * q - 1);
  }
  Report l42 = thm_check(CheckId::L4_2, 5, Budget::exhaustive_budget());
  CHECK(l42.status == Status::pass);
  for (auto& [beta, partner] : l42.stats["partner_height"].items())
    CHECK((std::stoi(beta) + partner.get<int>()) % 5 == 0);
}

TEST_CASE("every check passes at q = 3 and q = 5") {
  for (int q : {3, 5}) {
    TheoremContext ctx(q);
    for (CheckId id : all_checks()) {
      Report r = run_check(ctx, id, default_theorem_budget(id, q));
      CAPTURE(to_string(id));
      CAPTURE(q);
      if (id == CheckId::L3_1)
        CHECK(r.status == Status::report_only);
      else
        CHECK(r.status == Status::pass);
      CHECK(r.cases_checked > 0);
    }
  }
}

TEST_CASE("sampled checks are reproducible") {
  TheoremContext ctx(7);
  for (CheckId id : {CheckId::T4_2, CheckId::P2_3, CheckId::L4_1}) {
    Report a = run_check(ctx, id, Budget::sampled(500, 11));
    Report b = run_check(ctx, id, Budget::sampled(500, 11));
    CHECK(a.status == Status::pass);
    CHECK(to_json(a) == to_json(b));
  }
}

TEST_CASE("default budgets") {
  CHECK(default_theorem_budget(CheckId::P2_1, 7).exhaustive);
  CHECK(default_theorem_budget(CheckId::R4_1, 11).exhaustive);
  CHECK_FALSE(default_theorem_budget(CheckId::P2_1, 11).exhaustive);
  CHECK(default_theorem_budget(CheckId::T4_2, 11).samples == 100000);
}
