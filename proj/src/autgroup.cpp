#include "laguerre/autgroup.hpp"

#include <algorithm>
#include <set>

#include "laguerre/error.hpp"

namespace laguerre {

using nlohmann::json;

Point PencilAut::apply(const FieldSpec& f, const Point& p) const {
  if (p.ideal) return p;
  return Point::affine(f.add(f.mul(k, p.x), t), f.add(f.mul(f.mul(k, k), p.y), g));
}

Circle PencilAut::apply(const FieldSpec& f, const Circle& c) const {
  int b = f.sub(f.mul(k, c.b), f.mul(2, f.mul(c.a, t)));
  int cc = f.add(f.sub(f.mul(c.a, f.mul(t, t)), f.mul(f.mul(k, c.b), t)), f.add(f.mul(f.mul(k, k), c.c), g));
  return {c.a, b, cc};
}

PencilAut PencilAut::compose(const FieldSpec& f, const PencilAut& h) const {
  return {f.mul(k, h.k), f.add(f.mul(k, h.t), t), f.add(f.mul(f.mul(k, k), h.g), g)};
}

PencilAut PencilAut::inverse(const FieldSpec& f) const {
  int ki = f.inv(k);
  return {ki, f.neg(f.mul(t, ki)), f.neg(f.mul(g, f.mul(ki, ki)))};
}

const char* to_string(AutClass c) {
  switch (c) {
    case AutClass::identity: return "identity";
    case AutClass::translation_generators: return "translation_generators";
    case AutClass::translation_circle_direction: return "translation_circle_direction";
    case AutClass::strain: return "strain";
    case AutClass::symmetry: return "symmetry";
    case AutClass::glide: return "glide";
  }
  return "unknown";
}

AutClass classify(const FieldSpec& f, const PencilAut& e) {
  if (e.k == 1) {
    if (e.t == 0) return e.g == 0 ? AutClass::identity : AutClass::translation_generators;
    return AutClass::translation_circle_direction;
  }
  if (e.k == f.neg(1)) return e.g == 0 ? AutClass::symmetry : AutClass::glide;
  return AutClass::strain;
}

std::vector<PencilAut> all_pencil_auts(const FieldSpec& f) {
  std::vector<PencilAut> out;
  const int q = f.q();
  out.reserve(static_cast<std::size_t>(q * q * (q - 1)));
  for (int k = 1; k < q; ++k)
    for (int t = 0; t < q; ++t)
      for (int g = 0; g < q; ++g) out.push_back({k, t, g});
  return out;
}

std::vector<PencilAut> stabilizer(const FieldSpec& f, std::span<const PencilAut> group, const Point& x) {
  if (x.ideal) throw Error(Errc::on_ideal_generator, "stabilizer of " + to_string(x) + " is the whole group");
  std::vector<PencilAut> out;
  for (const PencilAut& e : group)
    if (e.apply(f, x) == x) out.push_back(e);
  return out;
}

std::vector<Point> orbit(const FieldSpec& f, std::span<const PencilAut> group, const Point& x) {
  std::set<Point> seen;
  for (const PencilAut& e : group) seen.insert(e.apply(f, x));
  return {seen.begin(), seen.end()};
}

Census census(const FieldSpec& f, std::span<const PencilAut> group) {
  Census c;
  for (const PencilAut& e : group) {
    ++c.total;
    switch (classify(f, e)) {
      case AutClass::identity: ++c.identity; break;
      case AutClass::translation_generators:
        ++c.translations;
        ++c.translations_generators;
        break;
      case AutClass::translation_circle_direction: ++c.translations; break;
      case AutClass::strain: ++c.strains; break;
      case AutClass::symmetry: ++c.symmetries; break;
      case AutClass::glide: ++c.glides; break;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// PermutationMap

std::optional<json> automorphism_defect(const Plane& plane, const PointTable& image) {
  const int n = plane.num_points();
  if (static_cast<int>(image.size()) != n) return json{{"reason", "table size"}, {"size", image.size()}};
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int j = image[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n || hit[static_cast<std::size_t>(j)])
      return json{{"reason", "not a bijection"}, {"point", to_json(plane.point(i))}};
    hit[static_cast<std::size_t>(j)] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool before = plane.parallel(plane.point(i), plane.point(j));
      bool after = plane.parallel(plane.point(image[static_cast<std::size_t>(i)]),
                                  plane.point(image[static_cast<std::size_t>(j)]));
      if (before != after)
        return json{{"reason", "generators not preserved"}, {"x", to_json(plane.point(i))}, {"y", to_json(plane.point(j))}};
    }
  for (const Circle& c : plane.circles()) {
    std::vector<Point> mapped;
    for (const Point& z : plane.circle_points(c)) mapped.push_back(plane.point(image[static_cast<std::size_t>(plane.index(z))]));
    Circle target = plane.circle_through(mapped[0], mapped[1], mapped[2]);
    for (const Point& z : mapped)
      if (!plane.incident(z, target)) return json{{"reason", "circle not mapped to a circle"}, {"circle", to_json(c)}};
  }
  return std::nullopt;
}

PermutationMap PermutationMap::from_points(const Plane& plane, PointTable image) {
  if (auto defect = automorphism_defect(plane, image))
    throw Error(Errc::invalid_argument, "point table is not an automorphism", *defect);
  std::vector<int> circles(static_cast<std::size_t>(plane.num_circles()));
  for (int ci = 0; ci < plane.num_circles(); ++ci) {
    std::vector<Point> pts = plane.circle_points(plane.circle(ci));
    auto img = [&](int k) { return plane.point(image[static_cast<std::size_t>(plane.index(pts[static_cast<std::size_t>(k)]))]); };
    circles[static_cast<std::size_t>(ci)] = plane.index(plane.circle_through(img(0), img(1), img(2)));
  }
  return PermutationMap(std::move(image), std::move(circles));
}

PermutationMap PermutationMap::identity(const Plane& plane) {
  PointTable pts(static_cast<std::size_t>(plane.num_points()));
  std::vector<int> circles(static_cast<std::size_t>(plane.num_circles()));
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < circles.size(); ++i) circles[i] = static_cast<int>(i);
  return PermutationMap(std::move(pts), std::move(circles));
}

PermutationMap PermutationMap::compose(const PermutationMap& inner) const {
  PointTable pts(points_.size());
  std::vector<int> circles(circles_.size());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = points_[static_cast<std::size_t>(inner.points_[i])];
  for (std::size_t i = 0; i < circles.size(); ++i) circles[i] = circles_[static_cast<std::size_t>(inner.circles_[i])];
  return PermutationMap(std::move(pts), std::move(circles));
}

PermutationMap PermutationMap::inverse() const {
  PointTable pts(points_.size());
  std::vector<int> circles(circles_.size());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[static_cast<std::size_t>(points_[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < circles.size(); ++i) circles[static_cast<std::size_t>(circles_[i])] = static_cast<int>(i);
  return PermutationMap(std::move(pts), std::move(circles));
}

namespace plane_maps {

PermutationMap circle_addition(const Plane& plane, const Circle& Q) {
  const FieldSpec& f = plane.field();
  PointTable image(static_cast<std::size_t>(plane.num_points()));
  for (const Point& z : plane.points()) {
    Point w = z.ideal ? Point::at_infinity(f.add(z.x, Q.a)) : Point::affine(z.x, f.add(z.y, plane.eval(Q, z.x)));
    image[static_cast<std::size_t>(plane.index(z))] = plane.index(w);
  }
  return PermutationMap::from_points(plane, std::move(image));
}

PermutationMap mobius_lift(const Plane& plane, int alpha, int beta, int gamma, int delta) {
  const FieldSpec& f = plane.field();
  int det = f.sub(f.mul(alpha, delta), f.mul(beta, gamma));
  if (det == 0) throw Error(Errc::invalid_argument, "singular Mobius matrix");
  int det2_inv = f.inv(f.mul(det, det));
  PointTable image(static_cast<std::size_t>(plane.num_points()));
  for (const Point& z : plane.points()) {
    Point w;
    if (z.ideal) {
      if (gamma == 0) {
        w = Point::at_infinity(f.mul(z.x, f.inv(f.mul(alpha, alpha))));
      } else {
        int gi = f.inv(gamma);
        w = Point::affine(f.mul(alpha, gi), f.mul(z.x, f.mul(gi, gi)));
      }
    } else {
      int den = f.add(f.mul(gamma, z.x), delta);
      if (den == 0) {
        w = Point::at_infinity(f.mul(f.mul(f.mul(gamma, gamma), z.y), det2_inv));
      } else {
        int di = f.inv(den);
        w = Point::affine(f.mul(f.add(f.mul(alpha, z.x), beta), di), f.mul(z.y, f.mul(di, di)));
      }
    }
    image[static_cast<std::size_t>(plane.index(z))] = plane.index(w);
  }
  return PermutationMap::from_points(plane, std::move(image));
}

PermutationMap normalizer(const Plane& plane, const Pencil& pencil) {
  if (!plane.incident(pencil.p, pencil.K))
    throw Error(Errc::not_incident, to_string(pencil.p) + " is not on " + to_string(pencil.K));
  const FieldSpec& f = plane.field();
  PermutationMap map = PermutationMap::identity(plane);
  if (!pencil.p.ideal) map = mobius_lift(plane, 0, 1, 1, f.neg(pencil.p.x));
  const Circle& K = plane.circle(map.circle(plane.index(pencil.K)));
  PermutationMap shift = circle_addition(plane, {f.neg(K.a), f.neg(K.b), f.neg(K.c)});
  return shift.compose(map);
}

}  // namespace plane_maps

// ---------------------------------------------------------------------------
// DeltaGroup

DeltaGroup::DeltaGroup(const Plane& plane, const Pencil& pencil, PermutationMap normalizer)
    : plane_(&plane), pencil_(pencil), normalizer_(std::move(normalizer)), denormalizer_(normalizer_.inverse()) {}

DeltaGroup DeltaGroup::build(const Plane& plane, const Pencil& pencil) {
  if (plane.field().char_two())
    throw Error(Errc::char_two, "the pencil group needs odd characteristic (A2/A3 fail in char 2)");
  bool canonical = pencil.p == canonical_pencil().p && pencil.K == canonical_pencil().K;
  DeltaGroup G(plane, pencil,
               canonical ? PermutationMap::identity(plane) : plane_maps::normalizer(plane, pencil));
  G.canonical_ = canonical;
  const Pencil target = canonical_pencil();
  if (G.normalizer_.point(plane.index(pencil.p)) != plane.index(target.p) ||
      G.normalizer_.circle(plane.index(pencil.K)) != plane.index(target.K))
    throw Error(Errc::invalid_argument, "normalizer does not reach the canonical pencil");

  const FieldSpec& f = plane.field();
  G.elements_ = all_pencil_auts(f);
  G.tables_.reserve(G.elements_.size());
  for (const PencilAut& e : G.elements_) {
    PointTable table(static_cast<std::size_t>(plane.num_points()));
    for (int i = 0; i < plane.num_points(); ++i) {
      int z = G.normalizer_.point(i);
      int w = plane.index(e.apply(f, plane.point(z)));
      table[static_cast<std::size_t>(i)] = G.denormalizer_.point(w);
    }
    G.tables_.push_back(std::move(table));
  }
  for (int i = 0; i < plane.num_points(); ++i)
    if (!G.on_pencil_generator(i)) G.residual_.push_back(i);
  return G;
}

int DeltaGroup::apply_circle(std::size_t i, int circle) const {
  const Circle& c = plane_->circle(normalizer_.circle(circle));
  return denormalizer_.circle(plane_->index(elements_[i].apply(plane_->field(), c)));
}

std::size_t DeltaGroup::index_of(const PencilAut& e) const {
  const auto q = static_cast<std::size_t>(plane_->q());
  return (static_cast<std::size_t>(e.k - 1) * q + static_cast<std::size_t>(e.t)) * q + static_cast<std::size_t>(e.g);
}

std::size_t DeltaGroup::compose(std::size_t outer, std::size_t inner) const {
  return index_of(elements_[outer].compose(plane_->field(), elements_[inner]));
}

std::size_t DeltaGroup::inverse(std::size_t i) const { return index_of(elements_[i].inverse(plane_->field())); }

std::vector<std::size_t> DeltaGroup::stabilizer(int point) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (apply_point(i, point) == point) out.push_back(i);
  return out;
}

std::vector<int> DeltaGroup::orbit(std::span<const std::size_t> elems, int point) const {
  std::set<int> seen;
  for (std::size_t i : elems) seen.insert(apply_point(i, point));
  return {seen.begin(), seen.end()};
}

bool DeltaGroup::on_pencil_generator(int point) const { return plane_->parallel(plane_->point(point), pencil_.p); }

std::vector<int> DeltaGroup::fixed_residual_points(std::size_t i) const {
  std::vector<int> out;
  for (int z : residual_)
    if (apply_point(i, z) == z) out.push_back(z);
  return out;
}

bool DeltaGroup::fixes_generator_pointwise(std::size_t i, const Generator& g) const {
  for (const Point& z : plane_->points_on(g))
    if (apply_point(i, plane_->index(z)) != plane_->index(z)) return false;
  return true;
}

bool DeltaGroup::fixes_every_generator(std::size_t i) const {
  for (const Generator& g : plane_->generators()) {
    Point z = plane_->points_on(g).front();
    if (!plane_->parallel(z, apply(i, z))) return false;
  }
  return true;
}

bool DeltaGroup::fixes_circle(std::size_t i, const Circle& c) const {
  return apply_circle(i, plane_->index(c)) == plane_->index(c);
}

bool DeltaGroup::is_involution(std::size_t i) const {
  const PointTable& t = tables_[i];
  for (std::size_t z = 0; z < t.size(); ++z)
    if (t[static_cast<std::size_t>(t[z])] != static_cast<int>(z)) return false;
  return true;
}

bool DeltaGroup::is_translation(std::size_t i) const {
  if (i == identity_index()) return true;
  if (!fixed_residual_points(i).empty()) return false;
  Generator pbar = plane_->generator_of(pencil_.p);
  if (!fixes_generator_pointwise(i, pbar)) return false;
  for (const Point& center : plane_->points_on(pbar)) {
    bool dilatation = true;
    for (const Circle& c : plane_->circles()) {
      if (!plane_->incident(center, c)) continue;
      Circle image = apply(i, c);
      // Both pass through the center; parallel in the derived plane iff
      // equal or meeting only there.
      if (image != c && plane_->intersection_size(image, c) != 1) {
        dilatation = false;
        break;
      }
    }
    if (dilatation) return true;
  }
  return false;
}

std::optional<AutClass> DeltaGroup::classify_by_scan(std::size_t i) const {
  bool all_fixed = true;
  for (int z = 0; z < plane_->num_points(); ++z) all_fixed = all_fixed && apply_point(i, z) == z;
  if (all_fixed) return AutClass::identity;
  std::vector<int> fixed = fixed_residual_points(i);
  if (fixed.empty()) {
    if (!is_translation(i)) return AutClass::glide;
    return fixes_every_generator(i) ? AutClass::translation_generators : AutClass::translation_circle_direction;
  }
  if (fixed.size() == 1) return AutClass::strain;
  Generator g = plane_->generator_of(plane_->point(fixed.front()));
  if (is_involution(i) && fixed.size() == static_cast<std::size_t>(plane_->q()) && fixes_generator_pointwise(i, g))
    return AutClass::symmetry;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Axioms A1-A3 and normal transitivity

Report verify_a3(const Plane& plane, const Pencil& pencil, Exec exec) {
  std::vector<Circle> members = plane.pencil(pencil);
  Tally t = sweep(plane.num_circles(), exec, [&](std::int64_t ci, Tally& tally) {
    const Circle& M = plane.circle(static_cast<int>(ci));
    if (plane.incident(pencil.p, M)) return;
    tally.count();
    json tangent = json::array();
    for (const Circle& L : members)
      if (plane.tangent(L, M)) tangent.push_back(to_json(L));
    if (tangent.size() != 1)
      tally.fail(static_cast<std::uint64_t>(ci), 0, {{"circle", to_json(M)}, {"tangent_members", tangent}});
  });
  Report r = Report::from_tally("A3", plane.q(), t);
  r.stats["pencil"] = to_json(pencil);
  return r;
}

std::vector<Report> verify_group_axioms(const Plane& plane, const Pencil& pencil, const DeltaGroup* group, Exec exec) {
  std::vector<Report> out;
  if (group == nullptr) {
    for (const char* id : {"A1", "A2"}) {
      Report r;
      r.check_id = id;
      r.q = plane.q();
      r.status = Status::error;
      r.reading_notes = "no pencil group: the (k,t,g) construction and A2 need odd characteristic";
      out.push_back(std::move(r));
    }
    out.push_back(verify_a3(plane, pencil, exec));
    return out;
  }
  const DeltaGroup& G = *group;

  // A1: transitive on the points off the pencil generator.
  Tally a1;
  {
    const std::vector<int>& residual = G.residual_points();
    std::vector<std::size_t> all(G.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<int> reach = G.orbit(all, residual.front());
    for (int z : residual) {
      a1.count();
      if (!std::binary_search(reach.begin(), reach.end(), z))
        a1.fail(static_cast<std::uint64_t>(z), 0, {{"from", to_json(plane.point(residual.front()))}, {"unreached", to_json(plane.point(z))}});
    }
  }
  Report r1 = Report::from_tally("A1", plane.q(), a1);
  r1.stats["group_order"] = G.size();
  out.push_back(std::move(r1));

  // A2: for r in K \ {p}, the stabilizer of r is transitive on K \ {p, r}.
  std::vector<Point> kpts = plane.circle_points(pencil.K);
  std::erase(kpts, pencil.p);
  Tally a2 = sweep(static_cast<std::int64_t>(kpts.size()), exec, [&](std::int64_t ri, Tally& t) {
    const Point& r = kpts[static_cast<std::size_t>(ri)];
    std::vector<std::size_t> stab = G.stabilizer(plane.index(r));
    for (const Point& x : kpts) {
      if (x == r) continue;
      std::vector<int> reach = G.orbit(stab, plane.index(x));
      for (const Point& y : kpts) {
        if (y == r) continue;
        t.count();
        if (!std::binary_search(reach.begin(), reach.end(), plane.index(y)))
          t.fail(static_cast<std::uint64_t>(ri), static_cast<std::uint64_t>(plane.index(x) * plane.num_points() + plane.index(y)),
                 {{"r", to_json(r)}, {"x", to_json(x)}, {"y", to_json(y)}});
      }
    }
  });
  out.push_back(Report::from_tally("A2", plane.q(), a2));
  out.push_back(verify_a3(plane, pencil, exec));
  return out;
}

NormalTransitivity normally_transitive(std::span<const PointTable> group, std::span<const int> domain) {
  NormalTransitivity result;
  if (domain.empty()) {
    result.holds = true;
    return result;
  }
  std::set<int> reach;
  for (const PointTable& g : group) reach.insert(g[static_cast<std::size_t>(domain.front())]);
  for (int z : domain)
    if (!reach.count(z)) {
      result.witness = {{"reason", "not transitive"}, {"from", domain.front()}, {"unreached", z}};
      return result;
    }
  for (int x : domain)
    for (int y : domain) {
      if (x == y) continue;
      bool separated = std::any_of(group.begin(), group.end(), [&](const PointTable& g) {
        return g[static_cast<std::size_t>(x)] == x && g[static_cast<std::size_t>(y)] != y;
      });
      if (!separated) {
        result.witness = {{"reason", "stabilizer of x fixes y"}, {"x", x}, {"y", y}};
        return result;
      }
    }
  result.holds = true;
  return result;
}

json group_to_json(const DeltaGroup& G) {
  json elements = json::array();
  for (const PencilAut& e : G.elements()) elements.push_back({e.k, e.t, e.g});
  return {{"q", G.plane().q()}, {"pencil", to_json(G.pencil())}, {"elements", elements}};
}

}  // namespace laguerre
