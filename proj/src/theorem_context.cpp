#include <algorithm>
#include <array>

#include "laguerre/error.hpp"
#include "laguerre/verify.hpp"

namespace laguerre {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<CheckId, const char*>, 29> kCatalog{{
    {CheckId::P2_1, "P2.1"}, {CheckId::P2_2, "P2.2"}, {CheckId::P2_3, "P2.3"}, {CheckId::P2_4, "P2.4"},
    {CheckId::P2_5, "P2.5"}, {CheckId::P2_6, "P2.6"}, {CheckId::C2_1, "C2.1"}, {CheckId::T3_1, "T3.1"},
    {CheckId::P3_1, "P3.1"}, {CheckId::C3_1, "C3.1"}, {CheckId::L3_1, "L3.1"}, {CheckId::P3_2, "P3.2"},
    {CheckId::T3_2, "T3.2"}, {CheckId::C3_3, "C3.3"}, {CheckId::C3_4, "C3.4"}, {CheckId::P4_1, "P4.1"},
    {CheckId::C4_1, "C4.1"}, {CheckId::P4_2, "P4.2"}, {CheckId::P4_3, "P4.3"}, {CheckId::L4_1, "L4.1"},
    {CheckId::P4_4, "P4.4"}, {CheckId::P4_5, "P4.5"}, {CheckId::P4_6, "P4.6"}, {CheckId::P4_7, "P4.7"},
    {CheckId::L4_2, "L4.2"}, {CheckId::T4_1, "T4.1"}, {CheckId::C4_2, "C4.2"}, {CheckId::T4_2, "T4.2"},
    {CheckId::R4_1, "R4.1"},
}};

}  // namespace

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (auto& [id, name] : kCatalog) v.push_back(id);
    return v;
  }();
  return ids;
}

const char* to_string(CheckId id) {
  for (auto& [cid, name] : kCatalog)
    if (cid == id) return name;
  return "?";
}

CheckId parse_check(const std::string& id) {
  for (auto& [cid, name] : kCatalog)
    if (id == name) return cid;
  throw Error(Errc::unknown_id, "unknown check id: " + id);
}

EquivPartition equiv_relation(const Plane& plane, const Circle& L, Exec exec) {
  if (plane.field().char_two()) throw Error(Errc::char_two, "tangent-circle equivalence needs odd characteristic");
  EquivPartition out;
  out.L = L;
  for (int i = 0; i < plane.num_points(); ++i)
    if (!plane.incident(plane.point(i), L)) out.points.push_back(i);
  const std::size_t n = out.points.size();

  std::vector<Circle> tangents;
  for (const Circle& C : plane.circles())
    if (C != L && plane.intersection_size(C, L) == 1) tangents.push_back(C);
  std::vector<std::vector<Circle>> through(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const Circle& C : tangents)
      if (plane.incident(plane.point(out.points[i]), C)) through[i].push_back(C);

  out.relation.assign(n * n, 0);
  sweep(static_cast<std::int64_t>(n), exec, [&](std::int64_t ai, Tally&) {
    const auto a = static_cast<std::size_t>(ai);
    for (std::size_t b = 0; b < n; ++b) {
      bool all = true;
      for (const Circle& P : through[a]) {
        for (const Circle& Q : through[b])
          if (P != Q && plane.intersection_size(P, Q) == 0) {
            all = false;
            break;
          }
        if (!all) break;
      }
      out.relation[a * n + b] = all ? 1 : 0;
    }
  });

  out.block.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (out.block[i] >= 0) continue;
    const int b = static_cast<int>(out.blocks.size());
    out.blocks.emplace_back();
    for (std::size_t j = i; j < n; ++j)
      if (out.block[j] < 0 && out.related(i, j)) {
        out.block[j] = b;
        out.blocks.back().push_back(out.points[j]);
      }
  }
  return out;
}

bool equiv_by_square_class(const Plane& plane, const Circle& L, const Point& a, const Point& b) {
  if (L.a != 0 || L.b != 0) throw Error(Errc::invalid_argument, "square-class rule needs a circle (0, 0, c)");
  const FieldSpec& f = plane.field();
  auto height = [&](const Point& z) { return z.ideal ? z.x : f.sub(z.y, L.c); };
  return f.square_class(height(a)) == f.square_class(height(b));
}

TangencyLocus tangency_locus(const Plane& plane, const Pencil& pencil, const Point& q_ideal, const Point& x) {
  if (!plane.parallel(q_ideal, pencil.p) || q_ideal == pencil.p)
    throw Error(Errc::invalid_argument, to_string(q_ideal) + " must be parallel to and distinct from the pencil point");
  if (plane.parallel(x, pencil.p))
    throw Error(Errc::invalid_argument, to_string(x) + " lies on the pencil generator");
  TangencyLocus out{q_ideal, x, {}, std::nullopt};
  for (const Circle& N : plane.joining_pencil(x, q_ideal)) out.base_points.push_back(plane.pencil_tangent(N, pencil).point);
  std::sort(out.base_points.begin(), out.base_points.end());
  out.base_points.erase(std::unique(out.base_points.begin(), out.base_points.end()), out.base_points.end());

  std::vector<Point> frame;
  for (const Point& z : out.base_points)
    if (std::none_of(frame.begin(), frame.end(), [&](const Point& w) { return plane.parallel(w, z); })) frame.push_back(z);
  if (frame.size() < 3) return out;
  Circle Q = plane.circle_through(frame[0], frame[1], frame[2]);
  std::vector<Point> residual;
  for (const Point& z : plane.circle_points(Q))
    if (!plane.parallel(z, pencil.p)) residual.push_back(z);
  std::sort(residual.begin(), residual.end());
  if (residual == out.base_points) out.circle = Q;
  return out;
}

TheoremContext::TheoremContext(int q, Exec exec)
    : field_(FieldSpec::make(q)), plane_(field_), pencil_(canonical_pencil()), exec_(exec) {
  if (field_->char_two()) throw Error(Errc::char_two, "the theorem suite needs odd characteristic");
  group_ = std::make_unique<DeltaGroup>(DeltaGroup::build(plane_, pencil_));
  space_ = std::make_unique<GroupSpace>(GroupSpace::build(*group_, exec));
  members_ = plane_.pencil(pencil_);

  const std::size_t n = group_->size();
  translation_flag_.assign(n, 0);
  sweep(static_cast<std::int64_t>(n), exec, [&](std::int64_t i, Tally&) {
    translation_flag_[static_cast<std::size_t>(i)] = group_->is_translation(static_cast<std::size_t>(i)) ? 1 : 0;
  });
  for (std::size_t i = 0; i < n; ++i)
    if (translation_flag_[i]) translations_.push_back(i);

  symmetry_.assign(static_cast<std::size_t>(plane_.num_points()), -1);
  const Generator pbar = plane_.generator_of(pencil_.p);
  const int K = plane_.index(pencil_.K);
  for (int r : group_->residual_points()) {
    const Generator rbar = plane_.generator_of(plane_.point(r));
    for (std::size_t i : group_->stabilizer(r)) {
      if (i == group_->identity_index() || !group_->is_involution(i)) continue;
      if (!group_->fixes_generator_pointwise(i, rbar) || !group_->fixes_generator_pointwise(i, pbar)) continue;
      if (group_->apply_circle(i, K) != K) continue;
      bool pointwise = true;
      for (const Point& z : plane_.circle_points(pencil_.K))
        pointwise = pointwise && group_->apply(i, z) == z;
      if (pointwise) continue;
      symmetry_[static_cast<std::size_t>(r)] = static_cast<long>(i);
      break;
    }
  }
}

bool TheoremContext::is_member(const Circle& c) const {
  return std::find(members_.begin(), members_.end(), c) != members_.end();
}

Circle TheoremContext::member_through(const Point& x) const {
  for (const Circle& L : members_)
    if (plane_.incident(x, L)) return L;
  throw Error(Errc::on_ideal_generator, to_string(x) + " lies on no pencil circle apart from the pencil point");
}

std::optional<std::size_t> TheoremContext::symmetry(int r) const {
  long s = symmetry_[static_cast<std::size_t>(r)];
  if (s < 0) return std::nullopt;
  return static_cast<std::size_t>(s);
}

const EquivPartition& TheoremContext::equiv(const Circle& L) const {
  std::lock_guard<std::mutex> lock(equiv_mutex_);
  auto it = equiv_.find(L);
  if (it == equiv_.end())
    it = equiv_.emplace(L, std::make_unique<EquivPartition>(equiv_relation(plane_, L, exec_))).first;
  return *it->second;
}

Budget default_theorem_budget(CheckId id, int q) {
  switch (id) {
    case CheckId::P4_4:
    case CheckId::P4_5:
    case CheckId::P4_7:
    case CheckId::R4_1:
      if (q <= 11) return Budget::exhaustive_budget();
      break;
    case CheckId::T4_2:
      // Sampled draws are single configurations here, not outer circles.
      return q <= 7 ? Budget::exhaustive_budget() : Budget::sampled(100000);
    default:
      if (q <= 7) return Budget::exhaustive_budget();
      break;
  }
  return Budget::sampled(2000);
}

}  // namespace laguerre
