#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "laguerre/error.hpp"
#include "laguerre/verify.hpp"

namespace laguerre::detail {

/// Runs body(i, tally) over all outer indices, or over budget.samples seeded
/// draws of an outer index.
template <typename Body>
Tally outer_sweep(std::int64_t n, const Budget& budget, Exec exec, Body&& body) {
  if (budget.exhaustive) return sweep(n, exec, body);
  return sweep(static_cast<std::int64_t>(budget.samples), exec, [&](std::int64_t j, Tally& tally) {
    SplitMix64 rng = SplitMix64::for_draw(budget.seed, static_cast<std::uint64_t>(j));
    body(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n))), tally);
  });
}

struct Tangent {
  Circle circle;
  Point point;
};

/// Circles meeting L in exactly one point, with that point, in circle order.
inline std::vector<Tangent> tangents_of(const Plane& plane, const Circle& L) {
  std::vector<Tangent> out;
  for (const Circle& C : plane.circles())
    if (C != L && plane.intersection_size(C, L) == 1) out.push_back({C, plane.intersection(C, L).front()});
  return out;
}

inline bool meets(const Plane& plane, const Circle& a, const Circle& b) {
  return a == b || plane.intersection_size(a, b) >= 1;
}

inline bool sets_meet(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

inline nlohmann::json pt(const Plane& plane, int i) { return to_json(plane.point(i)); }

Report finish(CheckId id, const TheoremContext& ctx, const Tally& tally, const Budget& budget);

Report run_line_checks(const TheoremContext& ctx, CheckId id, const Budget& budget);
Report run_group_checks(const TheoremContext& ctx, CheckId id, const Budget& budget);
Report run_tangency_checks(const TheoremContext& ctx, CheckId id, const Budget& budget);

}  // namespace laguerre::detail
