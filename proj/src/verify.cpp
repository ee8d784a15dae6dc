#include "verify_internal.hpp"

namespace laguerre {

namespace detail {

Report finish(CheckId id, const TheoremContext& ctx, const Tally& tally, const Budget& budget) {
  Report r = Report::from_tally(to_string(id), ctx.q(), tally);
  r.stats["budget"] = budget.to_string();
  if (!budget.exhaustive) r.stats["seed"] = budget.seed;
  return r;
}

}  // namespace detail

Report run_check(const TheoremContext& ctx, CheckId id, const Budget& budget) {
  return timed([&] {
    switch (id) {
      case CheckId::P2_1:
      case CheckId::P2_2:
      case CheckId::P2_3:
      case CheckId::P2_4:
      case CheckId::P2_5:
      case CheckId::P2_6:
      case CheckId::C2_1: return detail::run_line_checks(ctx, id, budget);
      case CheckId::T3_1:
      case CheckId::P3_1:
      case CheckId::C3_1:
      case CheckId::L3_1:
      case CheckId::P3_2:
      case CheckId::T3_2:
      case CheckId::C3_3:
      case CheckId::C3_4: return detail::run_group_checks(ctx, id, budget);
      default: return detail::run_tangency_checks(ctx, id, budget);
    }
  });
}

Report thm_check(CheckId id, int q, const Budget& budget, Exec exec) {
  TheoremContext ctx(q, exec);
  return run_check(ctx, id, budget);
}

}  // namespace laguerre
