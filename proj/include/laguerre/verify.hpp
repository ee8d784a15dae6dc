#pragma once

// Statement-level checks over the residual skewaffine plane of the canonical
// pencil: one checker per catalog id, plus the tangent-circle equivalence
// and the tangency loci they rely on.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "laguerre/autgroup.hpp"
#include "laguerre/plane.hpp"
#include "laguerre/report.hpp"
#include "laguerre/skewaffine.hpp"
#include "laguerre/sweep.hpp"

namespace laguerre {

enum class CheckId {
  P2_1, P2_2, P2_3, P2_4, P2_5, P2_6, C2_1,
  T3_1, P3_1, C3_1, L3_1, P3_2, T3_2, C3_3, C3_4,
  P4_1, C4_1, P4_2, P4_3, L4_1, P4_4, P4_5, P4_6, P4_7, L4_2, T4_1, C4_2, T4_2, R4_1,
};

/// Catalog order.
const std::vector<CheckId>& all_checks();
/// "P2.1" style.
const char* to_string(CheckId id);
/// Throws Error{unknown_id}.
CheckId parse_check(const std::string& id);

/// a ≡_L b over the points off a circle L, computed from the definition:
/// every circle through a tangent to L meets every circle through b tangent to L.
struct EquivPartition {
  Circle L;
  std::vector<int> points;             ///< plane indices off L, ascending
  std::vector<std::uint8_t> relation;  ///< points.size()^2, row-major
  std::vector<int> block;              ///< block number of each point (first-occurrence order)
  std::vector<std::vector<int>> blocks;

  std::size_t size() const { return points.size(); }
  bool related(std::size_t i, std::size_t j) const { return relation[i * points.size() + j] != 0; }
};

/// Brute-force relation. Blocks are only meaningful when it is an equivalence.
EquivPartition equiv_relation(const Plane& plane, const Circle& L, Exec exec = default_exec());

/// Square-class rule: heights measured from L (L must be a circle (0, 0, c)).
bool equiv_by_square_class(const Plane& plane, const Circle& L, const Point& a, const Point& b);

/// Tangency points of the pencil circles with the circles through x and q.
struct TangencyLocus {
  Point q_ideal;
  Point x;
  std::vector<Point> base_points;  ///< sorted
  std::optional<Circle> circle;    ///< circle whose points off the pencil generator are exactly base_points
};

/// Throws Error{invalid_argument} unless q_ideal is on the pencil generator
/// and differs from the pencil point, and x is off that generator.
TangencyLocus tangency_locus(const Plane& plane, const Pencil& pencil, const Point& q_ideal, const Point& x);

/// Everything a check needs for one q, built once.
class TheoremContext {
 public:
  /// Throws Error{char_two} for q = 2.
  explicit TheoremContext(int q, Exec exec = default_exec());

  int q() const { return plane_.q(); }
  Exec exec() const { return exec_; }
  const Plane& plane() const { return plane_; }
  const Pencil& pencil() const { return pencil_; }
  const DeltaGroup& group() const { return *group_; }
  const GroupSpace& space() const { return *space_; }

  const std::vector<Circle>& members() const { return members_; }
  bool is_member(const Circle& c) const;
  /// The pencil circle through x (x off the pencil generator).
  Circle member_through(const Point& x) const;

  /// Elements of the group that are translations (brute force), identity included.
  const std::vector<std::size_t>& translations() const { return translations_; }
  bool is_translation(std::size_t i) const { return translation_flag_[i] != 0; }

  /// Laguerre symmetry in the stabilizer of r fixing r̄ and p̄ pointwise and
  /// the base circle setwise, if any.
  std::optional<std::size_t> symmetry(int r) const;

  /// Cached brute-force ≡_L for a circle L.
  const EquivPartition& equiv(const Circle& L) const;

 private:
  FieldRef field_;
  Plane plane_;
  Pencil pencil_;
  Exec exec_;
  std::unique_ptr<DeltaGroup> group_;
  std::unique_ptr<GroupSpace> space_;
  std::vector<Circle> members_;
  std::vector<std::size_t> translations_;
  std::vector<std::uint8_t> translation_flag_;
  std::vector<long> symmetry_;
  mutable std::mutex equiv_mutex_;
  mutable std::map<Circle, std::unique_ptr<EquivPartition>> equiv_;
};

/// Exhaustive for q <= 7 (and for the equivalence family up to 11);
/// otherwise 2000 sampled outer cases (100000 single configurations for T4.2).
Budget default_theorem_budget(CheckId id, int q);

Report run_check(const TheoremContext& ctx, CheckId id, const Budget& budget);

/// Builds a context and runs one check.
Report thm_check(CheckId id, int q, const Budget& budget, Exec exec = default_exec());

}  // namespace laguerre
