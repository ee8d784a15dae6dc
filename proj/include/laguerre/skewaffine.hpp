#pragma once

// Group space V(G) of the pencil group acting on the points off the pencil
// generator: x ⊔ y = {x} ∪ G_x·y, lines parallel iff some g maps one onto
// the other.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "laguerre/autgroup.hpp"
#include "laguerre/plane.hpp"
#include "laguerre/report.hpp"
#include "laguerre/sweep.hpp"

namespace laguerre {

enum class LineKind { circle_line, straight_pencil, special };

const char* to_string(LineKind k);

struct Line {
  int basepoint = -1;           ///< plane index of the defining basepoint
  std::vector<int> points;      ///< sorted plane indices
  LineKind kind = LineKind::circle_line;
  int class_id = -1;            ///< id of the least line of the parallel class
  int class_index = -1;         ///< dense class number
  std::vector<int> basepoints;  ///< every z with z ⊔ y = this line for some y
};

/// Line identity is the point set; a join of parallel points additionally
/// keys on its basepoint. (For q = 3 such a line has two points and would
/// otherwise be indistinguishable from its reverse join.)
struct LineKey {
  std::vector<int> points;
  int special_base = -1;

  friend auto operator<=>(const LineKey&, const LineKey&) = default;
};

class GroupSpace {
 public:
  /// Builds all lines by orbit enumeration and the parallel classes as
  /// G-orbits on lines. Throws Error{group_axioms} (detail: the A1/A2
  /// reports) if the group is not transitive or circular transitive.
  static GroupSpace build(const DeltaGroup& group, Exec exec = default_exec());

  const Plane& plane() const noexcept { return group_->plane(); }
  const DeltaGroup& group() const noexcept { return *group_; }

  /// Plane indices of the points, ascending.
  const std::vector<int>& points() const noexcept { return points_; }
  int num_points() const noexcept { return static_cast<int>(points_.size()); }
  int local(int plane_point) const { return local_[static_cast<std::size_t>(plane_point)]; }
  bool contains(int plane_point) const { return local(plane_point) >= 0; }

  int num_lines() const noexcept { return static_cast<int>(lines_.size()); }
  const Line& line(int id) const { return lines_[static_cast<std::size_t>(id)]; }
  const std::vector<Line>& lines() const noexcept { return lines_; }
  int num_classes() const noexcept { return num_classes_; }

  /// Line id of x ⊔ y (plane indices). Throws Error{invalid_argument} for x = y and
  /// Error{on_ideal_generator} for a point off the space.
  int join(int x, int y) const;
  /// Same, by local indices; no checks.
  int join_local(int xl, int yl) const { return join_[static_cast<std::size_t>(xl * num_points() + yl)]; }

  bool parallel(int l1, int l2) const { return line(l1).class_index == line(l2).class_index; }
  bool on_line(int plane_point, int line_id) const;
  bool straight(int line_id) const { return line(line_id).basepoints.size() == line(line_id).points.size(); }

  std::optional<int> find(const LineKey& key) const;
  /// The line M minus the pencil generator, if it is a line.
  std::optional<int> line_of_circle(const Circle& M) const;

  /// Image of a line under group element i.
  int image(std::size_t element, int line_id) const {
    return images_[element * lines_.size() + static_cast<std::size_t>(line_id)];
  }

  /// Lines with each class index, ascending ids.
  const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }

  /// Ordered pairs (x, y) of local indices whose join lies in each class.
  const std::vector<std::vector<std::pair<int, int>>>& class_pairs() const noexcept { return class_pairs_; }

 private:
  GroupSpace() = default;

  const DeltaGroup* group_ = nullptr;
  std::vector<int> points_;
  std::vector<int> local_;
  std::vector<Line> lines_;
  std::map<LineKey, int> index_;
  std::vector<int> join_;
  std::vector<int> images_;
  std::vector<std::uint8_t> membership_;
  std::vector<std::vector<int>> classes_;
  std::vector<std::vector<std::pair<int, int>>> class_pairs_;
  int num_classes_ = 0;
};

struct LineClassification {
  LineKind kind;
  std::vector<int> basepoints;
  bool proper() const { return basepoints.size() == 1; }
};

/// Kind and basepoint set recomputed from the join definition.
LineClassification classify_line(const GroupSpace& gs, int line_id);

/// Join for the canonical pencil from the closed forms: the parabola with
/// vertex x through y, or the square-class ray on x's generator. Sorted
/// plane indices.
std::vector<int> closed_form_join(const Plane& plane, const Point& x, const Point& y);

/// Parallelism from invariants (canonical pencil): circle lines by leading
/// coefficient, straight lines all together, special lines by the square
/// class of their height offset.
bool parallel_by_invariant(const GroupSpace& gs, int l1, int l2);

enum class Axiom { L1, L2, P1, P2, T, V, Pgm, Des, Pap };

const std::vector<Axiom>& all_axioms();
const char* to_string(Axiom a);
/// Throws Error{unknown_id}.
Axiom parse_axiom(const std::string& id);

/// Default budget: exhaustive for L1, L2, P1, P2, V, Pgm and for q <= 5;
/// 10^6 seeded samples for T, Des, Pap above that.
Budget default_budget(Axiom a, int q);

Report check_axiom(const GroupSpace& gs, Axiom axiom, const Budget& budget, Exec exec = default_exec());

nlohmann::json space_to_json(const GroupSpace& gs);

}  // namespace laguerre
