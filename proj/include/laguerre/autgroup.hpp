#pragma once

// The group of automorphisms fixing the ideal generator pointwise and the
// pencil <(inf,0), y=0> setwise, parametrized as (k, t, g):
//   (x, y) -> (k x + t, k^2 y + g),   (inf, a) -> (inf, a).
// Other pencils are handled by conjugating with a verified plane automorphism
// that carries them onto the canonical one.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "laguerre/plane.hpp"
#include "laguerre/report.hpp"

namespace laguerre {

struct PencilAut {
  int k = 1;
  int t = 0;
  int g = 0;

  static PencilAut identity() { return {1, 0, 0}; }

  Point apply(const FieldSpec& f, const Point& p) const;
  Circle apply(const FieldSpec& f, const Circle& c) const;

  /// this ∘ inner.
  PencilAut compose(const FieldSpec& f, const PencilAut& inner) const;
  PencilAut inverse(const FieldSpec& f) const;

  friend constexpr auto operator<=>(const PencilAut&, const PencilAut&) = default;
};

enum class AutClass {
  identity,
  translation_generators,
  translation_circle_direction,
  strain,
  symmetry,
  glide,
};

const char* to_string(AutClass c);

/// Classification by parameters.
AutClass classify(const FieldSpec& f, const PencilAut& e);

/// Every (k, t, g) with k != 0, in lexicographic order.
std::vector<PencilAut> all_pencil_auts(const FieldSpec& f);

/// Parameter-level stabilizer. Throws Error{on_ideal_generator} for ideal x.
std::vector<PencilAut> stabilizer(const FieldSpec& f, std::span<const PencilAut> group, const Point& x);

/// Distinct images of x, sorted.
std::vector<Point> orbit(const FieldSpec& f, std::span<const PencilAut> group, const Point& x);

struct Census {
  std::size_t identity = 0;
  std::size_t translations = 0;  ///< both translation kinds
  std::size_t translations_generators = 0;
  std::size_t strains = 0;
  std::size_t symmetries = 0;
  std::size_t glides = 0;
  std::size_t total = 0;
};

Census census(const FieldSpec& f, std::span<const PencilAut> group);

using PointTable = std::vector<int>;

/// Point permutation of a plane, checked to map circles onto circles.
class PermutationMap {
 public:
  /// Throws Error{invalid_argument} with a witness if the table is not an
  /// automorphism.
  static PermutationMap from_points(const Plane& plane, PointTable image);
  static PermutationMap identity(const Plane& plane);

  int point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  int circle(int i) const { return circles_[static_cast<std::size_t>(i)]; }
  const PointTable& point_table() const noexcept { return points_; }

  /// this ∘ inner.
  PermutationMap compose(const PermutationMap& inner) const;
  PermutationMap inverse() const;

 private:
  PermutationMap(PointTable points, std::vector<int> circles)
      : points_(std::move(points)), circles_(std::move(circles)) {}

  PointTable points_;
  std::vector<int> circles_;
};

/// Witness describing why a point table fails to be an automorphism, if it does.
std::optional<nlohmann::json> automorphism_defect(const Plane& plane, const PointTable& image);

namespace plane_maps {

/// (x, y) -> (x, y + Q(x)), (inf, a) -> (inf, a + Q.a).
PermutationMap circle_addition(const Plane& plane, const Circle& Q);

/// x -> (alpha x + beta) / (gamma x + delta) on the generators, heights
/// rescaled by (gamma x + delta)^-2. Throws if the matrix is singular.
PermutationMap mobius_lift(const Plane& plane, int alpha, int beta, int gamma, int delta);

/// Verified automorphism carrying the pencil onto <(inf,0), y=0>.
PermutationMap normalizer(const Plane& plane, const Pencil& pencil);

}  // namespace plane_maps

/// Realization of the pencil group on a concrete plane and pencil.
class DeltaGroup {
 public:
  /// Full group of the pencil (conjugated if not canonical). Throws
  /// Error{char_two} for q = 2 and Error{not_incident} if p is not on K.
  static DeltaGroup build(const Plane& plane, const Pencil& pencil);

  const Plane& plane() const noexcept { return *plane_; }
  const Pencil& pencil() const noexcept { return pencil_; }
  bool canonical() const noexcept { return canonical_; }

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<PencilAut>& elements() const noexcept { return elements_; }
  const PencilAut& element(std::size_t i) const { return elements_[i]; }
  const PointTable& table(std::size_t i) const { return tables_[i]; }
  const std::vector<PointTable>& tables() const noexcept { return tables_; }
  const PermutationMap& normalizer() const noexcept { return normalizer_; }

  int apply_point(std::size_t i, int point) const { return tables_[i][static_cast<std::size_t>(point)]; }
  int apply_circle(std::size_t i, int circle) const;
  Circle apply(std::size_t i, const Circle& c) const { return plane_->circle(apply_circle(i, plane_->index(c))); }
  Point apply(std::size_t i, const Point& p) const { return plane_->point(apply_point(i, plane_->index(p))); }

  std::size_t index_of(const PencilAut& e) const;
  std::size_t identity_index() const { return index_of(PencilAut::identity()); }
  std::size_t compose(std::size_t outer, std::size_t inner) const;
  std::size_t inverse(std::size_t i) const;

  std::vector<std::size_t> stabilizer(int point) const;
  std::vector<int> orbit(std::span<const std::size_t> elems, int point) const;

  /// Points off the generator of the pencil point, by plane index.
  const std::vector<int>& residual_points() const noexcept { return residual_; }
  bool on_pencil_generator(int point) const;

  // Brute-force structure of a single element (no parameter knowledge).
  std::vector<int> fixed_residual_points(std::size_t i) const;
  bool fixes_generator_pointwise(std::size_t i, const Generator& g) const;
  bool fixes_every_generator(std::size_t i) const;
  bool fixes_circle(std::size_t i, const Circle& c) const;
  bool is_involution(std::size_t i) const;

  /// Fixpoint free off the pencil generator, and mapping every line of the
  /// derived affine plane at some point of that generator to a parallel line.
  bool is_translation(std::size_t i) const;

  /// Classification from fixed-point scans only; nullopt if no class fits.
  std::optional<AutClass> classify_by_scan(std::size_t i) const;

 private:
  DeltaGroup(const Plane& plane, const Pencil& pencil, PermutationMap normalizer);

  const Plane* plane_;
  Pencil pencil_;
  bool canonical_ = true;
  PermutationMap normalizer_;
  PermutationMap denormalizer_;
  std::vector<PencilAut> elements_;
  std::vector<PointTable> tables_;
  std::vector<int> residual_;
};

/// A1, A2 and A3 for the pencil. A1/A2 report status error when group is
/// null (no pencil group in char 2).
std::vector<Report> verify_group_axioms(const Plane& plane, const Pencil& pencil, const DeltaGroup* group,
                                        Exec exec = default_exec());

Report verify_a3(const Plane& plane, const Pencil& pencil, Exec exec = default_exec());

struct NormalTransitivity {
  bool holds = false;
  nlohmann::json witness;
};

/// Transitive on domain, and for all x != y some element fixes x but not y.
NormalTransitivity normally_transitive(std::span<const PointTable> group, std::span<const int> domain);

nlohmann::json group_to_json(const DeltaGroup& group);

}  // namespace laguerre
