#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverfan/arith.hpp"

namespace quiverfan {

/// H-representation: {x | v.x = 0 for v in equalities, v.x <= 0 for v in
/// inequalities}. Canonical once materialized through Cone::hrep():
/// equalities form an rref basis of the annihilator of the cone's span, and
/// inequalities are the facet normals, reduced modulo the equalities,
/// primitive and sorted.
struct HRep {
  int ambient = 0;
  std::vector<IntVec> equalities;
  std::vector<IntVec> inequalities;
};

/// V-representation: span(lineality) + cone(rays). Canonical once
/// materialized through Cone::vrep(): lineality is an rref basis, rays are
/// the extreme rays reduced modulo the lineality, primitive and sorted.
struct VRep {
  int ambient = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

/// Exact rational polyhedral cone through the origin. Immutable value; the
/// missing representation is derived lazily by the double description
/// method. Lazy conversion is not synchronized: confine a cone to one thread
/// or call dual_convert() before sharing.
class Cone {
 public:
  Cone() = default;  // the zero cone in ambient dimension 0

  static Cone from_inequalities(int ambient, std::vector<IntVec> equalities,
                                std::vector<IntVec> inequalities);
  static Cone from_inequalities(int ambient,
                                const std::vector<RatVec>& equalities,
                                const std::vector<RatVec>& inequalities);
  /// Arbitrary generators: hidden lineality and non-extreme rays are
  /// normalized away.
  static Cone from_rays(int ambient, std::vector<IntVec> rays,
                        std::vector<IntVec> lineality = {});
  /// Trusted generators: rays must already be extreme modulo the given
  /// lineality basis. Used by the kernel's own conversions.
  static Cone from_generators_unchecked(int ambient, std::vector<IntVec> rays,
                                        std::vector<IntVec> lineality);
  static Cone full_space(int ambient);
  static Cone zero_cone(int ambient);

  int ambient() const { return ambient_; }
  const HRep& hrep() const;
  const VRep& vrep() const;

  /// Dimension of the linear span.
  int dim() const;
  bool is_linear_space() const { return vrep().rays.empty(); }

  /// Sum of the canonical rays plus the canonical lineality basis; lies in
  /// the relative interior, and is 0 exactly for the zero cone.
  IntVec interior_point_int() const;
  RatVec relative_interior_point() const;

  bool contains(const IntVec& p) const;
  bool contains(const RatVec& p) const;

  /// All faces of dimension dim() - 1; empty for linear spaces (and so for
  /// the zero cone).
  std::vector<Cone> facets() const;

  /// Canonical key: two cones are equal as sets iff their keys are equal.
  const std::string& canonical_key() const;

  friend Cone intersect(const Cone& a, const Cone& b);
  friend bool is_subcone(const Cone& a, const Cone& b);

 private:
  const HRep& any_h() const;
  void materialize_v() const;
  void materialize_h() const;

  int ambient_ = 0;
  mutable std::optional<HRep> h_;
  mutable std::optional<VRep> v_;
  mutable bool h_canonical_ = false;
  mutable bool v_canonical_ = false;
  mutable std::string key_;
};

/// Both representations materialized and canonical; idempotent.
Cone dual_convert(Cone c);

Cone intersect(const Cone& a, const Cone& b);
bool is_subcone(const Cone& a, const Cone& b);

inline bool same_cone(const Cone& a, const Cone& b) {
  return a.ambient() == b.ambient() && a.canonical_key() == b.canonical_key();
}

/// All closed full-dimensional pieces of `support` cut out by choosing one
/// closed side of each hyperplane {h.x = 0}, in canonical order.
std::vector<Cone> chambers(const Cone& support,
                           const std::vector<IntVec>& hyperplane_normals);

}  // namespace quiverfan
