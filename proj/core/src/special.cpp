#include "quiverfan/special.hpp"

#include <set>
#include <stdexcept>

namespace quiverfan {

namespace {

// Defining constraint normals of C_e: every nonzero e' generic in e, and
// f' + e for every proper f' generic in d-e (f' = 0 contributes e itself).
std::vector<IntVec> c_e_constraints(SchofieldCache& cache, const DimVector& d,
                                    const DimVector& e) {
  std::set<IntVec, LexLess> out;
  for (const DimVector& ep : cache.generic_subdims(e)) {
    if (ep.is_zero()) continue;
    out.insert(ep.as_ints());
  }
  const DimVector rest = d - e;
  for (const DimVector& fp : cache.generic_subdims(rest)) {
    if (fp == rest) continue;
    out.insert((fp + e).as_ints());
  }
  return {out.begin(), out.end()};
}

void validate_e(const DimVector& d, const DimVector& e) {
  if (e.is_zero()) throw std::invalid_argument("cone_C_e: e must be nonzero");
  if (e == d) throw std::invalid_argument("cone_C_e: e must be proper");
  if (!leq(e, d)) throw std::invalid_argument("cone_C_e: e is not <= d");
}

}  // namespace

Cone cone_C_e(SchofieldCache& cache, const DimVector& d, const DimVector& e) {
  validate_e(d, e);
  return Cone::from_inequalities(cache.quiver().vertex_count(),
                                 {d.as_ints()}, c_e_constraints(cache, d, e));
}

Cone cone_C_e(const Quiver& q, const DimVector& d, const DimVector& e) {
  SchofieldCache cache(q);
  return cone_C_e(cache, d, e);
}

std::vector<DimVector> special_subdims(SchofieldCache& cache,
                                       const DimVector& d) {
  if (d.is_zero())
    throw std::invalid_argument("special_subdims: d must be nonzero");
  std::vector<DimVector> out;
  if (!cache.is_schur_root(d)) return out;
  for (const DimVector& e : subdim_vectors(d, true, true)) {
    if (cache.is_generic_subdim(e, d)) continue;
    std::vector<IntVec> constraints = c_e_constraints(cache, d, e);
    Cone c = Cone::from_inequalities(cache.quiver().vertex_count(),
                                     {d.as_ints()}, constraints);
    const auto& rays = c.vrep().rays;
    // C_e avoids the hyperplane {theta.v = 0} iff some ray pairs strictly
    // negatively with v; lineality vectors pair to zero with every
    // constraint automatically.
    bool special = true;
    for (const IntVec& v : constraints) {
      bool off = false;
      for (const IntVec& r : rays) {
        if (dot(v, r) < 0) {
          off = true;
          break;
        }
      }
      if (!off) {
        special = false;
        break;
      }
    }
    if (special) out.push_back(e);
  }
  return out;
}

std::vector<DimVector> special_subdims(const Quiver& q, const DimVector& d) {
  SchofieldCache cache(q);
  return special_subdims(cache, d);
}

}  // namespace quiverfan
