#include "quiverfan/schofield.hpp"

#include <algorithm>
#include <stdexcept>

namespace quiverfan {

const std::vector<DimVector>& SchofieldCache::generic_subdims(
    const DimVector& d) {
  if (d.size() != q_.vertex_count())
    throw std::invalid_argument("generic_subdims: length mismatch");
  auto hit = memo_.find(d);
  if (hit != memo_.end()) return hit->second;

  // Bottom-up: every proper f <= e has smaller grade, so its table entry
  // exists by the time e is processed.
  for (const DimVector& e : subdim_vectors(d, false, false)) {
    if (memo_.count(e)) continue;
    std::vector<DimVector> gen;
    for (const DimVector& f : subdim_vectors(e, false, false)) {
      if (f == e) {
        gen.push_back(f);
        continue;
      }
      const DimVector rest = e - f;
      const auto& gf = memo_.at(f);
      bool ok = std::all_of(gf.begin(), gf.end(), [&](const DimVector& g) {
        return q_.euler(g, rest) >= 0;
      });
      if (ok) gen.push_back(f);
    }
    memo_.emplace(e, std::move(gen));
  }
  return memo_.at(d);
}

bool SchofieldCache::is_generic_subdim(const DimVector& e,
                                       const DimVector& d) {
  if (!leq(e, d))
    throw std::invalid_argument("is_generic_subdim: e is not <= d");
  const auto& gen = generic_subdims(d);
  return std::binary_search(gen.begin(), gen.end(), e, graded_lex_less);
}

Int SchofieldCache::ext_generic(const DimVector& d, const DimVector& e) {
  if (d.size() != e.size())
    throw std::invalid_argument("ext_generic: length mismatch");
  Int best = 0;  // attained at d' = 0
  for (const DimVector& dp : generic_subdims(d)) {
    Int v = -q_.euler(dp, e);
    if (v > best) best = v;
  }
  return best;
}

bool SchofieldCache::is_schur_root(const DimVector& d) {
  if (d.is_zero())
    throw std::invalid_argument("is_schur_root: d must be nonzero");
  for (const DimVector& e : generic_subdims(d)) {
    if (e.is_zero() || e == d) continue;
    if (q_.euler(d, e) - q_.euler(e, d) >= 0) return false;
  }
  return true;
}

std::vector<DimVector> generic_subdims(const Quiver& q, const DimVector& d) {
  SchofieldCache cache(q);
  return cache.generic_subdims(d);
}

bool is_generic_subdim(const Quiver& q, const DimVector& e,
                       const DimVector& d) {
  SchofieldCache cache(q);
  return cache.is_generic_subdim(e, d);
}

Int ext_generic(const Quiver& q, const DimVector& d, const DimVector& e) {
  SchofieldCache cache(q);
  return cache.ext_generic(d, e);
}

bool is_schur_root(const Quiver& q, const DimVector& d) {
  SchofieldCache cache(q);
  return cache.is_schur_root(d);
}

}  // namespace quiverfan
