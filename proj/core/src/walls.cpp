#include "quiverfan/walls.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quiverfan {

const Cone* WallTable::find(const DimVector& key) const {
  for (const auto& [e, w] : entries)
    if (e == key) return &w;
  return nullptr;
}

Cone stability_space(const Quiver& q, const DimVector& d) {
  if (d.size() != q.vertex_count())
    throw std::invalid_argument("stability_space: length mismatch");
  if (d.is_zero())
    throw std::invalid_argument("stability_space: d must be nonzero");
  return Cone::from_inequalities(q.vertex_count(), {d.as_ints()},
                                 std::vector<IntVec>{});
}

Cone sst_cone(SchofieldCache& cache, const DimVector& d) {
  const Quiver& q = cache.quiver();
  if (d.size() != q.vertex_count())
    throw std::invalid_argument("sst_cone: length mismatch");
  if (d.is_zero()) throw std::invalid_argument("sst_cone: d must be nonzero");
  std::vector<IntVec> ineqs;
  for (const DimVector& e : cache.generic_subdims(d)) {
    if (e.is_zero() || e == d) continue;
    ineqs.push_back(e.as_ints());
  }
  return Cone::from_inequalities(q.vertex_count(), {d.as_ints()},
                                 std::move(ineqs));
}

Cone sst_cone(const Quiver& q, const DimVector& d) {
  SchofieldCache cache(q);
  return sst_cone(cache, d);
}

Cone hyperplane_H(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.vertex_count() || e.size() != q.vertex_count())
    throw std::invalid_argument("hyperplane_H: length mismatch");
  if (e.is_zero())
    throw std::invalid_argument("hyperplane_H: e must be nonzero");
  return Cone::from_inequalities(q.vertex_count(),
                                 {d.as_ints(), e.as_ints()},
                                 std::vector<IntVec>{});
}

Cone wall(SchofieldCache& cache, const DimVector& d, const DimVector& e) {
  if (e.is_zero()) throw std::invalid_argument("wall: e must be nonzero");
  if (e == d) throw std::invalid_argument("wall: e must be proper");
  if (!leq(e, d)) throw std::invalid_argument("wall: e is not <= d");
  return intersect(sst_cone(cache, e), sst_cone(cache, d - e));
}

Cone wall(const Quiver& q, const DimVector& d, const DimVector& e) {
  SchofieldCache cache(q);
  return wall(cache, d, e);
}

WallTable all_walls(SchofieldCache& cache, const DimVector& d,
                    const ProgressFn& progress) {
  if (d.is_zero())
    throw std::invalid_argument("all_walls: d must be nonzero");
  WallTable table;
  table.d = d;
  table.ambient = cache.quiver().vertex_count();

  std::vector<DimVector> keys;
  for (const DimVector& e : subdim_vectors(d, true, true)) {
    if (lex_compare(e.as_ints(), (d - e).as_ints()) <= 0) keys.push_back(e);
  }

  std::map<DimVector, Cone> sigma;  // local Sigma(f) cache for this sweep
  auto sst_of = [&](const DimVector& f) -> const Cone& {
    auto it = sigma.find(f);
    if (it == sigma.end()) it = sigma.emplace(f, sst_cone(cache, f)).first;
    return it->second;
  };

  std::size_t done = 0;
  for (const DimVector& e : keys) {
    table.entries.emplace_back(e, intersect(sst_of(e), sst_of(d - e)));
    ++done;
    if (progress) progress(done, keys.size());
  }
  return table;
}

WallTable all_walls(const Quiver& q, const DimVector& d) {
  SchofieldCache cache(q);
  return all_walls(cache, d);
}

std::vector<Cone> wall_bar(SchofieldCache& cache, const DimVector& d,
                           const DimVector& e) {
  if (e.is_zero()) throw std::invalid_argument("wall_bar: e must be nonzero");
  if (!e.indivisible())
    throw std::invalid_argument("wall_bar: e must be indivisible");
  int codim1 = sst_cone(cache, d).dim() - 1;
  std::vector<Cone> out;
  for (int k = 1;; ++k) {
    DimVector ke = k * e;
    if (!leq(ke, d)) break;
    if (ke == d) continue;
    Cone w = wall(cache, d, ke);
    if (w.dim() == codim1) out.push_back(std::move(w));
  }
  return out;
}

bool has_strictly_semistables(const WallTable& walls, const StabParam& theta) {
  if (theta.size() != walls.d.size())
    throw std::invalid_argument("has_strictly_semistables: length mismatch");
  if (pair(theta, walls.d) != 0)
    throw std::invalid_argument(
        "has_strictly_semistables: theta.d must be 0");
  for (const auto& [e, w] : walls.entries)
    if (w.contains(theta.coords)) return true;
  return false;
}

bool has_strictly_semistables(SchofieldCache& cache, const DimVector& d,
                              const StabParam& theta) {
  return has_strictly_semistables(all_walls(cache, d), theta);
}

}  // namespace quiverfan
