#include "quiverfan/gitfan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "double_description.hpp"
#include "quiverfan/errors.hpp"

namespace quiverfan {

namespace {

// Canonical generator data of a fan cone: lineality rref basis plus extreme
// rays reduced mod lineality, primitive and sorted.
struct FaceNode {
  std::vector<IntVec> lin;
  std::vector<IntVec> rays;
};

FaceNode make_node(const std::vector<IntVec>& lin,
                   const std::vector<IntVec>& rays) {
  FaceNode n;
  n.lin = rref_basis(lin);
  std::set<IntVec, LexLess> seen;
  for (const IntVec& r : rays) {
    IntVec p = reduce_mod(r, n.lin);
    if (!is_zero(p)) seen.insert(std::move(p));
  }
  n.rays.assign(seen.begin(), seen.end());
  return n;
}

std::string node_key(const FaceNode& n) {
  std::string s = "L";
  for (const IntVec& l : n.lin) s += to_string(l);
  s += ";R";
  for (const IntVec& r : n.rays) s += to_string(r);
  return s;
}

// Facet normals via the polar cone; a facet's extreme rays are exactly the
// parent rays tight at its normal, with the lineality unchanged.
std::vector<IntVec> facet_normals(int ambient, const FaceNode& n) {
  detail::DDCone polar = detail::from_hrep(ambient, n.lin, n.rays);
  std::vector<IntVec> eqs = rref_basis(polar.lin);
  std::set<IntVec, LexLess> seen;
  for (const IntVec& r : polar.rays) {
    IntVec p = reduce_mod(r, eqs);
    if (!is_zero(p)) seen.insert(std::move(p));
  }
  return {seen.begin(), seen.end()};
}

FaceNode facet_of(const FaceNode& n, const IntVec& normal) {
  FaceNode f;
  f.lin = n.lin;
  for (const IntVec& r : n.rays)
    if (dot(normal, r) == 0) f.rays.push_back(r);
  return f;
}

IntVec node_interior_point(int ambient, const FaceNode& n) {
  IntVec p(ambient, 0);
  for (const IntVec& r : n.rays)
    for (int j = 0; j < ambient; ++j) p[j] += r[j];
  for (const IntVec& l : n.lin)
    for (int j = 0; j < ambient; ++j) p[j] += l[j];
  return p;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

Fan git_fan(SchofieldCache& cache, const DimVector& d, GitFanStats* stats) {
  const Quiver& q = cache.quiver();
  const int ambient = q.vertex_count();
  if (d.is_zero()) throw std::invalid_argument("git_fan: d must be nonzero");

  Fan fan;
  fan.ambient = ambient;

  Cone sigma = sst_cone(cache, d);
  const int k = sigma.dim();
  if (k == 0) {
    FanCone zero;
    zero.dim = 0;
    zero.cone = Cone::zero_cone(ambient);
    fan.cones.push_back(std::move(zero));
    fan.f_vector = {1};
    if (stats) *stats = GitFanStats{};
    return fan;
  }

  // Step 1: cut Sigma(d) along every hyperplane carrying a codimension-1
  // wall, one normal per distinct subspace span{d, e}.
  WallTable walls = all_walls(cache, d);
  std::vector<Cone> codim1;
  std::vector<IntVec> normals;
  {
    std::set<std::string> wall_seen, plane_seen;
    for (const auto& [e, w] : walls.entries) {
      if (w.dim() != k - 1) continue;
      if (wall_seen.insert(w.canonical_key()).second) codim1.push_back(w);
      std::string plane;
      for (const IntVec& row : rref_basis({d.as_ints(), e.as_ints()}))
        plane += to_string(row);
      if (plane_seen.insert(plane).second)
        normals.push_back(primitive(e.as_ints()));
    }
  }

  auto states = detail::chamber_states(sigma, normals);
  std::vector<FaceNode> chambers_;
  chambers_.reserve(states.size());
  for (const auto& st : states) chambers_.push_back(make_node(st.lin, st.rays));

  if (stats) {
    stats->hyperplanes = normals.size();
    stats->chambers = chambers_.size();
    stats->merges = 0;
  }

  // Facets of each chamber, keyed canonically; internal facets are shared by
  // exactly two chambers.
  struct FacetRec {
    std::vector<int> owners;
    IntVec interior;
    std::vector<std::pair<int, std::size_t>> at;  // (chamber, facet ordinal)
  };
  std::map<std::string, FacetRec> facet_map;
  std::vector<std::vector<FaceNode>> chamber_facets(chambers_.size());
  for (std::size_t i = 0; i < chambers_.size(); ++i) {
    for (const IntVec& a : facet_normals(ambient, chambers_[i])) {
      FaceNode f = facet_of(chambers_[i], a);
      auto& rec = facet_map[node_key(f)];
      if (rec.owners.empty()) rec.interior = node_interior_point(ambient, f);
      rec.owners.push_back(static_cast<int>(i));
      rec.at.emplace_back(static_cast<int>(i), chamber_facets[i].size());
      chamber_facets[i].push_back(std::move(f));
    }
  }

  // Step 2: merge across internal facets that lie on no codimension-1 wall.
  UnionFind uf(chambers_.size());
  std::map<std::string, bool> facet_is_wall;
  for (const auto& [key, rec] : facet_map) {
    if (rec.owners.size() > 2)
      throw InternalError("git_fan: facet shared by more than two chambers");
    bool on_wall = false;
    for (const Cone& w : codim1) {
      if (w.contains(rec.interior)) {
        on_wall = true;
        break;
      }
    }
    facet_is_wall[key] = on_wall;
    if (rec.owners.size() == 2 && !on_wall) {
      if (uf.unite(rec.owners[0], rec.owners[1]) && stats) ++stats->merges;
    }
  }

  std::map<int, std::vector<int>> classes;
  for (std::size_t i = 0; i < chambers_.size(); ++i)
    classes[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));

  std::vector<FaceNode> maximal;
  for (const auto& [root, members] : classes) {
    if (members.size() == 1) {
      maximal.push_back(chambers_[members[0]]);
      continue;
    }
    std::vector<IntVec> rays, lin;
    for (int m : members) {
      rays.insert(rays.end(), chambers_[m].rays.begin(),
                  chambers_[m].rays.end());
      lin.insert(lin.end(), chambers_[m].lin.begin(), chambers_[m].lin.end());
    }
    Cone hull = Cone::from_rays(ambient, std::move(rays), std::move(lin));
    const HRep& hh = hull.hrep();
    std::set<int> member_set(members.begin(), members.end());
    // The class is convex iff the members tile the hull: every member facet
    // is either shared with another member or lies on the hull's boundary.
    for (int m : members) {
      for (std::size_t fi = 0; fi < chamber_facets[m].size(); ++fi) {
        const std::string key = node_key(chamber_facets[m][fi]);
        const FacetRec& rec = facet_map.at(key);
        bool internal_to_class = false;
        for (int o : rec.owners)
          if (o != m && member_set.count(o)) internal_to_class = true;
        if (internal_to_class) continue;
        bool on_boundary = false;
        for (const IntVec& a : hh.inequalities) {
          if (dot(a, rec.interior) == 0) {
            on_boundary = true;
            break;
          }
        }
        if (!on_boundary)
          throw InternalError("git_fan: merged GIT class is not convex");
      }
    }
    maximal.push_back(make_node(hull.vrep().lineality, hull.vrep().rays));
  }

  // Every cone of the fan shares the minimal cone as its lineality space.
  for (const FaceNode& m : maximal)
    if (m.lin != maximal.front().lin)
      throw InternalError("git_fan: maximal cones disagree on lineality");

  // Face closure from the maximal cones.
  struct Entry {
    FaceNode node;
    int dim;
  };
  std::map<std::string, Entry> all;
  std::vector<std::pair<std::string, int>> queue;
  for (FaceNode& m : maximal) {
    int dm = static_cast<int>(m.lin.size()) + rank(m.rays);
    std::string key = node_key(m);
    if (all.emplace(key, Entry{std::move(m), dm}).second)
      queue.emplace_back(std::move(key), dm);
  }
  while (!queue.empty()) {
    auto [key, dim] = std::move(queue.back());
    queue.pop_back();
    const FaceNode node = all.at(key).node;
    for (const IntVec& a : facet_normals(ambient, node)) {
      FaceNode f = facet_of(node, a);
      std::string fkey = node_key(f);
      if (all.emplace(fkey, Entry{std::move(f), dim - 1}).second)
        queue.emplace_back(std::move(fkey), dim - 1);
    }
  }

  // Assemble: global ray pool, per-cone indices, f-vector.
  std::set<IntVec, LexLess> ray_pool;
  int min_dim = k;
  for (const auto& [key, entry] : all) {
    min_dim = std::min(min_dim, entry.dim);
    for (const IntVec& r : entry.node.rays) ray_pool.insert(r);
  }
  fan.rays.assign(ray_pool.begin(), ray_pool.end());
  fan.lineality = maximal.front().lin;
  std::map<IntVec, int, LexLess> ray_index;
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    ray_index.emplace(fan.rays[i], static_cast<int>(i));

  fan.f_vector.assign(k - min_dim + 1, 0);
  for (const auto& [key, entry] : all) {
    FanCone fc;
    fc.dim = entry.dim;
    for (const IntVec& r : entry.node.rays)
      fc.ray_indices.push_back(ray_index.at(r));
    std::sort(fc.ray_indices.begin(), fc.ray_indices.end());
    fc.cone = Cone::from_generators_unchecked(ambient, entry.node.rays,
                                              entry.node.lin);
    fan.cones.push_back(std::move(fc));
    ++fan.f_vector[entry.dim - min_dim];
  }
  std::sort(fan.cones.begin(), fan.cones.end(),
            [](const FanCone& a, const FanCone& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.ray_indices < b.ray_indices;
            });
  return fan;
}

Fan git_fan(const Quiver& q, const DimVector& d) {
  SchofieldCache cache(q);
  return git_fan(cache, d);
}

std::vector<long long> fan_f_vector(const Fan& fan) {
  if (fan.cones.empty()) return {};
  int lo = fan.cones.front().dim, hi = fan.cones.front().dim;
  for (const FanCone& c : fan.cones) {
    lo = std::min(lo, c.dim);
    hi = std::max(hi, c.dim);
  }
  std::vector<long long> f(hi - lo + 1, 0);
  for (const FanCone& c : fan.cones) ++f[c.dim - lo];
  return f;
}

int locate(const Fan& fan, const StabParam& theta) {
  if (theta.size() != fan.ambient)
    throw std::invalid_argument("locate: length mismatch");
  int best = -1;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    if (!fan.cones[i].cone.contains(theta.coords)) continue;
    if (best < 0 || fan.cones[i].dim < fan.cones[best].dim)
      best = static_cast<int>(i);
  }
  if (best < 0)
    throw std::invalid_argument("locate: theta outside the fan support");
  return best;
}

namespace {

// Exact feasibility interval of theta + t (eta - theta) in the cone, within
// [0, 1]. Returns (empty, lo, hi).
struct SegmentHit {
  bool empty = false;
  Rat lo = 0, hi = 1;
};

SegmentHit segment_in_cone(const Cone& w, const StabParam& theta,
                           const StabParam& eta) {
  SegmentHit s;
  const HRep& h = w.hrep();
  auto clamp = [&](const IntVec& a, bool equality) {
    Rat c0 = dot(theta.coords, a);
    Rat c1 = dot(eta.coords, a) - c0;
    if (c1 == 0) {
      if (equality ? c0 != 0 : c0 > 0) s.empty = true;
      return;
    }
    Rat t = -c0 / c1;
    if (equality) {
      s.lo = std::max(s.lo, t);
      s.hi = std::min(s.hi, t);
    } else if (c1 > 0) {
      s.hi = std::min(s.hi, t);
    } else {
      s.lo = std::max(s.lo, t);
    }
  };
  for (const IntVec& a : h.equalities) {
    clamp(a, true);
    if (s.empty) return s;
  }
  for (const IntVec& a : h.inequalities) {
    clamp(a, false);
    if (s.empty) return s;
  }
  if (s.lo > s.hi) s.empty = true;
  return s;
}

}  // namespace

bool git_equivalent(SchofieldCache& cache, const DimVector& d,
                    const StabParam& theta, const StabParam& eta) {
  Cone sigma = sst_cone(cache, d);
  if (!sigma.contains(theta.coords))
    throw std::invalid_argument("git_equivalent: theta is not semistable");
  if (!sigma.contains(eta.coords))
    throw std::invalid_argument("git_equivalent: eta is not semistable");
  WallTable walls = all_walls(cache, d);
  for (const auto& [e, w] : walls.entries) {
    SegmentHit s = segment_in_cone(w, theta, eta);
    if (s.empty) continue;
    if (s.lo == 0 && s.hi == 1) continue;  // whole segment inside the wall
    return false;
  }
  return true;
}

bool git_equivalent(const Quiver& q, const DimVector& d,
                    const StabParam& theta, const StabParam& eta) {
  SchofieldCache cache(q);
  return git_equivalent(cache, d, theta, eta);
}

bool has_geometric_phase(SchofieldCache& cache, const DimVector& d) {
  if (d.is_zero())
    throw std::invalid_argument("has_geometric_phase: d must be nonzero");
  const int n = cache.quiver().vertex_count();
  if (sst_cone(cache, d).dim() != n - 1) return false;
  WallTable walls = all_walls(cache, d);
  for (const auto& [e, w] : walls.entries)
    if (w.dim() >= n - 1) return false;
  return true;
}

bool has_geometric_phase(const Quiver& q, const DimVector& d) {
  SchofieldCache cache(q);
  return has_geometric_phase(cache, d);
}

}  // namespace quiverfan
