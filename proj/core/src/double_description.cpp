#include "double_description.hpp"

#include <map>
#include <utility>

namespace quiverfan::detail {

DDCone DDCone::make_full(int ambient) {
  DDCone c;
  c.ambient = ambient;
  c.lin.reserve(ambient);
  for (int i = 0; i < ambient; ++i) {
    IntVec e(ambient, 0);
    e[i] = 1;
    c.lin.push_back(std::move(e));
  }
  return c;
}

void DDCone::cut(IntVec a, bool equality) {
  a = primitive(std::move(a));
  if (is_zero(a)) return;

  // Lineality elimination: if some basis vector leaves the hyperplane, slice
  // the lineality space instead of the ray set. All previously recorded
  // constraints vanish on lin, so tight sets survive the projection.
  std::size_t l0 = lin.size();
  for (std::size_t i = 0; i < lin.size(); ++i) {
    if (dot(a, lin[i]) != 0) {
      l0 = i;
      break;
    }
  }

  if (l0 < lin.size()) {
    if (dot(a, lin[l0]) > 0) lin[l0] = negated(std::move(lin[l0]));
    IntVec pivot = lin[l0];
    Int alpha = dot(a, pivot);  // < 0
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (i == l0) continue;
      Int beta = dot(a, lin[i]);
      if (beta == 0) continue;
      for (int j = 0; j < ambient; ++j)
        lin[i][j] = alpha * lin[i][j] - beta * pivot[j];
      lin[i] = primitive(std::move(lin[i]));
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      Int beta = dot(a, rays[i]);
      if (beta == 0) continue;
      // (-alpha) r + beta pivot: positive multiple of r plus lineality
      for (int j = 0; j < ambient; ++j)
        rays[i][j] = -alpha * rays[i][j] + beta * pivot[j];
      rays[i] = primitive(std::move(rays[i]));
    }
    lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(l0));
    if (equality) {
      eqs.push_back(std::move(a));
    } else {
      std::size_t bit = ineqs.size();
      for (TightSet& t : tight) t.set(bit);  // all rays now on the hyperplane
      TightSet tp;
      for (std::size_t i = 0; i < bit; ++i) tp.set(i);
      rays.push_back(std::move(pivot));
      tight.push_back(std::move(tp));
      ineqs.push_back(std::move(a));
    }
    return;
  }

  // a vanishes on the lineality space: classic ray step.
  std::vector<Int> val(rays.size());
  std::vector<std::size_t> plus, minus, zero;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    val[i] = dot(a, rays[i]);
    int s = sgn(val[i]);
    if (s > 0)
      plus.push_back(i);
    else if (s < 0)
      minus.push_back(i);
    else
      zero.push_back(i);
  }

  std::vector<IntVec> new_rays;
  std::vector<TightSet> new_tight;
  std::map<IntVec, std::size_t, LexLess> seen;
  auto keep = [&](IntVec v, TightSet t) {
    auto [it, fresh] = seen.emplace(v, new_rays.size());
    if (!fresh) return;
    new_rays.push_back(std::move(v));
    new_tight.push_back(std::move(t));
  };

  std::size_t bit = ineqs.size();
  for (std::size_t i : zero) {
    TightSet t = tight[i];
    if (!equality) t.set(bit);
    keep(rays[i], std::move(t));
  }
  if (!equality) {
    for (std::size_t i : minus) keep(rays[i], tight[i]);
  }
  for (std::size_t p : plus) {
    for (std::size_t m : minus) {
      bool adjacent = true;
      for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
        if (k == p || k == m) continue;
        if (TightSet::meet_subset(tight[p], tight[m], tight[k]))
          adjacent = false;
      }
      if (!adjacent) continue;
      IntVec w(ambient);
      for (int j = 0; j < ambient; ++j)
        w[j] = val[p] * rays[m][j] - val[m] * rays[p][j];
      w = primitive(std::move(w));
      TightSet t = TightSet::meet(tight[p], tight[m]);
      if (!equality) t.set(bit);
      keep(std::move(w), std::move(t));
    }
  }

  rays = std::move(new_rays);
  tight = std::move(new_tight);
  if (equality)
    eqs.push_back(std::move(a));
  else
    ineqs.push_back(std::move(a));
}

DDCone from_hrep(int ambient, const std::vector<IntVec>& eqs,
                 const std::vector<IntVec>& ineqs) {
  DDCone c = DDCone::make_full(ambient);
  for (const IntVec& a : eqs) c.cut(a, true);
  for (const IntVec& a : ineqs) c.cut(a, false);
  return c;
}

}  // namespace quiverfan::detail
