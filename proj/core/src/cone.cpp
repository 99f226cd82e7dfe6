#include "quiverfan/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "double_description.hpp"

namespace quiverfan {

namespace {

std::vector<IntVec> clean_rows(int ambient, std::vector<IntVec> rows,
                               bool orientation_free) {
  std::vector<IntVec> out;
  std::set<IntVec, LexLess> seen;
  for (IntVec& r : rows) {
    if (static_cast<int>(r.size()) != ambient)
      throw std::invalid_argument("Cone: constraint length mismatch");
    IntVec p = primitive(std::move(r));
    if (is_zero(p)) continue;
    if (orientation_free) p = sign_normalized(std::move(p));
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

VRep canonical_v(int ambient, const std::vector<IntVec>& lin,
                 const std::vector<IntVec>& rays) {
  VRep v;
  v.ambient = ambient;
  v.lineality = rref_basis(lin);
  std::set<IntVec, LexLess> seen;
  for (const IntVec& r : rays) {
    IntVec p = reduce_mod(r, v.lineality);
    if (is_zero(p)) continue;
    seen.insert(std::move(p));
  }
  v.rays.assign(seen.begin(), seen.end());
  return v;
}

// Polar double description: the facet normals of span(lin)+cone(rays) are
// the extreme rays of {a | a.l = 0, a.r <= 0}, and the equality span is its
// lineality.
HRep canonical_h_from_generators(int ambient, const std::vector<IntVec>& lin,
                                 const std::vector<IntVec>& rays) {
  detail::DDCone polar = detail::from_hrep(ambient, lin, rays);
  HRep h;
  h.ambient = ambient;
  h.equalities = rref_basis(polar.lin);
  std::set<IntVec, LexLess> seen;
  for (const IntVec& r : polar.rays) {
    IntVec p = reduce_mod(r, h.equalities);
    if (is_zero(p)) continue;
    seen.insert(std::move(p));
  }
  h.inequalities.assign(seen.begin(), seen.end());
  return h;
}

}  // namespace

Cone Cone::from_inequalities(int ambient, std::vector<IntVec> equalities,
                             std::vector<IntVec> inequalities) {
  if (ambient < 0) throw std::invalid_argument("Cone: negative ambient");
  Cone c;
  c.ambient_ = ambient;
  HRep h;
  h.ambient = ambient;
  h.equalities = clean_rows(ambient, std::move(equalities), true);
  h.inequalities = clean_rows(ambient, std::move(inequalities), false);
  c.h_ = std::move(h);
  return c;
}

Cone Cone::from_inequalities(int ambient,
                             const std::vector<RatVec>& equalities,
                             const std::vector<RatVec>& inequalities) {
  std::vector<IntVec> eqs, ineqs;
  eqs.reserve(equalities.size());
  ineqs.reserve(inequalities.size());
  for (const RatVec& v : equalities) eqs.push_back(to_primitive_integer(v));
  for (const RatVec& v : inequalities) ineqs.push_back(to_primitive_integer(v));
  return from_inequalities(ambient, std::move(eqs), std::move(ineqs));
}

Cone Cone::from_rays(int ambient, std::vector<IntVec> rays,
                     std::vector<IntVec> lineality) {
  Cone c;
  c.ambient_ = ambient;
  VRep v;
  v.ambient = ambient;
  v.rays = clean_rows(ambient, std::move(rays), false);
  v.lineality = clean_rows(ambient, std::move(lineality), true);
  c.v_ = std::move(v);
  c.v_canonical_ = false;
  return c;
}

Cone Cone::from_generators_unchecked(int ambient, std::vector<IntVec> rays,
                                     std::vector<IntVec> lineality) {
  Cone c;
  c.ambient_ = ambient;
  c.v_ = canonical_v(ambient, lineality, rays);
  c.v_canonical_ = true;
  return c;
}

Cone Cone::full_space(int ambient) {
  return from_inequalities(ambient, std::vector<IntVec>{},
                           std::vector<IntVec>{});
}

Cone Cone::zero_cone(int ambient) {
  std::vector<IntVec> eqs;
  for (int i = 0; i < ambient; ++i) {
    IntVec e(ambient, 0);
    e[i] = 1;
    eqs.push_back(std::move(e));
  }
  return from_inequalities(ambient, std::move(eqs), std::vector<IntVec>{});
}

const HRep& Cone::any_h() const {
  if (h_) return *h_;
  materialize_h();
  return *h_;
}

void Cone::materialize_v() const {
  if (v_ && v_canonical_) return;
  if (v_ && !v_canonical_) {
    // raw generators: normalize through the polar
    h_ = canonical_h_from_generators(ambient_, v_->lineality, v_->rays);
    h_canonical_ = true;
    v_.reset();
  }
  if (!h_) {
    v_ = canonical_v(ambient_, {}, {});
    v_canonical_ = true;
    return;
  }
  detail::DDCone dd =
      detail::from_hrep(ambient_, h_->equalities, h_->inequalities);
  v_ = canonical_v(ambient_, dd.lin, dd.rays);
  v_canonical_ = true;
}

void Cone::materialize_h() const {
  if (h_ && h_canonical_) return;
  materialize_v();
  h_ = canonical_h_from_generators(ambient_, v_->lineality, v_->rays);
  h_canonical_ = true;
}

const HRep& Cone::hrep() const {
  materialize_h();
  return *h_;
}

const VRep& Cone::vrep() const {
  materialize_v();
  return *v_;
}

int Cone::dim() const {
  const VRep& v = vrep();
  return static_cast<int>(v.lineality.size()) + rank(v.rays);
}

IntVec Cone::interior_point_int() const {
  const VRep& v = vrep();
  IntVec p(ambient_, 0);
  for (const IntVec& r : v.rays)
    for (int j = 0; j < ambient_; ++j) p[j] += r[j];
  for (const IntVec& l : v.lineality)
    for (int j = 0; j < ambient_; ++j) p[j] += l[j];
  return p;
}

RatVec Cone::relative_interior_point() const {
  IntVec p = interior_point_int();
  RatVec q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i]);
  return q;
}

bool Cone::contains(const IntVec& p) const {
  if (static_cast<int>(p.size()) != ambient_)
    throw std::invalid_argument("contains: length mismatch");
  const HRep& h = any_h();
  for (const IntVec& a : h.equalities)
    if (dot(a, p) != 0) return false;
  for (const IntVec& a : h.inequalities)
    if (dot(a, p) > 0) return false;
  return true;
}

bool Cone::contains(const RatVec& p) const {
  if (static_cast<int>(p.size()) != ambient_)
    throw std::invalid_argument("contains: length mismatch");
  const HRep& h = any_h();
  for (const IntVec& a : h.equalities)
    if (dot(p, a) != 0) return false;
  for (const IntVec& a : h.inequalities)
    if (dot(p, a) > 0) return false;
  return true;
}

std::vector<Cone> Cone::facets() const {
  const HRep& h = hrep();
  std::vector<Cone> out;
  out.reserve(h.inequalities.size());
  for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
    std::vector<IntVec> eqs = h.equalities;
    eqs.push_back(h.inequalities[i]);
    out.push_back(from_inequalities(ambient_, std::move(eqs),
                                    h.inequalities));
  }
  return out;
}

const std::string& Cone::canonical_key() const {
  if (!key_.empty()) return key_;
  const VRep& v = vrep();
  std::string s = "d" + std::to_string(ambient_) + ";L";
  for (const IntVec& l : v.lineality) s += to_string(l);
  s += ";R";
  for (const IntVec& r : v.rays) s += to_string(r);
  key_ = std::move(s);
  return key_;
}

Cone dual_convert(Cone c) {
  c.vrep();
  c.hrep();
  return c;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const HRep& ha = a.any_h();
  const HRep& hb = b.any_h();
  std::vector<IntVec> eqs = ha.equalities;
  eqs.insert(eqs.end(), hb.equalities.begin(), hb.equalities.end());
  std::vector<IntVec> ineqs = ha.inequalities;
  ineqs.insert(ineqs.end(), hb.inequalities.begin(), hb.inequalities.end());
  return Cone::from_inequalities(a.ambient(), std::move(eqs),
                                 std::move(ineqs));
}

bool is_subcone(const Cone& a, const Cone& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("is_subcone: ambient dimension mismatch");
  const VRep& v = a.vrep();
  const HRep& h = b.any_h();
  for (const IntVec& r : v.rays) {
    for (const IntVec& e : h.equalities)
      if (dot(e, r) != 0) return false;
    for (const IntVec& q : h.inequalities)
      if (dot(q, r) > 0) return false;
  }
  for (const IntVec& l : v.lineality) {
    for (const IntVec& e : h.equalities)
      if (dot(e, l) != 0) return false;
    for (const IntVec& q : h.inequalities)
      if (dot(q, l) != 0) return false;
  }
  return true;
}

namespace detail {

std::vector<DDCone> chamber_states(const Cone& support,
                                   const std::vector<IntVec>& normals) {
  const HRep& h = support.hrep();
  std::vector<DDCone> work;
  work.push_back(from_hrep(support.ambient(), h.equalities, h.inequalities));
  for (const IntVec& raw : normals) {
    IntVec n = primitive(raw);
    if (is_zero(n)) continue;
    std::vector<DDCone> next;
    next.reserve(work.size());
    for (DDCone& st : work) {
      bool lin_hit = false;
      for (const IntVec& l : st.lin)
        if (dot(n, l) != 0) {
          lin_hit = true;
          break;
        }
      bool pos = false, neg = false;
      if (!lin_hit) {
        for (const IntVec& r : st.rays) {
          int s = sgn(dot(n, r));
          pos |= s > 0;
          neg |= s < 0;
          if (pos && neg) break;
        }
      }
      if (lin_hit || (pos && neg)) {
        DDCone lo = st;
        lo.cut(n, false);
        DDCone hi = std::move(st);
        hi.cut(negated(n), false);
        next.push_back(std::move(lo));
        next.push_back(std::move(hi));
      } else {
        next.push_back(std::move(st));
      }
    }
    work = std::move(next);
  }
  return work;
}

}  // namespace detail

std::vector<Cone> chambers(const Cone& support,
                           const std::vector<IntVec>& hyperplane_normals) {
  int k = support.dim();
  auto states = detail::chamber_states(support, hyperplane_normals);
  std::vector<Cone> out;
  std::set<std::string> seen;
  for (detail::DDCone& st : states) {
    Cone c = Cone::from_generators_unchecked(support.ambient(),
                                             std::move(st.rays),
                                             std::move(st.lin));
    if (c.dim() != k) continue;
    if (seen.insert(c.canonical_key()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

}  // namespace quiverfan
