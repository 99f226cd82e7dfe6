#pragma once

#include <cstdint>
#include <vector>

#include "quiverfan/arith.hpp"

namespace quiverfan::detail {

/// Set of constraint ordinals tight at a ray. Grows on demand; absent words
/// read as zero.
struct TightSet {
  std::vector<std::uint64_t> words;

  void set(std::size_t bit) {
    std::size_t k = bit >> 6;
    if (k >= words.size()) words.resize(k + 1, 0);
    words[k] |= std::uint64_t(1) << (bit & 63);
  }

  bool test(std::size_t bit) const {
    std::size_t k = bit >> 6;
    if (k >= words.size()) return false;
    return (words[k] >> (bit & 63)) & 1;
  }

  /// (a & b) subset of c, allocation-free.
  static bool meet_subset(const TightSet& a, const TightSet& b,
                          const TightSet& c) {
    std::size_t n = std::min(a.words.size(), b.words.size());
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t m = a.words[k] & b.words[k];
      std::uint64_t cw = k < c.words.size() ? c.words[k] : 0;
      if (m & ~cw) return false;
    }
    return true;
  }

  static TightSet meet(const TightSet& a, const TightSet& b) {
    TightSet r;
    r.words.resize(std::min(a.words.size(), b.words.size()));
    for (std::size_t k = 0; k < r.words.size(); ++k)
      r.words[k] = a.words[k] & b.words[k];
    return r;
  }
};

/// Double description state: the cone span(lin) + cone(rays) cut by the
/// recorded constraints. Invariants maintained by cut():
///   - every constraint vanishes on every lineality vector;
///   - rays are primitive and extreme modulo the lineality space;
///   - tight[i] records which inequalities are tight at rays[i].
struct DDCone {
  int ambient = 0;
  std::vector<IntVec> eqs;
  std::vector<IntVec> ineqs;  // tight-bit ordinal = index here
  std::vector<IntVec> lin;
  std::vector<IntVec> rays;
  std::vector<TightSet> tight;  // parallel to rays

  static DDCone make_full(int ambient);

  /// Intersect with {a.x = 0} (equality) or {a.x <= 0}.
  void cut(IntVec a, bool equality);
};

DDCone from_hrep(int ambient, const std::vector<IntVec>& eqs,
                 const std::vector<IntVec>& ineqs);

}  // namespace quiverfan::detail

namespace quiverfan {
class Cone;
}

namespace quiverfan::detail {

/// Incremental sign-vector chamber enumeration; every returned state is a
/// full-dimensional closed piece of the support.
std::vector<DDCone> chamber_states(const Cone& support,
                                   const std::vector<IntVec>& normals);

}  // namespace quiverfan::detail
