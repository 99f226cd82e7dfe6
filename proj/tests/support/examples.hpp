#pragma once

// Shared fixtures: the quivers and dimension vectors used across the test
// suites, plus independent oracles kept deliberately separate from the
// library's own code paths.

#include <vector>

#include "quiverfan/quiver.hpp"
#include "quiverfan/schofield.hpp"

namespace qftest {

using namespace quiverfan;

/// n=2 with 3 parallel arrows 1 -> 2.
inline Quiver kronecker3() { return Quiver(2, {{0, 1, 3}}); }

/// n=2, no arrows.
inline Quiver arrowless2() { return Quiver(2, {}); }

/// 1 <-> 2 <-> 3 (one arrow each way).
inline Quiver ex1_quiver() {
  return Quiver(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}});
}

/// Acyclic 4-vertex quiver: 1->2, 2->3, 3->4, 1->3, 1->4.
inline Quiver cycle_quiver() {
  return Quiver(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 2, 1}, {0, 3, 1}});
}

/// Flag quiver 1 =3=> 2 -> 3.
inline Quiver flag_quiver() { return Quiver(3, {{0, 1, 3}, {1, 2, 1}}); }

/// 1 =2=> 2, 1 =3=> 3.
inline Quiver nonflag_quiver() { return Quiver(3, {{0, 1, 2}, {0, 2, 3}}); }

/// Mutation sequence quivers (cyclic, multiplicities as labeled).
inline Quiver mutation_quiver(int step) {
  switch (step) {
    case 1:
      return Quiver(3, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}});
    case 2:
      return Quiver(3, {{0, 1, 3}, {1, 2, 3}, {2, 0, 6}});
    case 3:
      return Quiver(3, {{0, 1, 6}, {1, 2, 3}, {2, 0, 15}});
    default:
      return Quiver(3, {{0, 1, 15}, {1, 2, 3}, {2, 0, 39}});
  }
}

inline DimVector mutation_d(int step) {
  switch (step) {
    case 1:
      return DimVector{1, 1, 1};
    case 2:
      return DimVector{1, 2, 1};
    case 3:
      return DimVector{1, 5, 2};
    default:
      return DimVector{1, 13, 5};
  }
}

/// 6-subspace quiver: vertices 1..6 each with one arrow into vertex 7.
inline Quiver segre_quiver() {
  std::vector<std::array<int, 3>> arrows;
  for (int i = 0; i < 6; ++i) arrows.push_back({i, 6, 1});
  return Quiver(7, arrows);
}

inline DimVector segre_d() { return DimVector{1, 1, 1, 1, 1, 1, 2}; }

inline StabParam sp(std::vector<long> v) {
  RatVec c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rat(static_cast<long>(v[i]));
  return StabParam(std::move(c));
}

inline IntVec iv(std::vector<long> v) {
  IntVec c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i];
  return c;
}

/// Independent oracle: Euler form as x^T (I - A) y evaluated through an
/// explicit matrix product, no shared code with Quiver::euler.
inline Int oracle_euler(const Quiver& q, const DimVector& x,
                        const DimVector& y) {
  const auto& a = q.arrow_matrix();
  int n = q.vertex_count();
  Int total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int m = (i == j) ? Int(1) : Int(0);
      m -= a[i][j];
      total += Int(x.coords[i]) * m * Int(y.coords[j]);
    }
  return total;
}

/// Independent oracle for generic subdimension vectors: top-down evaluation
/// of the defining recursion (e generic in d iff <f, d-e> >= 0 for every f
/// generic in e; 0 and d are always generic). Memoized locally but shares no
/// code with SchofieldCache.
class GenericOracle {
 public:
  explicit GenericOracle(Quiver q) : q_(std::move(q)) {}

  std::vector<DimVector> generic_subdims(const DimVector& d) {
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
    std::vector<DimVector> out;
    for (const DimVector& e : subdim_vectors(d, false, false)) {
      if (e == d) {
        out.push_back(e);
        continue;
      }
      bool ok = true;
      for (const DimVector& f : generic_subdims(e)) {
        if (q_.euler(f, d - e) < 0) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(e);
    }
    memo_[d] = out;
    return out;
  }

  bool is_generic(const DimVector& e, const DimVector& d) {
    for (const DimVector& g : generic_subdims(d))
      if (g == e) return true;
    return false;
  }

 private:
  Quiver q_;
  std::map<DimVector, std::vector<DimVector>> memo_;
};

}  // namespace qftest
