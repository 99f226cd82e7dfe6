#pragma once

#include <map>
#include <vector>

#include "quiverfan/quiver.hpp"

namespace quiverfan {

/// Memoized generic-subdimension recursion for one quiver: e is a generic
/// subdimension vector of d iff <f, d-e> >= 0 for every generic subdimension
/// vector f of e. The table is filled bottom-up in graded-lex order and is
/// shared by the wall, fan and special-subdimension computations. Confine
/// each instance to a single thread.
class SchofieldCache {
 public:
  explicit SchofieldCache(Quiver q) : q_(std::move(q)) {}

  const Quiver& quiver() const { return q_; }

  /// {e <= d : e generic}, graded-lex sorted; always contains 0 and d.
  const std::vector<DimVector>& generic_subdims(const DimVector& d);

  bool is_generic_subdim(const DimVector& e, const DimVector& d);

  /// ext(d, e) = max over d' generic in d of -<d', e>; always >= 0.
  Int ext_generic(const DimVector& d, const DimVector& e);

  /// <d,e> - <e,d> < 0 for every proper nonzero generic e in d.
  bool is_schur_root(const DimVector& d);

 private:
  Quiver q_;
  std::map<DimVector, std::vector<DimVector>> memo_;
};

std::vector<DimVector> generic_subdims(const Quiver& q, const DimVector& d);
bool is_generic_subdim(const Quiver& q, const DimVector& e,
                       const DimVector& d);
Int ext_generic(const Quiver& q, const DimVector& d, const DimVector& e);
bool is_schur_root(const Quiver& q, const DimVector& d);

}  // namespace quiverfan
