#pragma once

#include <vector>

#include "quiverfan/cone.hpp"
#include "quiverfan/schofield.hpp"

namespace quiverfan {

/// C_e = {theta in C(d) | theta.e' <= 0 for e' generic in e, and
/// theta.(f'+e) <= 0 for proper f' generic in d-e}.
Cone cone_C_e(SchofieldCache& cache, const DimVector& d, const DimVector& e);
Cone cone_C_e(const Quiver& q, const DimVector& d, const DimVector& e);

/// Special subdimension vectors of (Q, d): empty unless d is a Schur root;
/// otherwise the non-generic nonzero proper e <= d whose cone C_e is not
/// contained in any of its defining hyperplanes. Graded-lex sorted.
std::vector<DimVector> special_subdims(SchofieldCache& cache,
                                       const DimVector& d);
std::vector<DimVector> special_subdims(const Quiver& q, const DimVector& d);

}  // namespace quiverfan
