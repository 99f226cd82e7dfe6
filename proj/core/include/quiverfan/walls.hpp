#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "quiverfan/cone.hpp"
#include "quiverfan/schofield.hpp"

namespace quiverfan {

/// Walls of (Q, d), one entry per unordered pair {e, d-e}; the stored key is
/// the lex-smaller of the two. Entries are graded-lex sorted by key and
/// every wall lies in the stability space of d.
struct WallTable {
  DimVector d;
  int ambient = 0;
  std::vector<std::pair<DimVector, Cone>> entries;

  const Cone* find(const DimVector& key) const;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// C(d) = {theta | theta.d = 0}.
Cone stability_space(const Quiver& q, const DimVector& d);

/// Sigma(d): theta.d = 0 and theta.e <= 0 for every generic e in d.
Cone sst_cone(SchofieldCache& cache, const DimVector& d);
Cone sst_cone(const Quiver& q, const DimVector& d);

/// H_e = {theta | theta.d = 0, theta.e = 0}.
Cone hyperplane_H(const Quiver& q, const DimVector& d, const DimVector& e);

/// W_e = Sigma(e) n Sigma(d-e), in the full ambient space.
Cone wall(SchofieldCache& cache, const DimVector& d, const DimVector& e);
Cone wall(const Quiver& q, const DimVector& d, const DimVector& e);

WallTable all_walls(SchofieldCache& cache, const DimVector& d,
                    const ProgressFn& progress = {});
WallTable all_walls(const Quiver& q, const DimVector& d);

/// The walls W_{ke}, k >= 1, ke <= d, ke != d, of dimension dim Sigma(d)-1;
/// e must be indivisible. May be empty.
std::vector<Cone> wall_bar(SchofieldCache& cache, const DimVector& d,
                           const DimVector& e);

/// theta lies in W_e for some nonzero proper e <= d. Requires theta.d = 0.
bool has_strictly_semistables(SchofieldCache& cache, const DimVector& d,
                              const StabParam& theta);
bool has_strictly_semistables(const WallTable& walls, const StabParam& theta);

}  // namespace quiverfan
