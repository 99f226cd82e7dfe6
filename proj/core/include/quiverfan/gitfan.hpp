#pragma once

#include <cstddef>
#include <vector>

#include "quiverfan/cone.hpp"
#include "quiverfan/schofield.hpp"
#include "quiverfan/walls.hpp"

namespace quiverfan {

struct FanCone {
  int dim = 0;
  std::vector<int> ray_indices;  // into Fan::rays, sorted
  Cone cone;
};

/// Polyhedral fan: cones closed under faces, with support Sigma(d). The
/// minimal cone is the common lineality space; the first f-vector entry
/// counts it (1), later entries count cones of each dimension up to the
/// support dimension.
struct Fan {
  int ambient = 0;
  std::vector<IntVec> rays;       // sorted primitive, reduced mod lineality
  std::vector<IntVec> lineality;  // canonical basis of the minimal cone
  std::vector<FanCone> cones;     // sorted by (dim, ray_indices)
  std::vector<long long> f_vector;
};

struct GitFanStats {
  std::size_t hyperplanes = 0;
  std::size_t chambers = 0;
  std::size_t merges = 0;
};

Fan git_fan(SchofieldCache& cache, const DimVector& d,
            GitFanStats* stats = nullptr);
Fan git_fan(const Quiver& q, const DimVector& d);

std::vector<long long> fan_f_vector(const Fan& fan);

/// Index of the unique fan cone containing theta in its relative interior.
int locate(const Fan& fan, const StabParam& theta);

/// Cor of the wall description: theta and eta are GIT equivalent iff the
/// segment [theta, eta] meets every wall in nothing, a point of itself only
/// when contained, i.e. never in a proper nonempty sub-interval.
bool git_equivalent(SchofieldCache& cache, const DimVector& d,
                    const StabParam& theta, const StabParam& eta);
bool git_equivalent(const Quiver& q, const DimVector& d,
                    const StabParam& theta, const StabParam& eta);

/// Sigma(d) spans C(d) and every wall spans a proper subspace.
bool has_geometric_phase(SchofieldCache& cache, const DimVector& d);
bool has_geometric_phase(const Quiver& q, const DimVector& d);

}  // namespace quiverfan
