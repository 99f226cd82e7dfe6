#pragma once

#include <array>
#include <compare>
#include <vector>

#include "quiverfan/arith.hpp"

namespace quiverfan {

/// Dimension vector: one nonnegative integer per vertex.
struct DimVector {
  std::vector<int> coords;

  DimVector() = default;
  explicit DimVector(std::vector<int> c) : coords(std::move(c)) {}
  DimVector(std::initializer_list<int> c) : coords(c) {}

  int size() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  long grade() const;  // coordinate sum
  int gcd() const;     // 0 for the zero vector
  bool indivisible() const { return gcd() == 1; }
  IntVec as_ints() const;

  auto operator<=>(const DimVector&) const = default;
};

bool leq(const DimVector& e, const DimVector& d);  // componentwise
DimVector operator+(const DimVector& a, const DimVector& b);
DimVector operator-(const DimVector& a, const DimVector& b);
DimVector operator*(int k, const DimVector& a);

/// (grade, lex) order; ties broken left-to-right on coordinates.
bool graded_lex_less(const DimVector& a, const DimVector& b);

/// All e with 0 <= e_i <= d_i, optionally excluding d (proper) and 0
/// (nonzero), in graded lexicographic order.
std::vector<DimVector> subdim_vectors(const DimVector& d, bool proper,
                                      bool nonzero);

/// Stability parameter: one exact rational per vertex.
struct StabParam {
  RatVec coords;

  StabParam() = default;
  explicit StabParam(RatVec c) : coords(std::move(c)) {}
  StabParam(std::initializer_list<Rat> c) : coords(c) {}

  int size() const { return static_cast<int>(coords.size()); }
};

/// theta(e) = theta . e
Rat pair(const StabParam& theta, const DimVector& e);

/// Quiver on n vertices; parallel arrows are aggregated into an n x n
/// multiplicity matrix, entry (i,j) = number of arrows i -> j. Loops and
/// oriented cycles are allowed.
class Quiver {
 public:
  /// Arrows given as (source, target, multiplicity) with 0-based vertices;
  /// repeated (source, target) pairs accumulate.
  Quiver(int vertex_count, const std::vector<std::array<int, 3>>& arrows);

  int vertex_count() const { return n_; }
  const std::vector<std::vector<long>>& arrow_matrix() const { return a_; }

  /// Euler form <x,y> = sum_i x_i y_i - sum_{arrows a} x_{s(a)} y_{t(a)}.
  Int euler(const IntVec& x, const IntVec& y) const;
  Int euler(const DimVector& x, const DimVector& y) const;

  /// theta_d with theta_d(f) = <d,f> - <f,d>; satisfies theta_d(d) = 0.
  StabParam canonical_stability(const DimVector& d) const;

 private:
  int n_ = 0;
  std::vector<std::vector<long>> a_;
};

}  // namespace quiverfan
