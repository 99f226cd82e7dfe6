#include "quiverfan/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quiverfan {

bool DimVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](int x) { return x == 0; });
}

long DimVector::grade() const {
  return std::accumulate(coords.begin(), coords.end(), 0L);
}

int DimVector::gcd() const {
  int g = 0;
  for (int x : coords) g = std::gcd(g, x);
  return g;
}

IntVec DimVector::as_ints() const {
  IntVec v(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) v[i] = coords[i];
  return v;
}

bool leq(const DimVector& e, const DimVector& d) {
  if (e.size() != d.size()) throw std::invalid_argument("leq: length mismatch");
  for (int i = 0; i < e.size(); ++i)
    if (e.coords[i] > d.coords[i]) return false;
  return true;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("DimVector +: length mismatch");
  DimVector c = a;
  for (int i = 0; i < b.size(); ++i) c.coords[i] += b.coords[i];
  return c;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("DimVector -: length mismatch");
  DimVector c = a;
  for (int i = 0; i < b.size(); ++i) c.coords[i] -= b.coords[i];
  return c;
}

DimVector operator*(int k, const DimVector& a) {
  DimVector c = a;
  for (int& x : c.coords) x *= k;
  return c;
}

bool graded_lex_less(const DimVector& a, const DimVector& b) {
  long ga = a.grade(), gb = b.grade();
  if (ga != gb) return ga < gb;
  return a.coords < b.coords;
}

std::vector<DimVector> subdim_vectors(const DimVector& d, bool proper,
                                      bool nonzero) {
  std::vector<DimVector> out;
  DimVector e;
  e.coords.assign(d.coords.size(), 0);
  // odometer in lex order, first coordinate most significant
  while (true) {
    bool skip = (nonzero && e.is_zero()) || (proper && e == d);
    if (!skip) out.push_back(e);
    int i = e.size() - 1;
    while (i >= 0 && e.coords[i] == d.coords[i]) {
      e.coords[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++e.coords[i];
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const DimVector& a, const DimVector& b) {
                     return a.grade() < b.grade();
                   });
  return out;
}

Rat pair(const StabParam& theta, const DimVector& e) {
  if (theta.size() != e.size())
    throw std::invalid_argument("pair: length mismatch");
  return dot(theta.coords, e.as_ints());
}

Quiver::Quiver(int vertex_count,
               const std::vector<std::array<int, 3>>& arrows)
    : n_(vertex_count) {
  if (n_ < 1) throw std::invalid_argument("Quiver: vertex count must be >= 1");
  a_.assign(n_, std::vector<long>(n_, 0));
  for (const auto& [s, t, m] : arrows) {
    if (s < 0 || s >= n_ || t < 0 || t >= n_)
      throw std::invalid_argument("Quiver: arrow endpoint out of range");
    if (m < 1) throw std::invalid_argument("Quiver: multiplicity must be >= 1");
    a_[s][t] += m;
  }
}

Int Quiver::euler(const IntVec& x, const IntVec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw std::invalid_argument("euler: length mismatch");
  // <x,y> = x . w with w = (I - A) y
  Int total = 0;
  for (int i = 0; i < n_; ++i) {
    Int w = y[i];
    for (int j = 0; j < n_; ++j)
      if (a_[i][j] != 0) w -= a_[i][j] * y[j];
    total += x[i] * w;
  }
  return total;
}

Int Quiver::euler(const DimVector& x, const DimVector& y) const {
  return euler(x.as_ints(), y.as_ints());
}

StabParam Quiver::canonical_stability(const DimVector& d) const {
  if (d.size() != n_)
    throw std::invalid_argument("canonical_stability: length mismatch");
  if (d.is_zero())
    throw std::invalid_argument("canonical_stability: d must be nonzero");
  // theta_i = <d,u_i> - <u_i,d> = sum_j (A_ij - A_ji) d_j
  RatVec theta(n_);
  for (int i = 0; i < n_; ++i) {
    Int t = 0;
    for (int j = 0; j < n_; ++j) t += Int(a_[i][j] - a_[j][i]) * d.coords[j];
    theta[i] = Rat(t);
  }
  return StabParam(std::move(theta));
}

}  // namespace quiverfan
