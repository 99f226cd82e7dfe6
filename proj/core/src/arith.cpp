#include "quiverfan/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace quiverfan {

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

IntVec to_primitive_integer(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(std::move(out));
}

IntVec negated(IntVec v) {
  for (Int& x : v) x = -x;
  return v;
}

IntVec sign_normalized(IntVec v) {
  for (const Int& x : v) {
    if (x > 0) return v;
    if (x < 0) return negated(std::move(v));
  }
  return v;
}

int lex_compare(const IntVec& a, const IntVec& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

namespace {

std::vector<RatVec> to_rat_rows(const std::vector<IntVec>& rows) {
  std::vector<RatVec> m;
  m.reserve(rows.size());
  for (const IntVec& r : rows) {
    RatVec row(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) row[i] = Rat(r[i]);
    m.push_back(std::move(row));
  }
  return m;
}

// In-place RREF over the rationals. Returns pivot columns.
std::vector<std::size_t> rref_inplace(std::vector<RatVec>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat p = m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] /= p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

std::vector<IntVec> rref_basis(const std::vector<IntVec>& rows) {
  auto m = to_rat_rows(rows);
  rref_inplace(m);
  std::vector<IntVec> out;
  out.reserve(m.size());
  for (const RatVec& r : m) out.push_back(to_primitive_integer(r));
  return out;
}

int rank(const std::vector<IntVec>& rows) {
  auto m = to_rat_rows(rows);
  return static_cast<int>(rref_inplace(m).size());
}

IntVec reduce_mod(const IntVec& v, const std::vector<IntVec>& rref) {
  RatVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = Rat(v[i]);
  for (const IntVec& row : rref) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    Rat f = w[p] / Rat(row[p]);
    if (f == 0) continue;
    for (std::size_t j = p; j < w.size(); ++j) w[j] -= f * Rat(row[j]);
  }
  return to_primitive_integer(w);
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  s += ")";
  return s;
}

}  // namespace quiverfan
