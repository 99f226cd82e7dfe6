#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace quiverfan {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);

bool is_zero(const IntVec& v);

/// gcd of the absolute values of the entries; 0 for the zero vector.
Int content(const IntVec& v);

/// Divide by the content. Direction preserved; the zero vector is unchanged.
IntVec primitive(IntVec v);

/// Clear denominators and reduce to a primitive integer vector.
/// Only positive scaling is applied, so the direction is preserved.
IntVec to_primitive_integer(const RatVec& v);

IntVec negated(IntVec v);

/// Flip the sign so the first nonzero entry is positive (for line directions
/// and equality normals, where orientation carries no meaning).
IntVec sign_normalized(IntVec v);

int lex_compare(const IntVec& a, const IntVec& b);

struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return lex_compare(a, b) < 0;
  }
};

/// Reduced row echelon basis of the row span: primitive integer rows with a
/// positive pivot, fully reduced, ordered by pivot column. Canonical for the
/// span: two row sets span the same subspace iff their bases are equal.
std::vector<IntVec> rref_basis(const std::vector<IntVec>& rows);

int rank(const std::vector<IntVec>& rows);

/// Eliminate the pivot coordinates of v against an rref basis, then rescale
/// to a primitive integer vector by a positive factor.
IntVec reduce_mod(const IntVec& v, const std::vector<IntVec>& rref);

std::string to_string(const IntVec& v);

}  // namespace quiverfan
