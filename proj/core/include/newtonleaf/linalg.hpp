#pragma once

#include <optional>
#include <vector>

#include "newtonleaf/matrix.hpp"

namespace newtonleaf {

// left * a * right = diag(diagonal) padded with zeros; left, right unimodular.
// Nonzero diagonal entries are positive and each divides the next.
struct SmithForm {
  IntVector diagonal;
  IntMatrix left;
  IntMatrix right;
};
SmithForm smith_normal_form(const IntMatrix& a);

// Upper-triangular basis of the lattice spanned by the columns of `generators`
// (which must have full row rank).  Positive diagonal; entries right of a pivot
// reduced into [0, pivot).
IntMatrix column_hermite_form(const IntMatrix& generators);

// Whether v lies in the Z-span of the columns of an upper triangular basis.
bool in_triangular_lattice(const IntMatrix& basis, const IntVector& v);

std::size_t rank(const RatMatrix& a);
Rational determinant(const RatMatrix& a);
Integer determinant(const IntMatrix& a);
std::optional<RatMatrix> inverse(const RatMatrix& a);
// Throws SingularInput.
RatMatrix inverse_or_throw(const RatMatrix& a);
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);
// Basis of the right kernel, as columns.
RatMatrix kernel(const RatMatrix& a);

// Monic characteristic polynomial det(xI - a); coefficient k multiplies x^k.
std::vector<Rational> characteristic_polynomial(const RatMatrix& a);

// Exponents of the elementary divisors over Z_(p), sorted decreasing.
// The matrix must be square and invertible.
std::vector<long long> padic_elementary_exponents(const RatMatrix& a, const Integer& p);

// Pivot columns of the reduction mod p, in order (their count is the rank over F_p).
std::vector<std::size_t> pivot_columns_mod_p(const IntMatrix& a, const Integer& p);
std::size_t rank_mod_p(const IntMatrix& a, const Integer& p);

// Least valuation among entries (nullopt for the zero matrix).
std::optional<long long> min_valuation(const RatMatrix& a, const Integer& p);

}  // namespace newtonleaf
