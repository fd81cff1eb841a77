#pragma once

#include <set>
#include <vector>

#include "newtonleaf/affine_weyl.hpp"
#include "newtonleaf/isocrystal.hpp"

// Brute-force reference implementations used only by the tests.  None of them
// share code paths with the library routine they check.
namespace oracle {

using namespace newtonleaf;

// Permutation pi of {0..n-1} with w e_j = e_{pi(j)} (GL_n only).
std::vector<std::size_t> weyl_permutation(const RootDatum& d, std::size_t w);
std::size_t weyl_from_permutation(const RootDatum& d, const std::vector<std::size_t>& pi);

// Inversions of the affine permutation f(i) = pi(i) + n lambda_{pi(i)}.
long long affine_permutation_length(const IntVector& lambda, const std::vector<std::size_t>& pi);

// Every subword of one reduced word of y (greedy descent).
std::set<ExtendedAffineElement> lower_set_by_subwords(const ExtendedAffineElement& y);

// {x <= t^{w mu}} by expanding one reduced word of each t^{w mu} and taking
// every subword.
std::set<ExtendedAffineElement> admissible_by_subwords(const DatumPtr& d, const IntVector& mu);

// Subgroups of (Z/p^k)^n, counted by closing under one generator at a time.
std::size_t subgroup_count(std::size_t n, long long p, int k);

// 2x2 integral matrix: is there a pair of lines, invariant modulo p^precision,
// that are transverse modulo p?
bool splits_by_line_search(const IntMatrix& m, long long p, int precision);

// Sum over i<j of s_i - s_j for the slopes sorted decreasingly.
Rational gl_leaf_dimension(SlopeMultiset slopes);

// Eigenvalue valuations of a diagonalizable monomial datum, read from the
// cycles by hand (sum of exponents over cycle length, repeated).
SlopeMultiset cycle_slopes(const MonomialIsocrystal& m);

}  // namespace oracle
