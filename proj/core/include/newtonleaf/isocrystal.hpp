#pragma once

#include <string>
#include <vector>

#include "newtonleaf/matrix.hpp"
#include "newtonleaf/root_datum.hpp"

namespace newtonleaf {

// Signed monomial matrix: column j holds signs[j] * p^exponents[j] in row
// permutation[j].  `frobenius_power` is the period r of the sigma^r-space.
struct MonomialIsocrystal {
  std::vector<std::size_t> permutation;
  IntVector exponents;
  std::vector<int> signs;  // empty means all +1
  int frobenius_power = 1;

  std::size_t size() const { return permutation.size(); }
  int sign(std::size_t j) const { return signs.empty() ? 1 : signs[j]; }
  void validate() const;
  RatMatrix matrix(const Integer& p) const;

  static MonomialIsocrystal diagonal(IntVector exponents, int frobenius_power = 1);
  static MonomialIsocrystal identity(std::size_t n);
  bool operator==(const MonomialIsocrystal& o) const;
};

MonomialIsocrystal monomial_product(const MonomialIsocrystal& a, const MonomialIsocrystal& b);
MonomialIsocrystal monomial_power(const MonomialIsocrystal& a, std::uint64_t k);
MonomialIsocrystal tensor_product(const MonomialIsocrystal& a, const MonomialIsocrystal& b);

struct RationalIsocrystal {
  RatMatrix matrix;
  Integer prime;
};

// n x n datum of period r -> (nr) x (nr) matrix; sigma becomes a block rotation.
RationalIsocrystal restriction_of_scalars(const MonomialIsocrystal& m, const Integer& p);

using SlopeMultiset = std::vector<Rational>;  // sorted ascending

SlopeMultiset slopes_monomial(const MonomialIsocrystal& m);
// Slope attached to each basis vector (the average over its cycle).
RatVector monomial_slope_vector(const MonomialIsocrystal& m);
SlopeMultiset slopes_charpoly(const RationalIsocrystal& m);
// Newton polygon of sum c_k x^k (c_n = 1, c_0 != 0); slopes are -(segment slope),
// i.e. valuations of the roots.
SlopeMultiset newton_polygon_slopes(const std::vector<Rational>& coefficients, const Integer& p);

struct WeightedRep {
  std::string name;
  std::vector<IntVector> weights;

  std::size_t dimension() const { return weights.size(); }
  static WeightedRep standard(const RootDatum& d);
  static WeightedRep adjoint(const RootDatum& d);
  static WeightedRep tensor_power(const WeightedRep& rep, int k);
  static WeightedRep hom(const WeightedRep& from, const WeightedRep& to);
};

SlopeMultiset slopes_via_weights(const RootDatum& d, const WeightedRep& rep, const RatVector& nu);

// sum over positive roots of <alpha, nu_dom>; ConsistencyError if not integral.
Integer nonneg_slope_dim(const RootDatum& d, const RatVector& nu_dom);

// "-1,0,0,1"
std::string format_slopes(const SlopeMultiset& s);
SlopeMultiset parse_slopes(const std::string& text);

// Each slope repeated k times (restriction-of-scalars bookkeeping).
SlopeMultiset repeat_slopes(const SlopeMultiset& s, int k);

struct SlopeDivisibility {
  bool divisible = false;
  // Monomial: minimal k with (b sigma)^k = p^{k nu} sigma^k.  Rational: lcm of
  // slope denominators.
  int period = 1;
  SlopeMultiset slopes;
  RatVector nu;  // monomial inputs: slope of each basis vector
  // Rational inputs: distinct slopes, their integral projectors (valid modulo
  // p^precision), and the working precision.
  SlopeMultiset piece_slopes;
  std::vector<IntMatrix> projectors;
  long long precision = 0;
};

struct SplittingOptions {
  long long initial_precision = 6;
  long long max_precision = 48;
};

SlopeDivisibility is_completely_slope_divisible(const MonomialIsocrystal& m);
SlopeDivisibility is_completely_slope_divisible(const RationalIsocrystal& m,
                                                const SplittingOptions& opts = {});
// Re-checks a rational certificate: projectors integral, idempotent, summing
// to the identity, commuting with b^period, and cutting out pieces of the
// declared slopes.  Refutations are re-derived at the recorded precision.
bool verify_certificate(const RationalIsocrystal& m, const SlopeDivisibility& cert);

}  // namespace newtonleaf
