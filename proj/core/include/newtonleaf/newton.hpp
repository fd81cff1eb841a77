#pragma once

#include <string>
#include <vector>

#include "newtonleaf/affine_weyl.hpp"
#include "newtonleaf/isocrystal.hpp"

namespace newtonleaf {

struct LeafReport {
  ExtendedAffineElement element;
  RatVector nu_dominant;
  CoinvariantClass kappa;
  bool basic = false;
  long long leaf_dim = 0;
  long long jb_dim = 0;
  SlopeMultiset adjoint_slopes;
  bool checked = false;
  std::string sigma = "trivial";  // name of the Frobenius action used
};

// Throws ConsistencyError when the closed formula and the adjoint slope count
// disagree; a report is never returned unchecked.
LeafReport leaf_report(const ExtendedAffineElement& x, const FrobeniusAction& sigma);
LeafReport leaf_report(const ExtendedAffineElement& x);

// Kottwitz class matches t^mu and nu is dominated by the sigma-orbit average of mu.
bool neutral_acceptable(const ExtendedAffineElement& x, const IntVector& mu, const FrobeniusAction& sigma);
bool neutral_acceptable(const ExtendedAffineElement& x, const IntVector& mu);
RatVector sigma_average(const FrobeniusAction& sigma, const IntVector& mu);

struct DimensionCheck {
  ExtendedAffineElement element;
  RatVector nu_dominant;
  Rational two_rho_side;
  Rational root_sum_side;
  bool pass = false;
};

struct DimensionCheckReport {
  std::vector<DimensionCheck> rows;
  bool all_pass = true;
};

// <2 rho, nu> against the sum over positive roots, element by element.
DimensionCheckReport cross_check_dimension(const std::vector<ExtendedAffineElement>& sample);
DimensionCheck check_newton_vector(const DatumPtr& d, const RatVector& nu_dominant);

}  // namespace newtonleaf
