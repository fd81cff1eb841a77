#include "newtonleaf/newton.hpp"

#include "newtonleaf/errors.hpp"

namespace newtonleaf {

LeafReport leaf_report(const ExtendedAffineElement& x, const FrobeniusAction& sigma) {
  const RootDatum& d = x.datum();
  NewtonPoint nu = newton_point(x, sigma);
  LeafReport r{x, nu.dominant, kottwitz_sigma(x, sigma), false, 0, 0, {}, false, sigma.name()};

  Rational closed = d.pair(d.two_rho(), nu.dominant);
  if (!is_integral(closed)) throw ConsistencyError("<2rho, nu> is not integral: " + to_string(closed));
  r.leaf_dim = to_long(numerator_of(closed));

  long long centralizer = static_cast<long long>(d.rank());
  for (const auto& a : d.roots())
    if (d.pair(a, nu.dominant) == 0) ++centralizer;
  r.jb_dim = centralizer;
  r.basic = centralizer == static_cast<long long>(d.rank() + d.roots().size());

  // Oracle: the positive adjoint slopes of the undominated Newton point.
  r.adjoint_slopes = slopes_via_weights(d, WeightedRep::adjoint(d), nu.vector);
  Rational positive = 0;
  for (const auto& s : r.adjoint_slopes)
    if (s > 0) positive += s;
  r.checked = positive == closed && nonneg_slope_dim(d, nu.dominant) == numerator_of(closed);
  if (!r.checked)
    throw ConsistencyError("leaf dimension " + to_string(closed) + " disagrees with adjoint slope count " +
                           to_string(positive));
  if (r.basic != (r.leaf_dim == 0)) throw ConsistencyError("basic flag disagrees with the leaf dimension");
  return r;
}

LeafReport leaf_report(const ExtendedAffineElement& x) {
  return leaf_report(x, FrobeniusAction::trivial(x.datum_ptr()));
}

RatVector sigma_average(const FrobeniusAction& sigma, const IntVector& mu) {
  RatVector total(mu.size(), Rational(0));
  IntVector cur = mu;
  for (int i = 0; i < sigma.order(); ++i) {
    total = add(total, to_rationals(cur));
    cur = sigma.apply(cur);
  }
  for (auto& c : total) c /= sigma.order();
  return total;
}

bool neutral_acceptable(const ExtendedAffineElement& x, const IntVector& mu, const FrobeniusAction& sigma) {
  const RootDatum& d = x.datum();
  if (!d.in_lattice(mu)) throw PreconditionError("mu is not a cocharacter of " + d.name());
  if (!d.is_dominant(to_rationals(mu))) throw PreconditionError("mu must be dominant");
  const auto mu_elt = ExtendedAffineElement::translation(x.datum_ptr(), mu);
  if (kottwitz_sigma(x, sigma) != kottwitz_sigma(mu_elt, sigma)) return false;
  return dominance_leq(d, newton_point(x, sigma).dominant, sigma_average(sigma, mu));
}

bool neutral_acceptable(const ExtendedAffineElement& x, const IntVector& mu) {
  return neutral_acceptable(x, mu, FrobeniusAction::trivial(x.datum_ptr()));
}

namespace {

DimensionCheck compare(const RootDatum& d, const ExtendedAffineElement& x, const RatVector& nu) {
  DimensionCheck c{x, nu, d.pair(d.two_rho(), nu), 0, false};
  for (auto a : d.positive_indices()) c.root_sum_side += d.pair(d.roots()[a], nu);
  c.pass = c.two_rho_side == c.root_sum_side && is_integral(c.two_rho_side);
  return c;
}

}  // namespace

DimensionCheck check_newton_vector(const DatumPtr& d, const RatVector& nu_dominant) {
  if (!d->is_dominant(nu_dominant)) throw PreconditionError("Newton vector must be dominant");
  return compare(*d, ExtendedAffineElement::identity(d), nu_dominant);
}

DimensionCheckReport cross_check_dimension(const std::vector<ExtendedAffineElement>& sample) {
  DimensionCheckReport out;
  for (const auto& x : sample) {
    out.rows.push_back(compare(x.datum(), x, newton_point(x).dominant));
    out.all_pass = out.all_pass && out.rows.back().pass;
  }
  return out;
}

}  // namespace newtonleaf
