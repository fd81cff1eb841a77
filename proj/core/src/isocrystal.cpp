#include "newtonleaf/isocrystal.hpp"

#include <algorithm>
#include <numeric>

#include "newtonleaf/errors.hpp"
#include "newtonleaf/linalg.hpp"

namespace newtonleaf {

void MonomialIsocrystal::validate() const {
  const std::size_t n = permutation.size();
  if (exponents.size() != n) throw ConfigurationError("monomial datum: exponent count differs from size");
  if (!signs.empty() && signs.size() != n) throw ConfigurationError("monomial datum: sign count differs from size");
  for (int s : signs)
    if (s != 1 && s != -1) throw ConfigurationError("monomial datum: signs must be +1 or -1");
  if (frobenius_power < 1) throw ConfigurationError("monomial datum: Frobenius power must be positive");
  std::vector<bool> seen(n, false);
  for (auto r : permutation) {
    if (r >= n || seen[r]) throw ConfigurationError("monomial datum: not a permutation");
    seen[r] = true;
  }
}

RatMatrix MonomialIsocrystal::matrix(const Integer& p) const {
  validate();
  const std::size_t n = size();
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(permutation[j], j) = Rational(sign(j)) * rpow(Rational(p), to_long(exponents[j]));
  return m;
}

MonomialIsocrystal MonomialIsocrystal::diagonal(IntVector exps, int frobenius_power) {
  MonomialIsocrystal m;
  m.permutation.resize(exps.size());
  std::iota(m.permutation.begin(), m.permutation.end(), std::size_t{0});
  m.exponents = std::move(exps);
  m.frobenius_power = frobenius_power;
  return m;
}

MonomialIsocrystal MonomialIsocrystal::identity(std::size_t n) { return diagonal(IntVector(n, Integer(0))); }

bool MonomialIsocrystal::operator==(const MonomialIsocrystal& o) const {
  if (permutation != o.permutation || exponents != o.exponents || frobenius_power != o.frobenius_power) return false;
  for (std::size_t j = 0; j < size(); ++j)
    if (sign(j) != o.sign(j)) return false;
  return true;
}

MonomialIsocrystal monomial_product(const MonomialIsocrystal& a, const MonomialIsocrystal& b) {
  if (a.size() != b.size()) throw MismatchError("monomial product: size mismatch");
  const std::size_t n = a.size();
  MonomialIsocrystal c;
  c.permutation.resize(n);
  c.exponents.resize(n);
  c.signs.resize(n);
  c.frobenius_power = a.frobenius_power;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t mid = b.permutation[j];
    c.permutation[j] = a.permutation[mid];
    c.exponents[j] = b.exponents[j] + a.exponents[mid];
    c.signs[j] = b.sign(j) * a.sign(mid);
  }
  return c;
}

MonomialIsocrystal monomial_power(const MonomialIsocrystal& a, std::uint64_t k) {
  MonomialIsocrystal result = MonomialIsocrystal::identity(a.size());
  result.frobenius_power = a.frobenius_power;
  MonomialIsocrystal base = a;
  while (k) {
    if (k & 1) result = monomial_product(result, base);
    k >>= 1;
    if (k) base = monomial_product(base, base);
  }
  return result;
}

MonomialIsocrystal tensor_product(const MonomialIsocrystal& a, const MonomialIsocrystal& b) {
  if (a.frobenius_power != b.frobenius_power) throw MismatchError("tensor product: different Frobenius powers");
  const std::size_t na = a.size(), nb = b.size();
  MonomialIsocrystal c;
  c.frobenius_power = a.frobenius_power;
  c.permutation.resize(na * nb);
  c.exponents.resize(na * nb);
  c.signs.resize(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t k = i * nb + j;
      c.permutation[k] = a.permutation[i] * nb + b.permutation[j];
      c.exponents[k] = a.exponents[i] + b.exponents[j];
      c.signs[k] = a.sign(i) * b.sign(j);
    }
  return c;
}

RationalIsocrystal restriction_of_scalars(const MonomialIsocrystal& m, const Integer& p) {
  m.validate();
  const std::size_t n = m.size();
  const std::size_t r = static_cast<std::size_t>(m.frobenius_power);
  RatMatrix block = m.matrix(p);
  RatMatrix big(n * r, n * r);
  for (std::size_t b = 0; b + 1 < r; ++b)
    for (std::size_t i = 0; i < n; ++i) big((b + 1) * n + i, b * n + i) = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) big(i, (r - 1) * n + j) = block(i, j);
  return RationalIsocrystal{std::move(big), p};
}

RatVector monomial_slope_vector(const MonomialIsocrystal& m) {
  m.validate();
  const std::size_t n = m.size();
  RatVector out(n);
  std::vector<bool> done(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<std::size_t> cycle;
    Integer sum = 0;
    for (std::size_t j = start; !done[j]; j = m.permutation[j]) {
      done[j] = true;
      cycle.push_back(j);
      sum += m.exponents[j];
    }
    Rational slope(sum, Integer(static_cast<long long>(cycle.size()) * m.frobenius_power));
    for (auto j : cycle) out[j] = slope;
  }
  return out;
}

SlopeMultiset slopes_monomial(const MonomialIsocrystal& m) {
  SlopeMultiset s = monomial_slope_vector(m);
  std::sort(s.begin(), s.end());
  return s;
}

SlopeMultiset newton_polygon_slopes(const std::vector<Rational>& c, const Integer& p) {
  const std::size_t n = c.size() - 1;
  if (c.empty() || c[n] == 0) throw PreconditionError("Newton polygon needs a nonzero leading coefficient");
  if (c[0] == 0) throw SingularInput("zero constant term: the matrix is not invertible");
  struct Pt {
    long long x;
    long long y;
  };
  std::vector<Pt> hull;
  for (std::size_t k = 0; k <= n; ++k) {
    if (c[k] == 0) continue;
    Pt q{static_cast<long long>(k), valuation(c[k], p)};
    // Lower hull: drop the last point while it lies on or above the chord.
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      Integer cross = Integer(b.x - a.x) * (q.y - a.y) - Integer(b.y - a.y) * (q.x - a.x);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }
  SlopeMultiset out;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const long long dx = hull[i + 1].x - hull[i].x;
    const Rational slope(Integer(hull[i].y - hull[i + 1].y), Integer(dx));
    for (long long t = 0; t < dx; ++t) out.push_back(slope);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SlopeMultiset slopes_charpoly(const RationalIsocrystal& m) {
  if (!m.matrix.is_square()) throw MismatchError("isocrystal matrix is not square");
  return newton_polygon_slopes(characteristic_polynomial(m.matrix), m.prime);
}

WeightedRep WeightedRep::standard(const RootDatum& d) {
  if (!d.standard_rep()) throw UnsupportedOperation("no standard representation for " + d.name());
  return WeightedRep{"standard", d.standard_rep()->weights};
}

WeightedRep WeightedRep::adjoint(const RootDatum& d) {
  WeightedRep r{"adjoint", {}};
  for (std::size_t i = 0; i < d.rank(); ++i) r.weights.emplace_back(d.cochar_rank(), Integer(0));
  for (const auto& a : d.roots()) r.weights.push_back(a);
  return r;
}

WeightedRep WeightedRep::tensor_power(const WeightedRep& rep, int k) {
  if (k < 1) throw ConfigurationError("tensor power must be positive");
  WeightedRep out{"tensor(" + std::to_string(k) + ")", rep.weights};
  for (int i = 1; i < k; ++i) {
    std::vector<IntVector> next;
    for (const auto& a : out.weights)
      for (const auto& b : rep.weights) next.push_back(add(a, b));
    out.weights = std::move(next);
  }
  return out;
}

WeightedRep WeightedRep::hom(const WeightedRep& from, const WeightedRep& to) {
  WeightedRep out{"hom", {}};
  for (const auto& a : from.weights)
    for (const auto& b : to.weights) out.weights.push_back(sub(b, a));
  return out;
}

SlopeMultiset slopes_via_weights(const RootDatum& d, const WeightedRep& rep, const RatVector& nu) {
  if (nu.size() != d.cochar_rank()) throw MismatchError("Newton point has the wrong length");
  SlopeMultiset out;
  for (const auto& chi : rep.weights) {
    if (chi.size() != d.cochar_rank()) throw MismatchError("weight has the wrong length");
    out.push_back(d.pair(chi, nu));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer nonneg_slope_dim(const RootDatum& d, const RatVector& nu_dom) {
  if (!d.is_dominant(nu_dom)) throw PreconditionError("nonneg_slope_dim needs a dominant Newton point");
  Rational total = 0;
  for (auto a : d.positive_indices()) total += d.pair(d.roots()[a], nu_dom);
  if (!is_integral(total)) throw ConsistencyError("sum of positive pairings is not integral: " + to_string(total));
  return numerator_of(total);
}

std::string format_slopes(const SlopeMultiset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + to_string(s[i]);
  return out;
}

SlopeMultiset parse_slopes(const std::string& text) {
  SlopeMultiset out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, end == std::string::npos ? std::string::npos : end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SlopeMultiset repeat_slopes(const SlopeMultiset& s, int k) {
  SlopeMultiset out;
  for (const auto& x : s)
    for (int i = 0; i < k; ++i) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace newtonleaf
