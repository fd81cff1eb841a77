#include "newtonleaf/display.hpp"

#include "newtonleaf/errors.hpp"
#include "newtonleaf/linalg.hpp"

namespace newtonleaf {

namespace {

IntMatrix reduce_mod(const RatMatrix& m, const Integer& q) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = mod_floor(numerator_of(m(i, j)) * mod_inverse(denominator_of(m(i, j)), q), q);
  return out;
}

bool p_integral(const RatMatrix& m, const Integer& p) {
  for (const auto& c : m.data())
    if (c != 0 && valuation(c, p) < 0) return false;
  return true;
}

}  // namespace

DisplayDatum display_from_matrix(const RatMatrix& b, const Integer& p, int witt_length) {
  if (!b.is_square()) throw MismatchError("display needs a square matrix");
  if (witt_length < 1) throw ConfigurationError("Witt length must be positive");
  for (const auto& s : slopes_charpoly({b, p}))
    if (s < -1 || s > 0)
      throw NotPDivisibleGroup("slope " + to_string(s) + " outside [-1,0]: no p-divisible group");
  const RatMatrix binv = inverse_or_throw(b);
  if (!p_integral(binv, p)) throw NotPDivisibleGroup("M_1 = (b sigma)^-1 M is not contained in M");
  if (!p_integral(b * Rational(p), p)) throw NotPDivisibleGroup("M_1 does not contain pM");

  DisplayDatum d;
  d.prime = p;
  d.witt_length = witt_length;
  d.rank = b.rows();
  const Integer q = d.modulus();
  d.m1 = reduce_mod(binv, q);
  d.phi = reduce_mod(b * Rational(p), q);
  // Phi_1 sends the j-th generator b^{-1} e_j back to e_j.
  d.phi1 = IntMatrix::identity(d.rank);
  return d;
}

DisplayDatum display_from_element(const MonomialIsocrystal& b, const Integer& p, int witt_length) {
  b.validate();
  if (b.frobenius_power != 1) throw UnsupportedOperation("displays are built for sigma-period 1 only");
  for (const auto& s : slopes_monomial(b))
    if (s < -1 || s > 0)
      throw NotPDivisibleGroup("slope " + to_string(s) + " outside [-1,0]: no p-divisible group");
  return display_from_matrix(b.matrix(p), p, witt_length);
}

DisplayCheck display_check(const DisplayDatum& d) {
  DisplayCheck c;
  const std::size_t n = d.rank;
  const Integer& p = d.prime;
  const Integer q = d.modulus();
  if (d.m1.rows() != n || d.phi.rows() != n || d.phi.cols() != n || d.phi1.rows() != n ||
      d.phi1.cols() != d.m1.cols())
    throw MismatchError("display matrices have inconsistent shapes");

  // Lattice in Z^n spanned by M_1 and p^K Z^n.
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < d.m1.cols(); ++j) gens.push_back(d.m1.column(j));
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = q;
    gens.push_back(e);
  }
  const IntMatrix h = column_hermite_form(IntMatrix::from_columns(gens, n));

  c.contains_pm = true;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = p;
    if (!in_triangular_lattice(h, e)) c.contains_pm = false;
  }

  c.quotient_free = true;
  for (const auto& x : smith_normal_form(h).diagonal) {
    if (x == p) ++c.quotient_rank;
    else if (x != 1) c.quotient_free = false;
  }

  c.compatible = true;
  const IntMatrix image = d.phi * d.m1;
  for (std::size_t j = 0; j < d.m1.cols() && c.compatible; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (mod_floor(p * d.phi1(i, j) - image(i, j), q) != 0) {
        c.compatible = false;
        c.witness_column = j;
        break;
      }

  c.generates = rank_mod_p(d.phi1, p) == n;

  // Normal decomposition: L lifts a basis of M_1/pM, T completes it to M/pM.
  const auto pivots = pivot_columns_mod_p(d.m1, p);
  std::vector<IntVector> span;
  for (auto j : pivots) span.push_back(d.m1.column(j));
  std::vector<IntVector> psi_cols;
  for (auto j : pivots) psi_cols.push_back(d.phi1.column(j));
  for (std::size_t i = 0; i < n && span.size() < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    auto trial = span;
    trial.push_back(e);
    if (rank_mod_p(IntMatrix::from_columns(trial, n), p) == trial.size()) {
      span = std::move(trial);
      psi_cols.push_back(d.phi.column(i));
    }
  }
  c.psi = IntMatrix::from_columns(psi_cols, n);
  c.psi_invertible = psi_cols.size() == n && rank_mod_p(c.psi, p) == n;
  return c;
}

}  // namespace newtonleaf
