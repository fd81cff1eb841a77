#include <algorithm>
#include <map>

#include "newtonleaf/errors.hpp"
#include "newtonleaf/isocrystal.hpp"
#include "newtonleaf/linalg.hpp"

namespace newtonleaf {

SlopeDivisibility is_completely_slope_divisible(const MonomialIsocrystal& m) {
  m.validate();
  SlopeDivisibility out;
  out.divisible = true;
  out.nu = monomial_slope_vector(m);
  out.slopes = slopes_monomial(m);
  // Least k with m^k diagonal, sign-free and equal to p^{k nu}.  It divides
  // twice the order of the permutation.
  const std::size_t n = m.size();
  Integer order = 1;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    long long len = 0;
    for (std::size_t j = start; !seen[j]; j = m.permutation[j]) {
      seen[j] = true;
      ++len;
    }
    if (len) order = lcm(order, Integer(len));
  }
  for (int k = 1;; ++k) {
    if (k > 2 * order) throw ConsistencyError("monomial datum without a decency period");
    MonomialIsocrystal power = monomial_power(m, static_cast<std::uint64_t>(k));
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = power.permutation[j] == j && power.sign(j) == 1 &&
           Rational(power.exponents[j]) == Rational(k * m.frobenius_power) * out.nu[j];
    if (ok) {
      out.period = k * m.frobenius_power;
      return out;
    }
  }
}

namespace {

using Poly = std::vector<Integer>;  // over F_p, coefficient i multiplies y^i

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, const Integer& p) {
  trim(a);
  const Integer lead_inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    Integer c = mod_floor(a.back() * lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod_floor(a[shift + i] - c * b[i], p);
    trim(a);
  }
  return a;
}

bool coprime(Poly a, Poly b, const Integer& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

Integer reduce(const Rational& q, const Integer& modulus) {
  return mod_floor(numerator_of(q) * mod_inverse(denominator_of(q), modulus), modulus);
}

IntMatrix reduce(const RatMatrix& m, const Integer& modulus) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = reduce(m(i, j), modulus);
  return out;
}

IntMatrix mul_mod(const IntMatrix& a, const IntMatrix& b, const Integer& q) {
  IntMatrix c = a * b;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = mod_floor(c(i, j), q);
  return c;
}

IntMatrix pow_mod(const IntMatrix& a, Integer e, const Integer& q) {
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (e > 0) {
    if (e % 2 == 1) result = mul_mod(result, base, q);
    e /= 2;
    if (e > 0) base = mul_mod(base, base, q);
  }
  return result;
}

// Monic Q over F_p with Q(0) != 0 and gcd(Q, u) = 1, smallest degree first.
Poly auxiliary_polynomial(const Poly& u, const Integer& p) {
  for (std::size_t d = 1; d <= 8; ++d) {
    Poly q(d + 1, Integer(0));
    q[d] = 1;
    for (;;) {
      if (q[0] != 0 && coprime(u, q, p)) return q;
      std::size_t i = 0;
      while (i < d && q[i] == p - 1) q[i++] = 0;
      if (i == d) break;
      ++q[i];
    }
  }
  throw ConsistencyError("no auxiliary polynomial found");
}

RatMatrix poly_eval(const Poly& q, const RatMatrix& x) {
  const std::size_t n = x.rows();
  RatMatrix acc(n, n);
  for (std::size_t k = q.size(); k-- > 0;) {
    acc = acc * x;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += Rational(q[k]);
  }
  return acc;
}

struct Piece {
  Rational slope;
  long long multiplicity = 0;
  RatMatrix basis;      // Z_(p)-basis of a T-stable lattice
  RatMatrix basis_inv;
  RatMatrix operator_;  // T in that basis (p-integral)
  long long defect = 0; // -(v(B) + v(B^-1))
};

Piece prepare_piece(const RatMatrix& a, const Rational& slope, long long multiplicity, long long scaled_slope,
                    const Integer& p) {
  const std::size_t n = a.rows();
  Piece piece;
  piece.slope = slope;
  piece.multiplicity = multiplicity;
  RatMatrix x = a * rpow(Rational(p), -scaled_slope);

  // Residual characteristic polynomial: y^k * u(y) over F_p.
  std::vector<Rational> chi = characteristic_polynomial(x);
  long long vmin = 0;
  bool first = true;
  for (const auto& c : chi)
    if (c != 0) {
      long long v = valuation(c, p);
      if (first || v < vmin) vmin = v;
      first = false;
    }
  Poly reduced;
  for (const auto& c : chi) reduced.push_back(c == 0 ? Integer(0) : reduce(c * rpow(Rational(p), -vmin), p));
  std::size_t low = 0;
  while (low < reduced.size() && reduced[low] == 0) ++low;
  Poly u(reduced.begin() + static_cast<std::ptrdiff_t>(low), reduced.end());
  trim(u);
  if (static_cast<long long>(u.size()) - 1 != multiplicity)
    throw ConsistencyError("unit-root factor has the wrong degree");

  // T = x^d Q(x)^-2 has unit eigenvalues exactly where x does and
  // positive-valuation eigenvalues elsewhere.
  Poly q = auxiliary_polynomial(u, p);
  const std::size_t d = q.size() - 1;
  RatMatrix qx = poly_eval(q, x);
  auto qinv = inverse(qx);
  if (!qinv) throw ConsistencyError("auxiliary polynomial vanishes on the matrix");
  RatMatrix t = matrix_power(x, d) * (*qinv) * (*qinv);

  // Lattice spanned by T^i e_k, i < n.
  std::vector<RatVector> gens;
  RatMatrix power = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) gens.push_back(power.column(k));
    power = t * power;
  }
  Integer den = 1;
  for (const auto& g : gens)
    for (const auto& c : g) den = lcm(den, denominator_of(c));
  std::vector<IntVector> int_gens;
  for (const auto& g : gens) {
    IntVector v;
    for (const auto& c : g) v.push_back(numerator_of(c * Rational(den)));
    int_gens.push_back(std::move(v));
  }
  IntMatrix h = column_hermite_form(IntMatrix::from_columns(int_gens, n));
  piece.basis = to_rational(h) * Rational(1, den);
  piece.basis_inv = inverse_or_throw(piece.basis);
  piece.operator_ = piece.basis_inv * t * piece.basis;
  for (const auto& c : piece.operator_.data())
    if (c != 0 && valuation(c, p) < 0) throw ConsistencyError("T is not integral on its own lattice");
  piece.defect = -(min_valuation(piece.basis, p).value() + min_valuation(piece.basis_inv, p).value());
  return piece;
}

// Unit-root projector of an integral operator, modulo p^precision.
IntMatrix unit_root_idempotent(const IntMatrix& op, long long precision, const Integer& p) {
  const std::size_t n = op.rows();
  const Integer q = ipow(p, static_cast<std::uint64_t>(precision));
  Integer e = 1;
  Integer pf = 1;
  for (std::size_t f = 1; f <= n; ++f) {
    pf *= p;
    e = lcm(e, pf - 1);
  }
  Integer unip = 1;
  while (unip < Integer(n)) unip *= p;
  e *= unip * Integer(static_cast<long long>(n));
  IntMatrix z = pow_mod(op, e, q);
  for (long long i = 0; i < precision; ++i) z = pow_mod(z, p, q);
  if (mul_mod(z, z, q) != z) throw ConsistencyError("unit-root projector is not idempotent");
  return z;
}

}  // namespace

SlopeDivisibility is_completely_slope_divisible(const RationalIsocrystal& m, const SplittingOptions& opts) {
  const RatMatrix& b = m.matrix;
  const Integer& p = m.prime;
  if (!b.is_square()) throw MismatchError("isocrystal matrix is not square");
  const std::size_t n = b.rows();
  SlopeDivisibility out;
  out.slopes = slopes_charpoly(m);

  std::map<Rational, long long> mult;
  Integer period = 1;
  for (const auto& s : out.slopes) {
    ++mult[s];
    period = lcm(period, denominator_of(s));
  }
  out.period = to_int(period);
  for (const auto& [s, k] : mult) out.piece_slopes.push_back(s);

  if (mult.size() == 1) {
    out.divisible = true;
    out.projectors.push_back(IntMatrix::identity(n));
    out.precision = 0;
    return out;
  }

  const RatMatrix a = matrix_power(b, static_cast<std::uint64_t>(out.period));
  std::vector<Piece> pieces;
  for (const auto& [s, k] : mult)
    pieces.push_back(prepare_piece(a, s, k, to_long(numerator_of(s * Rational(period))), p));

  // The verifier reads each piece's slope off its characteristic polynomial,
  // which needs the piece determinant to be visible at the final precision.
  const long long shift = std::min<long long>(0, min_valuation(a, p).value_or(0));
  long long visible = 0;
  for (const auto& [s, k] : mult)
    visible = std::max(visible, to_long(numerator_of((s * Rational(period) - shift) * k)));

  for (long long precision = opts.initial_precision; precision <= opts.max_precision; precision *= 2) {
    bool enough = true;
    for (const auto& piece : pieces)
      if (precision - piece.defect < 1 || precision - piece.defect <= visible) enough = false;
    if (!enough) continue;

    out.projectors.clear();
    out.precision = precision;
    bool split = true;
    for (const auto& piece : pieces) {
      const long long abs_prec = precision - piece.defect;
      const Integer q = ipow(p, static_cast<std::uint64_t>(precision));
      IntMatrix e = unit_root_idempotent(reduce(piece.operator_, q), precision, p);
      RatMatrix proj = piece.basis * to_rational(e) * piece.basis_inv;
      out.precision = std::min(out.precision, abs_prec);
      bool integral = true;
      for (const auto& c : proj.data())
        if (c != 0 && valuation(c, p) < 0) integral = false;
      if (!integral) {
        split = false;
        break;
      }
      out.projectors.push_back(reduce(proj, ipow(p, static_cast<std::uint64_t>(abs_prec))));
    }
    out.divisible = split;
    if (!split) out.projectors.clear();
    return out;
  }
  throw InconclusiveError("p-adic precision exhausted before the splitting could be certified");
}


namespace {

// char(e b e) = x^{n-m} g(x) with g isoclinic of valuation t per root,
// read modulo q = p^precision.  False when m t is beyond the precision.
bool piece_has_slope(const IntMatrix& e, const IntMatrix& b, const Integer& p, long long precision, std::size_t m,
                     const Rational& t) {
  const Integer q = ipow(p, static_cast<std::uint64_t>(precision));
  const std::size_t n = e.rows();
  const auto chi = characteristic_polynomial(to_rational(mul_mod(mul_mod(e, b, q), e, q)));
  auto coeff = [&](std::size_t k) { return mod_floor(numerator_of(chi[k]), q); };
  for (std::size_t k = 0; k < n - m; ++k)
    if (coeff(k) != 0) return false;
  const Rational total = t * static_cast<long long>(m);
  if (!is_integral(total) || total >= precision) return false;
  for (std::size_t i = 0; i < m; ++i) {
    const Integer c = coeff(n - m + i);
    const Rational need = t * static_cast<long long>(m - i);
    if (i == 0) {
      if (c == 0 || Rational(valuation(c, p)) != need) return false;
    } else if (c != 0 && Rational(valuation(c, p)) < need) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool verify_certificate(const RationalIsocrystal& m, const SlopeDivisibility& cert) {
  const Integer& p = m.prime;
  const std::size_t n = m.matrix.rows();
  if (slopes_charpoly(m) != cert.slopes) return false;
  if (!cert.divisible) {
    SplittingOptions opts;
    opts.initial_precision = std::max<long long>(cert.precision, 1);
    opts.max_precision = std::max<long long>(opts.initial_precision, SplittingOptions{}.max_precision);
    return !is_completely_slope_divisible(m, opts).divisible;
  }
  if (cert.projectors.size() != cert.piece_slopes.size()) return false;
  if (cert.projectors.size() == 1) return cert.projectors[0] == IntMatrix::identity(n);
  if (cert.precision < 1) return false;
  const Integer q = ipow(p, static_cast<std::uint64_t>(cert.precision));

  const RatMatrix a = matrix_power(m.matrix, static_cast<std::uint64_t>(cert.period));
  const long long va = std::min<long long>(0, min_valuation(a, p).value_or(0));
  const RatMatrix a_scaled = a * rpow(Rational(p), -va);
  const IntMatrix a_mod = reduce(a_scaled, q);

  IntMatrix sum(n, n);
  for (std::size_t j = 0; j < cert.projectors.size(); ++j) {
    const IntMatrix& e = cert.projectors[j];
    if (mul_mod(e, e, q) != e) return false;
    // p^{-va} A commutes with the projector; precision loss bounded by -va.
    IntMatrix lhs = mul_mod(e, a_mod, q), rhs = mul_mod(a_mod, e, q);
    const Integer q_check = ipow(p, static_cast<std::uint64_t>(std::max<long long>(cert.precision + va, 1)));
    for (std::size_t i = 0; i < n * n; ++i)
      if (mod_floor(lhs.data()[i] - rhs.data()[i], q_check) != 0 && cert.precision + va >= 1) return false;
    std::size_t mult = 0;
    for (const auto& s : cert.slopes)
      if (s == cert.piece_slopes[j]) ++mult;
    if (rank_mod_p(e, p) != mult) return false;
    if (!piece_has_slope(e, a_mod, p, cert.precision, mult, cert.piece_slopes[j] * cert.period - va)) return false;
    sum += e;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (mod_floor(sum(i, k) - (i == k ? 1 : 0), q) != 0) return false;
  return true;
}

}  // namespace newtonleaf
