#include "newtonleaf/exact.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include <boost/multiprecision/integer.hpp>

#include "newtonleaf/errors.hpp"
#include "newtonleaf/matrix.hpp"

namespace newtonleaf {

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

Rational rpow(const Rational& base, long long exponent) {
  if (exponent >= 0) {
    return Rational(ipow(numerator_of(base), exponent), ipow(denominator_of(base), exponent));
  }
  if (base == 0) throw PreconditionError("zero to a negative power");
  auto e = static_cast<std::uint64_t>(-exponent);
  return Rational(ipow(denominator_of(base), e), ipow(numerator_of(base), e));
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw PreconditionError("division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer old_r = mod_floor(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw PreconditionError("not a unit modulo " + to_string(m));
  return mod_floor(old_s, m);
}

long long valuation(const Integer& a, const Integer& p) {
  if (a == 0) throw PreconditionError("valuation of zero");
  long long v = 0;
  Integer x = abs(a), q, r;
  for (;;) {
    boost::multiprecision::divide_qr(x, p, q, r);
    if (r != 0) return v;
    x = q;
    ++v;
  }
}

long long valuation(const Rational& a, const Integer& p) {
  return valuation(numerator_of(a), p) - valuation(denominator_of(a), p);
}

long long to_long(const Integer& a) {
  if (a > std::numeric_limits<long long>::max() || a < std::numeric_limits<long long>::min())
    throw PreconditionError("integer out of machine range: " + to_string(a));
  return a.convert_to<long long>();
}

int to_int(const Integer& a) {
  if (a > std::numeric_limits<int>::max() || a < std::numeric_limits<int>::min())
    throw PreconditionError("integer out of machine range: " + to_string(a));
  return a.convert_to<int>();
}

std::string to_string(const Integer& a) { return a.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i >= s.size()) throw ConfigurationError("not a rational number: '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ConfigurationError("not a rational number: '" + std::string(whole) + "'");
  Integer v(std::string(s.substr(i)));
  return s[0] == '-' ? Integer(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  Integer num = parse_integer(trim(t.substr(0, slash)), text);
  Integer den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw ConfigurationError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

IntVector to_integers(const std::vector<long long>& v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

RatVector to_rationals(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVector require_integral(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) throw PreconditionError("expected an integral vector, got " + format_vector(v));
    out.push_back(numerator_of(x));
  }
  return out;
}

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string format_vector(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) throw PreconditionError("matrix entry is not integral");
      r(i, j) = numerator_of(m(i, j));
    }
  return r;
}

std::string format_matrix(const RatMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

}  // namespace newtonleaf
