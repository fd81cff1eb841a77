#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace newtonleaf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer ipow(const Integer& base, std::uint64_t exponent);
Rational rpow(const Rational& base, long long exponent);
Integer floor_div(const Integer& a, const Integer& b);
// Representative of a mod m in [0, m).
Integer mod_floor(const Integer& a, const Integer& m);
// Inverse of a unit modulo m; throws PreconditionError if a is not a unit.
Integer mod_inverse(const Integer& a, const Integer& m);

// p-adic valuation.  Throws PreconditionError on zero.
long long valuation(const Integer& a, const Integer& p);
long long valuation(const Rational& a, const Integer& p);

long long to_long(const Integer& a);
int to_int(const Integer& a);

std::string to_string(const Integer& a);
// "3/2", "-1", "0"
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

IntVector to_integers(const std::vector<long long>& v);
RatVector to_rationals(const IntVector& v);
// Throws PreconditionError if some entry is not integral.
IntVector require_integral(const RatVector& v);

// Componentwise vector helpers.
template <class T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}
template <class T>
std::vector<T> sub(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}
template <class T>
bool is_zero(const std::vector<T>& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::string format_vector(const IntVector& v);
std::string format_vector(const RatVector& v);

}  // namespace newtonleaf
