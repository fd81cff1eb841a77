#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "newtonleaf/exact.hpp"

namespace newtonleaf {

// Z/p^k[x_1..x_v]/(x_i^{e_i}).  With no variables this is Z/p^k.
// Elements are dense coefficient vectors indexed by monomials.
class CoefficientRing {
 public:
  using Element = std::vector<Integer>;

  CoefficientRing(Integer p, int precision, std::vector<int> nilpotency = {});

  const Integer& prime() const { return p_; }
  int precision() const { return precision_; }
  const Integer& modulus() const { return modulus_; }
  const std::vector<int>& nilpotency() const { return nilpotency_; }
  std::size_t monomials() const { return monomials_; }

  Element zero() const { return Element(monomials_, Integer(0)); }
  Element one() const { return constant(1); }
  Element constant(const Integer& c) const;
  // x_i
  Element variable(std::size_t i) const;
  Element random(std::mt19937_64& rng) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Integer& c) const;
  Element pow(const Element& a, std::uint64_t e) const;
  bool is_zero(const Element& a) const;

  std::string format(const Element& a) const;
  std::string name() const;
  bool operator==(const CoefficientRing& o) const {
    return p_ == o.p_ && precision_ == o.precision_ && nilpotency_ == o.nilpotency_;
  }

 private:
  std::vector<int> exponents_of(std::size_t index) const;
  Integer p_;
  int precision_;
  Integer modulus_;
  std::vector<int> nilpotency_;
  std::size_t monomials_ = 1;
};

using RingPtr = std::shared_ptr<const CoefficientRing>;

// Sparse polynomial with rational coefficients in a fixed number of variables.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}
  static Polynomial variable(std::size_t variables, std::size_t i);
  static Polynomial constant(std::size_t variables, const Rational& c);

  std::size_t variables() const { return variables_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_integral() const;
  std::size_t degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(std::uint64_t e) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  CoefficientRing::Element evaluate(const CoefficientRing& ring,
                                    const std::vector<CoefficientRing::Element>& args) const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::size_t variables_;
  std::map<Exponents, Rational> terms_;
};

// Universal Witt polynomials for a fixed (p, length).  Sum and product use
// variables a_0..a_{m-1}, b_0..b_{m-1}; Frobenius component n uses a_0..a_{n+1}.
struct WittPolynomials {
  Integer p;
  int length = 0;
  std::vector<Polynomial> sum;
  std::vector<Polynomial> product;
  std::vector<Polynomial> frobenius;  // length - 1 components
};

// Derived from the ghost equations on first use and cached.  Throws
// ConsistencyError if a derived polynomial is not integral and ResourceError
// beyond the supported (p, length) range.
const WittPolynomials& witt_polynomials(const Integer& p, int length);

class WittVector {
 public:
  WittVector(RingPtr ring, std::vector<CoefficientRing::Element> components);
  static WittVector zero(RingPtr ring, int length);
  static WittVector one(RingPtr ring, int length);
  static WittVector teichmuller(RingPtr ring, int length, CoefficientRing::Element a);
  static WittVector random(RingPtr ring, int length, std::mt19937_64& rng);

  const RingPtr& ring() const { return ring_; }
  int length() const { return static_cast<int>(components_.size()); }
  const CoefficientRing::Element& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<CoefficientRing::Element>& components() const { return components_; }
  bool operator==(const WittVector& o) const;
  std::string format() const;

 private:
  RingPtr ring_;
  std::vector<CoefficientRing::Element> components_;
};

WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_mul(const WittVector& a, const WittVector& b);
// n * 1 in W_m
WittVector witt_integer(RingPtr ring, int length, const Integer& n);
WittVector witt_scale(const WittVector& a, const Integer& n);
// W_m -> W_{m-1}
WittVector witt_frobenius(const WittVector& a);
// (0, a_0, ..., a_{m-2})
WittVector witt_verschiebung(const WittVector& a);
WittVector truncate(const WittVector& a, int length);
// w_i = sum_{j<=i} p^j a_j^{p^{i-j}}
std::vector<CoefficientRing::Element> ghost(const WittVector& a);

// W_K(F_p) = Z/p^K through Teichmueller digits.
IntVector witt_digits(const Integer& x, const Integer& p, int length);
Integer witt_value(const IntVector& digits, const Integer& p);

struct WittCheck {
  std::string name;
  bool pass = false;
  std::size_t trials = 0;
  std::string witness;
};

// Ghost homomorphism on random pairs, FV = p, VF = V(1) * a, integrality of
// the structure polynomials, and the Z/p^m identification over F_p.
std::vector<WittCheck> witt_self_check(const Integer& p, int length, int coefficient_precision = 5,
                                       std::size_t pairs = 500, std::uint64_t seed = 20240601);

}  // namespace newtonleaf
