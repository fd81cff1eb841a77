#include "newtonleaf/witt.hpp"

#include <mutex>
#include <sstream>

#include "newtonleaf/errors.hpp"

namespace newtonleaf {

// ---- coefficient rings ----

CoefficientRing::CoefficientRing(Integer p, int precision, std::vector<int> nilpotency)
    : p_(std::move(p)), precision_(precision), nilpotency_(std::move(nilpotency)) {
  if (p_ < 2) throw ConfigurationError("coefficient ring needs a prime p >= 2");
  if (precision_ < 1) throw ConfigurationError("coefficient precision must be positive");
  modulus_ = ipow(p_, static_cast<std::uint64_t>(precision_));
  if (modulus_ > Integer(1) << 62) throw ConfigurationError("coefficient modulus too large");
  for (int e : nilpotency_) {
    if (e < 1) throw ConfigurationError("nilpotency orders must be positive");
    monomials_ *= static_cast<std::size_t>(e);
  }
  if (monomials_ > 4096) throw ConfigurationError("too many monomials in the coefficient ring");
}

std::vector<int> CoefficientRing::exponents_of(std::size_t index) const {
  std::vector<int> out(nilpotency_.size());
  for (std::size_t i = 0; i < nilpotency_.size(); ++i) {
    out[i] = static_cast<int>(index % static_cast<std::size_t>(nilpotency_[i]));
    index /= static_cast<std::size_t>(nilpotency_[i]);
  }
  return out;
}

CoefficientRing::Element CoefficientRing::constant(const Integer& c) const {
  Element e = zero();
  e[0] = mod_floor(c, modulus_);
  return e;
}

CoefficientRing::Element CoefficientRing::variable(std::size_t i) const {
  if (i >= nilpotency_.size()) throw PreconditionError("no such variable");
  Element e = zero();
  std::size_t stride = 1;
  for (std::size_t j = 0; j < i; ++j) stride *= static_cast<std::size_t>(nilpotency_[j]);
  if (nilpotency_[i] > 1) e[stride] = 1;
  return e;
}

CoefficientRing::Element CoefficientRing::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<long long> dist(0, to_long(modulus_) - 1);
  Element e(monomials_);
  for (auto& c : e) c = dist(rng);
  return e;
}

CoefficientRing::Element CoefficientRing::add(const Element& a, const Element& b) const {
  Element e(monomials_);
  for (std::size_t i = 0; i < monomials_; ++i) e[i] = mod_floor(a[i] + b[i], modulus_);
  return e;
}

CoefficientRing::Element CoefficientRing::sub(const Element& a, const Element& b) const {
  Element e(monomials_);
  for (std::size_t i = 0; i < monomials_; ++i) e[i] = mod_floor(a[i] - b[i], modulus_);
  return e;
}

CoefficientRing::Element CoefficientRing::neg(const Element& a) const { return sub(zero(), a); }

CoefficientRing::Element CoefficientRing::mul(const Element& a, const Element& b) const {
  if (monomials_ == 1) return {mod_floor(a[0] * b[0], modulus_)};
  Element e = zero();
  for (std::size_t i = 0; i < monomials_; ++i) {
    if (a[i] == 0) continue;
    auto ei = exponents_of(i);
    for (std::size_t j = 0; j < monomials_; ++j) {
      if (b[j] == 0) continue;
      auto ej = exponents_of(j);
      std::size_t index = 0, stride = 1;
      bool vanishes = false;
      for (std::size_t v = 0; v < nilpotency_.size(); ++v) {
        int k = ei[v] + ej[v];
        if (k >= nilpotency_[v]) {
          vanishes = true;
          break;
        }
        index += static_cast<std::size_t>(k) * stride;
        stride *= static_cast<std::size_t>(nilpotency_[v]);
      }
      if (!vanishes) e[index] = mod_floor(e[index] + a[i] * b[j], modulus_);
    }
  }
  return e;
}

CoefficientRing::Element CoefficientRing::scale(const Element& a, const Integer& c) const {
  Element e(monomials_);
  for (std::size_t i = 0; i < monomials_; ++i) e[i] = mod_floor(a[i] * c, modulus_);
  return e;
}

CoefficientRing::Element CoefficientRing::pow(const Element& a, std::uint64_t e) const {
  Element result = one();
  Element base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

bool CoefficientRing::is_zero(const Element& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

std::string CoefficientRing::format(const Element& a) const {
  if (monomials_ == 1) return to_string(a[0]);
  std::string out;
  for (std::size_t i = 0; i < monomials_; ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += "+";
    out += to_string(a[i]);
    auto ex = exponents_of(i);
    for (std::size_t v = 0; v < ex.size(); ++v)
      if (ex[v]) out += "*x" + std::to_string(v + 1) + (ex[v] > 1 ? "^" + std::to_string(ex[v]) : "");
  }
  return out.empty() ? "0" : out;
}

std::string CoefficientRing::name() const {
  std::string out = "Z/" + to_string(p_) + "^" + std::to_string(precision_);
  if (!nilpotency_.empty()) {
    out += "[";
    for (std::size_t v = 0; v < nilpotency_.size(); ++v)
      out += (v ? "," : "") + std::string("x") + std::to_string(v + 1) + "^" + std::to_string(nilpotency_[v]) + "=0";
    out += "]";
  }
  return out;
}

// ---- polynomials ----

Polynomial Polynomial::variable(std::size_t variables, std::size_t i) {
  Polynomial f(variables);
  Exponents e(variables, 0);
  e[i] = 1;
  f.terms_[e] = 1;
  return f;
}

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial f(variables);
  if (c != 0) f.terms_[Exponents(variables, 0)] = c;
  return f;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

bool Polynomial::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (!newtonleaf::is_integral(c)) return false;
  return true;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::size_t s = 0;
    for (auto k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial f = *this;
  for (const auto& [e, c] : o.terms_) f.add_term(e, c);
  return f;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial f = *this;
  for (const auto& [e, c] : o.terms_) f.add_term(e, -c);
  return f;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial f(variables_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(variables_);
      for (std::size_t i = 0; i < variables_; ++i) e[i] = e1[i] + e2[i];
      f.add_term(e, c1 * c2);
    }
  return f;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial f(variables_);
  if (c == 0) return f;
  for (const auto& [e, k] : terms_) f.terms_[e] = k * c;
  return f;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(variables_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CoefficientRing::Element Polynomial::evaluate(const CoefficientRing& ring,
                                              const std::vector<CoefficientRing::Element>& args) const {
  if (args.size() < variables_) throw PreconditionError("too few arguments for polynomial evaluation");
  std::vector<std::vector<CoefficientRing::Element>> powers(variables_);
  auto power = [&](std::size_t v, unsigned k) -> const CoefficientRing::Element& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(ring.one());
    while (cache.size() <= k) cache.push_back(ring.mul(cache.back(), args[v]));
    return cache[k];
  };
  CoefficientRing::Element total = ring.zero();
  for (const auto& [e, c] : terms_) {
    Integer coeff = mod_floor(numerator_of(c) * mod_inverse(denominator_of(c), ring.modulus()), ring.modulus());
    CoefficientRing::Element term = ring.constant(coeff);
    for (std::size_t v = 0; v < variables_; ++v)
      if (e[v]) term = ring.mul(term, power(v, e[v]));
    total = ring.add(total, term);
  }
  return total;
}

// ---- structure polynomials ----

namespace {

Polynomial ghost_polynomial(std::size_t variables, std::size_t offset, int n, const Integer& p) {
  Polynomial w(variables);
  for (int j = 0; j <= n; ++j)
    w = w + Polynomial::variable(variables, offset + static_cast<std::size_t>(j))
                    .pow(static_cast<std::uint64_t>(to_long(ipow(p, static_cast<std::uint64_t>(n - j))))) *
                Rational(ipow(p, static_cast<std::uint64_t>(j)));
  return w;
}

// Solves sum_{j<=n} p^j X_j^{p^{n-j}} = target_n for X_0..X_{count-1}.
std::vector<Polynomial> solve_ghost(const std::vector<Polynomial>& targets, const Integer& p, const char* what) {
  std::vector<Polynomial> out;
  for (std::size_t n = 0; n < targets.size(); ++n) {
    Polynomial rest = targets[n];
    for (std::size_t j = 0; j < n; ++j)
      rest = rest - out[j].pow(static_cast<std::uint64_t>(to_long(ipow(p, n - j)))) * Rational(ipow(p, j));
    Polynomial x = rest * Rational(1, ipow(p, n));
    if (!x.is_integral())
      throw ConsistencyError(std::string("Witt ") + what + " polynomial " + std::to_string(n) + " is not integral");
    out.push_back(std::move(x));
  }
  return out;
}

WittPolynomials derive(const Integer& p, int m) {
  WittPolynomials w;
  w.p = p;
  w.length = m;
  const std::size_t two = 2 * static_cast<std::size_t>(m);
  std::vector<Polynomial> sums, products, frob;
  for (int n = 0; n < m; ++n) {
    Polynomial wa = ghost_polynomial(two, 0, n, p);
    Polynomial wb = ghost_polynomial(two, static_cast<std::size_t>(m), n, p);
    sums.push_back(wa + wb);
    products.push_back(wa * wb);
  }
  for (int n = 0; n + 1 < m; ++n) frob.push_back(ghost_polynomial(static_cast<std::size_t>(m), 0, n + 1, p));
  w.sum = solve_ghost(sums, p, "sum");
  w.product = solve_ghost(products, p, "product");
  w.frobenius = solve_ghost(frob, p, "Frobenius");
  return w;
}

}  // namespace

const WittPolynomials& witt_polynomials(const Integer& p, int length) {
  if (length < 1) throw PreconditionError("Witt length must be positive");
  if (length > 5 || ipow(p, static_cast<std::uint64_t>(length - 1)) > 49)
    throw ResourceError("Witt structure polynomials for p=" + to_string(p) + ", length " + std::to_string(length) +
                        " exceed the supported size (p^(m-1) <= 49, m <= 5)");
  static std::mutex mutex;
  static std::map<std::pair<Integer, int>, std::unique_ptr<WittPolynomials>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, length}];
  if (!slot) slot = std::make_unique<WittPolynomials>(derive(p, length));
  return *slot;
}

// ---- Witt vectors ----

WittVector::WittVector(RingPtr ring, std::vector<CoefficientRing::Element> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (!ring_) throw PreconditionError("Witt vector without a coefficient ring");
  for (auto& c : components_) {
    if (c.size() != ring_->monomials()) throw MismatchError("Witt component has the wrong shape");
    for (auto& x : c) x = mod_floor(x, ring_->modulus());
  }
}

WittVector WittVector::zero(RingPtr ring, int length) {
  auto z = ring->zero();
  return WittVector(ring, std::vector<CoefficientRing::Element>(static_cast<std::size_t>(length), z));
}

WittVector WittVector::one(RingPtr ring, int length) { return teichmuller(ring, length, ring->one()); }

WittVector WittVector::teichmuller(RingPtr ring, int length, CoefficientRing::Element a) {
  std::vector<CoefficientRing::Element> c(static_cast<std::size_t>(length), ring->zero());
  if (length > 0) c[0] = std::move(a);
  return WittVector(ring, std::move(c));
}

WittVector WittVector::random(RingPtr ring, int length, std::mt19937_64& rng) {
  std::vector<CoefficientRing::Element> c;
  for (int i = 0; i < length; ++i) c.push_back(ring->random(rng));
  return WittVector(ring, std::move(c));
}

bool WittVector::operator==(const WittVector& o) const {
  return *ring_ == *o.ring_ && components_ == o.components_;
}

std::string WittVector::format() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) out += (i ? "," : "") + ring_->format(components_[i]);
  return out + ")";
}

namespace {

void require_compatible(const WittVector& a, const WittVector& b) {
  if (!(*a.ring() == *b.ring())) throw MismatchError("Witt vectors over different coefficient rings");
  if (a.length() != b.length()) throw MismatchError("Witt vectors of different lengths");
}

WittVector apply_binary(const WittVector& a, const WittVector& b, const std::vector<Polynomial>& polys) {
  std::vector<CoefficientRing::Element> args = a.components();
  args.insert(args.end(), b.components().begin(), b.components().end());
  std::vector<CoefficientRing::Element> out;
  for (int n = 0; n < a.length(); ++n) out.push_back(polys[static_cast<std::size_t>(n)].evaluate(*a.ring(), args));
  return WittVector(a.ring(), std::move(out));
}

}  // namespace

WittVector witt_add(const WittVector& a, const WittVector& b) {
  require_compatible(a, b);
  return apply_binary(a, b, witt_polynomials(a.ring()->prime(), a.length()).sum);
}

WittVector witt_mul(const WittVector& a, const WittVector& b) {
  require_compatible(a, b);
  return apply_binary(a, b, witt_polynomials(a.ring()->prime(), a.length()).product);
}

WittVector witt_integer(RingPtr ring, int length, const Integer& n) {
  if (n < 0) throw PreconditionError("witt_integer needs n >= 0");
  WittVector result = WittVector::zero(ring, length);
  WittVector base = WittVector::one(ring, length);
  Integer k = n;
  while (k > 0) {
    if (k % 2 == 1) result = witt_add(result, base);
    k /= 2;
    if (k > 0) base = witt_add(base, base);
  }
  return result;
}

WittVector witt_scale(const WittVector& a, const Integer& n) {
  return witt_mul(witt_integer(a.ring(), a.length(), n), a);
}

WittVector witt_frobenius(const WittVector& a) {
  if (a.length() < 2) throw PreconditionError("Frobenius needs Witt length >= 2");
  const auto& polys = witt_polynomials(a.ring()->prime(), a.length()).frobenius;
  std::vector<CoefficientRing::Element> out;
  for (const auto& f : polys) out.push_back(f.evaluate(*a.ring(), a.components()));
  return WittVector(a.ring(), std::move(out));
}

WittVector witt_verschiebung(const WittVector& a) {
  std::vector<CoefficientRing::Element> out;
  if (a.length() > 0) out.push_back(a.ring()->zero());
  for (int i = 0; i + 1 < a.length(); ++i) out.push_back(a[static_cast<std::size_t>(i)]);
  return WittVector(a.ring(), std::move(out));
}

WittVector truncate(const WittVector& a, int length) {
  if (length > a.length()) throw PreconditionError("cannot truncate to a longer length");
  return WittVector(a.ring(), std::vector<CoefficientRing::Element>(a.components().begin(),
                                                                    a.components().begin() + length));
}

std::vector<CoefficientRing::Element> ghost(const WittVector& a) {
  const CoefficientRing& r = *a.ring();
  std::vector<CoefficientRing::Element> out;
  for (int i = 0; i < a.length(); ++i) {
    CoefficientRing::Element w = r.zero();
    for (int j = 0; j <= i; ++j) {
      auto e = static_cast<std::uint64_t>(to_long(ipow(r.prime(), static_cast<std::uint64_t>(i - j))));
      w = r.add(w, r.scale(r.pow(a[static_cast<std::size_t>(j)], e), ipow(r.prime(), static_cast<std::uint64_t>(j))));
    }
    out.push_back(std::move(w));
  }
  return out;
}

// ---- W(F_p) = Z_p ----

namespace {

Integer teichmuller_lift(const Integer& a, const Integer& p, int precision) {
  const Integer q = ipow(p, static_cast<std::uint64_t>(precision));
  Integer x = mod_floor(a, q);
  for (int i = 1; i < precision; ++i) x = boost::multiprecision::powm(x, p, q);
  return x;
}

}  // namespace

IntVector witt_digits(const Integer& x, const Integer& p, int length) {
  IntVector out;
  Integer y = mod_floor(x, ipow(p, static_cast<std::uint64_t>(length)));
  for (int i = 0; i < length; ++i) {
    const int rest = length - i;
    const Integer q = ipow(p, static_cast<std::uint64_t>(rest));
    Integer a = mod_floor(y, p);
    out.push_back(a);
    y = mod_floor(y - teichmuller_lift(a, p, rest), q) / p;
  }
  return out;
}

Integer witt_value(const IntVector& digits, const Integer& p) {
  const int k = static_cast<int>(digits.size());
  const Integer q = ipow(p, static_cast<std::uint64_t>(k));
  Integer total = 0;
  for (int i = 0; i < k; ++i)
    total += ipow(p, static_cast<std::uint64_t>(i)) * teichmuller_lift(digits[static_cast<std::size_t>(i)], p, k);
  return mod_floor(total, q);
}

// ---- self check ----

std::vector<WittCheck> witt_self_check(const Integer& p, int length, int coefficient_precision, std::size_t pairs,
                                       std::uint64_t seed) {
  std::vector<WittCheck> out;
  std::mt19937_64 rng(seed);
  auto flat = std::make_shared<const CoefficientRing>(p, coefficient_precision);
  auto nil = std::make_shared<const CoefficientRing>(p, coefficient_precision, std::vector<int>{3, 2});

  {
    WittCheck c{"structure polynomials integral", true, 1, ""};
    try {
      witt_polynomials(p, length);
    } catch (const ConsistencyError& e) {
      c.pass = false;
      c.witness = e.what();
    }
    out.push_back(c);
    if (!c.pass) return out;
  }

  auto ghost_checks = [&](const RingPtr& ring, std::size_t trials, const std::string& label) {
    WittCheck add{"ghost additive over " + label, true, trials, ""};
    WittCheck mul{"ghost multiplicative over " + label, true, trials, ""};
    for (std::size_t t = 0; t < trials; ++t) {
      WittVector a = WittVector::random(ring, length, rng), b = WittVector::random(ring, length, rng);
      auto ga = ghost(a), gb = ghost(b), gs = ghost(witt_add(a, b)), gp = ghost(witt_mul(a, b));
      for (int i = 0; i < length; ++i) {
        auto k = static_cast<std::size_t>(i);
        if (add.pass && gs[k] != ring->add(ga[k], gb[k])) {
          add.pass = false;
          add.witness = a.format() + " + " + b.format();
        }
        if (mul.pass && gp[k] != ring->mul(ga[k], gb[k])) {
          mul.pass = false;
          mul.witness = a.format() + " * " + b.format();
        }
      }
    }
    out.push_back(add);
    out.push_back(mul);
  };
  ghost_checks(flat, pairs, flat->name());
  ghost_checks(nil, std::max<std::size_t>(pairs / 5, 1), nil->name());

  if (length >= 2) {
    WittCheck fv{"F(V(a)) = p a", true, pairs, ""};
    WittCheck vf{"V(F(a)) = V(1) a", true, pairs, ""};
    WittCheck fp{"F(a)_i = a_i^p mod p", true, pairs, ""};
    const WittVector v1 = witt_verschiebung(WittVector::one(flat, length));
    for (std::size_t t = 0; t < pairs; ++t) {
      WittVector a = WittVector::random(flat, length, rng);
      WittVector lhs = witt_frobenius(witt_verschiebung(a));
      if (fv.pass && !(lhs == truncate(witt_scale(a, p), length - 1))) {
        fv.pass = false;
        fv.witness = a.format();
      }
      WittVector fa = witt_frobenius(a);
      if (vf.pass && !(witt_verschiebung(fa) == truncate(witt_mul(v1, a), length - 1))) {
        vf.pass = false;
        vf.witness = a.format();
      }
      for (int i = 0; i + 1 < length && fp.pass; ++i) {
        auto k = static_cast<std::size_t>(i);
        auto diff = flat->sub(fa[k], flat->pow(a[k], static_cast<std::uint64_t>(to_long(p))));
        for (const auto& x : diff)
          if (mod_floor(x, p) != 0) {
            fp.pass = false;
            fp.witness = a.format();
          }
      }
    }
    out.push_back(fv);
    out.push_back(vf);
    out.push_back(fp);
  }

  {
    auto fp_ring = std::make_shared<const CoefficientRing>(p, 1);
    const Integer q = ipow(p, static_cast<std::uint64_t>(length));
    WittCheck z{"W(F_p) = Z/p^m", true, pairs, ""};
    std::uniform_int_distribution<long long> dist(0, to_long(q) - 1);
    auto as_witt = [&](const Integer& x) {
      std::vector<CoefficientRing::Element> comps;
      for (const auto& d : witt_digits(x, p, length)) comps.push_back({d});
      return WittVector(fp_ring, comps);
    };
    for (std::size_t t = 0; t < pairs && z.pass; ++t) {
      Integer x = dist(rng), y = dist(rng);
      if (witt_value(witt_digits(x, p, length), p) != x ||
          !(witt_add(as_witt(x), as_witt(y)) == as_witt(mod_floor(x + y, q))) ||
          !(witt_mul(as_witt(x), as_witt(y)) == as_witt(mod_floor(x * y, q)))) {
        z.pass = false;
        z.witness = to_string(x) + "," + to_string(y);
      }
    }
    out.push_back(z);
  }
  return out;
}

}  // namespace newtonleaf
