#include "newtonleaf/affine_weyl.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "newtonleaf/errors.hpp"
#include "newtonleaf/linalg.hpp"

namespace newtonleaf {

namespace {

std::vector<std::size_t> weyl_conjugation(const RootDatum& d, const IntMatrix& s) {
  auto inv = inverse(to_rational(s));
  if (!inv) throw ConfigurationError("Frobenius matrix is singular");
  IntMatrix s_inv = to_integer(*inv);
  std::vector<std::size_t> image(d.weyl().size());
  for (std::size_t w = 0; w < d.weyl().size(); ++w) {
    auto idx = d.weyl().find_cochar(s * d.weyl().cochar_matrix(w) * s_inv);
    if (!idx) throw ConfigurationError("Frobenius does not normalize the Weyl group");
    image[w] = *idx;
  }
  return image;
}

int matrix_order(const IntMatrix& m, int cap) {
  const IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix power = m;
  int k = 1;
  while (power != id) {
    if (++k > cap) throw ConfigurationError("Frobenius does not have finite order");
    power = power * m;
  }
  return k;
}

void same_datum(const ExtendedAffineElement& x, const ExtendedAffineElement& y) {
  if (x.datum_ptr().get() != y.datum_ptr().get()) throw MismatchError("elements over different root data");
}

}  // namespace

FrobeniusAction FrobeniusAction::from_matrix(DatumPtr d, IntMatrix m) {
  LatticeAction(std::vector<IntMatrix>{m}, d->cochar_rank()).validate_against(*d);
  std::set<IntVector> positive;
  for (auto a : d->positive_indices()) positive.insert(d->coroots()[a]);
  for (const auto& c : positive)
    if (!positive.count(m * c)) throw ConfigurationError("Frobenius does not preserve the positive coroots");
  FrobeniusAction f;
  f.order_ = matrix_order(m, LatticeAction::kOrderCap);
  f.trivial_ = m == IntMatrix::identity(d->cochar_rank());
  f.weyl_image_ = weyl_conjugation(*d, m);
  f.matrix_ = std::move(m);
  f.datum_ = std::move(d);
  f.name_ = f.trivial_ ? "trivial" : "custom";
  return f;
}

FrobeniusAction FrobeniusAction::trivial(DatumPtr d) {
  const std::size_t k = d->cochar_rank();
  return from_matrix(std::move(d), IntMatrix::identity(k));
}

FrobeniusAction FrobeniusAction::opposition(DatumPtr d) {
  IntMatrix m = -d->weyl().cochar_matrix(d->weyl().longest());
  FrobeniusAction f = from_matrix(std::move(d), std::move(m));
  f.name_ = "opposition";
  return f;
}

RatVector FrobeniusAction::apply(const RatVector& v) const {
  RatVector out(v.size(), Rational(0));
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      if (matrix_(i, j) != 0) out[i] += Rational(matrix_(i, j)) * v[j];
  return out;
}

ExtendedAffineElement::ExtendedAffineElement(DatumPtr d, IntVector lambda, std::size_t w)
    : datum_(std::move(d)), lambda_(std::move(lambda)), w_(w) {
  if (!datum_) throw PreconditionError("element without a root datum");
  if (lambda_.size() != datum_->cochar_rank()) throw MismatchError("translation has the wrong length");
  if (w_ >= datum_->weyl().size()) throw PreconditionError("finite part out of range");
  if (!datum_->in_lattice(lambda_))
    throw PreconditionError("translation " + format_vector(lambda_) + " is not in the cocharacter lattice");
}

ExtendedAffineElement ExtendedAffineElement::identity(DatumPtr d) {
  const std::size_t k = d->cochar_rank();
  return ExtendedAffineElement(std::move(d), IntVector(k, Integer(0)), 0);
}

ExtendedAffineElement ExtendedAffineElement::translation(DatumPtr d, IntVector lambda) {
  return ExtendedAffineElement(std::move(d), std::move(lambda), 0);
}

ExtendedAffineElement ExtendedAffineElement::finite(DatumPtr d, std::size_t w) {
  const std::size_t k = d->cochar_rank();
  return ExtendedAffineElement(std::move(d), IntVector(k, Integer(0)), w);
}

ExtendedAffineElement compose(const ExtendedAffineElement& x, const ExtendedAffineElement& y) {
  same_datum(x, y);
  const auto& W = x.datum().weyl();
  return ExtendedAffineElement(x.datum_ptr(), add(x.translation_part(), W.act(x.finite_part(), y.translation_part())),
                               W.multiply(x.finite_part(), y.finite_part()));
}

ExtendedAffineElement invert(const ExtendedAffineElement& x) {
  const auto& W = x.datum().weyl();
  std::size_t wi = W.inverse(x.finite_part());
  IntVector lam = W.act(wi, x.translation_part());
  for (auto& c : lam) c = -c;
  return ExtendedAffineElement(x.datum_ptr(), std::move(lam), wi);
}

ExtendedAffineElement sigma_apply(const ExtendedAffineElement& x, const FrobeniusAction& sigma) {
  if (sigma.datum_ptr().get() != x.datum_ptr().get()) throw MismatchError("Frobenius over a different root datum");
  return ExtendedAffineElement(x.datum_ptr(), sigma.apply(x.translation_part()), sigma.apply_weyl(x.finite_part()));
}

ExtendedAffineElement sigma_conjugate(const ExtendedAffineElement& g, const ExtendedAffineElement& x,
                                      const FrobeniusAction& sigma) {
  return compose(compose(g, x), invert(sigma_apply(g, sigma)));
}

long long length(const ExtendedAffineElement& x) {
  const RootDatum& d = x.datum();
  const std::size_t wi = d.weyl().inverse(x.finite_part());
  Integer total = 0;
  for (auto a : d.positive_indices()) {
    Integer s = d.pair(d.roots()[a], x.translation_part());
    if (d.is_positive(d.act_on_root(wi, a)))
      total += abs(s);
    else
      total += abs(s - 1);
  }
  return to_long(total);
}

bool output_order(const ExtendedAffineElement& a, const ExtendedAffineElement& b) {
  long long la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  return a < b;
}

NewtonPoint newton_point(const ExtendedAffineElement& x, const FrobeniusAction& sigma) {
  if (sigma.datum_ptr().get() != x.datum_ptr().get()) throw MismatchError("Frobenius over a different root datum");
  const RootDatum& d = x.datum();
  const IntMatrix ws = d.weyl().cochar_matrix(x.finite_part()) * sigma.matrix();
  const IntMatrix id = IntMatrix::identity(d.cochar_rank());
  IntMatrix power = id;
  IntVector total(d.cochar_rank(), Integer(0));
  IntVector term = x.translation_part();
  int r = 0;
  do {
    total = add(total, term);
    term = ws * term;
    power = ws * power;
    ++r;
    if (r > 100000) throw ConsistencyError("w sigma does not have finite order");
  } while (power != id);
  NewtonPoint out;
  out.period = r;
  out.vector.reserve(total.size());
  for (const auto& c : total) out.vector.emplace_back(c, Integer(r));
  out.dominant = dominant_rep(d, out.vector);
  return out;
}

NewtonPoint newton_point(const ExtendedAffineElement& x) {
  return newton_point(x, FrobeniusAction::trivial(x.datum_ptr()));
}

const CoinvariantLattice& fundamental_group(const RootDatum& d) { return d.fundamental_group(); }

CoinvariantLattice fundamental_group_sigma(const FrobeniusAction& sigma) {
  const RootDatum& d = sigma.datum();
  std::vector<IntVector> cols;
  for (auto a : d.positive_indices()) cols.push_back(d.lattice_coordinates(d.coroots()[a]));
  for (std::size_t j = 0; j < d.rank(); ++j) {
    IntVector b = d.lattice_basis().column(j);
    cols.push_back(d.lattice_coordinates(sub(b, sigma.apply(b))));
  }
  return quotient_presentation(IntMatrix::from_columns(cols, d.rank()), d.rank());
}

CoinvariantClass kottwitz_of_cocharacter(const RootDatum& d, const IntVector& lambda) {
  return project(fundamental_group(d), d.lattice_coordinates(lambda));
}

CoinvariantClass kottwitz(const ExtendedAffineElement& x) {
  return kottwitz_of_cocharacter(x.datum(), x.translation_part());
}

CoinvariantClass kottwitz_sigma(const ExtendedAffineElement& x, const FrobeniusAction& sigma) {
  return project(fundamental_group_sigma(sigma), x.datum().lattice_coordinates(x.translation_part()));
}

namespace {

MonomialIsocrystal simple_lift(const RootDatum& d, const StandardRep& rep, std::size_t i) {
  const std::size_t n = rep.weights.size();
  const std::size_t s = d.weyl().simple(i);
  const IntVector& coroot = d.coroots()[d.simple_indices()[i]];
  MonomialIsocrystal m;
  m.permutation.resize(n);
  m.exponents.assign(n, Integer(0));
  m.signs.assign(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector image = d.weyl().act_char(s, rep.weights[j]);
    auto it = std::find(rep.weights.begin(), rep.weights.end(), image);
    if (it == rep.weights.end()) throw ConsistencyError("standard weights not stable under the Weyl group");
    m.permutation[j] = static_cast<std::size_t>(it - rep.weights.begin());
    if (rep.signed_reflection[i] && d.pair(rep.weights[j], coroot) < 0) m.signs[j] = -1;
  }
  return m;
}

}  // namespace

MonomialIsocrystal monomial_lift(const ExtendedAffineElement& x) {
  const RootDatum& d = x.datum();
  if (!d.standard_rep()) throw UnsupportedOperation("no faithful representation attached to " + d.name());
  const StandardRep& rep = *d.standard_rep();
  const std::size_t n = rep.weights.size();
  MonomialIsocrystal wdot = MonomialIsocrystal::identity(n);
  for (int letter : d.weyl().word(x.finite_part()))
    wdot = monomial_product(wdot, simple_lift(d, rep, static_cast<std::size_t>(letter)));
  IntVector exps;
  for (const auto& chi : rep.weights) exps.push_back(d.pair(chi, x.translation_part()));
  return monomial_product(MonomialIsocrystal::diagonal(std::move(exps)), wdot);
}

namespace {

bool decency_holds(const RootDatum& d, const MonomialIsocrystal& lift, const RatVector& nu, int r) {
  MonomialIsocrystal power = monomial_power(lift, static_cast<std::uint64_t>(r));
  const auto& weights = d.standard_rep()->weights;
  for (std::size_t j = 0; j < power.size(); ++j) {
    if (power.permutation[j] != j || power.sign(j) != 1) return false;
    if (Rational(power.exponents[j]) != Rational(r) * d.pair(weights[j], nu)) return false;
  }
  return true;
}

}  // namespace

DecentRepresentative decent_representative(const ExtendedAffineElement& x) {
  const RootDatum& d = x.datum();
  if (!d.standard_rep()) throw UnsupportedOperation("no faithful representation attached to " + d.name());
  NewtonPoint nu = newton_point(x);
  DecentRepresentative out;
  out.lift = monomial_lift(x);
  out.nu = nu.vector;
  for (int r = nu.period; r <= 4 * nu.period; r += nu.period)
    if (decency_holds(d, out.lift, out.nu, r)) {
      out.period = r;
      return out;
    }
  throw ConsistencyError("monomial lift is not decent within four Newton periods");
}

bool verify_decency(const RootDatum& d, const DecentRepresentative& rep, const Integer* p) {
  if (!d.standard_rep()) throw UnsupportedOperation("no faithful representation attached to " + d.name());
  if (!decency_holds(d, rep.lift, rep.nu, rep.period)) return false;
  if (!p) return true;
  RatMatrix lhs = matrix_power(rep.lift.matrix(*p), static_cast<std::uint64_t>(rep.period));
  const auto& weights = d.standard_rep()->weights;
  RatVector diag;
  for (const auto& chi : weights) {
    Rational e = Rational(rep.period) * d.pair(chi, rep.nu);
    diag.push_back(rpow(Rational(*p), to_long(numerator_of(e))));
  }
  return lhs == RatMatrix::diagonal(diag);
}

std::string format_word(const RootDatum& d, std::size_t w) {
  const auto& word = d.weyl().word(w);
  if (word.empty()) return "e";
  std::string s;
  for (int letter : word) s += "s" + std::to_string(letter + 1);
  return s;
}

std::size_t parse_word(const RootDatum& d, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '*') t += c;
  if (t == "e" || t == "id" || t == "1" || t.empty()) return 0;
  std::vector<int> word;
  std::size_t i = 0;
  while (i < t.size()) {
    if (t[i] != 's') throw ConfigurationError("cannot parse Weyl word '" + text + "'");
    ++i;
    std::size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    int letter;
    if (j == i) {
      if (d.weyl().rank() != 1) throw ConfigurationError("bare 's' is only allowed in rank one: '" + text + "'");
      letter = 1;
    } else {
      letter = std::stoi(t.substr(i, j - i));
    }
    if (letter < 1 || static_cast<std::size_t>(letter) > d.weyl().rank())
      throw ConfigurationError("simple reflection index out of range in '" + text + "'");
    word.push_back(letter - 1);
    i = j;
  }
  return d.weyl().from_word(word);
}

Level parse_level(const std::string& s) {
  if (s == "iwahori") return Level::Iwahori;
  if (s == "hyperspecial") return Level::Hyperspecial;
  throw ConfigurationError("unknown level '" + s + "' (expected iwahori or hyperspecial)");
}

std::string level_name(Level l) { return l == Level::Iwahori ? "iwahori" : "hyperspecial"; }

}  // namespace newtonleaf
