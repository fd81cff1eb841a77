#include "newtonleaf/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <regex>

#include "newtonleaf/errors.hpp"
#include "newtonleaf/linalg.hpp"

namespace newtonleaf {

namespace {

IntVector unit(std::size_t k, std::size_t i, long long c = 1) {
  IntVector v(k, Integer(0));
  v[i] = c;
  return v;
}

IntVector combo(std::size_t k, std::initializer_list<std::pair<std::size_t, long long>> terms) {
  IntVector v(k, Integer(0));
  for (auto [i, c] : terms) v[i] += c;
  return v;
}

IntVector negate(const IntVector& v) {
  IntVector out(v);
  for (auto& x : out) x = -x;
  return out;
}

struct Pairs {
  std::vector<IntVector> roots, coroots;
  void add(IntVector r, IntVector c) {
    roots.push_back(std::move(r));
    coroots.push_back(std::move(c));
  }
  void add_negatives() {
    const std::size_t m = roots.size();
    for (std::size_t k = 0; k < m; ++k) add(negate(roots[k]), negate(coroots[k]));
  }
};

}  // namespace

std::string family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::GL: return "GL";
    case GroupFamily::SL: return "SL";
    case GroupFamily::Sp: return "Sp";
    case GroupFamily::GSp: return "GSp";
    case GroupFamily::Custom: return "custom";
  }
  return "custom";
}

GroupFamily parse_family(const std::string& name) {
  std::string u;
  for (char c : name) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "GL") return GroupFamily::GL;
  if (u == "SL") return GroupFamily::SL;
  if (u == "SP") return GroupFamily::Sp;
  if (u == "GSP") return GroupFamily::GSp;
  if (u == "CUSTOM") return GroupFamily::Custom;
  throw ConfigurationError("unknown group family '" + name + "'");
}

std::string RootDatum::name() const {
  if (family_ == GroupFamily::Custom) return "custom";
  return family_name(family_) + std::to_string(n_);
}

DatumPtr RootDatum::classical(GroupFamily family, int n) {
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->family_ = family;
  d->n_ = n;
  Pairs pr;
  StandardRep rep;
  switch (family) {
    case GroupFamily::GL:
    case GroupFamily::SL: {
      if (n < 1) throw ConfigurationError(family_name(family) + "(n) needs n >= 1");
      const std::size_t k = static_cast<std::size_t>(n);
      d->ambient_ = k;
      for (std::size_t i = 0; i + 1 < k; ++i) pr.add(combo(k, {{i, 1}, {i + 1, -1}}), combo(k, {{i, 1}, {i + 1, -1}}));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) pr.add(combo(k, {{i, 1}, {j, -1}}), combo(k, {{i, 1}, {j, -1}}));
      pr.add_negatives();
      if (family == GroupFamily::GL) {
        d->lattice_basis_ = IntMatrix::identity(k);
      } else {
        d->lattice_basis_ = IntMatrix(k, k - 1);
        for (std::size_t i = 0; i + 1 < k; ++i) {
          d->lattice_basis_(i, i) = 1;
          d->lattice_basis_(i + 1, i) = -1;
        }
      }
      for (std::size_t i = 0; i < k; ++i) rep.weights.push_back(unit(k, i));
      rep.signed_reflection.assign(k ? k - 1 : 0, false);
      break;
    }
    case GroupFamily::Sp:
    case GroupFamily::GSp: {
      if (n < 2 || n % 2) throw ConfigurationError(family_name(family) + "(n) needs n even and >= 2");
      const std::size_t g = static_cast<std::size_t>(n / 2);
      const bool sim = family == GroupFamily::GSp;
      const std::size_t k = sim ? g + 1 : g;
      d->ambient_ = k;
      d->lattice_basis_ = IntMatrix::identity(k);
      // In GSp coordinates the last entry is the similitude (a_1..a_g, c).
      auto plus = [&](std::size_t i, std::size_t j) {
        return sim ? combo(k, {{i, 1}, {j, 1}, {g, -1}}) : combo(k, {{i, 1}, {j, 1}});
      };
      auto twice = [&](std::size_t i) { return sim ? combo(k, {{i, 2}, {g, -1}}) : combo(k, {{i, 2}}); };
      for (std::size_t i = 0; i + 1 < g; ++i) pr.add(combo(k, {{i, 1}, {i + 1, -1}}), combo(k, {{i, 1}, {i + 1, -1}}));
      pr.add(twice(g - 1), unit(k, g - 1));
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 2; j < g; ++j) pr.add(combo(k, {{i, 1}, {j, -1}}), combo(k, {{i, 1}, {j, -1}}));
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) pr.add(plus(i, j), combo(k, {{i, 1}, {j, 1}}));
      for (std::size_t i = 0; i + 1 < g; ++i) pr.add(twice(i), unit(k, i));
      pr.add_negatives();
      for (std::size_t i = 0; i < g; ++i) rep.weights.push_back(unit(k, i));
      for (std::size_t i = 0; i < g; ++i) {
        const std::size_t j = g - 1 - i;
        rep.weights.push_back(sim ? combo(k, {{g, 1}, {j, -1}}) : unit(k, j, -1));
      }
      rep.signed_reflection.assign(g, false);
      rep.signed_reflection[g - 1] = true;
      break;
    }
    case GroupFamily::Custom:
      throw ConfigurationError("custom data must be built from explicit roots");
  }
  d->roots_ = std::move(pr.roots);
  d->coroots_ = std::move(pr.coroots);
  d->pairing_ = IntMatrix::identity(d->ambient_);
  d->standard_ = std::move(rep);
  d->finish();
  return d;
}

DatumPtr RootDatum::custom(std::vector<IntVector> roots, std::vector<IntVector> coroots, IntMatrix pairing) {
  if (!pairing.is_square() || pairing.rows() == 0) throw ConfigurationError("custom datum: pairing must be square and nonempty");
  if (roots.size() != coroots.size()) throw ConfigurationError("custom datum: roots and coroots differ in number");
  const std::size_t k = pairing.rows();
  for (const auto& r : roots)
    if (r.size() != k) throw ConfigurationError("custom datum: root of the wrong length");
  for (const auto& c : coroots)
    if (c.size() != k) throw ConfigurationError("custom datum: coroot of the wrong length");
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->family_ = GroupFamily::Custom;
  d->n_ = static_cast<int>(k);
  d->ambient_ = k;
  d->lattice_basis_ = IntMatrix::identity(k);
  d->roots_ = std::move(roots);
  d->coroots_ = std::move(coroots);
  d->pairing_ = std::move(pairing);
  d->finish();
  return d;
}

void RootDatum::finish() {
  const std::size_t m = roots_.size();
  const std::size_t k = ambient_;

  for (std::size_t a = 0; a < m; ++a) {
    if (pair(roots_[a], coroots_[a]) != 2) throw ConfigurationError("root/coroot pairing is not 2");
    if (!in_lattice(coroots_[a])) throw ConfigurationError("coroot outside the cocharacter lattice");
  }

  negation_.assign(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    IntVector neg = negate(roots_[a]);
    for (std::size_t b = 0; b < m; ++b)
      if (roots_[b] == neg) {
        if (coroots_[b] != negate(coroots_[a])) throw ConfigurationError("coroot of -a is not -a^vee");
        negation_[a] = b;
      }
    if (negation_[a] == m) throw ConfigurationError("negation does not preserve the root set");
  }

  // Positive system from a generic functional: h_j = K^(k-1-j).
  Integer bound = 1;
  std::vector<IntVector> paired;
  for (const auto& r : roots_) {
    IntVector pr(k, Integer(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) pr[j] += r[i] * pairing_(i, j);
    for (const auto& x : pr) bound = std::max(bound, Integer(abs(x)));
    paired.push_back(std::move(pr));
  }
  const Integer K = 2 * bound + 1;
  positive_flag_.assign(m, false);
  for (std::size_t a = 0; a < m; ++a) {
    Integer h = 0;
    for (std::size_t j = 0; j < k; ++j) h = h * K + paired[a][j];
    if (h == 0) throw ConfigurationError("root pairs to zero with every cocharacter");
    positive_flag_[a] = h > 0;
    if (positive_flag_[a]) positive_.push_back(a);
  }

  std::map<IntVector, std::size_t> lookup;
  for (std::size_t a = 0; a < m; ++a)
    if (!lookup.emplace(roots_[a], a).second) throw ConfigurationError("repeated root");
  for (auto a : positive_) {
    bool decomposable = false;
    for (auto b : positive_) {
      auto it = lookup.find(sub(roots_[a], roots_[b]));
      if (it != lookup.end() && positive_flag_[it->second]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple_.push_back(a);
  }

  // Simple-root coefficients.
  RatMatrix simple_cols(k, simple_.size());
  for (std::size_t c = 0; c < simple_.size(); ++c)
    for (std::size_t i = 0; i < k; ++i) simple_cols(i, c) = Rational(roots_[simple_[c]][i]);
  if (newtonleaf::rank(simple_cols) != simple_.size()) throw ConfigurationError("simple roots are linearly dependent");
  simple_coeffs_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    auto sol = solve(simple_cols, to_rationals(roots_[a]));
    if (!sol) throw ConfigurationError("root outside the span of the simple roots");
    IntVector c = require_integral(*sol);
    bool nonneg = std::all_of(c.begin(), c.end(), [](const Integer& x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](const Integer& x) { return x <= 0; });
    if (positive_flag_[a] ? !nonneg : !nonpos) throw ConfigurationError("simple roots do not form a base");
    simple_coeffs_[a] = std::move(c);
  }

  // Weyl group.
  std::vector<IntMatrix> cochar_gens, char_gens;
  auto reflection_matrices = [&](std::size_t a) {
    IntMatrix s = IntMatrix::identity(k), t = IntMatrix::identity(k);
    IntVector pc(k, Integer(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) pc[i] += pairing_(i, j) * coroots_[a][j];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        s(i, j) -= coroots_[a][i] * paired[a][j];
        t(i, j) -= roots_[a][i] * pc[j];
      }
    return std::make_pair(s, t);
  };
  for (auto a : simple_) {
    auto [s, t] = reflection_matrices(a);
    cochar_gens.push_back(std::move(s));
    char_gens.push_back(std::move(t));
  }
  weyl_ = WeylGroup(k, cochar_gens, char_gens);

  root_action_.assign(weyl_.size(), std::vector<std::size_t>(m));
  for (std::size_t w = 0; w < weyl_.size(); ++w)
    for (std::size_t a = 0; a < m; ++a) {
      auto it = lookup.find(weyl_.act_char(w, roots_[a]));
      if (it == lookup.end()) throw ConfigurationError("Weyl group does not preserve the roots");
      root_action_[w][a] = it->second;
    }
  reflections_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    auto idx = weyl_.find_cochar(reflection_matrices(a).first);
    if (!idx) throw ConfigurationError("root reflection missing from the Weyl group");
    reflections_[a] = *idx;
  }

  two_rho_.assign(k, Integer(0));
  for (auto a : positive_) two_rho_ = add(two_rho_, roots_[a]);
  for (auto a : simple_)
    if (pair(two_rho_, coroots_[a]) != 2) throw ConfigurationError("<2rho, simple coroot> != 2");

  std::vector<IntVector> rel;
  for (auto a : positive_) rel.push_back(lattice_coordinates(coroots_[a]));
  pi1_ = quotient_presentation(IntMatrix::from_columns(rel, rank()), rank());

  // Irreducible components of the Dynkin diagram; highest root of each.
  const std::size_t r = simple_.size();
  std::vector<std::size_t> comp(r);
  for (std::size_t i = 0; i < r; ++i) comp[i] = i;
  std::function<std::size_t(std::size_t)> root_of = [&](std::size_t i) {
    return comp[i] == i ? i : comp[i] = root_of(comp[i]);
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (pair(roots_[simple_[i]], coroots_[simple_[j]]) != 0) comp[root_of(i)] = root_of(j);
  std::vector<std::size_t> heads;
  for (std::size_t i = 0; i < r; ++i)
    if (root_of(i) == i) heads.push_back(i);
  for (auto h : heads) {
    std::size_t best = m;
    Integer best_height = -1;
    int ties = 0;
    for (auto a : positive_) {
      std::size_t first = r;
      Integer height = 0;
      for (std::size_t i = 0; i < r; ++i) {
        height += simple_coeffs_[a][i];
        if (simple_coeffs_[a][i] != 0 && first == r) first = i;
      }
      if (root_of(first) != h) continue;
      if (height > best_height) {
        best_height = height;
        best = a;
        ties = 0;
      } else if (height == best_height) {
        ++ties;
      }
    }
    if (ties) throw ConfigurationError("component without a unique highest root");
    highest_.push_back(best);
  }
}

bool RootDatum::in_lattice(const IntVector& v) const {
  if (v.size() != ambient_) return false;
  if (lattice_basis_.cols() == ambient_ && lattice_basis_ == IntMatrix::identity(ambient_)) return true;
  auto sol = solve(to_rational(lattice_basis_), to_rationals(v));
  if (!sol) return false;
  return std::all_of(sol->begin(), sol->end(), [](const Rational& q) { return is_integral(q); });
}

IntVector RootDatum::lattice_coordinates(const IntVector& v) const {
  if (v.size() != ambient_) throw MismatchError("cocharacter has the wrong length");
  if (lattice_basis_.cols() == ambient_ && lattice_basis_ == IntMatrix::identity(ambient_)) return v;
  auto sol = solve(to_rational(lattice_basis_), to_rationals(v));
  if (!sol) throw PreconditionError("vector " + format_vector(v) + " is not in the cocharacter lattice");
  return require_integral(*sol);
}

std::optional<std::size_t> RootDatum::find_root(const IntVector& chi) const {
  for (std::size_t a = 0; a < roots_.size(); ++a)
    if (roots_[a] == chi) return a;
  return std::nullopt;
}

Integer RootDatum::pair(const IntVector& chi, const IntVector& v) const {
  if (chi.size() != ambient_ || v.size() != ambient_) throw MismatchError("pairing: wrong vector length");
  Integer s = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (chi[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (pairing_(i, j) != 0) s += chi[i] * pairing_(i, j) * v[j];
  }
  return s;
}

Rational RootDatum::pair(const IntVector& chi, const RatVector& v) const {
  if (chi.size() != ambient_ || v.size() != ambient_) throw MismatchError("pairing: wrong vector length");
  Rational s = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (chi[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (pairing_(i, j) != 0) s += Rational(chi[i] * pairing_(i, j)) * v[j];
  }
  return s;
}

bool RootDatum::is_dominant(const RatVector& v) const {
  for (auto a : simple_)
    if (pair(roots_[a], v) < 0) return false;
  return true;
}

DatumPtr build_classical(GroupFamily family, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, DatumPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(family), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  DatumPtr d = RootDatum::classical(family, n);
  cache.emplace(key, d);
  return d;
}

DatumPtr build_classical(const std::string& tag, int n) { return build_classical(parse_family(tag), n); }

DatumPtr datum_from_name(const std::string& name) {
  static const std::regex re("^(GL|SL|SP|GSP)([0-9]+)$", std::regex::icase);
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw ConfigurationError("unrecognized group '" + name + "'");
  return build_classical(m[1].str(), std::stoi(m[2].str()));
}

std::pair<RatVector, std::size_t> dominant_rep_with_element(const RootDatum& d, const RatVector& v) {
  if (v.size() != d.cochar_rank()) throw MismatchError("cocharacter has the wrong length");
  RatVector cur = v;
  std::size_t w = 0;
  const auto& simple = d.simple_indices();
  for (;;) {
    std::size_t hit = simple.size();
    for (std::size_t i = 0; i < simple.size(); ++i)
      if (d.pair(d.roots()[simple[i]], cur) < 0) {
        hit = i;
        break;
      }
    if (hit == simple.size()) return {cur, w};
    cur = d.weyl().act(d.weyl().simple(hit), cur);
    w = d.weyl().left_simple(hit, w);
  }
}

RatVector dominant_rep(const RootDatum& d, const RatVector& v) { return dominant_rep_with_element(d, v).first; }

bool dominance_leq(const RootDatum& d, const RatVector& v1, const RatVector& v2) {
  if (!d.is_dominant(v1) || !d.is_dominant(v2)) throw PreconditionError("dominance_leq needs dominant inputs");
  const auto& simple = d.simple_indices();
  const std::size_t k = d.cochar_rank();
  RatMatrix cols(k, simple.size());
  for (std::size_t c = 0; c < simple.size(); ++c)
    for (std::size_t i = 0; i < k; ++i) cols(i, c) = Rational(d.coroots()[simple[c]][i]);
  auto sol = solve(cols, sub(v2, v1));
  if (!sol) return false;
  return std::all_of(sol->begin(), sol->end(), [](const Rational& q) { return q >= 0; });
}

}  // namespace newtonleaf
