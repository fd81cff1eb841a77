#include <algorithm>
#include <map>
#include <mutex>

#include "newtonleaf/affine_weyl.hpp"
#include "newtonleaf/errors.hpp"

namespace newtonleaf {

namespace {

// Write-once per-datum caches.  An entry whose datum has been destroyed is
// reset the next time its address is reused.
struct DatumCache {
  std::weak_ptr<const RootDatum> owner;
  std::vector<ExtendedAffineElement> simple;
  std::map<ExtendedAffineElement, ElementSet> lower;
};

std::mutex cache_mu;
std::map<const RootDatum*, DatumCache>& caches() {
  static std::map<const RootDatum*, DatumCache> c;
  return c;
}

DatumCache& cache_for(const DatumPtr& d) {
  auto& c = caches()[d.get()];
  if (c.owner.expired() || c.owner.lock().get() != d.get()) {
    c = DatumCache{};
    c.owner = d;
  }
  return c;
}

std::vector<ExtendedAffineElement> compute_simple(const DatumPtr& d) {
  std::vector<ExtendedAffineElement> out;
  for (std::size_t i = 0; i < d->weyl().rank(); ++i)
    out.push_back(ExtendedAffineElement::finite(d, d->weyl().simple(i)));
  for (auto theta : d->highest_roots()) {
    const IntVector& cor = d->coroots()[theta];
    IntVector neg(cor);
    for (auto& c : neg) c = -c;
    const std::size_t s = d->reflection(theta);
    ExtendedAffineElement up(d, cor, s), down(d, neg, s);
    if (length(up) == 1)
      out.push_back(up);
    else if (length(down) == 1)
      out.push_back(down);
    else
      throw ConsistencyError("no affine simple reflection of length one");
  }
  return out;
}

}  // namespace

std::vector<ExtendedAffineElement> affine_simple_reflections(const DatumPtr& d) {
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto& c = cache_for(d);
    if (!c.simple.empty() || d->weyl().rank() == 0) return c.simple;
  }
  auto s = compute_simple(d);
  std::lock_guard<std::mutex> lock(cache_mu);
  auto& c = cache_for(d);
  if (c.simple.empty()) c.simple = s;
  return c.simple;
}

const ElementSet& bruhat_lower_set(const ExtendedAffineElement& y) {
  const DatumPtr& d = y.datum_ptr();
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto& c = cache_for(d);
    auto it = c.lower.find(y);
    if (it != c.lower.end()) return it->second;
  }
  ElementSet result;
  const long long ly = length(y);
  if (ly == 0) {
    result.insert(y);
  } else {
    bool found = false;
    for (const auto& s : affine_simple_reflections(d)) {
      ExtendedAffineElement z = compose(s, y);
      if (length(z) >= ly) continue;
      const ElementSet& below = bruhat_lower_set(z);
      result = below;
      for (const auto& u : below) result.insert(compose(s, u));
      found = true;
      break;
    }
    if (!found) throw ConsistencyError("element of positive length without a left descent");
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  auto& c = cache_for(d);
  return c.lower.emplace(y, std::move(result)).first->second;
}

bool bruhat_leq(const ExtendedAffineElement& x, const ExtendedAffineElement& y) {
  if (x.datum_ptr().get() != y.datum_ptr().get()) throw MismatchError("elements over different root data");
  if (kottwitz(x) != kottwitz(y)) return false;
  if (length(x) > length(y)) return false;
  return bruhat_lower_set(y).count(x) > 0;
}

namespace {

std::vector<CoinvariantClass> window_targets(const RootDatum& d, const KappaWindow& window) {
  const CoinvariantLattice& pi1 = d.fundamental_group();
  std::vector<CoinvariantClass> targets{CoinvariantClass{}};
  for (std::size_t t = 0; t < pi1.torsion.size(); ++t) {
    std::vector<CoinvariantClass> next;
    for (const auto& c : targets)
      for (Integer r = 0; r < pi1.torsion[t]; ++r) {
        CoinvariantClass e = c;
        e.torsion.push_back(r);
        e.moduli.push_back(pi1.torsion[t]);
        next.push_back(e);
      }
    targets = std::move(next);
  }
  for (std::size_t f = 0; f < pi1.free_rank; ++f) {
    std::vector<CoinvariantClass> next;
    for (const auto& c : targets)
      for (long long v = window.lo; v <= window.hi; ++v) {
        CoinvariantClass e = c;
        e.free.push_back(Integer(v));
        next.push_back(e);
      }
    targets = std::move(next);
  }
  return targets;
}

}  // namespace

std::vector<ExtendedAffineElement> omega_representatives(const DatumPtr& d, const KappaWindow& window) {
  if (window.lo > window.hi) throw ConfigurationError("empty Kottwitz window");
  auto targets = window_targets(*d, window);
  std::map<CoinvariantClass, ExtendedAffineElement> found;
  std::set<CoinvariantClass> wanted(targets.begin(), targets.end());
  const std::size_t r = d->rank();
  for (long long radius = 0; radius <= 8 && found.size() < wanted.size(); ++radius) {
    IntVector coords(r, Integer(-radius));
    for (;;) {
      IntVector lambda = d->lattice_basis() * coords;
      CoinvariantClass k = kottwitz_of_cocharacter(*d, lambda);
      if (wanted.count(k) && !found.count(k)) {
        for (std::size_t w = 0; w < d->weyl().size(); ++w) {
          ExtendedAffineElement x(d, lambda, w);
          if (length(x) == 0) {
            found.emplace(k, x);
            break;
          }
        }
      }
      std::size_t i = 0;
      while (i < r && coords[i] == radius) coords[i++] = -radius;
      if (i == r) break;
      ++coords[i];
    }
  }
  if (found.size() < wanted.size()) throw ResourceError("could not find all length-zero representatives in the search box");
  std::vector<ExtendedAffineElement> out;
  for (const auto& t : targets) out.push_back(found.at(t));
  return out;
}

std::vector<ExtendedAffineElement> elements_up_to_length(const DatumPtr& d, int cap, const KappaWindow& window) {
  if (cap < 0) throw ConfigurationError("length cap must be nonnegative");
  auto level = omega_representatives(d, window);
  ElementSet all(level.begin(), level.end());
  const auto simple = affine_simple_reflections(d);
  for (int k = 0; k < cap; ++k) {
    ElementSet next;
    for (const auto& x : level)
      for (const auto& s : simple) {
        ExtendedAffineElement y = compose(s, x);
        if (length(y) == k + 1) next.insert(y);
      }
    level.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  std::vector<ExtendedAffineElement> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), output_order);
  return out;
}

}  // namespace newtonleaf
