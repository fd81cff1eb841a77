#include "newtonleaf/adlv.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "newtonleaf/errors.hpp"
#include "newtonleaf/linalg.hpp"

namespace newtonleaf {

namespace {

void require_budget(std::size_t n, const Integer& p, int depth) {
  if (!(p == 2 || p == 3) || n < 1 || n > 3 || depth < 0 || depth > 2)
    throw ResourceError("lattice enumeration is limited to p in {2,3}, n <= 3, depth <= 2 (got p=" + to_string(p) +
                        ", n=" + std::to_string(n) + ", depth=" + std::to_string(depth) + ")");
}

unsigned worker_count(const LatticeBudget& budget, std::size_t jobs) {
  unsigned t = budget.threads ? budget.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

// Runs body(i) for i in [0, jobs) on a few threads; each worker owns a strided slice.
void parallel_for(std::size_t jobs, unsigned workers, const std::function<void(std::size_t, unsigned)>& body) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) body(i, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < jobs; i += workers) body(i, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

bool p_integral(const RatMatrix& m, const Integer& p) {
  for (const auto& c : m.data())
    if (c != 0 && valuation(c, p) < 0) return false;
  return true;
}

}  // namespace

LatticeModel::LatticeModel(Integer p, int depth, IntMatrix form) : p_(std::move(p)), depth_(depth), form_(std::move(form)) {
  if (!form_.is_square()) throw PreconditionError("lattice form must be square");
  const Integer q = ipow(p_, 2 * static_cast<std::uint64_t>(depth_));
  for (std::size_t i = 0; i < n(); ++i) {
    if (form_(i, i) <= 0 || q % form_(i, i) != 0) throw PreconditionError("lattice form diagonal must divide p^2N");
    for (std::size_t j = 0; j < i; ++j)
      if (form_(i, j) != 0) throw PreconditionError("lattice form must be upper triangular");
    for (std::size_t j = i + 1; j < n(); ++j)
      if (form_(i, j) < 0 || form_(i, j) >= form_(i, i)) throw PreconditionError("lattice form is not reduced");
  }
}

LatticeModel LatticeModel::from_basis(const Integer& p, int depth, const RatMatrix& basis) {
  if (!basis.is_square()) throw PreconditionError("lattice basis must be square");
  const std::size_t n = basis.rows();
  const RatMatrix scaled = basis * rpow(Rational(p), depth);
  const Integer q = ipow(p, 2 * static_cast<std::uint64_t>(depth));
  if (!p_integral(scaled, p)) throw PreconditionError("lattice is not inside p^-N Z^n");
  auto inv = inverse(scaled);
  if (!inv || !p_integral(*inv * Rational(q), p)) throw PreconditionError("lattice does not contain p^N Z^n");
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector v;
    for (std::size_t i = 0; i < n; ++i)
      v.push_back(mod_floor(numerator_of(scaled(i, j)) * mod_inverse(denominator_of(scaled(i, j)), q), q));
    gens.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = q;
    gens.push_back(std::move(e));
  }
  return LatticeModel(p, depth, column_hermite_form(IntMatrix::from_columns(gens, n)));
}

LatticeModel LatticeModel::standard(const Integer& p, int depth, std::size_t n) {
  return LatticeModel(p, depth, IntMatrix::identity(n) * ipow(p, static_cast<std::uint64_t>(depth)));
}

RatMatrix LatticeModel::basis() const { return to_rational(form_) * rpow(Rational(p_), -depth_); }

long long LatticeModel::kappa() const {
  long long v = 0;
  for (std::size_t i = 0; i < n(); ++i) v += valuation(form_(i, i), p_);
  return v - static_cast<long long>(n()) * depth_;
}

std::vector<LatticeModel> enumerate_lattices(std::size_t n, const Integer& p, int depth, const LatticeBudget& budget) {
  require_budget(n, p, depth);
  const Integer q = ipow(p, 2 * static_cast<std::uint64_t>(depth));
  const int top = 2 * depth;

  // Diagonal exponent patterns and the number of Hermite forms under each.
  std::vector<std::vector<int>> patterns;
  std::vector<int> d(n, 0);
  Integer estimate = 0;
  for (;;) {
    Integer count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= ipow(p, static_cast<std::uint64_t>(d[i]) * (n - 1 - i));
    estimate += count;
    patterns.push_back(d);
    std::size_t i = 0;
    while (i < n && d[i] == top) d[i++] = 0;
    if (i == n) break;
    ++d[i];
  }
  if (estimate > Integer(budget.max_candidates))
    throw ResourceError("lattice enumeration would test " + to_string(estimate) + " candidates (budget " +
                        std::to_string(budget.max_candidates) + ")");

  const unsigned workers = worker_count(budget, patterns.size());
  std::vector<std::vector<LatticeModel>> found(workers);
  parallel_for(patterns.size(), workers, [&](std::size_t k, unsigned w) {
    const auto& pat = patterns[k];
    IntMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) h(i, i) = ipow(p, static_cast<std::uint64_t>(pat[i]));
    // Off-diagonal slots (i, j), j > i, each in [0, h(i,i)).
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    for (;;) {
      // q h^{-1} integral <=> q Z^n inside the column span.
      const auto inv = inverse(to_rational(h));
      bool contains = true;
      for (const auto& c : inv->data())
        if (!is_integral(c * Rational(q))) contains = false;
      if (contains) found[w].emplace_back(p, depth, h);
      std::size_t s = 0;
      while (s < slots.size()) {
        auto [i, j] = slots[s];
        if (++h(i, j) < h(i, i)) break;
        h(i, j) = 0;
        ++s;
      }
      if (s == slots.size()) break;
    }
  });
  std::vector<LatticeModel> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> relative_position(const LatticeModel& l1, const LatticeModel& l2) {
  if (l1.n() != l2.n() || l1.prime() != l2.prime() || l1.depth() != l2.depth())
    throw MismatchError("lattice models of different shapes");
  const RatMatrix change = inverse_or_throw(to_rational(l1.form())) * to_rational(l2.form());
  return padic_elementary_exponents(change, l1.prime());
}

AdlvCensus adlv_points(const MonomialIsocrystal& b, const IntVector& mu, const Integer& p, int depth,
                       const LatticeBudget& budget) {
  b.validate();
  if (b.frobenius_power > 2) throw ResourceError("restriction of scalars is limited to sigma-period r <= 2");
  const RationalIsocrystal iso =
      b.frobenius_power == 1 ? RationalIsocrystal{b.matrix(p), p} : restriction_of_scalars(b, p);
  AdlvCensus census;
  census.size = iso.matrix.rows();
  if (mu.size() != census.size)
    throw PreconditionError("mu has " + std::to_string(mu.size()) + " entries, expected " + std::to_string(census.size));
  std::vector<long long> target;
  for (const auto& m : mu) target.push_back(to_long(m));
  if (!std::is_sorted(target.rbegin(), target.rend())) throw PreconditionError("mu must be dominant (decreasing)");
  if (target.front() - target.back() > 1) throw PreconditionError("mu must be minuscule");

  const auto lattices = enumerate_lattices(census.size, p, depth, budget);
  census.candidates = lattices.size();
  const unsigned workers = worker_count(budget, lattices.size());
  std::vector<std::vector<AdlvPoint>> found(workers);
  parallel_for(lattices.size(), workers, [&](std::size_t k, unsigned w) {
    const LatticeModel& lat = lattices[k];
    const RatMatrix g = lat.basis();
    const RatMatrix ginv = inverse_or_throw(g);
    const RatMatrix local = ginv * iso.matrix * g;
    auto inv = padic_elementary_exponents(local, p);
    if (inv != target) return;
    const RationalIsocrystal module{local, p};
    AdlvPoint pt{lat, inv, lat.kappa(), is_completely_slope_divisible(module), false};
    pt.certificate_verified = verify_certificate(module, pt.certificate);
    found[w].push_back(std::move(pt));
  });
  for (auto& f : found)
    for (auto& pt : f) census.points.push_back(std::move(pt));
  std::sort(census.points.begin(), census.points.end(),
            [](const AdlvPoint& a, const AdlvPoint& b2) { return a.lattice < b2.lattice; });
  return census;
}

}  // namespace newtonleaf
