#include <gtest/gtest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "newtonleaf/adlv.hpp"
#include "newtonleaf/errors.hpp"
#include "newtonleaf/linalg.hpp"
#include "newtonleaf/newton.hpp"
#include "oracles.hpp"

using namespace newtonleaf;
using namespace testing_helpers;

namespace {

MonomialIsocrystal monomial(std::vector<std::size_t> perm, std::vector<long long> exps, int r = 1) {
  MonomialIsocrystal m;
  m.permutation = std::move(perm);
  m.exponents = to_integers(exps);
  m.frobenius_power = r;
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int k = 0; k < 6; ++k) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    IntMatrix e = IntMatrix::identity(n);
    e(i, j) = coef(rng);
    u = u * e;
  }
  return u;
}

}  // namespace

TEST(Lattices, CountsMatchSubgroupOracle) {
  struct Case {
    std::size_t n;
    long long p;
    int depth;
  };
  for (const Case& c : std::vector<Case>{{1, 2, 1}, {1, 3, 1}, {1, 3, 2}, {2, 2, 1}, {2, 3, 1}, {2, 2, 2}, {3, 2, 1}}) {
    auto lattices = enumerate_lattices(c.n, c.p, c.depth);
    EXPECT_EQ(lattices.size(), oracle::subgroup_count(c.n, c.p, 2 * c.depth))
        << "n=" << c.n << " p=" << c.p << " N=" << c.depth;
    EXPECT_EQ(std::set<LatticeModel>(lattices.begin(), lattices.end()).size(), lattices.size());
    EXPECT_TRUE(std::is_sorted(lattices.begin(), lattices.end()));
  }
}

TEST(Lattices, WorkedCounts) {
  EXPECT_EQ(enumerate_lattices(2, 2, 1).size(), 15u);
  EXPECT_EQ(enumerate_lattices(1, 2, 1).size(), 3u);
  EXPECT_EQ(enumerate_lattices(1, 3, 1).size(), 3u);
}

TEST(Lattices, CanonicalFormFromAnyBasis) {
  std::mt19937_64 rng(71);
  for (const auto& l : enumerate_lattices(2, 3, 1)) {
    RatMatrix other = l.basis() * to_rational(random_unimodular(rng, 2));
    EXPECT_EQ(LatticeModel::from_basis(3, 1, other), l);
  }
}

TEST(Lattices, OutsideTheWindowRejected) {
  EXPECT_THROW(LatticeModel::from_basis(2, 1, RatMatrix{{Rational(1, 4), 0}, {0, 1}}), PreconditionError);
  EXPECT_THROW(LatticeModel::from_basis(2, 1, RatMatrix{{4, 0}, {0, 1}}), PreconditionError);
}

TEST(Lattices, BudgetGuard) {
  EXPECT_THROW(enumerate_lattices(2, 5, 1), ResourceError);
  EXPECT_THROW(enumerate_lattices(4, 2, 1), ResourceError);
  EXPECT_THROW(enumerate_lattices(2, 2, 3), ResourceError);
  LatticeBudget tiny;
  tiny.max_candidates = 10;
  EXPECT_THROW(enumerate_lattices(3, 3, 2, tiny), ResourceError);
}

TEST(RelativePosition, Examples) {
  auto std2 = LatticeModel::standard(2, 1, 2);
  EXPECT_EQ(relative_position(std2, LatticeModel::from_basis(2, 1, RatMatrix{{2, 0}, {0, 1}})),
            (std::vector<long long>{1, 0}));
  EXPECT_EQ(relative_position(std2, LatticeModel::from_basis(2, 1, RatMatrix{{2, 0}, {0, Rational(1, 2)}})),
            (std::vector<long long>{1, -1}));
  for (const auto& l : enumerate_lattices(2, 2, 1)) EXPECT_EQ(relative_position(l, l), (std::vector<long long>{0, 0}));
}

TEST(RelativePosition, AntisymmetricAndKappaAdditive) {
  auto lattices = enumerate_lattices(2, 3, 1);
  for (std::size_t i = 0; i < lattices.size(); i += 3)
    for (std::size_t j = 0; j < lattices.size(); j += 5) {
      auto fwd = relative_position(lattices[i], lattices[j]);
      auto back = relative_position(lattices[j], lattices[i]);
      std::vector<long long> expected(fwd.rbegin(), fwd.rend());
      for (auto& x : expected) x = -x;
      EXPECT_EQ(back, expected);
      long long total = 0;
      for (auto x : fwd) total += x;
      EXPECT_EQ(total, lattices[j].kappa() - lattices[i].kappa());
    }
}

TEST(RelativePosition, InvariantUnderUnimodularChange) {
  std::mt19937_64 rng(73);
  auto lattices = enumerate_lattices(2, 2, 1);
  for (int t = 0; t < 50; ++t) {
    const auto& a = lattices[rng() % lattices.size()];
    const auto& b = lattices[rng() % lattices.size()];
    RatMatrix u = to_rational(random_unimodular(rng, 2));
    auto ua = LatticeModel::from_basis(2, 1, u * a.basis());
    auto ub = LatticeModel::from_basis(2, 1, u * b.basis());
    EXPECT_EQ(relative_position(ua, ub), relative_position(a, b));
  }
}

TEST(Adlv, BasicGL2IsNonemptyAndDivisible) {
  auto census = adlv_points(monomial({1, 0}, {1, 0}), iv({1, 0}), 2, 1);
  EXPECT_EQ(census.size, 2u);
  ASSERT_FALSE(census.points.empty());
  for (const auto& pt : census.points) {
    EXPECT_EQ(pt.inv, (std::vector<long long>{1, 0}));
    EXPECT_TRUE(pt.certificate.divisible);
    EXPECT_TRUE(pt.certificate_verified);
    EXPECT_EQ(pt.kappa, pt.lattice.kappa());
  }
}

TEST(Adlv, NonAcceptableIsEmpty) {
  auto b = monomial_lift(elt(group("GL2"), "{lambda:[2,-1],w:e}"));
  for (int depth = 1; depth <= 2; ++depth)
    EXPECT_TRUE(adlv_points(b, iv({1, 0}), 2, depth).points.empty()) << depth;
}

TEST(Adlv, OrdinaryContainsStandardLattice) {
  auto census = adlv_points(monomial({0, 1}, {1, 0}), iv({1, 0}), 3, 1);
  auto standard = LatticeModel::standard(3, 1, 2);
  bool found = false;
  for (const auto& pt : census.points) found |= pt.lattice == standard;
  EXPECT_TRUE(found);
}

TEST(Adlv, MembershipMatchesDirectInvariant) {
  auto b = monomial({1, 0}, {1, 0});
  const Integer p = 3;
  auto census = adlv_points(b, iv({1, 0}), p, 1);
  std::set<LatticeModel> members;
  for (const auto& pt : census.points) members.insert(pt.lattice);
  const RatMatrix bm = b.matrix(p);
  for (const auto& l : enumerate_lattices(2, p, 1)) {
    auto image = bm * l.basis();
    auto inv = padic_elementary_exponents(inverse_or_throw(l.basis()) * image, p);
    EXPECT_EQ(members.count(l) == 1, inv == std::vector<long long>({1, 0})) << format_matrix(l.form());
  }
}

TEST(Adlv, RestrictionOfScalarsPeriodTwo) {
  // one-dimensional sigma^2-isocrystal of slope 1/2 viewed inside GL_2
  auto census = adlv_points(monomial({0}, {1}, 2), iv({1, 0}), 2, 1);
  EXPECT_EQ(census.size, 2u);
  for (const auto& pt : census.points) EXPECT_TRUE(pt.certificate_verified);
  EXPECT_THROW(adlv_points(monomial({0}, {1}, 3), iv({1, 0, 0}), 2, 1), ResourceError);
}

TEST(Adlv, InputValidation) {
  auto b = monomial({1, 0}, {1, 0});
  EXPECT_THROW(adlv_points(b, iv({0, 1}), 2, 1), PreconditionError);
  EXPECT_THROW(adlv_points(b, iv({2, 0}), 2, 1), PreconditionError);
  EXPECT_THROW(adlv_points(b, iv({1, 0, 0}), 2, 1), PreconditionError);
}

TEST(Adlv, MazurConsistencyAtDepthOne) {
  auto d = group("GL2");
  for (const auto& x : elements_up_to_length(d, 2, {})) {
    for (long long p : {2, 3}) {
      auto census = adlv_points(monomial_lift(x), iv({1, 0}), p, 1);
      if (!census.points.empty()) EXPECT_TRUE(neutral_acceptable(x, iv({1, 0}))) << format_element(x);
    }
  }
}
