#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "newtonleaf/display.hpp"
#include "newtonleaf/errors.hpp"
#include "newtonleaf/io.hpp"

using namespace newtonleaf;

namespace {

MonomialIsocrystal monomial(std::vector<std::size_t> perm, std::vector<long long> exps, int r = 1) {
  MonomialIsocrystal m;
  m.permutation = std::move(perm);
  m.exponents = to_integers(exps);
  m.frobenius_power = r;
  return m;
}

}  // namespace

TEST(Display, OrdinaryRankTwo) {
  const Integer p = 3;
  auto d = display_from_matrix(RatMatrix{{1, 0}, {0, Rational(1, 3)}}, p);
  EXPECT_EQ(d.m1, (IntMatrix{{1, 0}, {0, 3}}));
  auto c = display_check(d);
  EXPECT_TRUE(c.contains_pm);
  EXPECT_TRUE(c.quotient_free);
  EXPECT_TRUE(c.compatible);
  EXPECT_TRUE(c.generates);
  EXPECT_TRUE(c.psi_invertible);
  EXPECT_EQ(c.quotient_rank, 1u);
  EXPECT_TRUE(c.ok());
}

TEST(Display, EtaleDirectionRejected) {
  EXPECT_THROW(display_from_matrix(RatMatrix{{1, 0}, {0, 2}}, Integer(2)), NotPDivisibleGroup);
  EXPECT_THROW(display_from_element(monomial({0, 1}, {0, 1}), Integer(2)), NotPDivisibleGroup);
  EXPECT_THROW(display_from_element(monomial({1, 0}, {1, -2}), Integer(2)), NotPDivisibleGroup);
}

TEST(Display, Supersingular) {
  auto d = display_from_matrix(RatMatrix{{0, 1}, {Rational(1, 2), 0}}, Integer(2));
  auto c = display_check(d);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.quotient_rank, 1u);
}

TEST(Display, ZeroPhi1DoesNotGenerate) {
  auto d = display_from_element(monomial({0, 1}, {0, -1}), Integer(2));
  d.phi1 = IntMatrix(2, 2);
  auto c = display_check(d);
  EXPECT_FALSE(c.generates);
  EXPECT_FALSE(c.ok());
}

TEST(Display, BrokenCompatibilityHasWitness) {
  auto d = display_from_element(monomial({0, 1}, {0, -1}), Integer(2));
  d.phi(0, 1) += 1;
  auto c = display_check(d);
  EXPECT_FALSE(c.compatible);
  ASSERT_TRUE(c.witness_column.has_value());
  EXPECT_EQ(*c.witness_column, 1u);
}

TEST(Display, MissingPMIsDetected) {
  auto d = display_from_element(monomial({0, 1}, {0, -1}), Integer(2));
  d.m1 = IntMatrix{{1}, {0}};
  d.phi1 = IntMatrix{{1}, {0}};
  EXPECT_FALSE(display_check(d).contains_pm);
}

TEST(Display, EveryMonomialInTheWindowPasses) {
  for (long long p : {2, 3}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          std::vector<long long> exps(n);
          std::size_t dim = 0;
          for (std::size_t i = 0; i < n; ++i) {
            exps[i] = (mask >> i & 1) ? -1 : 0;
            dim += (mask >> i & 1);
          }
          auto b = monomial(perm, exps);
          auto c = display_check(display_from_element(b, Integer(p)));
          EXPECT_TRUE(c.ok()) << "p=" << p << " mask=" << mask;
          EXPECT_EQ(c.quotient_rank, dim);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(Display, HigherPeriodUnsupported) {
  EXPECT_THROW(display_from_element(monomial({0}, {-1}, 2), Integer(2)), UnsupportedOperation);
}

TEST(Display, SerializesAsWittComponents) {
  auto d = display_from_element(monomial({0, 1}, {0, -1}), Integer(2));
  Json j = display_to_json(d);
  EXPECT_EQ(j.at("prime"), 2);
  EXPECT_EQ(j.at("witt_length"), 3);
  EXPECT_EQ(j.at("Phi").size(), 2u);
  Json c = display_check_to_json(display_check(d));
  EXPECT_TRUE(c.at("Phi1_generates").get<bool>());
}
