#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "newtonleaf/errors.hpp"
#include "newtonleaf/newton.hpp"
#include "oracles.hpp"

using namespace newtonleaf;
using namespace testing_helpers;

namespace {

ExtendedAffineElement basic_gsp4() {
  auto d = group("GSp4");
  for (const auto& x : elements_up_to_length(d, 0, {})) {
    auto k = kottwitz(x);
    if (k.free == iv({1})) return x;
  }
  throw std::logic_error("no length-zero element with similitude 1");
}

}  // namespace

TEST(LeafReport, GL2Ordinary) {
  auto r = leaf_report(elt(group("GL2"), "{lambda:[1,0],w:e}"));
  EXPECT_EQ(r.nu_dominant, rv({"1", "0"}));
  EXPECT_EQ(r.leaf_dim, 1);
  EXPECT_EQ(r.jb_dim, 2);
  EXPECT_FALSE(r.basic);
  EXPECT_TRUE(r.checked);
}

TEST(LeafReport, GL2Basic) {
  auto r = leaf_report(elt(group("GL2"), "{lambda:[1,0],w:s}"));
  EXPECT_EQ(r.nu_dominant, rv({"1/2", "1/2"}));
  EXPECT_EQ(r.leaf_dim, 0);
  EXPECT_EQ(r.jb_dim, 4);
  EXPECT_TRUE(r.basic);
  EXPECT_EQ(r.adjoint_slopes, SlopeMultiset(4, Rational(0)));
}

TEST(LeafReport, GSp4OrdinaryAndSupersingular) {
  auto d = group("GSp4");
  auto ord = leaf_report(elt(d, "{lambda:[1,1,1],w:e}"));
  EXPECT_EQ(ord.leaf_dim, 3);
  EXPECT_EQ(ord.jb_dim, 5);
  auto ss = leaf_report(basic_gsp4());
  EXPECT_EQ(ss.nu_dominant, rv({"1/2", "1/2", "1"}));
  EXPECT_EQ(ss.leaf_dim, 0);
  EXPECT_TRUE(ss.basic);
  EXPECT_EQ(ss.jb_dim, 11);
}

TEST(LeafReport, GL3WorkedValue) {
  EXPECT_EQ(leaf_report(elt(group("GL3"), "{lambda:[1,0,0],w:e}")).leaf_dim, 2);
}

TEST(LeafReport, ReportInvariants) {
  for (const std::string name : {"GL2", "GL3", "GL4", "Sp4", "GSp4", "SL3"}) {
    auto d = group(name);
    const long long dim_g = static_cast<long long>(d->rank() + d->roots().size());
    for (const auto& x : elements_up_to_length(d, 2, {})) {
      auto r = leaf_report(x);
      SCOPED_TRACE(format_element(x));
      EXPECT_TRUE(r.checked);
      bool all_zero = true, minuscule = true;
      long long zero_roots = 0;
      for (const auto& a : d->roots()) {
        Rational v = d->pair(a, r.nu_dominant);
        if (v != 0) all_zero = false;
        else ++zero_roots;
        if (v != 0 && v != 1 && v != -1) minuscule = false;
      }
      EXPECT_EQ(r.basic, all_zero);
      EXPECT_EQ(r.basic, r.leaf_dim == 0);
      EXPECT_EQ(r.jb_dim, static_cast<long long>(d->rank()) + zero_roots);
      if (minuscule) EXPECT_EQ(r.jb_dim, dim_g - 2 * r.leaf_dim);
      EXPECT_EQ(Rational(r.leaf_dim), d->pair(d->two_rho(), r.nu_dominant));
    }
  }
}

TEST(LeafReport, MatchesGLSlopeGapOracle) {
  for (int n = 2; n <= 4; ++n) {
    auto d = group("GL" + std::to_string(n));
    for (const auto& x : elements_up_to_length(d, 3, {}))
      EXPECT_EQ(Rational(leaf_report(x).leaf_dim),
                oracle::gl_leaf_dimension(slopes_monomial(decent_representative(x).lift)))
          << format_element(x);
  }
}

TEST(LeafReport, ConstantOnSigmaClasses) {
  for (const std::string name : {"GL2", "GL3", "GSp4"}) {
    auto d = group(name);
    for (const auto& sigma : {FrobeniusAction::trivial(d), FrobeniusAction::opposition(d)}) {
      ClassEnumerationConfig cfg;
      cfg.length_cap = 1;
      for (const auto& blk : enumerate_sigma_classes(d, cfg, sigma).blocks) {
        long long dim = leaf_report(blk.members.front(), sigma).leaf_dim;
        for (const auto& m : blk.members) EXPECT_EQ(leaf_report(m, sigma).leaf_dim, dim);
      }
    }
  }
}

TEST(NeutralAcceptable, Examples) {
  auto d = group("GL2");
  EXPECT_TRUE(neutral_acceptable(elt(d, "{lambda:[1,0],w:s}"), iv({1, 0})));
  EXPECT_FALSE(neutral_acceptable(elt(d, "{lambda:[2,-1],w:e}"), iv({1, 0})));
  EXPECT_TRUE(neutral_acceptable(elt(d, "{lambda:[1,0],w:e}"), iv({1, 0})));
  EXPECT_FALSE(neutral_acceptable(elt(d, "{lambda:[0,0],w:e}"), iv({1, 0})));
  EXPECT_THROW(neutral_acceptable(elt(d, "{lambda:[1,0],w:e}"), iv({0, 1})), PreconditionError);
}

TEST(NeutralAcceptable, SigmaAverage) {
  auto d = group("GL3");
  EXPECT_EQ(sigma_average(FrobeniusAction::trivial(d), iv({1, 0, 0})), rv({"1", "0", "0"}));
  EXPECT_EQ(sigma_average(FrobeniusAction::opposition(d), iv({1, 0, -1})), rv({"1", "0", "-1"}));
  EXPECT_EQ(sigma_average(FrobeniusAction::opposition(d), iv({1, 0, 0})), rv({"1/2", "0", "-1/2"}));
}

TEST(NeutralAcceptable, InvariantUnderConjugation) {
  auto d = group("GL3");
  auto sigma = FrobeniusAction::trivial(d);
  auto pool = elements_up_to_length(d, 2, {});
  std::mt19937_64 rng(61);
  for (int t = 0; t < 300; ++t) {
    const auto& g = pool[rng() % pool.size()];
    const auto& x = pool[rng() % pool.size()];
    for (const auto& mu : {iv({1, 0, 0}), iv({1, 1, 0}), iv({2, 0, -1})})
      EXPECT_EQ(neutral_acceptable(sigma_conjugate(g, x, sigma), mu), neutral_acceptable(x, mu));
  }
}

TEST(CrossCheck, GL3LengthTwoAllPass) {
  auto d = group("GL3");
  auto report = cross_check_dimension(elements_up_to_length(d, 2, {}));
  EXPECT_TRUE(report.all_pass);
  EXPECT_FALSE(report.rows.empty());
  for (const auto& row : report.rows) EXPECT_EQ(row.two_rho_side, row.root_sum_side);
}

TEST(CrossCheck, Sp4AndZero) {
  auto sp4 = check_newton_vector(group("Sp4"), rv({"1", "0"}));
  EXPECT_EQ(sp4.two_rho_side, 4);
  EXPECT_EQ(sp4.root_sum_side, 4);
  EXPECT_TRUE(sp4.pass);
  auto zero = check_newton_vector(group("GL3"), rv({"0", "0", "0"}));
  EXPECT_EQ(zero.two_rho_side, 0);
  EXPECT_TRUE(zero.pass);
}
