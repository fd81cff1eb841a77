#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "newtonleaf/linalg.hpp"
#include "newtonleaf/root_datum.hpp"

using namespace newtonleaf;
using namespace testing_helpers;

namespace {

const std::vector<std::string> kClassical = {"GL1", "GL2", "GL3", "GL4", "SL2", "SL3", "Sp2", "Sp4", "Sp6", "GSp2", "GSp4"};

IntVector root_sum(const RootDatum& d) {
  IntVector s(d.cochar_rank(), 0);
  for (auto i : d.positive_indices()) s = add(s, d.roots()[i]);
  return s;
}

}  // namespace

TEST(RootDatum, GL2RootsAndTwoRho) {
  auto d = group("GL2");
  ASSERT_EQ(d->roots().size(), 2u);
  std::set<IntVector> roots(d->roots().begin(), d->roots().end());
  EXPECT_EQ(roots, (std::set<IntVector>{iv({1, -1}), iv({-1, 1})}));
  EXPECT_EQ(d->two_rho(), iv({1, -1}));
}

TEST(RootDatum, GL3TwoRho) { EXPECT_EQ(group("GL3")->two_rho(), iv({2, 0, -2})); }

TEST(RootDatum, Sp4TwoRho) { EXPECT_EQ(group("Sp4")->two_rho(), iv({4, 2})); }

TEST(RootDatum, UnsupportedSizesRejected) {
  EXPECT_THROW(build_classical(GroupFamily::Sp, 3), ConfigurationError);
  EXPECT_THROW(build_classical(GroupFamily::GL, 0), ConfigurationError);
  EXPECT_THROW(build_classical(std::string("E"), 8), ConfigurationError);
}

TEST(RootDatum, StructuralInvariants) {
  for (const auto& name : kClassical) {
    SCOPED_TRACE(name);
    auto d = group(name);
    const auto& roots = d->roots();
    std::size_t positives = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      EXPECT_EQ(d->pair(roots[i], d->coroots()[i]), 2);
      auto neg = d->find_root(sub(IntVector(roots[i].size(), 0), roots[i]));
      ASSERT_TRUE(neg.has_value());
      EXPECT_EQ(*neg, d->negative_of(i));
      EXPECT_NE(d->is_positive(i), d->is_positive(*neg));
      positives += d->is_positive(i);
    }
    EXPECT_EQ(2 * positives, roots.size());
    EXPECT_EQ(d->two_rho(), root_sum(*d));
    for (auto s : d->simple_indices()) EXPECT_EQ(d->pair(d->two_rho(), d->coroots()[s]), 2);
  }
}

TEST(RootDatum, WeylGroupOrders) {
  EXPECT_EQ(group("GL3")->weyl().size(), 6u);
  EXPECT_EQ(group("GL4")->weyl().size(), 24u);
  EXPECT_EQ(group("Sp4")->weyl().size(), 8u);
  EXPECT_EQ(group("Sp6")->weyl().size(), 48u);
  EXPECT_EQ(group("GSp4")->weyl().size(), 8u);
}

TEST(DominantRep, Examples) {
  EXPECT_EQ(dominant_rep(*group("GL2"), rv({"0", "1"})), rv({"1", "0"}));
  EXPECT_EQ(dominant_rep(*group("GL3"), rv({"0", "1", "0"})), rv({"1", "0", "0"}));
  EXPECT_EQ(dominant_rep(*group("GL2"), rv({"-1/2", "-1/2"})), rv({"-1/2", "-1/2"}));
}

TEST(DominantRep, InvariantUnderRandomWeylWords) {
  std::mt19937_64 rng(7);
  for (const auto& name : kClassical) {
    SCOPED_TRACE(name);
    auto d = group(name);
    if (d->weyl().rank() == 0) continue;
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<std::size_t> gen(0, d->weyl().rank() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      RatVector v(d->cochar_rank());
      for (auto& x : v) x = Rational(entry(rng), 2);
      std::size_t w = 0;
      for (int k = 0; k < 8; ++k) w = d->weyl().multiply(d->weyl().simple(gen(rng)), w);
      RatVector dom = dominant_rep(*d, v);
      EXPECT_EQ(dominant_rep(*d, d->weyl().act(w, v)), dom);
      EXPECT_TRUE(d->is_dominant(dom));
      EXPECT_EQ(dominant_rep(*d, dom), dom);
      EXPECT_GE(d->pair(d->two_rho(), dom), 0);
    }
  }
}

TEST(DominanceOrder, Examples) {
  auto gl2 = group("GL2");
  EXPECT_TRUE(dominance_leq(*gl2, rv({"1/2", "1/2"}), rv({"1", "0"})));
  EXPECT_FALSE(dominance_leq(*gl2, rv({"2", "-1"}), rv({"1", "0"})));
  EXPECT_TRUE(dominance_leq(*group("GL3"), rv({"1", "0", "0"}), rv({"1", "0", "0"})));
  EXPECT_FALSE(dominance_leq(*gl2, rv({"1", "1"}), rv({"1", "0"})));
}

TEST(DominanceOrder, RejectsNonDominant) {
  EXPECT_THROW(dominance_leq(*group("GL2"), rv({"0", "1"}), rv({"1", "0"})), PreconditionError);
}

TEST(DominanceOrder, PartialOrderOnGL3Grid) {
  auto d = group("GL3");
  std::vector<RatVector> grid;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= a; ++b)
      for (int c = -2; c <= b; ++c) grid.push_back(rv({std::to_string(a), std::to_string(b), std::to_string(c)}));
  const std::size_t n = grid.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = dominance_leq(*d, grid[i], grid[j]);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_TRUE(leq[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j]) EXPECT_FALSE(leq[j][i]);
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k]) EXPECT_TRUE(leq[i][k]);
    }
  }
}

TEST(Coinvariants, SwapOnZ2) {
  LatticeAction act({IntMatrix{{0, 1}, {1, 0}}}, 2);
  auto c = coinvariants(act);
  EXPECT_EQ(c.free_rank, 1u);
  EXPECT_TRUE(c.torsion.empty());
}

TEST(Coinvariants, NegationOnZ) {
  LatticeAction act({IntMatrix{{-1}}}, 1);
  auto c = coinvariants(act);
  EXPECT_EQ(c.free_rank, 0u);
  EXPECT_EQ(c.torsion, iv({2}));
}

TEST(Coinvariants, TrivialAction) {
  auto c = coinvariants(LatticeAction::trivial(3));
  EXPECT_EQ(c.free_rank, 3u);
  EXPECT_TRUE(c.torsion.empty());
  EXPECT_EQ(c.projection, IntMatrix::identity(3));
}

TEST(Coinvariants, NonInvertibleGeneratorRejected) {
  EXPECT_THROW(LatticeAction({IntMatrix{{2}}}, 1), ConfigurationError);
}

TEST(Coinvariants, RankNullityAndProjectionKillsRelations) {
  std::vector<IntMatrix> gens = {IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
                                 IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{1, 0}, {0, 1}}};
  std::vector<std::size_t> dims = {3, 3, 2, 2};
  for (std::size_t g = 0; g < gens.size(); ++g) {
    LatticeAction act({gens[g]}, dims[g]);
    auto c = coinvariants(act);
    IntMatrix rel = IntMatrix::identity(dims[g]) - gens[g];
    EXPECT_EQ(c.free_rank + rank(to_rational(rel)), dims[g]);
    IntMatrix killed = c.projection * rel;
    // free rows must vanish; torsion rows vanish modulo their order
    for (std::size_t i = 0; i < killed.rows(); ++i)
      for (std::size_t j = 0; j < killed.cols(); ++j) {
        Integer m = i < c.torsion.size() ? c.torsion[i] : Integer(0);
        if (m == 0) EXPECT_EQ(killed(i, j), 0);
        else EXPECT_EQ(mod_floor(killed(i, j), m), 0);
      }
  }
}

TEST(Coinvariants, FundamentalGroups) {
  EXPECT_EQ(group("GL3")->fundamental_group().free_rank, 1u);
  EXPECT_EQ(group("GSp4")->fundamental_group().free_rank, 1u);
  EXPECT_EQ(group("Sp4")->fundamental_group().free_rank, 0u);
  EXPECT_TRUE(group("Sp4")->fundamental_group().torsion.empty());
  EXPECT_EQ(group("SL2")->fundamental_group().free_rank, 0u);
  EXPECT_TRUE(group("SL2")->fundamental_group().torsion.empty());
}

TEST(RootDatum, CustomDatumFromJson) {
  auto d = datum_from_json(parse_relaxed_json(R"({"group":"custom","roots":[[1,-1],[-1,1]],"coroots":[[1,-1],[-1,1]],"pairing":[[1,0],[0,1]]})"));
  EXPECT_EQ(d->weyl().size(), 2u);
  EXPECT_EQ(d->two_rho(), iv({1, -1}));
  EXPECT_FALSE(d->standard_rep().has_value());
}
