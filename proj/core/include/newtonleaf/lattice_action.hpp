#pragma once

#include <vector>

#include "newtonleaf/coinvariant.hpp"
#include "newtonleaf/matrix.hpp"
#include "newtonleaf/root_datum.hpp"

namespace newtonleaf {

// A finite group of automorphisms of X_*, given by generators in ambient
// cocharacter coordinates.
class LatticeAction {
 public:
  static constexpr int kOrderCap = 1000;

  LatticeAction() = default;
  // Validates invertibility over Z and finite order; `dimension` is the
  // ambient size.
  LatticeAction(std::vector<IntMatrix> generators, std::size_t dimension);

  static LatticeAction trivial(std::size_t dimension);

  const std::vector<IntMatrix>& generators() const { return generators_; }
  std::size_t dimension() const { return dimension_; }
  int order() const { return order_; }

  // Checks that every generator preserves X_* and permutes the coroots.
  void validate_against(const RootDatum& d) const;

 private:
  std::vector<IntMatrix> generators_;
  std::size_t dimension_ = 0;
  int order_ = 1;
};

// X_* / span{x - gamma x}, X_* taken as Z^dimension.
CoinvariantLattice coinvariants(const LatticeAction& act);
// Same on the cocharacter lattice of `d`.
CoinvariantLattice coinvariants(const RootDatum& d, const LatticeAction& act);

}  // namespace newtonleaf
