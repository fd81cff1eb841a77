#pragma once

#include <compare>
#include <string>

#include "newtonleaf/matrix.hpp"

namespace newtonleaf {

// X_* / (relations), presented as Z^free_rank + sum Z/torsion_i.
struct CoinvariantLattice {
  std::size_t free_rank = 0;
  IntVector torsion;
  // Rows: first the torsion coordinates, then the free ones.  Acts on
  // lattice-basis coordinates of X_*.
  IntMatrix projection;
};

// Element of a coinvariant presentation.
struct CoinvariantClass {
  IntVector free;
  IntVector torsion;
  IntVector moduli;
  bool operator==(const CoinvariantClass&) const = default;
  auto operator<=>(const CoinvariantClass&) const = default;
};

// "1", "0", "2;1mod2" (free coordinates first, then torsion residues).
std::string format_class(const CoinvariantClass& c);
CoinvariantClass parse_class(const std::string& text, const CoinvariantLattice& shape);

// Quotient of the lattice (rank k) by the column span of `relations` (k x m).
CoinvariantLattice quotient_presentation(const IntMatrix& relations, std::size_t k);
CoinvariantClass project(const CoinvariantLattice& c, const IntVector& lattice_coords);

}  // namespace newtonleaf
