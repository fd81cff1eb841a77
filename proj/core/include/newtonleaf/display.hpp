#pragma once

#include <optional>

#include "newtonleaf/isocrystal.hpp"

namespace newtonleaf {

// A display over the Witt ring of F_p truncated at length K, i.e. over
// Z/p^K.  M is free with the standard basis; I_R M = pM.
struct DisplayDatum {
  Integer prime;
  int witt_length = 3;
  std::size_t rank = 0;
  IntMatrix m1;    // columns generate M_1 (n x c)
  IntMatrix phi;   // Phi on the basis of M (n x n)
  IntMatrix phi1;  // Phi_1 on the columns of m1 (n x c)

  Integer modulus() const { return ipow(prime, static_cast<std::uint64_t>(witt_length)); }
};

// M_1 = (b sigma)^{-1} M, Phi_1 = b sigma, Phi = p b sigma.  Throws
// NotPDivisibleGroup if a slope leaves [-1,0] or M_1 is not between pM and M.
DisplayDatum display_from_element(const MonomialIsocrystal& b, const Integer& p, int witt_length = 3);
DisplayDatum display_from_matrix(const RatMatrix& b, const Integer& p, int witt_length = 3);

struct DisplayCheck {
  bool contains_pm = false;      // I_R M inside M_1
  bool quotient_free = false;    // M/M_1 free over R
  bool compatible = false;       // p Phi_1 = Phi on M_1
  bool generates = false;        // Phi_1(M_1) generates M
  std::optional<std::size_t> witness_column;  // first column breaking compatibility
  std::size_t quotient_rank = 0;
  IntMatrix psi;                 // Phi_1 on a normal decomposition L, Phi on T
  bool psi_invertible = false;

  bool ok() const { return contains_pm && quotient_free && compatible && generates && psi_invertible; }
};

DisplayCheck display_check(const DisplayDatum& d);

}  // namespace newtonleaf
