#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "newtonleaf/coinvariant.hpp"
#include "newtonleaf/matrix.hpp"
#include "newtonleaf/weyl_group.hpp"

namespace newtonleaf {

enum class GroupFamily { GL, SL, Sp, GSp, Custom };

std::string family_name(GroupFamily f);
GroupFamily parse_family(const std::string& name);

// Weights of a faithful representation together with the sign rule used for
// monomial lifts of simple reflections.
struct StandardRep {
  std::vector<IntVector> weights;
  // Simple reflections whose lift carries a -1 on the image of each weight
  // with negative pairing against the coroot (long roots of Sp/GSp).
  std::vector<bool> signed_reflection;
};

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;

// A based root datum in coordinates.  Cocharacters live in Z^cochar_rank,
// restricted to the sublattice spanned by `lattice_basis` (all of Z^k except
// for SL).  Characters are ambient vectors paired through `pairing`.
class RootDatum {
 public:
  static DatumPtr classical(GroupFamily family, int n);
  static DatumPtr custom(std::vector<IntVector> roots, std::vector<IntVector> coroots,
                         IntMatrix pairing);

  GroupFamily family() const { return family_; }
  int n() const { return n_; }
  std::string name() const;

  std::size_t cochar_rank() const { return ambient_; }
  std::size_t rank() const { return static_cast<std::size_t>(lattice_basis_.cols()); }
  const IntMatrix& lattice_basis() const { return lattice_basis_; }
  bool in_lattice(const IntVector& v) const;
  // Coordinates of v in the lattice basis; throws PreconditionError if v is not in X_*.
  IntVector lattice_coordinates(const IntVector& v) const;

  const std::vector<IntVector>& roots() const { return roots_; }
  const std::vector<IntVector>& coroots() const { return coroots_; }
  const IntMatrix& pairing() const { return pairing_; }
  const std::vector<std::size_t>& simple_indices() const { return simple_; }
  const std::vector<std::size_t>& positive_indices() const { return positive_; }
  bool is_positive(std::size_t root) const { return positive_flag_[root]; }
  std::size_t negative_of(std::size_t root) const { return negation_[root]; }
  std::optional<std::size_t> find_root(const IntVector& chi) const;
  // Integer coefficients of a root in the simple roots.
  const IntVector& simple_coefficients(std::size_t root) const { return simple_coeffs_[root]; }
  // Highest root of each irreducible component.
  const std::vector<std::size_t>& highest_roots() const { return highest_; }
  const IntVector& two_rho() const { return two_rho_; }

  Integer pair(const IntVector& chi, const IntVector& v) const;
  Rational pair(const IntVector& chi, const RatVector& v) const;

  const WeylGroup& weyl() const { return weyl_; }
  // Index of w * root.
  std::size_t act_on_root(std::size_t w, std::size_t root) const { return root_action_[w][root]; }
  // Weyl element of the reflection in `root`.
  std::size_t reflection(std::size_t root) const { return reflections_[root]; }

  const std::optional<StandardRep>& standard_rep() const { return standard_; }
  // X_* modulo the coroot lattice.
  const CoinvariantLattice& fundamental_group() const { return pi1_; }

  bool is_dominant(const RatVector& v) const;

 private:
  RootDatum() = default;
  void finish();

  GroupFamily family_ = GroupFamily::Custom;
  int n_ = 0;
  std::size_t ambient_ = 0;
  IntMatrix lattice_basis_;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  IntMatrix pairing_;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> positive_;
  std::vector<bool> positive_flag_;
  std::vector<std::size_t> negation_;
  std::vector<IntVector> simple_coeffs_;
  std::vector<std::size_t> highest_;
  IntVector two_rho_;
  WeylGroup weyl_;
  std::vector<std::vector<std::size_t>> root_action_;
  std::vector<std::size_t> reflections_;
  std::optional<StandardRep> standard_;
  CoinvariantLattice pi1_;
};

DatumPtr build_classical(GroupFamily family, int n);
// Accepts "GL", "SL", "Sp", "GSp" (case-insensitive).
DatumPtr build_classical(const std::string& tag, int n);
// Accepts names such as "GL2", "SL3", "Sp4", "GSp4".
DatumPtr datum_from_name(const std::string& name);

RatVector dominant_rep(const RootDatum& d, const RatVector& v);
// Also reports the Weyl element w with w * v dominant.
std::pair<RatVector, std::size_t> dominant_rep_with_element(const RootDatum& d, const RatVector& v);
bool dominance_leq(const RootDatum& d, const RatVector& v1, const RatVector& v2);

}  // namespace newtonleaf
