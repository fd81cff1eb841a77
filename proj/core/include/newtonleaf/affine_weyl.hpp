#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "newtonleaf/isocrystal.hpp"
#include "newtonleaf/lattice_action.hpp"
#include "newtonleaf/root_datum.hpp"

namespace newtonleaf {

// Frobenius on X_*, compatible with the based root datum.
class FrobeniusAction {
 public:
  static FrobeniusAction trivial(DatumPtr d);
  // lambda -> -w0(lambda)
  static FrobeniusAction opposition(DatumPtr d);
  static FrobeniusAction from_matrix(DatumPtr d, IntMatrix m);

  const IntMatrix& matrix() const { return matrix_; }
  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  int order() const { return order_; }
  bool is_trivial() const { return trivial_; }
  IntVector apply(const IntVector& v) const { return matrix_ * v; }
  RatVector apply(const RatVector& v) const;
  // sigma w sigma^{-1}
  std::size_t apply_weyl(std::size_t w) const { return weyl_image_[w]; }
  std::string name() const { return name_; }

 private:
  FrobeniusAction() = default;
  DatumPtr datum_;
  IntMatrix matrix_;
  std::vector<std::size_t> weyl_image_;
  int order_ = 1;
  bool trivial_ = true;
  std::string name_ = "trivial";
};

// t^lambda * w.  lambda is in ambient cocharacter coordinates.
class ExtendedAffineElement {
 public:
  ExtendedAffineElement(DatumPtr d, IntVector lambda, std::size_t w);

  static ExtendedAffineElement identity(DatumPtr d);
  static ExtendedAffineElement translation(DatumPtr d, IntVector lambda);
  static ExtendedAffineElement finite(DatumPtr d, std::size_t w);

  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  const IntVector& translation_part() const { return lambda_; }
  std::size_t finite_part() const { return w_; }

  bool operator==(const ExtendedAffineElement& o) const { return w_ == o.w_ && lambda_ == o.lambda_; }
  bool operator<(const ExtendedAffineElement& o) const {
    if (lambda_ != o.lambda_) return lambda_ < o.lambda_;
    return w_ < o.w_;
  }

 private:
  DatumPtr datum_;
  IntVector lambda_;
  std::size_t w_;
};

using ElementSet = std::set<ExtendedAffineElement>;

ExtendedAffineElement compose(const ExtendedAffineElement& x, const ExtendedAffineElement& y);
ExtendedAffineElement invert(const ExtendedAffineElement& x);
ExtendedAffineElement sigma_apply(const ExtendedAffineElement& x, const FrobeniusAction& sigma);
// g x sigma(g)^{-1}
ExtendedAffineElement sigma_conjugate(const ExtendedAffineElement& g, const ExtendedAffineElement& x,
                                      const FrobeniusAction& sigma);

long long length(const ExtendedAffineElement& x);
// Sort key for output: (length, lambda, w).
bool output_order(const ExtendedAffineElement& a, const ExtendedAffineElement& b);

// Finite simple reflections followed by one affine reflection per
// irreducible component.
std::vector<ExtendedAffineElement> affine_simple_reflections(const DatumPtr& d);

bool bruhat_leq(const ExtendedAffineElement& x, const ExtendedAffineElement& y);
// {x : x <= y}
const ElementSet& bruhat_lower_set(const ExtendedAffineElement& y);

struct NewtonPoint {
  RatVector vector;
  RatVector dominant;
  int period = 1;
};
NewtonPoint newton_point(const ExtendedAffineElement& x, const FrobeniusAction& sigma);
NewtonPoint newton_point(const ExtendedAffineElement& x);

// pi_1(G) = X_* / coroot lattice (split data: no inertia).
const CoinvariantLattice& fundamental_group(const RootDatum& d);
// pi_1(G) modulo (1 - sigma).
CoinvariantLattice fundamental_group_sigma(const FrobeniusAction& sigma);
CoinvariantClass kottwitz(const ExtendedAffineElement& x);
CoinvariantClass kottwitz_sigma(const ExtendedAffineElement& x, const FrobeniusAction& sigma);
CoinvariantClass kottwitz_of_cocharacter(const RootDatum& d, const IntVector& lambda);

// Monomial lift p^lambda * w-dot in the standard representation.
MonomialIsocrystal monomial_lift(const ExtendedAffineElement& x);

struct DecentRepresentative {
  int period = 1;
  MonomialIsocrystal lift;
  RatVector nu;
};
// Trivial Frobenius.  The period is the least r with lift^r = p^{r nu}; it can
// be twice the Newton period when the lift carries signs.
DecentRepresentative decent_representative(const ExtendedAffineElement& x);
// Exact check of lift^r = diag(p^{r <chi_j, nu>}) symbolically and, if p is
// given, by rational matrix multiplication.
bool verify_decency(const RootDatum& d, const DecentRepresentative& rep, const Integer* p = nullptr);

enum class Level { Iwahori, Hyperspecial };
Level parse_level(const std::string& s);
std::string level_name(Level l);

struct AdmissibleSet {
  Level level = Level::Iwahori;
  std::vector<ExtendedAffineElement> elements;  // Iwahori, output order
  std::vector<IntVector> dominant_translations;  // Hyperspecial, sorted
};
AdmissibleSet admissible_set(const DatumPtr& d, const IntVector& mu, Level level);

struct KappaWindow {
  long long lo = -1;
  long long hi = 1;
};

// Length-zero elements whose Kottwitz free coordinates lie in the window.
std::vector<ExtendedAffineElement> omega_representatives(const DatumPtr& d, const KappaWindow& window);
// All elements of length <= cap with Kottwitz class in the window.
std::vector<ExtendedAffineElement> elements_up_to_length(const DatumPtr& d, int cap, const KappaWindow& window);

struct ClassEnumerationConfig {
  int length_cap = 1;
  int conj_cap = -1;  // default length_cap + 2
  int slack = 1;
  KappaWindow window;
  std::size_t max_nodes = 200000;
};

struct SigmaClassBlock {
  std::vector<ExtendedAffineElement> members;  // output order
  std::vector<bool> seed;
  RatVector nu_dominant;
  CoinvariantClass kappa;
};

struct SigmaClassPartition {
  std::vector<SigmaClassBlock> blocks;
  int conj_cap = 0;
};

SigmaClassPartition enumerate_sigma_classes(const DatumPtr& d, const ClassEnumerationConfig& cfg,
                                            const FrobeniusAction& sigma);

// "s1s2", "e" for the identity.
std::string format_word(const RootDatum& d, std::size_t w);
std::size_t parse_word(const RootDatum& d, const std::string& text);

}  // namespace newtonleaf
