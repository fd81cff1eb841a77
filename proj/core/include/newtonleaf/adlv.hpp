#pragma once

#include <vector>

#include "newtonleaf/isocrystal.hpp"

namespace newtonleaf {

// Lattice L with p^N Z^n <= L <= p^-N Z^n, stored as the column Hermite form
// of p^N L (entries in [0, p^2N)).
class LatticeModel {
 public:
  LatticeModel(Integer p, int depth, IntMatrix form);
  // Canonical model of the lattice spanned by the columns of `basis`.
  static LatticeModel from_basis(const Integer& p, int depth, const RatMatrix& basis);
  static LatticeModel standard(const Integer& p, int depth, std::size_t n);

  std::size_t n() const { return form_.rows(); }
  const Integer& prime() const { return p_; }
  int depth() const { return depth_; }
  const IntMatrix& form() const { return form_; }
  // Basis of L itself.
  RatMatrix basis() const;
  // v_p(det) of the basis, i.e. the Kottwitz class of g with L = g Z^n.
  long long kappa() const;

  bool operator==(const LatticeModel& o) const { return form_ == o.form_ && p_ == o.p_ && depth_ == o.depth_; }
  bool operator<(const LatticeModel& o) const { return form_ < o.form_; }

 private:
  Integer p_;
  int depth_;
  IntMatrix form_;
};

struct LatticeBudget {
  std::size_t max_candidates = 2000000;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Every lattice between p^N Z^n and p^-N Z^n, sorted by form.
std::vector<LatticeModel> enumerate_lattices(std::size_t n, const Integer& p, int depth,
                                             const LatticeBudget& budget = {});

// Elementary divisor exponents of L2 relative to L1, decreasing.
std::vector<long long> relative_position(const LatticeModel& l1, const LatticeModel& l2);

struct AdlvPoint {
  LatticeModel lattice;
  std::vector<long long> inv;
  long long kappa = 0;
  SlopeDivisibility certificate;  // for g^-1 b g on the standard lattice
  bool certificate_verified = false;
};

struct AdlvCensus {
  std::size_t size = 0;  // n r
  std::size_t candidates = 0;
  std::vector<AdlvPoint> points;
};

// Lattices L at depth N with inv(L, b sigma L) = mu.  For b of sigma-period
// r > 1 the datum is expanded by restriction of scalars and mu must be given
// for the expanded GL_{nr}.  Results are complete only up to the depth.
AdlvCensus adlv_points(const MonomialIsocrystal& b, const IntVector& mu, const Integer& p, int depth,
                       const LatticeBudget& budget = {});

}  // namespace newtonleaf
