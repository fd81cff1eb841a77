#include "newtonleaf/lattice_action.hpp"

#include <algorithm>
#include <set>

#include "newtonleaf/errors.hpp"
#include "newtonleaf/linalg.hpp"

namespace newtonleaf {

LatticeAction::LatticeAction(std::vector<IntMatrix> generators, std::size_t dimension)
    : generators_(std::move(generators)), dimension_(dimension) {
  const IntMatrix id = IntMatrix::identity(dimension);
  Integer total = 1;
  for (const auto& g : generators_) {
    if (g.rows() != dimension || g.cols() != dimension) throw ConfigurationError("action generator has the wrong size");
    Integer det = determinant(g);
    if (det != 1 && det != -1) throw ConfigurationError("action generator is not invertible over Z");
    IntMatrix power = g;
    int k = 1;
    while (power != id) {
      if (++k > kOrderCap) throw ConfigurationError("action generator does not have finite order");
      power = power * g;
    }
    total = lcm(total, Integer(k));
  }
  order_ = to_int(total);
}

LatticeAction LatticeAction::trivial(std::size_t dimension) { return LatticeAction({}, dimension); }

void LatticeAction::validate_against(const RootDatum& d) const {
  if (dimension_ != d.cochar_rank()) throw MismatchError("action dimension differs from the datum");
  std::set<IntVector> coroots(d.coroots().begin(), d.coroots().end());
  for (const auto& g : generators_) {
    for (std::size_t j = 0; j < d.rank(); ++j)
      if (!d.in_lattice(g * d.lattice_basis().column(j)))
        throw ConfigurationError("action does not preserve the cocharacter lattice");
    for (const auto& c : d.coroots())
      if (!coroots.count(g * c)) throw ConfigurationError("action does not permute the coroots");
  }
}

namespace {

// Row-style Hermite form of an integer matrix with independent rows.
IntMatrix row_hermite(IntMatrix a) {
  const std::size_t f = a.rows(), k = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < f; ++c) {
    for (;;) {
      std::size_t best = f;
      for (std::size_t i = r; i < f; ++i)
        if (a(i, c) != 0 && (best == f || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == f) break;
      if (best != r)
        for (std::size_t j = 0; j < k; ++j) std::swap(a(r, j), a(best, j));
      bool others = false;
      for (std::size_t i = r + 1; i < f; ++i) {
        if (a(i, c) == 0) continue;
        Integer q = a(i, c) / a(r, c);
        for (std::size_t j = 0; j < k; ++j) a(i, j) -= q * a(r, j);
        if (a(i, c) != 0) others = true;
      }
      if (others) continue;
      if (a(r, c) < 0)
        for (std::size_t j = 0; j < k; ++j) a(r, j) = -a(r, j);
      for (std::size_t i = 0; i < r; ++i) {
        Integer q = floor_div(a(i, c), a(r, c));
        if (q != 0)
          for (std::size_t j = 0; j < k; ++j) a(i, j) -= q * a(r, j);
      }
      ++r;
      break;
    }
  }
  return a;
}

}  // namespace

CoinvariantLattice quotient_presentation(const IntMatrix& relations, std::size_t k) {
  CoinvariantLattice out;
  if (relations.rows() != k) throw MismatchError("relations have the wrong number of rows");
  if (relations.cols() == 0) {
    out.free_rank = k;
    out.projection = IntMatrix::identity(k);
    return out;
  }
  SmithForm s = smith_normal_form(relations);
  std::size_t nonzero = 0;
  for (const auto& x : s.diagonal)
    if (x != 0) ++nonzero;
  std::vector<IntVector> rows;
  for (std::size_t t = 0; t < nonzero; ++t) {
    if (s.diagonal[t] == 1) continue;
    IntVector row = s.left.row(t);
    for (auto& x : row) x = mod_floor(x, s.diagonal[t]);
    out.torsion.push_back(s.diagonal[t]);
    rows.push_back(std::move(row));
  }
  out.free_rank = k - nonzero;
  if (out.free_rank) {
    IntMatrix free(out.free_rank, k);
    for (std::size_t t = nonzero; t < k; ++t)
      for (std::size_t j = 0; j < k; ++j) free(t - nonzero, j) = s.left(t, j);
    free = row_hermite(free);
    for (std::size_t t = 0; t < out.free_rank; ++t) rows.push_back(free.row(t));
  }
  out.projection = rows.empty() ? IntMatrix(0, k) : IntMatrix::from_rows(rows);
  return out;
}

CoinvariantLattice coinvariants(const LatticeAction& act) {
  const std::size_t k = act.dimension();
  std::vector<IntVector> cols;
  for (const auto& g : act.generators()) {
    IntMatrix rel = IntMatrix::identity(k) - g;
    for (std::size_t j = 0; j < k; ++j) cols.push_back(rel.column(j));
  }
  return quotient_presentation(IntMatrix::from_columns(cols, k), k);
}

CoinvariantLattice coinvariants(const RootDatum& d, const LatticeAction& act) {
  act.validate_against(d);
  const std::size_t r = d.rank();
  std::vector<IntVector> cols;
  for (const auto& g : act.generators())
    for (std::size_t j = 0; j < r; ++j) {
      IntVector b = d.lattice_basis().column(j);
      cols.push_back(d.lattice_coordinates(sub(b, g * b)));
    }
  return quotient_presentation(IntMatrix::from_columns(cols, r), r);
}

CoinvariantClass project(const CoinvariantLattice& c, const IntVector& coords) {
  CoinvariantClass out;
  const std::size_t t = c.torsion.size();
  for (std::size_t i = 0; i < c.projection.rows(); ++i) {
    Integer v = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) v += c.projection(i, j) * coords[j];
    if (i < t) {
      out.torsion.push_back(mod_floor(v, c.torsion[i]));
      out.moduli.push_back(c.torsion[i]);
    } else
      out.free.push_back(v);
  }
  return out;
}

std::string format_class(const CoinvariantClass& c) {
  std::vector<std::string> parts;
  for (const auto& x : c.free) parts.push_back(to_string(x));
  for (std::size_t i = 0; i < c.torsion.size(); ++i)
    parts.push_back(to_string(c.torsion[i]) + "mod" + to_string(c.moduli[i]));
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ";" : "") + parts[i];
  return s;
}

CoinvariantClass parse_class(const std::string& text, const CoinvariantLattice& shape) {
  CoinvariantClass out;
  if (shape.free_rank == 0 && shape.torsion.empty()) {
    if (text != "0") throw ConfigurationError("expected the trivial class '0', got '" + text + "'");
    return out;
  }
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(';', start);
    std::string part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    auto m = part.find("mod");
    if (m == std::string::npos) {
      if (!out.torsion.empty()) throw ConfigurationError("free coordinate after torsion in '" + text + "'");
      out.free.push_back(numerator_of(parse_rational(part)));
    } else {
      out.torsion.push_back(numerator_of(parse_rational(part.substr(0, m))));
      out.moduli.push_back(numerator_of(parse_rational(part.substr(m + 3))));
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (out.free.size() != shape.free_rank || out.moduli != shape.torsion)
    throw ConfigurationError("class '" + text + "' does not match the presentation");
  return out;
}

}  // namespace newtonleaf
