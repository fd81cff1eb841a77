#include "newtonleaf/linalg.hpp"

#include <algorithm>
#include <utility>

namespace newtonleaf {

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

// row r -= q * row s
void row_axpy(IntMatrix& a, std::size_t r, std::size_t s, const Integer& q) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a(s, j) != 0) a(r, j) -= q * a(s, j);
}

void col_axpy(IntMatrix& a, std::size_t c, std::size_t s, const Integer& q) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a(i, s) != 0) a(i, c) -= q * a(i, s);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);

  auto bring_min_to = [&](std::size_t t, bool whole_block) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (!whole_block && i != t && j != t) continue;
        if (a(i, j) == 0) continue;
        Integer v = abs(a(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    swap_rows(a, t, bi);
    swap_rows(left, t, bi);
    swap_cols(a, t, bj);
    swap_cols(right, t, bj);
    return true;
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    if (!bring_min_to(t, true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        row_axpy(a, i, t, q);
        row_axpy(left, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        col_axpy(a, j, t, q);
        col_axpy(right, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        bring_min_to(t, false);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and repeat.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_axpy(a, t, i, Integer(-1));
            row_axpy(left, t, i, Integer(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < m; ++j) left(t, j) = -left(t, j);
    }
  }

  SmithForm out;
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(a(t, t));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

IntMatrix column_hermite_form(const IntMatrix& generators) {
  const std::size_t n = generators.rows();
  std::vector<IntVector> pool;
  for (std::size_t j = 0; j < generators.cols(); ++j) pool.push_back(generators.column(j));

  std::vector<IntVector> pivots(n);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = n - 1 - step;
    for (;;) {
      std::size_t best = pool.size();
      for (std::size_t c = 0; c < pool.size(); ++c)
        if (pool[c][i] != 0 && (best == pool.size() || abs(pool[c][i]) < abs(pool[best][i]))) best = c;
      if (best == pool.size()) throw PreconditionError("generators do not span a full-rank lattice");
      bool others = false;
      for (std::size_t c = 0; c < pool.size(); ++c) {
        if (c == best || pool[c][i] == 0) continue;
        Integer q = pool[c][i] / pool[best][i];
        for (std::size_t r = 0; r <= i; ++r) pool[c][r] -= q * pool[best][r];
        if (pool[c][i] != 0) others = true;
      }
      if (others) continue;
      IntVector piv = std::move(pool[best]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
      if (piv[i] < 0)
        for (auto& x : piv) x = -x;
      pivots[i] = std::move(piv);
      break;
    }
  }

  IntMatrix h = IntMatrix::from_columns(pivots, n);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = n - 1 - step;
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer q = floor_div(h(i, j), h(i, i));
      if (q != 0) col_axpy(h, j, i, q);
    }
  }
  return h;
}

bool in_triangular_lattice(const IntMatrix& basis, const IntVector& v) {
  IntVector rest = v;
  const std::size_t n = basis.rows();
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = n - 1 - step;
    if (rest[i] % basis(i, i) != 0) return false;
    Integer c = rest[i] / basis(i, i);
    if (c != 0)
      for (std::size_t r = 0; r <= i; ++r) rest[r] -= c * basis(r, i);
  }
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& a) {
  RatMatrix t = a;
  return row_reduce(t).size();
}

Rational determinant(const RatMatrix& input) {
  if (!input.is_square()) throw MismatchError("determinant of a non-square matrix");
  RatMatrix a = input;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& input) {
  if (!input.is_square()) throw MismatchError("determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  IntMatrix a = input;
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      swap_rows(a, k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (!a.is_square()) throw MismatchError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

RatMatrix inverse_or_throw(const RatMatrix& a) {
  auto inv = inverse(a);
  if (!inv) throw SingularInput("matrix is not invertible over Q");
  return *inv;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw MismatchError("solve: right-hand side has the wrong length");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto piv = row_reduce(aug);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  RatVector x(n, Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, n);
  return x;
}

RatMatrix kernel(const RatMatrix& a) {
  RatMatrix t = a;
  auto piv = row_reduce(t);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -t(r, f);
    basis.push_back(std::move(v));
  }
  return RatMatrix::from_columns(basis, a.cols());
}

std::vector<Rational> characteristic_polynomial(const RatMatrix& a) {
  if (!a.is_square()) throw MismatchError("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier.
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMatrix m(n, n);
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    RatMatrix am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long long>(k));
  }
  return c;
}

std::vector<long long> padic_elementary_exponents(const RatMatrix& input, const Integer& p) {
  if (!input.is_square()) throw MismatchError("elementary divisors of a non-square matrix");
  RatMatrix a = input;
  const std::size_t n = a.rows();
  std::vector<long long> out;
  for (std::size_t t = 0; t < n; ++t) {
    bool found = false;
    long long best = 0;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        long long v = valuation(a(i, j), p);
        if (!found || v < best) {
          found = true;
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (!found) throw SingularInput("elementary divisors of a singular matrix");
    for (std::size_t j = 0; j < n; ++j) std::swap(a(t, j), a(bi, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, t), a(i, bj));
    // Pivot has least valuation, so these ratios are p-integral.
    for (std::size_t i = t + 1; i < n; ++i) {
      if (a(i, t) == 0) continue;
      Rational f = a(i, t) / a(t, t);
      for (std::size_t j = t; j < n; ++j) a(i, j) -= f * a(t, j);
    }
    out.push_back(best);
    for (std::size_t j = t + 1; j < n; ++j) a(t, j) = 0;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::optional<long long> min_valuation(const RatMatrix& a, const Integer& p) {
  std::optional<long long> best;
  for (const auto& x : a.data()) {
    if (x == 0) continue;
    long long v = valuation(x, p);
    if (!best || v < *best) best = v;
  }
  return best;
}

std::vector<std::size_t> pivot_columns_mod_p(const IntMatrix& m, const Integer& p) {
  IntMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && mod_floor(a(piv, c), p) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    Integer inv = mod_inverse(a(r, c), p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Integer f = mod_floor(a(i, c) * inv, p);
      if (f == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = mod_floor(a(i, j) - f * a(r, j), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_mod_p(const IntMatrix& a, const Integer& p) { return pivot_columns_mod_p(a, p).size(); }

}  // namespace newtonleaf
