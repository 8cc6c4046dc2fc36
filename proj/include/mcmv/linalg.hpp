#pragma once

// Fraction-free linear algebra over Z[X1..Xn].
//
// Bareiss elimination keeps every intermediate entry a polynomial: each
// update (a_kk a_ij - a_ik a_kj) is divided exactly by the previous pivot,
// and the last pivot is the determinant (up to the sign of the row swaps).

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poly_gcd.hpp"
#include "zpoly.hpp"

namespace mcmv::la {

using Vec = std::vector<IntPoly>;

namespace detail {

// Cost used to prefer cheap pivots: constants first, then fewer terms.
inline std::size_t pivot_cost(const IntPoly& f) { return f.is_constant() ? 0 : f.terms().size() + 1; }

inline IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  auto q = b.is_constant() ? a.divide_by_constant(b.constant_coeff()) : exact_divide(a, b);
  if (!q) throw std::logic_error("fraction-free elimination: inexact division");
  return *q;
}

}  // namespace detail

/// Rows of a fraction-free echelon form of the vectors, computed greedily in
/// the given order: pivots lists the indices of the vectors that are
/// independent of all earlier ones.
struct Echelon {
  std::vector<std::size_t> pivots;
  /// Last Bareiss pivot; when the pivot vectors form a square matrix this is
  /// its determinant up to sign.
  IntPoly last_pivot;
  std::size_t rank() const { return pivots.size(); }
};

inline Echelon echelon(const std::vector<Vec>& vecs, std::size_t nvars) {
  Echelon out;
  out.last_pivot = int_constant(nvars, 1);
  if (vecs.empty()) return out;
  const std::size_t dim = vecs.front().size();
  std::vector<Vec> rows = vecs;
  std::vector<std::size_t> origin(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) origin[i] = i;
  std::vector<std::size_t> col(dim);
  for (std::size_t j = 0; j < dim; ++j) col[j] = j;

  IntPoly prev = int_constant(nvars, 1);
  std::size_t k = 0;
  for (std::size_t r = 0; r < rows.size() && k < dim; ++r) {
    // row r (already eliminated against pivots 0..k-1): find its best entry
    std::optional<std::size_t> best;
    for (std::size_t j = k; j < dim; ++j) {
      const auto& e = rows[r][col[j]];
      if (e.is_zero()) continue;
      if (!best || detail::pivot_cost(e) < detail::pivot_cost(rows[r][col[*best]])) best = j;
    }
    if (!best) continue;
    std::swap(col[k], col[*best]);
    std::swap(rows[k], rows[r]);
    std::swap(origin[k], origin[r]);
    out.pivots.push_back(origin[k]);
    const IntPoly piv = rows[k][col[k]];
    for (std::size_t i = k + 1; i < rows.size(); ++i) {
      const IntPoly lead = rows[i][col[k]];
      for (std::size_t j = k + 1; j < dim; ++j) {
        IntPoly v = piv * rows[i][col[j]];
        if (!lead.is_zero()) v -= lead * rows[k][col[j]];
        rows[i][col[j]] = detail::divexact(v, prev);
      }
      rows[i][col[k]] = IntPoly(nvars);
    }
    prev = piv;
    ++k;
    // rows k..r-1 were all zero; one of them now sits at r
  }
  out.last_pivot = prev;
  return out;
}

/// Solution of B x = y for a square nonsingular B given by its columns, for
/// several right-hand sides: x = numerators / det.
struct SquareSolution {
  IntPoly det;
  std::vector<Vec> numerators;  // one per right-hand side
};

inline std::optional<SquareSolution> solve_square(const std::vector<Vec>& columns, const std::vector<Vec>& rhs,
                                                  std::size_t nvars) {
  const std::size_t n = columns.size();
  for (const auto& c : columns)
    if (c.size() != n) throw std::invalid_argument("solve_square: matrix is not square");
  for (const auto& y : rhs)
    if (y.size() != n) throw std::invalid_argument("solve_square: right-hand side has the wrong length");
  const std::size_t m = n + rhs.size();
  // row-major augmented matrix [B | Y]
  std::vector<Vec> a(n, Vec(m, IntPoly(nvars)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = columns[j][i];
  for (std::size_t t = 0; t < rhs.size(); ++t)
    for (std::size_t i = 0; i < n; ++i) a[i][n + t] = rhs[t][i];

  IntPoly prev = int_constant(nvars, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> best;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (!best || detail::pivot_cost(a[i][k]) < detail::pivot_cost(a[*best][k])) best = i;
    }
    if (!best) return std::nullopt;
    std::swap(a[k], a[*best]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const IntPoly lead = a[i][k];
      for (std::size_t j = k + 1; j < m; ++j) {
        IntPoly v = a[k][k] * a[i][j];
        if (!lead.is_zero()) v -= lead * a[k][j];
        a[i][j] = detail::divexact(v, prev);
      }
      a[i][k] = IntPoly(nvars);
    }
    prev = a[k][k];
  }

  SquareSolution sol;
  sol.det = prev;
  for (std::size_t t = 0; t < rhs.size(); ++t) {
    Vec num(n, IntPoly(nvars));
    for (std::size_t i = n; i-- > 0;) {
      IntPoly acc = sol.det * a[i][n + t];
      for (std::size_t j = i + 1; j < n; ++j)
        if (!a[i][j].is_zero() && !num[j].is_zero()) acc -= a[i][j] * num[j];
      num[i] = detail::divexact(acc, a[i][i]);
    }
    sol.numerators.push_back(std::move(num));
  }
  return sol;
}

/// num / den in lowest terms with den normalized to a positive leading coefficient.
struct Fraction {
  IntPoly num, den;
};

inline Fraction reduce_fraction(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::domain_error("reduce_fraction: zero denominator");
  if (num.is_zero()) return {num, int_constant(num.nvars(), 1)};
  const IntPoly g = gcd(num, den);
  IntPoly n = detail::divexact(num, g), d = detail::divexact(den, g);
  if (sgn(d.leading_coeff()) < 0) {
    n = -n;
    d = -d;
  }
  return {n, d};
}

/// num / den lies in the localization at (p, X1..Xn).
inline bool is_local_fraction(const IntPoly& num, const IntPoly& den, unsigned long p) {
  if (num.is_zero() || is_local_unit(den, p)) return true;
  return is_local_unit(reduce_fraction(num, den).den, p);
}

/// d = p^v u with u a local unit, or nullopt.
inline std::optional<unsigned> p_power_times_unit(const IntPoly& d, unsigned long p) {
  if (d.is_zero()) return std::nullopt;
  const unsigned v = poly_valuation(d, p);
  const IntPoly u = *d.divide_by_constant(ipow(Integer(p), v));
  if (!is_local_unit(u, p)) return std::nullopt;
  return v;
}

}  // namespace mcmv::la
