#pragma once

// Exact rational feasibility for { x >= 0 : A x = b } by the two-phase
// simplex method (phase one only) with Bland's anti-cycling rule.

#include <cstddef>
#include <optional>
#include <vector>

#include "kmw/errors.hpp"
#include "kmw/rational.hpp"

namespace kmw::lp {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Returns a nonnegative solution of A x = b, or nullopt when none exists.
inline std::optional<std::vector<Rational>> find_feasible(const Matrix& A, const Row& b) {
  const std::size_t m = A.size();
  if (b.size() != m) throw InputError("lp: row count mismatch");
  const std::size_t n = m == 0 ? 0 : A[0].size();
  for (const auto& row : A)
    if (row.size() != n) throw InputError("lp: ragged constraint matrix");
  if (m == 0) return std::vector<Rational>(n, Rational(0));

  // Tableau columns: n structural, m artificial, then the right-hand side.
  const std::size_t cols = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<Row> T(m + 1, Row(cols, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    T[i][n + i] = 1;
    T[i][rhs] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Objective row: minimise the sum of artificials, expressed in reduced form.
  Row& z = T[m];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) z[j] -= T[i][j];
  for (std::size_t i = 0; i < m; ++i) z[rhs] -= T[i][rhs];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < n + m; ++j)
      if (sgn(z[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(T[i][enter]) <= 0) continue;
      Rational ratio = T[i][rhs] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (leave == m) throw Error("lp: unbounded phase-one objective");

    Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(T[i][enter]) == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(T[leave][j]) != 0) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  if (sgn(z[rhs]) != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][rhs];
  return x;
}

}  // namespace kmw::lp
