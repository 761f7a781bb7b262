#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "arbigeom/matrix.hpp"
#include "arbigeom/rational.hpp"

namespace arbigeom {

enum class FarkasTag { Combination, Separator };

// The two mutually exclusive certificates for the system
// { x >= 0 : A x = b }:
//   Combination: x >= 0 with A x = b, exactly
//   Separator:   y with y^t A >= 0 and y^t b < 0, exactly
struct FarkasOutcome {
  FarkasTag tag;
  RatVector x;  // Combination only, length n
  RatVector y;  // Separator only, length m
  std::size_t pivots = 0;
};

/// Exact re-check of whichever certificate the outcome carries.
inline bool verify_outcome(const RatMatrix& a, const RatVector& b, const FarkasOutcome& o) {
  if (b.size() != a.rows()) return false;
  if (o.tag == FarkasTag::Combination) {
    if (o.x.size() != a.cols()) return false;
    for (const auto& xi : o.x)
      if (xi < 0) return false;
    return multiply(a, o.x) == b;
  }
  if (o.y.size() != a.rows()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < a.rows(); ++i) s += o.y[i] * a(i, j);
    if (s < 0) return false;
  }
  return dot(o.y, b) < 0;
}

namespace detail {

// Upper bound on the number of distinct bases of the phase-I tableau
// (m rows, n original + m artificial columns); Bland's rule visits
// each basis at most once, so pivot counts past this bound indicate a
// broken invariant rather than slow convergence.
inline Integer phase1_pivot_bound(std::size_t m, std::size_t n) {
  return binomial(static_cast<unsigned>(n + m), static_cast<unsigned>(m));
}

}  // namespace detail

/// Total Farkas oracle: decides { x >= 0 : A x = b } by a phase-I
/// simplex over exact rationals and returns a machine-checkable
/// certificate for whichever alternative holds.
///
/// Rows with negative b are pre-negated so the artificial basis starts
/// feasible. Anti-cycling is Bland's rule: the entering column is the
/// lowest-index one with negative reduced cost, and ratio-test ties are
/// broken by the lowest-index basic variable. On infeasibility the
/// separator is read off the artificial columns of the final cost row
/// (the phase-I dual values), then mapped back through the row signs.
inline FarkasOutcome farkas(const RatMatrix& a, const RatVector& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw std::invalid_argument("farkas: dimension mismatch");

  if (is_zero(b)) return FarkasOutcome{FarkasTag::Combination, RatVector(n, Rational(0)), {}, 0};

  // tableau: n original columns | m artificial columns | rhs
  const std::size_t cols = n + m + 1, rhs = n + m;
  std::vector<int> row_sign(m, +1);
  std::vector<RatVector> t(m + 1, RatVector(cols, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) row_sign[i] = -1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = row_sign[i] * a(i, j);
    t[i][n + i] = 1;
    t[i][rhs] = row_sign[i] * b[i];
  }
  // cost row: reduced costs of min(sum of artificials) under the
  // all-artificial basis; the rhs cell carries minus the objective
  RatVector& z = t[m];
  for (std::size_t j = 0; j < cols; ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    z[j] = (j >= n && j < rhs ? Rational(1) : Rational(0)) - s;
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  const Integer pivot_bound = detail::phase1_pivot_bound(m, n);
  std::size_t pivots = 0;

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < rhs; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;  // optimal

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == m)
      throw std::logic_error("farkas: unbounded phase-I objective");  // unreachable

    // pivot on (leave, enter)
    RatVector& prow = t[leave];
    const Rational inv = Rational(1) / prow[enter];
    for (auto& e : prow) e *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * prow[j];
    }
    basis[leave] = enter;

    if (Integer(++pivots) > pivot_bound)
      throw std::logic_error("farkas: pivot count exceeded the basis bound");
  }

  const Rational objective = -z[rhs];
  if (objective == 0) {
    RatVector x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) x[basis[i]] = t[i][rhs];
    return FarkasOutcome{FarkasTag::Combination, std::move(x), {}, pivots};
  }

  // infeasible: dual values y'_i = 1 - (reduced cost of artificial i);
  // y = -sign . y' separates b from the cone of A's columns
  RatVector y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = -row_sign[i] * (Rational(1) - z[n + i]);
  return FarkasOutcome{FarkasTag::Separator, {}, std::move(y), pivots};
}

}  // namespace arbigeom
