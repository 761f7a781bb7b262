#pragma once

#include <stdexcept>
#include <utility>

#include "arbigeom/matrix.hpp"
#include "arbigeom/sign_vector.hpp"
#include "arbigeom/simplex.hpp"

namespace arbigeom {

// m x n matrix of present-value returns: rows are scenarios, columns
// are investments (one unit invested per column).
using PayoffMatrix = RatMatrix;

enum class VerdictTag { Arbitrage, NoArbitrage };

// Exactly one of:
//   Arbitrage:   portfolio v with A v >= 1 componentwise (hence > 0)
//   NoArbitrage: state prices pi >= 0, sum(pi) = 1, pi^t A = 0
struct ArbitrageVerdict {
  VerdictTag tag;
  RatVector portfolio;     // Arbitrage only, length n
  RatVector state_prices;  // NoArbitrage only, length m
  std::size_t pivots = 0;
};

inline bool verify_verdict(const PayoffMatrix& a, const ArbitrageVerdict& v) {
  if (v.tag == VerdictTag::Arbitrage) {
    if (v.portfolio.size() != a.cols()) return false;
    for (const auto& g : multiply(a, v.portfolio))
      if (g < 1) return false;
    return true;
  }
  if (v.state_prices.size() != a.rows()) return false;
  Rational total(0);
  for (const auto& p : v.state_prices) {
    if (p < 0) return false;
    total += p;
  }
  if (total != 1) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < a.rows(); ++i) s += v.state_prices[i] * a(i, j);
    if (s != 0) return false;
  }
  return true;
}

/// Arbitrage/no-arbitrage dichotomy with certificates. A state-price
/// vector exists iff { pi >= 0 : A^t pi = 0, 1^t pi = 1 } is feasible,
/// so the detector is one Farkas call on the stacked system
/// [A^t; 1^t] pi = (0,...,0,1). An infeasibility separator y = (v, s)
/// has A v + s 1 >= 0 with s < 0, i.e. A v > 0; v is rescaled by the
/// smallest component of A v so the returned portfolio satisfies
/// A v >= 1 exactly.
inline ArbitrageVerdict detect(const PayoffMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  RatMatrix stacked(n + 1, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) stacked(i, j) = a(j, i);
  for (std::size_t j = 0; j < m; ++j) stacked(n, j) = 1;
  RatVector target(n + 1, Rational(0));
  target[n] = 1;

  FarkasOutcome out = farkas(stacked, target);
  if (out.tag == FarkasTag::Combination)
    return ArbitrageVerdict{VerdictTag::NoArbitrage, {}, std::move(out.x), out.pivots};

  RatVector v(out.y.begin(), out.y.begin() + static_cast<std::ptrdiff_t>(n));
  RatVector gains = multiply(a, v);
  Rational worst = gains[0];
  for (const auto& g : gains)
    if (g < worst) worst = g;
  if (worst <= 0) throw std::logic_error("detect: separator does not yield positive payoffs");
  for (auto& vi : v) vi /= worst;
  return ArbitrageVerdict{VerdictTag::Arbitrage, std::move(v), {}, out.pivots};
}

/// detect applied to the row-reflected matrix R_delta A; an Arbitrage
/// verdict means the column space of A meets the orthant named by
/// delta.
inline ArbitrageVerdict detect_in_orthant(const PayoffMatrix& a, const SignVector& delta) {
  if (delta.size() != a.rows()) throw std::invalid_argument("detect_in_orthant: dimension mismatch");
  RatMatrix flipped(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      flipped(i, j) = delta[i] < 0 ? -a(i, j) : a(i, j);
  return detect(flipped);
}

}  // namespace arbigeom
