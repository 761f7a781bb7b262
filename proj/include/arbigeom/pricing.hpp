#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "arbigeom/arbitrage.hpp"
#include "arbigeom/matrix.hpp"
#include "arbigeom/rational.hpp"

namespace arbigeom {

// One-period market with two scenarios: a stock at spot S moves to
// S*u or S*d, and a call with strike K may be written on it. The
// constructor enforces d < 1+r < u (the stock must straddle the
// risk-free growth) and S*d < K < S*u.
struct BernoulliMarket {
  Rational spot, up, down, rate, strike;

  BernoulliMarket(Rational S, Rational u, Rational d, Rational r, Rational K)
      : spot(std::move(S)), up(std::move(u)), down(std::move(d)), rate(std::move(r)),
        strike(std::move(K)) {
    if (spot <= 0) throw std::domain_error("BernoulliMarket: spot must be positive");
    const Rational growth = Rational(1) + rate;
    if (growth <= 0) throw std::domain_error("BernoulliMarket: risk-free growth must be positive");
    if (up == down) throw std::domain_error("BernoulliMarket: degenerate market (u = d)");
    if (!(down < growth && growth < up))
      throw std::domain_error("BernoulliMarket: requires d < 1 + r < u");
    if (!(spot * down < strike && strike < spot * up))
      throw std::domain_error("BernoulliMarket: requires S*d < K < S*u");
  }

  Rational growth() const { return Rational(1) + rate; }
};

struct SecurityPayoff {
  Rational price_today;  // > 0
  Rational payoff_up, payoff_down;
};

/// Risk-neutral probabilities (pi_u, pi_d): the unique probability
/// vector orthogonal to the stock's present-value payoff column.
/// pi_u = (1+r-d)/(u-d), pi_d = (u-1-r)/(u-d); both lie in (0,1) and
/// sum to 1 exactly.
inline std::pair<Rational, Rational> risk_neutral_probs(const BernoulliMarket& mkt) {
  const Rational spread = mkt.up - mkt.down;
  Rational pi_u = (mkt.growth() - mkt.down) / spread;
  Rational pi_d = (mkt.up - mkt.growth()) / spread;
  return {std::move(pi_u), std::move(pi_d)};
}

/// No-arbitrage price of any security from its scenario payoffs: the
/// risk-neutral expectation of the discounted payoff.
inline Rational price_security(const BernoulliMarket& mkt, const Rational& payoff_up,
                               const Rational& payoff_down) {
  const auto [pi_u, pi_d] = risk_neutral_probs(mkt);
  return pi_u * payoff_up / mkt.growth() + pi_d * payoff_down / mkt.growth();
}

/// Closed-form call price (Su-K)(1+r-d) / ((1+r)(u-d)), exactly.
inline Rational price_call(const BernoulliMarket& mkt) {
  return (mkt.spot * mkt.up - mkt.strike) * (mkt.growth() - mkt.down) /
         (mkt.growth() * (mkt.up - mkt.down));
}

/// Payoff matrix for the stock plus the given securities: two scenario
/// rows (up, down), one present-value-return column per investment.
/// Column j is (-1 + payoff/(price*(1+r))) per scenario. The zero
/// column of the risk-free investment is omitted unless requested; it
/// never changes the verdict.
inline PayoffMatrix build_payoff_matrix(const BernoulliMarket& mkt,
                                        const std::vector<SecurityPayoff>& securities,
                                        bool include_risk_free = false) {
  const std::size_t cols = 1 + securities.size() + (include_risk_free ? 1 : 0);
  PayoffMatrix a(2, cols);
  a(0, 0) = Rational(-1) + mkt.up / mkt.growth();
  a(1, 0) = Rational(-1) + mkt.down / mkt.growth();
  for (std::size_t j = 0; j < securities.size(); ++j) {
    const SecurityPayoff& s = securities[j];
    if (s.price_today <= 0) throw std::domain_error("build_payoff_matrix: nonpositive price");
    a(0, j + 1) = Rational(-1) + s.payoff_up / (s.price_today * mkt.growth());
    a(1, j + 1) = Rational(-1) + s.payoff_down / (s.price_today * mkt.growth());
  }
  return a;
}

}  // namespace arbigeom
