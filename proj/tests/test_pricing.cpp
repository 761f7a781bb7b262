#include <catch2/catch_amalgamated.hpp>

#include "arbigeom/pricing.hpp"
#include "oracles.hpp"

using namespace arbigeom;

namespace {
BernoulliMarket reference_market() {
  return BernoulliMarket(parse_rational("100"), parse_rational("1.2"), parse_rational("0.9"),
                         parse_rational("0.05"), parse_rational("100"));
}

// deterministic market with d < 1+r < u and S*d < K < S*u
BernoulliMarket random_market(CounterRng& rng) {
  for (;;) {
    const Rational r = make_rational(oracle::rand_int(rng, 0, 30), 100);  // rate in [0, 0.3]
    const Rational growth = Rational(1) + r;
    const Rational u = growth + make_rational(1 + oracle::rand_int(rng, 0, 40), 100);
    const Rational d = growth - make_rational(1 + oracle::rand_int(rng, 0, 60), 100);
    if (d <= 0) continue;
    const Rational S = make_rational(1 + oracle::rand_int(rng, 0, 400), 1 + oracle::rand_int(rng, 0, 3));
    // strike strictly between the two terminal prices
    const Rational lambda = make_rational(1 + oracle::rand_int(rng, 0, 98), 100);
    const Rational K = S * d + lambda * (S * u - S * d);
    return BernoulliMarket(S, u, d, r, K);
  }
}
}  // namespace

TEST_CASE("risk-neutral probabilities") {
  const auto [pi_u, pi_d] = risk_neutral_probs(reference_market());
  CHECK(pi_u == make_rational(1, 2));  // 0.15 / 0.30
  CHECK(pi_d == make_rational(1, 2));
  CHECK(pi_u + pi_d == 1);

  // symmetric straddle around the risk-free growth
  const BernoulliMarket sym(Rational(50), make_rational(23, 20), make_rational(19, 20),
                            make_rational(1, 20), Rational(50));
  CHECK(risk_neutral_probs(sym).first == make_rational(1, 2));

  CounterRng rng(601, 0);
  for (int i = 0; i < 50; ++i) {
    const BernoulliMarket mkt = random_market(rng);
    const auto [qu, qd] = risk_neutral_probs(mkt);
    CHECK(qu > 0);
    CHECK(qu < 1);
    CHECK(qu + qd == 1);
  }
}

TEST_CASE("market invariants are enforced") {
  const Rational S(100), K(100);
  CHECK_THROWS_AS(BernoulliMarket(S, parse_rational("1.1"), parse_rational("1.1"),
                                  parse_rational("0.05"), K),
                  std::domain_error);  // u = d
  CHECK_THROWS_AS(BernoulliMarket(S, parse_rational("1.2"), parse_rational("1.06"),
                                  parse_rational("0.05"), K),
                  std::domain_error);  // d >= 1 + r
  CHECK_THROWS_AS(BernoulliMarket(S, parse_rational("1.04"), parse_rational("0.9"),
                                  parse_rational("0.05"), K),
                  std::domain_error);  // u <= 1 + r
  CHECK_THROWS_AS(BernoulliMarket(S, parse_rational("1.2"), parse_rational("0.9"),
                                  parse_rational("0.05"), Rational(120)),
                  std::domain_error);  // K = S*u
  CHECK_THROWS_AS(BernoulliMarket(Rational(0), parse_rational("1.2"), parse_rational("0.9"),
                                  parse_rational("0.05"), K),
                  std::domain_error);  // S = 0
}

TEST_CASE("call price closed form") {
  const BernoulliMarket mkt = reference_market();
  // (20 * 0.15) / (1.05 * 0.3) = 3 / (63/200) = 200/21
  CHECK(price_call(mkt) == make_rational(200, 21));

  // the closed form is the discounted risk-neutral expectation
  const auto [pi_u, pi_d] = risk_neutral_probs(mkt);
  const Rational expected =
      pi_u * (mkt.spot * mkt.up - mkt.strike) / mkt.growth() + pi_d * Rational(0);
  CHECK(price_call(mkt) == expected);
}

TEST_CASE("security pricing identities") {
  CounterRng rng(602, 0);
  for (int i = 0; i < 30; ++i) {
    const BernoulliMarket mkt = random_market(rng);
    // the bond prices to one
    CHECK(price_security(mkt, mkt.growth(), mkt.growth()) == 1);
    // the stock prices itself
    CHECK(price_security(mkt, mkt.spot * mkt.up, mkt.spot * mkt.down) == mkt.spot);
    // call payoffs reproduce the closed form
    CHECK(price_security(mkt, mkt.spot * mkt.up - mkt.strike, Rational(0)) == price_call(mkt));
  }
}

TEST_CASE("stock-only market is arbitrage-free with the risk-neutral prices") {
  const BernoulliMarket mkt = reference_market();
  const PayoffMatrix a = build_payoff_matrix(mkt, {});
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 1);
  const ArbitrageVerdict v = detect(a);
  REQUIRE(v.tag == VerdictTag::NoArbitrage);
  const auto [pi_u, pi_d] = risk_neutral_probs(mkt);
  CHECK(v.state_prices == RatVector{pi_u, pi_d});
}

TEST_CASE("a fairly priced call keeps the market arbitrage-free") {
  const BernoulliMarket mkt = reference_market();
  const Rational call = price_call(mkt);
  const PayoffMatrix a = build_payoff_matrix(
      mkt, {SecurityPayoff{call, mkt.spot * mkt.up - mkt.strike, Rational(0)}});
  CHECK(a.cols() == 2);
  // the two columns are exact multiples of each other
  CHECK(rank(a) == 1);
  CHECK(detect(a).tag == VerdictTag::NoArbitrage);

  // and any mispricing produces a certified arbitrage
  const PayoffMatrix cheap = build_payoff_matrix(
      mkt, {SecurityPayoff{call + 1, mkt.spot * mkt.up - mkt.strike, Rational(0)}});
  const ArbitrageVerdict v = detect(cheap);
  REQUIRE(v.tag == VerdictTag::Arbitrage);
  CHECK(verify_verdict(cheap, v));
}

TEST_CASE("priced securities keep pi orthogonal to every column") {
  CounterRng rng(603, 0);
  for (int i = 0; i < 25; ++i) {
    const BernoulliMarket mkt = random_market(rng);
    std::vector<SecurityPayoff> secs;
    for (int s = 0; s < 3; ++s) {
      const Rational ru = oracle::random_rational(rng, 50, 2) + Rational(60);
      const Rational rd = oracle::random_rational(rng, 50, 2) + Rational(60);
      const Rational p = price_security(mkt, ru, rd);
      if (p <= 0) continue;
      secs.push_back(SecurityPayoff{p, ru, rd});
    }
    const PayoffMatrix a = build_payoff_matrix(mkt, secs);
    const ArbitrageVerdict v = detect(a);
    REQUIRE(v.tag == VerdictTag::NoArbitrage);
    const auto [pi_u, pi_d] = risk_neutral_probs(mkt);
    CHECK(v.state_prices == RatVector{pi_u, pi_d});
    for (std::size_t j = 0; j < a.cols(); ++j)
      CHECK(pi_u * a(0, j) + pi_d * a(1, j) == 0);
  }
}

TEST_CASE("perturbing any priced security flips the verdict") {
  CounterRng rng(604, 0);
  for (int i = 0; i < 20; ++i) {
    const BernoulliMarket mkt = random_market(rng);
    const Rational ru = Rational(80) + oracle::random_rational(rng, 30, 2);
    const Rational rd = Rational(40) + oracle::random_rational(rng, 30, 2);
    const Rational fair = price_security(mkt, ru, rd);
    if (fair <= make_rational(1, 50)) continue;
    Rational bump = oracle::random_rational(rng, 8, 4);
    if (bump == 0) bump = make_rational(1, 100);
    if (fair + bump <= 0) bump = make_rational(1, 100);

    const PayoffMatrix a = build_payoff_matrix(mkt, {SecurityPayoff{fair + bump, ru, rd}});
    const ArbitrageVerdict v = detect(a);
    REQUIRE(v.tag == VerdictTag::Arbitrage);
    CHECK(verify_verdict(a, v));
  }
}

TEST_CASE("the risk-free column is all zeros and changes nothing") {
  const BernoulliMarket mkt = reference_market();
  const PayoffMatrix with = build_payoff_matrix(mkt, {}, true);
  CHECK(with.cols() == 2);
  CHECK(with(0, 1) == 0);
  CHECK(with(1, 1) == 0);
  CHECK(detect(with).tag == detect(build_payoff_matrix(mkt, {})).tag);

  CHECK_THROWS_AS(
      build_payoff_matrix(mkt, {SecurityPayoff{Rational(0), Rational(1), Rational(1)}}),
      std::domain_error);
}
