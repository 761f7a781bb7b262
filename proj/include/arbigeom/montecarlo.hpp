#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arbigeom/arbitrage.hpp"
#include "arbigeom/arrangement.hpp"
#include "arbigeom/parallel.hpp"
#include "arbigeom/rational.hpp"
#include "arbigeom/sign_vector.hpp"

namespace arbigeom {

// Counter-based pseudorandom stream: output i is a pure function of
// (seed, stream, i), so per-trial streams stay decorrelated and
// bit-identical no matter how trials are scheduled across threads.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix(seed + 0x9E3779B97F4A7C15ull) ^ mix(stream * 0xD1B54A32D192ED03ull + 0x8BB84B93962EACC9ull)) {}

  std::uint64_t next_u64() { return mix(key_ + ++counter_ * 0x9E3779B97F4A7C15ull); }

  /// 53-bit uniform in [0, 1)
  double next_uniform53() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// standard normal via Box-Muller on the 53-bit uniform
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = next_uniform53();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  /// uniform integer in [0, bound) by rejection; bound >= 1
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % bound;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// iid N(0,1) entries, sampled as doubles and converted exactly to
/// rationals, filled row-major.
inline PayoffMatrix sample_gaussian_matrix(std::size_t m, std::size_t n, CounterRng& rng) {
  PayoffMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rational_from_double(rng.next_normal());
  return a;
}

struct SimConfig {
  std::size_t m = 0, n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  SignVector target_orthant;

  SimConfig(std::size_t m_, std::size_t n_, std::uint64_t trials_, std::uint64_t seed_)
      : m(m_), n(n_), trials(trials_), seed(seed_), target_orthant(SignVector::all_plus(m_)) {
    if (trials == 0) throw std::invalid_argument("SimConfig: trials must be >= 1");
    if (n == 0) throw std::invalid_argument("SimConfig: n must be >= 1");
  }

  SimConfig with_target(SignVector t) && {
    if (t.size() != m) throw std::invalid_argument("SimConfig: target orthant size mismatch");
    target_orthant = std::move(t);
    return std::move(*this);
  }
};

struct SimReport {
  std::size_t m = 0, n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  Rational theoretical;  // exact Q(m,n) / 2^m
  double std_error = 0.0;
  double ci95_lo = 0.0, ci95_hi = 0.0;
};

/// Exact Q(m,n)/2^m as a reduced rational.
inline Rational arbitrage_probability(unsigned m, unsigned n) {
  return make_rational(q(m, n), Integer(1) << m);
}

/// Empirical probability that a random Gaussian payoff matrix hits the
/// target orthant, over deterministic per-trial streams. Aggregation
/// is a sum of per-trial indicators, so any thread count produces a
/// bit-identical report.
inline SimReport estimate_arbitrage_probability(const SimConfig& cfg, std::size_t threads = 1) {
  std::vector<std::uint8_t> hit(cfg.trials, 0);
  detail::parallel_for(0, cfg.trials, threads, [&](std::size_t t) {
    CounterRng rng(cfg.seed, t);
    const PayoffMatrix a = sample_gaussian_matrix(cfg.m, cfg.n, rng);
    hit[t] = detect_in_orthant(a, cfg.target_orthant).tag == VerdictTag::Arbitrage ? 1 : 0;
  });

  SimReport rep;
  rep.m = cfg.m;
  rep.n = cfg.n;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  for (auto h : hit) rep.hits += h;
  rep.estimate = static_cast<double>(rep.hits) / static_cast<double>(cfg.trials);
  rep.theoretical = arbitrage_probability(static_cast<unsigned>(cfg.m), static_cast<unsigned>(cfg.n));
  rep.std_error = std::sqrt(rep.estimate * (1.0 - rep.estimate) / static_cast<double>(cfg.trials));
  rep.ci95_lo = rep.estimate - 1.96 * rep.std_error;
  rep.ci95_hi = rep.estimate + 1.96 * rep.std_error;
  return rep;
}

struct OrthantRateReport {
  std::size_t m = 0, n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> orthant_hits;  // indexed by SignVector mask
  double chi_square = 0.0;       // per-orthant rates vs the uniform rate Q/2^m
  bool census_count_constant = true;
  std::uint64_t census_count = 0;  // the per-trial count when constant

  double rate(const SignVector& delta) const {
    return static_cast<double>(orthant_hits[delta.to_mask()]) / static_cast<double>(trials);
  }
};

/// Full orthant census per trial; reports per-orthant hit rates and a
/// chi-square statistic for equality against the uniform rate Q/2^m.
/// Capped at m <= 6 (a 2^m-cell table per trial).
inline OrthantRateReport equal_orthant_check(const SimConfig& cfg, std::size_t threads = 1) {
  if (cfg.m > 6) throw std::domain_error("equal_orthant_check: m capped at 6");
  const std::size_t cells = std::size_t(1) << cfg.m;

  std::vector<std::vector<std::uint64_t>> trial_hits(cfg.trials);
  detail::parallel_for(0, cfg.trials, threads, [&](std::size_t t) {
    CounterRng rng(cfg.seed, t);
    const PayoffMatrix a = sample_gaussian_matrix(cfg.m, cfg.n, rng);
    const OrthantCensus census = orthant_census(a);
    std::vector<std::uint64_t> row(cells + 1, 0);
    for (std::size_t d = 0; d < cells; ++d) row[d] = census.hits[d];
    row[cells] = census.count;
    trial_hits[t] = std::move(row);
  });

  OrthantRateReport rep;
  rep.m = cfg.m;
  rep.n = cfg.n;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  rep.orthant_hits.assign(cells, 0);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    for (std::size_t d = 0; d < cells; ++d) rep.orthant_hits[d] += trial_hits[t][d];
    const std::uint64_t count = trial_hits[t][cells];
    if (t == 0)
      rep.census_count = count;
    else if (count != rep.census_count)
      rep.census_count_constant = false;
  }

  const double p = rational_to_double(arbitrage_probability(static_cast<unsigned>(cfg.m),
                                                            static_cast<unsigned>(cfg.n)));
  const double trials = static_cast<double>(cfg.trials);
  if (p > 0.0 && p < 1.0) {
    const double var = trials * p * (1.0 - p);
    for (std::size_t d = 0; d < cells; ++d) {
      const double dev = static_cast<double>(rep.orthant_hits[d]) - trials * p;
      rep.chi_square += dev * dev / var;
    }
  }
  return rep;
}

/// P[Binomial(m-1, 1/2) <= n-1] as an exact rational; an independent
/// route to Q(m,n)/2^m.
inline Rational binomial_tail_identity(unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw std::invalid_argument("binomial_tail_identity: positive m, n required");
  Integer sum(0);
  const unsigned top = n - 1 < m - 1 ? n - 1 : m - 1;
  for (unsigned k = 0; k <= top; ++k) sum += binomial(m - 1, k);
  return make_rational(sum, Integer(1) << (m - 1));
}

/// Central-limit approximation Phi((n - (m-1)/2) / sqrt((m-1)/4)) to
/// the arbitrage probability, via the complementary error function.
inline double clt_approximation(unsigned m, unsigned n) {
  if (m < 2) throw std::invalid_argument("clt_approximation: m must be >= 2");
  const double mean = (static_cast<double>(m) - 1.0) / 2.0;
  const double sd = std::sqrt((static_cast<double>(m) - 1.0) / 4.0);
  const double x = (static_cast<double>(n) - mean) / sd;
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

}  // namespace arbigeom
