#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arbigeom/arbitrage.hpp"
#include "arbigeom/matrix.hpp"
#include "arbigeom/parallel.hpp"
#include "arbigeom/rational.hpp"
#include "arbigeom/sign_vector.hpp"

namespace arbigeom {

/// Q(m,n) = 2 * sum_{k=0}^{n-1} C(m-1, k): the number of orthants of
/// R^m met by a generic n-dimensional subspace, in exact big-integer
/// arithmetic.
inline Integer q(unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw std::invalid_argument("q: dimensions must be positive");
  Integer sum(0);
  for (unsigned k = 0; k + 1 <= n; ++k) sum += binomial(m - 1, k);
  return 2 * sum;
}

/// Same value by the Pascal-style recursion
/// Q(m,n) = Q(m-1,n) + Q(m-1,n-1), with the closed small cases as base.
inline Integer q_recursive(unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw std::invalid_argument("q_recursive: dimensions must be positive");
  static thread_local std::map<std::pair<unsigned, unsigned>, Integer> memo;
  auto rec = [](auto&& self, unsigned mm, unsigned nn) -> Integer {
    if (nn == 1) return Integer(2);
    if (mm <= nn) return Integer(1) << mm;
    if (nn == 2) return Integer(2) * mm;
    auto it = memo.find({mm, nn});
    if (it != memo.end()) return it->second;
    Integer v = self(self, mm - 1, nn) + self(self, mm - 1, nn - 1);
    memo.emplace(std::make_pair(mm, nn), v);
    return v;
  };
  return rec(rec, m, n);
}

/// Number of regions cut out of R^dim by `hyperplanes` generic affine
/// hyperplanes: sum_{k<=dim} C(hyperplanes, k). Q(m,n) is exactly twice
/// this count at (m-1, n-1).
inline Integer affine_regions(unsigned hyperplanes, unsigned dim) {
  Integer sum(0);
  for (unsigned k = 0; k <= dim; ++k) sum += binomial(hyperplanes, k);
  return sum;
}

struct GenericityResult {
  bool generic;
  // deleting these rows leaves a singular n x n submatrix (failure only)
  std::vector<std::size_t> deleted_rows;

  explicit operator bool() const { return generic; }
};

/// A matrix is generic when every n x n submatrix obtained by deleting
/// m - n rows is nonsingular (equivalently, its column space is in
/// general position relative to the coordinate hyperplanes). Requires
/// n <= m; full column rank is necessary, so rank is checked first.
inline GenericityResult is_generic(const PayoffMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  if (n > m) throw std::invalid_argument("is_generic: more columns than rows");
  const std::size_t drop = m - n;
  if (rank(a) != n) {
    std::vector<std::size_t> witness(drop);
    for (std::size_t i = 0; i < drop; ++i) witness[i] = i;
    return GenericityResult{false, std::move(witness)};
  }
  // walk all (m - n)-subsets of rows to delete, lexicographically
  std::vector<std::size_t> del(drop);
  for (std::size_t i = 0; i < drop; ++i) del[i] = i;
  for (;;) {
    RatMatrix sub(n, n);
    std::size_t r = 0, d = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (d < drop && del[d] == i) {
        ++d;
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) sub(r, j) = a(i, j);
      ++r;
    }
    if (determinant(sub) == 0) return GenericityResult{false, del};
    if (drop == 0) break;
    // advance combination
    std::size_t k = drop;
    while (k > 0 && del[k - 1] == m - drop + (k - 1)) --k;
    if (k == 0) break;
    ++del[k - 1];
    for (std::size_t i = k; i < drop; ++i) del[i] = del[i - 1] + 1;
  }
  return GenericityResult{true, {}};
}

// Which orthants the column space meets. Hits are stored for every
// sign vector; antipodal entries always agree because a subspace is
// closed under negation.
struct OrthantCensus {
  std::size_t m = 0, n = 0;
  std::vector<std::uint8_t> hits;  // indexed by SignVector mask
  std::uint64_t count = 0;

  bool hit(const SignVector& delta) const { return hits[delta.to_mask()] != 0; }
};

/// Runs one exact arbitrage detection per antipodal orthant pair
/// (2^(m-1) calls); a full-row-rank matrix short-circuits to all 2^m
/// orthants with no detection calls. The m_limit guard (default 16)
/// rejects censuses too large for exact desk-scale computation.
inline OrthantCensus orthant_census(const PayoffMatrix& a, std::size_t threads = 1,
                                    std::size_t m_limit = 16) {
  const std::size_t m = a.rows();
  if (m > m_limit) throw std::domain_error("orthant_census: m exceeds the census limit");
  if (m >= 63) throw std::domain_error("orthant_census: m too large for a 2^m census");

  OrthantCensus census;
  census.m = m;
  census.n = a.cols();
  const std::uint64_t half = std::uint64_t(1) << (m - 1);
  const std::uint64_t all = (std::uint64_t(1) << m) - 1;
  census.hits.assign(std::uint64_t(1) << m, 0);

  if (rank(a) == m) {
    std::fill(census.hits.begin(), census.hits.end(), std::uint8_t(1));
    census.count = std::uint64_t(1) << m;
    return census;
  }

  detail::parallel_for(0, half, threads, [&](std::size_t k) {
    const std::uint64_t mask = std::uint64_t(k) << 1;  // first coordinate stays +1
    const SignVector delta = SignVector::from_mask(m, mask);
    const bool inside = detect_in_orthant(a, delta).tag == VerdictTag::Arbitrage;
    census.hits[mask] = inside ? 1 : 0;
    census.hits[~mask & all] = inside ? 1 : 0;
  });

  census.count = 0;
  for (auto h : census.hits) census.count += h;
  return census;
}

}  // namespace arbigeom
