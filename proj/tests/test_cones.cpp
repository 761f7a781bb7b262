#include <catch2/catch_amalgamated.hpp>

#include "arbigeom/cones.hpp"
#include "arbigeom/simplex.hpp"
#include "oracles.hpp"

using namespace arbigeom;

namespace {
RatVector rv(std::initializer_list<int> vals) {
  RatVector v;
  for (int x : vals) v.emplace_back(x);
  return v;
}

Cone make_cone(std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<RatVector> g;
  for (const auto& row : gens) g.push_back(rv(row));
  return Cone(std::move(g));
}
}  // namespace

TEST_CASE("membership with witnesses") {
  const Cone quadrant = make_cone({{1, 0}, {0, 1}});
  const MembershipResult in = member(quadrant, rv({1, 1}));
  CHECK(in.inside);
  CHECK(in.coefficients == rv({1, 1}));
  CHECK_FALSE(member(quadrant, rv({-1, 0})).inside);

  const Cone ray = make_cone({{1, 1}});
  const MembershipResult scaled = member(ray, rv({2, 2}));
  CHECK(scaled.inside);
  CHECK(scaled.coefficients == rv({2}));

  CHECK_THROWS_AS(member(quadrant, rv({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("lineality spans exactly the two-sided directions") {
  const auto basis = lineality(make_cone({{1, 0}, {-1, 0}, {0, 1}}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == rv({1, 0}));

  CHECK(lineality(make_cone({{1, 0}, {0, 1}})).empty());

  const auto full = lineality(make_cone({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(full.size() == 2);  // the whole plane is a cone
}

TEST_CASE("pointedness") {
  CHECK(is_pointed(make_cone({{1, 0, 1}, {0, 1, 1}, {-1, -1, 3}})));
  CHECK_FALSE(is_pointed(make_cone({{1, 0}, {-1, 0}, {0, 1}})));
  CHECK(is_pointed(make_cone({{2, 3}})));
}

TEST_CASE("decomposition splits off the lineality space") {
  SECTION("one line") {
    const ConeDecomposition d = decompose(make_cone({{1, 0}, {-1, 0}, {0, 1}}));
    REQUIRE(d.lineality_basis.size() == 1);
    CHECK(d.lineality_basis[0] == rv({1, 0}));
    CHECK(d.slice_generators ==
          std::vector<RatVector>{rv({0, 0}), rv({0, 0}), rv({0, 1})});
  }
  SECTION("pointed cone is its own slice") {
    const Cone c = make_cone({{1, 0, 1}, {0, 1, 1}});
    const ConeDecomposition d = decompose(c);
    CHECK(d.lineality_basis.empty());
    CHECK(d.slice_generators == c.generators);
  }
  SECTION("full plane collapses to zero slice") {
    const ConeDecomposition d = decompose(make_cone({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    CHECK(d.lineality_basis.size() == 2);
    for (const auto& g : d.slice_generators) CHECK(is_zero(g));
  }
}

TEST_CASE("split_point reconstructs members") {
  const Cone c = make_cone({{1, 0}, {-1, 0}, {0, 1}});
  const ConeDecomposition d = decompose(c);

  const SplitPoint sp = split_point(c, d, rv({3, 2}));
  CHECK(sp.slice_part == rv({0, 2}));
  CHECK(sp.lineality_part == rv({3, 0}));

  const SplitPoint in_lineality = split_point(c, d, rv({-4, 0}));
  CHECK(is_zero(in_lineality.slice_part));
  CHECK(in_lineality.lineality_part == rv({-4, 0}));

  const Cone pointed = make_cone({{1, 0}, {1, 1}});
  const ConeDecomposition dp = decompose(pointed);
  const SplitPoint whole = split_point(pointed, dp, rv({2, 1}));
  CHECK(whole.slice_part == rv({2, 1}));
  CHECK(is_zero(whole.lineality_part));

  CHECK_THROWS_AS(split_point(c, d, rv({0, -1})), std::domain_error);
}

TEST_CASE("lineality agrees with grid enumeration on small cones") {
  CounterRng rng(401, 0);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t m = 2 + rng.next_below(2), n = 2 + rng.next_below(3);
    std::vector<RatVector> gens;
    for (std::size_t g = 0; g < n; ++g) gens.push_back(oracle::random_int_vector(rng, m, -2, 2));
    const Cone c(gens);
    const bool has_line = !lineality(c).empty();
    CHECK(has_line == oracle::grid_has_line(gens, 4));
  }
}

TEST_CASE("decompose and split reconstruct random members exactly") {
  CounterRng rng(402, 0);
  int members = 0;
  while (members < 200) {
    const std::size_t m = 2 + rng.next_below(3), n = 1 + rng.next_below(4);
    std::vector<RatVector> gens;
    for (std::size_t g = 0; g < n; ++g) gens.push_back(oracle::random_int_vector(rng, m, -3, 3));
    const Cone c(gens);
    const ConeDecomposition d = decompose(c);
    for (int k = 0; k < 4; ++k) {
      // random nonnegative combination of the generators is a member
      RatVector x(m, Rational(0));
      for (std::size_t g = 0; g < n; ++g) {
        const Rational coeff = make_rational(oracle::rand_int(rng, 0, 5), 1 + oracle::rand_int(rng, 0, 2));
        for (std::size_t i = 0; i < m; ++i) x[i] += coeff * gens[g][i];
      }
      const SplitPoint sp = split_point(c, d, x);
      ++members;
      RatVector sum(m);
      for (std::size_t i = 0; i < m; ++i) sum[i] = sp.slice_part[i] + sp.lineality_part[i];
      CHECK(sum == x);
      CHECK(dot(sp.slice_part, sp.lineality_part) == 0);
    }
  }
}

TEST_CASE("the split is the unique one: perturbing u breaks the lineality residual") {
  const Cone c = make_cone({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const ConeDecomposition d = decompose(c);
  const RatVector x = rv({2, 3, 1});
  const SplitPoint sp = split_point(c, d, x);

  // move u inside the slice cone by a nonzero slice direction; the
  // residual x - u' then escapes span(lineality_basis)
  std::vector<RatVector> nonzero_slice;
  for (const auto& g : d.slice_generators)
    if (!is_zero(g)) nonzero_slice.push_back(g);
  REQUIRE_FALSE(nonzero_slice.empty());
  for (const auto& dir : nonzero_slice) {
    RatVector u2(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) u2[i] = sp.slice_part[i] + dir[i];
    RatVector residual(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) residual[i] = x[i] - u2[i];

    RatMatrix basis_rows(d.lineality_basis.size() + 1, x.size());
    for (std::size_t i = 0; i < d.lineality_basis.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) basis_rows(i, j) = d.lineality_basis[i][j];
    for (std::size_t j = 0; j < x.size(); ++j) basis_rows(d.lineality_basis.size(), j) = residual[j];
    CHECK(rank(basis_rows) == d.lineality_basis.size() + 1);
  }
}

TEST_CASE("pointed cones admit no vanishing convex combination") {
  CounterRng rng(403, 0);
  int found = 0;
  while (found < 30) {
    const std::size_t m = 2 + rng.next_below(3), n = 1 + rng.next_below(3);
    std::vector<RatVector> gens;
    for (std::size_t g = 0; g < n; ++g) {
      RatVector v = oracle::random_int_vector(rng, m, -3, 3);
      if (is_zero(v)) v[0] = 1;
      gens.push_back(std::move(v));
    }
    const Cone c(gens);
    if (!is_pointed(c)) continue;
    ++found;
    // sum x_i a_i = 0 with sum x_i = 1, x >= 0 must be infeasible
    RatMatrix stacked(m + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) stacked(i, j) = gens[j][i];
      stacked(m, j) = 1;
    }
    RatVector target(m + 1, Rational(0));
    target[m] = 1;
    CHECK(farkas(stacked, target).tag == FarkasTag::Separator);
  }
}
