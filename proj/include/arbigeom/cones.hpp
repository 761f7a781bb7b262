#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arbigeom/matrix.hpp"
#include "arbigeom/simplex.hpp"

namespace arbigeom {

// Polyhedral convex cone given by a finite generator list (zero
// generators permitted; they are skipped where pointedness is decided).
struct Cone {
  std::vector<RatVector> generators;

  explicit Cone(std::vector<RatVector> gens) : generators(std::move(gens)) {
    if (generators.empty()) throw std::invalid_argument("Cone: no generators");
    const std::size_t m = generators.front().size();
    if (m == 0) throw std::invalid_argument("Cone: zero-dimensional ambient space");
    for (const auto& g : generators)
      if (g.size() != m) throw std::invalid_argument("Cone: mixed generator dimensions");
  }

  std::size_t ambient_dim() const { return generators.front().size(); }

  RatMatrix generator_matrix() const {
    RatMatrix a(ambient_dim(), generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j)
      for (std::size_t i = 0; i < ambient_dim(); ++i) a(i, j) = generators[j][i];
    return a;
  }
};

struct MembershipResult {
  bool inside;
  RatVector coefficients;  // nonnegative, combines generators to the point; empty when outside
};

/// Decides b in cone(generators) via the Farkas oracle; the witness
/// coefficients are exact.
inline MembershipResult member(const Cone& c, const RatVector& b) {
  if (b.size() != c.ambient_dim()) throw std::invalid_argument("member: dimension mismatch");
  FarkasOutcome out = farkas(c.generator_matrix(), b);
  if (out.tag == FarkasTag::Combination) return MembershipResult{true, std::move(out.x)};
  return MembershipResult{false, {}};
}

/// Basis (canonical, from RREF) of the lineality space, the largest
/// subspace contained in the cone. A generator lies in it exactly when
/// its negation is still a member, so n membership calls find a
/// spanning set.
inline std::vector<RatVector> lineality(const Cone& c) {
  const std::size_t m = c.ambient_dim();
  std::vector<RatVector> two_sided;
  for (const auto& g : c.generators) {
    RatVector neg(m);
    for (std::size_t i = 0; i < m; ++i) neg[i] = -g[i];
    if (member(c, neg).inside) two_sided.push_back(g);
  }
  if (two_sided.empty()) return {};
  RatMatrix rows(two_sided.size(), m);
  for (std::size_t i = 0; i < two_sided.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) rows(i, j) = two_sided[i][j];
  RrefResult r = rref(std::move(rows));
  std::vector<RatVector> basis;
  for (std::size_t i = 0; i < r.rank; ++i) basis.push_back(r.reduced.row(i));
  return basis;
}

inline bool is_pointed(const Cone& c) { return lineality(c).empty(); }

// Pointed-slice decomposition: the cone is the direct sum of its
// lineality space and the projected (pointed) slice cone.
struct ConeDecomposition {
  std::vector<RatVector> lineality_basis;
  std::vector<RatVector> slice_generators;

  Cone slice_cone() const { return Cone(slice_generators); }
};

inline ConeDecomposition decompose(const Cone& c) {
  ConeDecomposition d;
  d.lineality_basis = lineality(c);
  d.slice_generators.reserve(c.generators.size());
  for (const auto& g : c.generators)
    d.slice_generators.push_back(project_onto_complement(d.lineality_basis, g));

  if (!is_pointed(d.slice_cone()))
    throw std::logic_error("decompose: slice cone is not pointed");
  // each generator must split exactly as slice part + lineality part
  const std::size_t m = c.ambient_dim();
  for (std::size_t k = 0; k < c.generators.size(); ++k) {
    RatVector hat(m);
    for (std::size_t i = 0; i < m; ++i) hat[i] = c.generators[k][i] - d.slice_generators[k][i];
    std::vector<RatVector> adjoined = d.lineality_basis;
    adjoined.push_back(hat);
    RatMatrix span(adjoined.size(), m);
    for (std::size_t i = 0; i < adjoined.size(); ++i)
      for (std::size_t j = 0; j < m; ++j) span(i, j) = adjoined[i][j];
    if (rank(span) != d.lineality_basis.size() && !is_zero(hat))
      throw std::logic_error("decompose: generator residual escapes the lineality space");
  }
  return d;
}

struct SplitPoint {
  RatVector slice_part;      // in the slice cone, orthogonal to the lineality space
  RatVector lineality_part;  // in the lineality space
};

/// Unique decomposition x = u + v of a cone member into slice and
/// lineality parts; membership of x is a precondition and is checked.
inline SplitPoint split_point(const Cone& c, const ConeDecomposition& d, const RatVector& x) {
  if (x.size() != c.ambient_dim()) throw std::invalid_argument("split_point: dimension mismatch");
  if (!member(c, x).inside) throw std::domain_error("split_point: point is not a cone member");

  RatVector u = project_onto_complement(d.lineality_basis, x);
  RatVector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i] - u[i];

  if (!member(d.slice_cone(), u).inside)
    throw std::logic_error("split_point: slice part left the slice cone");
  if (!d.lineality_basis.empty()) {
    if (dot(u, v) != 0) throw std::logic_error("split_point: parts are not orthogonal");
  } else if (!is_zero(v)) {
    throw std::logic_error("split_point: lineality part of a pointed cone must vanish");
  }
  return SplitPoint{std::move(u), std::move(v)};
}

}  // namespace arbigeom
