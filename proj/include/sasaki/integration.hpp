#pragma once

// Exact integration over labelled polytopes. The boundary measure on facet
// i is the Lebesgue surface measure divided by |n_i|, where n_i is the
// labelled normal; with v = n_i / |n_i|^2 a facet simplex S has mass
// |det[v, S edges]| / (n - 1)!, which is rational.

#include <vector>

#include "sasaki/labelled_polytope.hpp"
#include "sasaki/polynomial.hpp"

namespace sasaki {

struct Simplex {
  std::vector<RatVector> vertices;
  Rational mass;
};

/// Pulling triangulation from the lexicographically smallest vertex of each
/// face; masses are Lebesgue volumes.
std::vector<Simplex> triangulate(const LabelledPolytope& P);

/// One triangulation per facet, in facet order, with boundary-measure masses.
std::vector<std::vector<Simplex>> triangulate_facets(const LabelledPolytope& P);

Rational volume(const LabelledPolytope& P);
Rational integrate(const LabelledPolytope& P, const Polynomial& f);
/// Integral of f over facet i against the boundary measure.
Rational integrate_facet(const LabelledPolytope& P, std::size_t i, const Polynomial& f);
/// Sum of the facet integrals.
Rational integrate_boundary(const LabelledPolytope& P, const Polynomial& f);

}  // namespace sasaki
