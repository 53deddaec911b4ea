#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sasaki/cone.hpp"
#include "sasaki/exact_linalg.hpp"

namespace sasaki {

/// l(x) = <x, normal> + constant. With the usual l(x) = <x, n> - lambda
/// notation, constant = -lambda.
struct AffineFunction {
  RatVector normal;
  Rational constant;

  Rational operator()(std::span<const Rational> x) const;
  friend bool operator==(const AffineFunction&, const AffineFunction&) = default;
};

/// Compact full-dimensional polytope {x : l_i(x) >= 0} with one label per
/// facet. Construction rejects unbounded, empty, lower-dimensional and
/// redundant descriptions with invalid-polytope.
class LabelledPolytope {
 public:
  LabelledPolytope(std::size_t dim, std::vector<AffineFunction> facets);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_facets() const noexcept { return facets_.size(); }
  const std::vector<AffineFunction>& facets() const noexcept { return facets_; }
  const AffineFunction& facet(std::size_t i) const { return facets_.at(i); }

  /// Exact vertices, sorted lexicographically.
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }

  /// incidence()[v][i] is true iff facet i vanishes at vertex v.
  const std::vector<std::vector<bool>>& incidence() const noexcept {
    return incidence_;
  }

  /// Facet indices vanishing at every vertex of the given vertex list.
  std::vector<std::size_t> facets_through(std::span<const std::size_t> verts) const;

  friend bool operator==(const LabelledPolytope& a, const LabelledPolytope& b) {
    return a.dim_ == b.dim_ && a.facets_ == b.facets_;
  }

 private:
  std::size_t dim_;
  std::vector<AffineFunction> facets_;
  std::vector<RatVector> vertices_;
  std::vector<std::vector<bool>> incidence_;
};

/// Vertex-facet incidence in a canonical labelling: two polytopes have the
/// same combinatorial type iff their CombinatorialType values are equal.
struct CombinatorialType {
  std::size_t num_vertices = 0;
  std::size_t num_facets = 0;
  std::vector<std::vector<bool>> incidence;

  friend bool operator==(const CombinatorialType&, const CombinatorialType&) = default;
};

const std::vector<RatVector>& vertices(const LabelledPolytope& P);

CombinatorialType combinatorial_type(const LabelledPolytope& P);

bool is_simplex(const LabelledPolytope& P);

struct FacetPartition {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

/// A partition of the facets such that every linear dependency among the
/// normals splits along it, or nullopt. The first group always contains
/// facet 0 and is a connected component of the normals' matroid.
std::optional<FacetPartition> product_split(const LabelledPolytope& P);

/// Explicit product structure for a valid split: P is the image of
/// first x second under x -> (A1 x, A2 x), where the rows of A1 (A2) are a
/// lattice basis of the saturated span of the first (second) group's
/// normals.
struct ProductFactors {
  LabelledPolytope first;
  LabelledPolytope second;
  IntMatrix first_map;
  IntMatrix second_map;
};

/// Throws not-a-product when the partition does not split P.
ProductFactors split_factors(const LabelledPolytope& P, const FacetPartition& part);

/// Cartesian product with facets of P1 first (normals zero padded).
LabelledPolytope product(const LabelledPolytope& P1, const LabelledPolytope& P2);

/// Rank of the integer kernel of x -> sum x_i n_i is at least d - k + 1,
/// where k = dim + 1 and d is the number of facets.
bool is_rational(const LabelledPolytope& P);

/// Result of the characteristic test. The witness cone lives in the lattice
/// spanned by the defining affine functions, written in an HNF basis of
/// that lattice; `reeb` is the coordinate vector of the constant function 1,
/// so slicing the witness at `reeb` gives P back.
struct CharacteristicReport {
  bool characteristic = false;
  bool lattice = false;
  Cone cone;
  RatVector reeb;
  GoodnessReport goodness;
};

CharacteristicReport is_characteristic(const LabelledPolytope& P);

/// (rP, {<n_i, .> + r c_i}). Throws invalid-argument for r <= 0.
LabelledPolytope rescale(const LabelledPolytope& P, const Rational& r);

}  // namespace sasaki
