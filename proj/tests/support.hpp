#pragma once

// Random generators and independent oracles shared by the test binaries.

#include <random>
#include <vector>

#include "sasaki/exact_linalg.hpp"
#include "sasaki/labelled_polytope.hpp"

namespace testing {

using namespace sasaki;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5a5a1234ULL);
  return gen;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline IntMatrix random_int_matrix(std::size_t r, std::size_t c, long lo, long hi) {
  IntMatrix M(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = uniform(lo, hi);
  return M;
}

/// Product of random elementary integer row operations and sign flips.
inline IntMatrix random_unimodular(std::size_t n, int steps = 12) {
  IntMatrix U = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && uniform(0, 1)) U(0, 0) = -1;
    return U;
  }
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const long f = uniform(-2, 2);
    for (std::size_t c = 0; c < n; ++c) U(i, c) += f * U(j, c);
    if (uniform(0, 5) == 0) U.swap_rows(i, j);
  }
  return U;
}

/// Cofactor-expansion determinant, independent of the library's Bareiss code.
inline Integer cofactor_det(const IntMatrix& M) {
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  if (n == 1) return M(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (M(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = M(r, c);
    const Integer term = M(0, j) * cofactor_det(minor);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

inline AffineFunction affine(std::vector<long> normal, long num, long den = 1) {
  AffineFunction f;
  for (long x : normal) f.normal.push_back(x);
  f.constant = make_rational(num, den);
  return f;
}

inline LabelledPolytope segment(long m1 = 1, long m2 = 1) {
  return LabelledPolytope(1, {affine({m1}, 0), affine({-m2}, m2)});
}

inline LabelledPolytope unit_square() {
  return LabelledPolytope(2, {affine({1, 0}, 0), affine({-1, 0}, 1), affine({0, 1}, 0),
                              affine({0, -1}, 1)});
}

inline LabelledPolytope standard_simplex(std::size_t n) {
  std::vector<AffineFunction> fs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    fs.push_back(affine(e, 0));
  }
  fs.push_back(affine(std::vector<long>(n, -1), 1));
  return LabelledPolytope(n, std::move(fs));
}

/// Image of P under x -> A x + t (A invertible): l_i(A^{-1}(y - t)).
inline LabelledPolytope affine_image(const LabelledPolytope& P, const RatMatrix& A,
                                     const RatVector& t) {
  const auto Ainv = inverse(A);
  std::vector<AffineFunction> fs;
  for (const auto& f : P.facets()) {
    AffineFunction g;
    g.normal = Ainv->transpose() * f.normal;
    g.constant = f.constant - dot(std::span<const Rational>(g.normal), std::span<const Rational>(t));
    fs.push_back(std::move(g));
  }
  return LabelledPolytope(P.dim(), std::move(fs));
}

}  // namespace testing

namespace testing {

/// Labelled simplex with labels m_i x_i (i < n) and m_n (c - sum w_i x_i),
/// moved by a random unimodular affine map.
inline LabelledPolytope random_simplex(std::size_t n, bool unit_labels = false) {
  std::vector<AffineFunction> fs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = unit_labels ? 1 : uniform(1, 3);
    fs.push_back(affine(e, 0));
  }
  const long m = unit_labels ? 1 : uniform(1, 3), c = uniform(1, 3);
  std::vector<long> w(n);
  for (auto& x : w) x = -m * uniform(1, 4);
  fs.push_back(affine(w, m * c));
  const LabelledPolytope base(n, std::move(fs));
  RatVector t(n);
  for (auto& x : t) x = uniform(-3, 3);
  return affine_image(base, to_rational(random_unimodular(n)), t);
}

/// Random product of labelled simplices with total dimension in [2, max_dim].
inline LabelledPolytope random_simplex_product(std::size_t max_dim, bool unit_labels = false) {
  const auto n1 = static_cast<std::size_t>(uniform(1, static_cast<long>(max_dim) - 1));
  const auto n2 = static_cast<std::size_t>(uniform(1, static_cast<long>(max_dim - n1)));
  return product(random_simplex(n1, unit_labels), random_simplex(n2, unit_labels));
}

/// True iff some invertible affine change of coordinates x = A y + t maps
/// every label of P to the label of Q with the same index.
inline bool labels_affinely_equal(const LabelledPolytope& P, const LabelledPolytope& Q) {
  if (P.dim() != Q.dim() || P.num_facets() != Q.num_facets()) return false;
  const std::size_t n = P.dim(), d = P.num_facets();
  // unknown T = [[A, t], [0, 1]] with [nP_i, cP_i] T = [nQ_i, cQ_i]
  RatMatrix A(d, n + 1), B(d, n + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      A(i, j) = P.facet(i).normal[j];
      B(i, j) = Q.facet(i).normal[j];
    }
    A(i, n) = P.facet(i).constant;
    B(i, n) = Q.facet(i).constant;
  }
  RatMatrix T(n + 1, n + 1);
  for (std::size_t c = 0; c <= n; ++c) {
    const auto col = solve(A, B.col(c));
    if (!col) return false;
    for (std::size_t r = 0; r <= n; ++r) T(r, c) = (*col)[r];
  }
  for (std::size_t r = 0; r < n; ++r)
    if (T(n, r) != 0) return false;
  if (T(n, n) != 1) return false;
  return determinant(T) != 0 && A * T == B;
}

}  // namespace testing

#include "sasaki/moment_cone.hpp"

namespace testing {

/// Witness cone of a characteristic product of two random labelled
/// simplices, moved by a random element of GL(k, Z). Retries until the
/// product is characteristic.
struct ProductCone {
  Cone cone;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

inline ProductCone random_product_cone(std::size_t max_dim, bool unit_labels = false) {
  for (;;) {
    const auto n1 = static_cast<std::size_t>(uniform(1, static_cast<long>(max_dim) - 2));
    const auto n2 = static_cast<std::size_t>(uniform(1, static_cast<long>(max_dim - 1 - n1)));
    const auto P = product(random_simplex(n1, unit_labels), random_simplex(n2, unit_labels));
    const auto rep = is_characteristic(P);
    if (!rep.characteristic) continue;
    const IntMatrix g = random_unimodular(rep.cone.dim);
    std::vector<IntVector> ls;
    for (const auto& l : rep.cone.labels) ls.push_back(g * l);
    return {make_cone(rep.cone.dim, std::move(ls)), n1, n2};
  }
}

}  // namespace testing
