#include "sasaki/integration.hpp"

#include <algorithm>
#include <set>

namespace sasaki {

namespace {

using VertexSet = std::vector<std::size_t>;

std::size_t affine_dim(const std::vector<RatVector>& verts, const VertexSet& S) {
  if (S.size() <= 1) return 0;
  const std::size_t n = verts[S[0]].size();
  RatMatrix M(S.size() - 1, n);
  for (std::size_t r = 1; r < S.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) M(r - 1, j) = verts[S[r]][j] - verts[S[0]][j];
  return rank(M);
}

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

// Pulling triangulation of the face with vertex set F (affine dimension m).
void pull(const LabelledPolytope& P, const VertexSet& F, std::size_t m,
          std::vector<VertexSet>& out) {
  if (m == 0) {
    out.push_back({F[0]});
    return;
  }
  const auto& verts = P.vertices();
  const auto& inc = P.incidence();
  const std::size_t apex = F[0];
  std::set<VertexSet> subfaces;
  for (std::size_t i = 0; i < P.num_facets(); ++i) {
    if (inc[apex][i]) continue;
    VertexSet S;
    for (auto v : F)
      if (inc[v][i]) S.push_back(v);
    if (S.size() < m || S.size() == F.size()) continue;
    if (affine_dim(verts, S) == m - 1) subfaces.insert(S);
  }
  for (const auto& S : subfaces) {
    std::vector<VertexSet> sub;
    pull(P, S, m - 1, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

std::vector<RatVector> points(const LabelledPolytope& P, const VertexSet& s) {
  std::vector<RatVector> pts;
  for (auto v : s) pts.push_back(P.vertices()[v]);
  return pts;
}

std::vector<Simplex> facet_simplices(const LabelledPolytope& P, std::size_t i) {
  const std::size_t n = P.dim();
  const auto& normal = P.facet(i).normal;
  VertexSet F;
  for (std::size_t v = 0; v < P.vertices().size(); ++v)
    if (P.incidence()[v][i]) F.push_back(v);
  std::vector<VertexSet> simplices;
  pull(P, F, n - 1, simplices);
  const Rational norm2 = dot(std::span<const Rational>(normal), std::span<const Rational>(normal));
  std::vector<Simplex> out;
  for (const auto& s : simplices) {
    auto pts = points(P, s);
    RatMatrix M(n, n);
    for (std::size_t j = 0; j < n; ++j) M(0, j) = normal[j] / norm2;
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j) M(r, j) = pts[r][j] - pts[0][j];
    out.push_back({std::move(pts), abs(determinant(M)) / Rational(factorial(n - 1))});
  }
  return out;
}

}  // namespace

std::vector<Simplex> triangulate(const LabelledPolytope& P) {
  const std::size_t n = P.dim();
  VertexSet all(P.vertices().size());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  std::vector<VertexSet> simplices;
  pull(P, all, n, simplices);
  std::vector<Simplex> out;
  for (const auto& s : simplices) {
    auto pts = points(P, s);
    RatMatrix M(n, n);
    for (std::size_t r = 1; r <= n; ++r)
      for (std::size_t j = 0; j < n; ++j) M(r - 1, j) = pts[r][j] - pts[0][j];
    out.push_back({std::move(pts), abs(determinant(M)) / Rational(factorial(n))});
  }
  return out;
}

std::vector<std::vector<Simplex>> triangulate_facets(const LabelledPolytope& P) {
  std::vector<std::vector<Simplex>> out;
  for (std::size_t i = 0; i < P.num_facets(); ++i) out.push_back(facet_simplices(P, i));
  return out;
}

Rational volume(const LabelledPolytope& P) {
  Rational v = 0;
  for (const auto& s : triangulate(P)) v += s.mass;
  return v;
}

Rational integrate(const LabelledPolytope& P, const Polynomial& f) {
  if (f.nvars() != P.dim()) throw Error(ErrorCode::invalid_argument, "integrand dimension mismatch");
  Rational total = 0;
  for (const auto& s : triangulate(P)) total += integrate_over_simplex(f, s.vertices, s.mass);
  return total;
}

Rational integrate_facet(const LabelledPolytope& P, std::size_t i, const Polynomial& f) {
  if (f.nvars() != P.dim()) throw Error(ErrorCode::invalid_argument, "integrand dimension mismatch");
  if (i >= P.num_facets()) throw Error(ErrorCode::invalid_argument, "facet index out of range");
  Rational total = 0;
  for (const auto& s : facet_simplices(P, i)) total += integrate_over_simplex(f, s.vertices, s.mass);
  return total;
}

Rational integrate_boundary(const LabelledPolytope& P, const Polynomial& f) {
  Rational total = 0;
  for (std::size_t i = 0; i < P.num_facets(); ++i) total += integrate_facet(P, i, f);
  return total;
}

}  // namespace sasaki
