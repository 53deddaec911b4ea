#include "sasaki/moment_cone.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sasaki {

Cone make_cone(std::size_t dim, std::vector<IntVector> labels) {
  if (dim == 0) throw Error(ErrorCode::invalid_cone, "cone dimension must be positive");
  if (labels.empty()) throw Error(ErrorCode::invalid_cone, "cone needs at least one label");
  for (const auto& l : labels) {
    if (l.size() != dim) throw Error(ErrorCode::invalid_cone, "label length differs from dimension");
    if (std::all_of(l.begin(), l.end(), [](const Integer& x) { return x == 0; }))
      throw Error(ErrorCode::invalid_cone, "zero label");
  }
  return Cone{dim, std::move(labels)};
}

ReebVector ReebVector::from_rational(RatVector b) {
  ReebVector r;
  r.symbolic = RatMatrix(b.size(), 0);
  r.rational = std::move(b);
  return r;
}

bool ReebVector::is_purely_rational() const {
  return std::all_of(symbolic.entries().begin(), symbolic.entries().end(),
                     [](const Rational& q) { return q == 0; });
}

namespace {

IntMatrix label_matrix(const Cone& C) { return IntMatrix::from_rows(C.labels, C.dim); }

void check_reeb_shape(const Cone& C, const ReebVector& b) {
  if (b.rational.size() != C.dim || b.symbolic.rows() != C.dim)
    throw Error(ErrorCode::invalid_argument, "Reeb vector length differs from cone dimension");
}

}  // namespace

std::vector<IntVector> extreme_rays(const Cone& C) {
  const std::size_t k = C.dim, d = C.labels.size();
  if (rank(label_matrix(C)) < k)
    throw Error(ErrorCode::invalid_cone, "labels do not span: cone contains a line");

  // start from a simplicial cone on k independent labels
  std::vector<std::size_t> basis;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < d && basis.size() < k; ++i) {
    chosen.push_back(C.labels[i]);
    if (rank(IntMatrix::from_rows(chosen, k)) == chosen.size())
      basis.push_back(i);
    else
      chosen.pop_back();
  }
  const auto inv = inverse(to_rational(IntMatrix::from_rows(chosen, k)));
  std::vector<IntVector> rays;
  for (std::size_t j = 0; j < k; ++j) rays.push_back(primitive_part(inv->col(j)));

  std::vector<bool> processed(d, false);
  for (auto i : basis) processed[i] = true;
  auto zero_set = [&](const IntVector& r) {
    std::vector<bool> z(d, false);
    for (std::size_t i = 0; i < d; ++i)
      z[i] = processed[i] && dot(std::span<const Integer>(r), std::span<const Integer>(C.labels[i])) == 0;
    return z;
  };
  std::vector<std::vector<bool>> zeros;
  for (const auto& r : rays) zeros.push_back(zero_set(r));

  for (std::size_t h = 0; h < d; ++h) {
    if (processed[h]) continue;
    std::vector<Integer> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r)
      val[r] = dot(std::span<const Integer>(rays[r]), std::span<const Integer>(C.labels[h]));
    std::vector<IntVector> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) next.push_back(rays[r]);
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        std::vector<bool> common(d);
        std::size_t size = 0;
        for (std::size_t i = 0; i < d; ++i) {
          common[i] = zeros[p][i] && zeros[q][i];
          size += common[i];
        }
        if (size + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          bool contains = true;
          for (std::size_t i = 0; i < d && contains; ++i)
            if (common[i] && !zeros[t][i]) contains = false;
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector w(k);
        for (std::size_t j = 0; j < k; ++j) w[j] = val[p] * rays[q][j] - val[q] * rays[p][j];
        next.push_back(primitive_part(std::span<const Integer>(w)));
      }
    }
    processed[h] = true;
    rays = std::move(next);
    zeros.clear();
    for (const auto& r : rays) zeros.push_back(zero_set(r));
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

std::vector<std::vector<bool>> ray_label_incidence(const Cone& C,
                                                   const std::vector<IntVector>& rays) {
  std::vector<std::vector<bool>> z(rays.size(), std::vector<bool>(C.labels.size()));
  for (std::size_t r = 0; r < rays.size(); ++r)
    for (std::size_t i = 0; i < C.labels.size(); ++i)
      z[r][i] = dot(std::span<const Integer>(rays[r]), std::span<const Integer>(C.labels[i])) == 0;
  return z;
}

bool is_strictly_convex(const Cone& C) {
  if (rank(label_matrix(C)) < C.dim) return false;
  const auto rays = extreme_rays(C);
  return !rays.empty() && rank(IntMatrix::from_rows(rays, C.dim)) == C.dim;
}

std::vector<Face> faces(const Cone& C, const std::vector<IntVector>& rays) {
  const auto z = ray_label_incidence(C, rays);
  const std::size_t d = C.labels.size();
  std::set<std::vector<std::size_t>> sets;
  std::vector<std::size_t> all(rays.size());
  for (std::size_t r = 0; r < rays.size(); ++r) all[r] = r;
  sets.insert(all);
  std::vector<std::vector<std::size_t>> facet_sets;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::size_t> s;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (z[r][i]) s.push_back(r);
    if (!s.empty()) facet_sets.push_back(s);
  }
  std::vector<std::vector<std::size_t>> frontier(facet_sets.begin(), facet_sets.end());
  for (const auto& s : facet_sets) sets.insert(s);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> fresh;
    for (const auto& s : frontier)
      for (const auto& f : facet_sets) {
        std::vector<std::size_t> meet;
        std::set_intersection(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(meet));
        if (!meet.empty() && sets.insert(meet).second) fresh.push_back(meet);
      }
    frontier = std::move(fresh);
  }
  std::vector<Face> out;
  for (const auto& s : sets) {
    Face f;
    f.rays = s;
    for (std::size_t i = 0; i < d; ++i)
      if (std::all_of(s.begin(), s.end(), [&](std::size_t r) { return z[r][i]; }))
        f.labels.push_back(i);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.labels.size() != b.labels.size()) return a.labels.size() < b.labels.size();
    return a.labels < b.labels;
  });
  return out;
}

GoodnessReport is_good(const Cone& C) {
  if (!is_strictly_convex(C))
    throw Error(ErrorCode::invalid_cone, "cone is not strictly convex");
  const auto rays = extreme_rays(C);
  const auto z = ray_label_incidence(C, rays);
  for (std::size_t i = 0; i < C.labels.size(); ++i) {
    std::vector<IntVector> on;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (z[r][i]) on.push_back(rays[r]);
    if (rank(IntMatrix::from_rows(on, C.dim)) + 1 != C.dim)
      throw Error(ErrorCode::invalid_cone,
                  "label " + std::to_string(i) + " does not support a facet");
  }
  GoodnessReport rep;
  for (const auto& f : faces(C, rays)) {
    if (f.labels.empty()) continue;
    std::vector<IntVector> rows;
    for (auto i : f.labels) rows.push_back(C.labels[i]);
    IntVector sf = smith_invariant_factors(IntMatrix::from_rows(rows, C.dim));
    if (std::any_of(sf.begin(), sf.end(), [](const Integer& x) { return x != 1; })) {
      rep.good = false;
      rep.failing_face = f.labels;
      rep.smith_factors = std::move(sf);
      return rep;
    }
  }
  return rep;
}

bool sasaki_cone_contains(const Cone& C, const ReebVector& b) {
  check_reeb_shape(C, b);
  if (!is_strictly_convex(C))
    throw Error(ErrorCode::invalid_cone, "cone is not strictly convex");
  const std::size_t m = b.symbolic.cols();
  for (const auto& r : extreme_rays(C)) {
    const Rational exact = dot(std::span<const Integer>(r), std::span<const Rational>(b.rational));
    RatVector coeff(m);
    bool symbolic = false;
    for (std::size_t j = 0; j < m; ++j) {
      coeff[j] = dot(std::span<const Integer>(r), std::span<const Rational>(b.symbolic.col(j)));
      symbolic = symbolic || coeff[j] != 0;
    }
    if (!symbolic) {
      if (exact <= 0) return false;
      continue;
    }
    if (b.tau.size() != m)
      throw Error(ErrorCode::invalid_argument,
                  "numeric values of the transcendental generators are required");
    long double v = exact.get_d(), scale = std::fabs(static_cast<long double>(exact.get_d()));
    for (std::size_t j = 0; j < m; ++j) {
      const long double t = static_cast<long double>(coeff[j].get_d()) * b.tau[j];
      v += t;
      scale += std::fabs(t);
    }
    if (std::fabs(v) <= 1e-15L * std::max(scale, 1.0L))
      throw Error(ErrorCode::invalid_argument,
                  "sign of the Reeb vector on a ray is not resolvable numerically");
    if (v < 0) return false;
  }
  return true;
}

namespace {

RatMatrix coefficient_matrix(const ReebVector& b) {
  RatMatrix M(b.rational.size(), 1 + b.symbolic.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    M(i, 0) = b.rational[i];
    for (std::size_t j = 0; j < b.symbolic.cols(); ++j) M(i, j + 1) = b.symbolic(i, j);
  }
  return M;
}

}  // namespace

bool is_quasi_regular(const Cone& C, const ReebVector& b) {
  if (!sasaki_cone_contains(C, b))
    throw Error(ErrorCode::not_a_reeb_vector, "Reeb vector outside the Sasaki cone");
  return rank(coefficient_matrix(b)) == 1;
}

CharacteristicSlice characteristic_polytope(const Cone& C, const ReebVector& b) {
  check_reeb_shape(C, b);
  if (C.dim < 2) throw Error(ErrorCode::invalid_argument, "slicing needs cone dimension >= 2");
  const std::size_t k = C.dim, n = k - 1;

  RatVector bvec;
  bool normalized = false;
  if (b.is_purely_rational()) {
    if (!sasaki_cone_contains(C, b))
      throw Error(ErrorCode::not_a_reeb_vector, "Reeb vector outside the Sasaki cone");
    bvec = b.rational;
  } else {
    const RatMatrix M = coefficient_matrix(b);
    if (rank(M) != 1)
      throw Error(ErrorCode::invalid_argument, "slicing requires a Reeb vector with rational direction");
    RatVector dir;
    for (std::size_t j = 0; j < M.cols(); ++j) {
      dir = M.col(j);
      if (std::any_of(dir.begin(), dir.end(), [](const Rational& q) { return q != 0; })) break;
    }
    RatVector neg = dir;
    for (auto& q : neg) q = -q;
    if (b.tau.size() == b.symbolic.cols() && !sasaki_cone_contains(C, b))
      throw Error(ErrorCode::not_a_reeb_vector, "Reeb vector outside the Sasaki cone");
    if (sasaki_cone_contains(C, ReebVector::from_rational(dir)))
      bvec = dir;
    else if (sasaki_cone_contains(C, ReebVector::from_rational(neg)))
      bvec = neg;
    else
      throw Error(ErrorCode::not_a_reeb_vector, "Reeb direction outside the Sasaki cone");
    bvec = to_rational(primitive_part(std::span<const Rational>(bvec)));
    normalized = true;
  }

  const IntVector bp = primitive_part(std::span<const Rational>(bvec));
  std::size_t nz = 0;
  while (bp[nz] == 0) ++nz;
  const Rational c = bvec[nz] / bp[nz];

  // unimodular basis E whose first column is bp
  IntMatrix E(k, k);
  std::size_t unit = k;
  for (std::size_t p = 0; p < k && unit == k; ++p)
    if (abs(bp[p]) == 1) unit = p;
  if (unit < k) {
    for (std::size_t i = 0; i < k; ++i) E(i, 0) = bp[i];
    std::size_t col = 1;
    for (std::size_t j = 0; j < k; ++j)
      if (j != unit) E(j, col++) = 1;
  } else {
    IntMatrix B(k, 1);
    for (std::size_t i = 0; i < k; ++i) B(i, 0) = bp[i];
    const auto inv = inverse(to_rational(hermite_normal_form(B).U));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) E(i, j) = Integer((*inv)(i, j));
  }
  const auto Einv_q = inverse(to_rational(E));
  if (!Einv_q) throw Error(ErrorCode::internal_inconsistency, "lattice completion is singular");
  IntMatrix Einv(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if ((*Einv_q)(i, j).get_den() != 1)
        throw Error(ErrorCode::internal_inconsistency, "lattice completion is not unimodular");
      Einv(i, j) = Integer((*Einv_q)(i, j));
    }

  std::vector<AffineFunction> facets;
  for (const auto& l : C.labels) {
    const IntVector coord = Einv * l;
    AffineFunction f{RatVector(n), Rational(coord[0]) / c};
    for (std::size_t j = 0; j < n; ++j) f.normal[j] = coord[j + 1];
    facets.push_back(std::move(f));
  }

  RatVector origin(k);
  for (std::size_t j = 0; j < k; ++j) origin[j] = Rational(Einv(0, j)) / c;
  std::vector<IntVector> directions;
  for (std::size_t i = 1; i < k; ++i) directions.push_back(Einv.row(i));
  return CharacteristicSlice{LabelledPolytope(n, std::move(facets)), std::move(origin),
                             std::move(directions), bp, normalized};
}

}  // namespace sasaki
