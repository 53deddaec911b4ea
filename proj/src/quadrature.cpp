#include "sasaki/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "sasaki/integration.hpp"

namespace sasaki {

namespace {

LabelledPolytope block_polytope(const LabelledPolytope& P, const std::vector<std::size_t>& facets,
                                std::size_t offset, std::size_t dim) {
  std::vector<AffineFunction> fs;
  for (auto i : facets) {
    AffineFunction f;
    f.normal.assign(P.facet(i).normal.begin() + static_cast<std::ptrdiff_t>(offset),
                    P.facet(i).normal.begin() + static_cast<std::ptrdiff_t>(offset + dim));
    f.constant = P.facet(i).constant;
    fs.push_back(std::move(f));
  }
  return LabelledPolytope(dim, std::move(fs));
}

}  // namespace

std::optional<ProductCoordinates> coordinate_blocks(const LabelledPolytope& P) {
  const auto split = product_split(P);
  if (!split) return std::nullopt;
  const std::size_t n = P.dim();
  auto support = [&](const std::vector<std::size_t>& group) {
    std::vector<bool> s(n, false);
    for (auto i : group)
      for (std::size_t j = 0; j < n; ++j) s[j] = s[j] || P.facet(i).normal[j] != 0;
    return s;
  };
  auto leading = [&](const std::vector<bool>& s, std::size_t& n1) {
    n1 = 0;
    while (n1 < n && s[n1]) ++n1;
    for (std::size_t j = n1; j < n; ++j)
      if (s[j]) return false;
    return n1 > 0 && n1 < n;
  };
  std::vector<std::size_t> g1 = split->first, g2 = split->second;
  std::size_t n1 = 0;
  if (!leading(support(g1), n1)) {
    std::swap(g1, g2);
    if (!leading(support(g1), n1)) return std::nullopt;
  }
  const auto s2 = support(g2);
  for (std::size_t j = 0; j < n1; ++j)
    if (s2[j]) return std::nullopt;
  return ProductCoordinates{block_polytope(P, g1, 0, n1), block_polytope(P, g2, n1, n - n1), g1, g2};
}

ProductCoordinates coordinate_product(const LabelledPolytope& P) {
  auto pc = coordinate_blocks(P);
  if (!pc) throw Error(ErrorCode::not_a_product, "polytope is not a product of coordinate blocks");
  return std::move(*pc);
}

double QuadratureRule::integrate(const std::function<double(const std::vector<double>&)>& f) const {
  double s = 0.0;
  for (std::size_t q = 0; q < points.size(); ++q) s += weights[q] * f(points[q]);
  return s;
}

void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "rule needs at least one node");
  // Golub-Welsch on the Jacobi matrix of the Legendre recurrence
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    J(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(k)) = b;
    J(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k - 1)) = b;
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  nodes.resize(n);
  weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    const double v0 = es.eigenvectors()(0, ii);
    nodes[i] = 0.5 * (es.eigenvalues()(ii) + 1.0);
    weights[i] = v0 * v0;  // 2 v0^2 on [-1, 1], halved for [0, 1]
  }
}

QuadratureRule tensor_rule(const QuadratureRule& first, const QuadratureRule& second) {
  QuadratureRule r;
  for (std::size_t a = 0; a < first.points.size(); ++a)
    for (std::size_t b = 0; b < second.points.size(); ++b) {
      auto z = first.points[a];
      z.insert(z.end(), second.points[b].begin(), second.points[b].end());
      r.points.push_back(std::move(z));
      r.weights.push_back(first.weights[a] * second.weights[b]);
    }
  return r;
}

QuadratureRule polytope_rule(const LabelledPolytope& P, RuleKind kind, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "rule needs at least one node");
  if (const auto pc = coordinate_blocks(P))
    return tensor_rule(polytope_rule(pc->first, kind, n), polytope_rule(pc->second, kind, n));
  const std::size_t m = P.dim();
  std::vector<double> nodes, w1;
  if (kind == RuleKind::midpoint) {
    for (std::size_t i = 0; i < n; ++i) {
      nodes.push_back((i + 0.5) / static_cast<double>(n));
      w1.push_back(1.0 / static_cast<double>(n));
    }
  } else {
    gauss_legendre(n, nodes, w1);
  }
  double mfact = 1.0;
  for (std::size_t i = 2; i <= m; ++i) mfact *= static_cast<double>(i);

  QuadratureRule rule;
  std::vector<std::size_t> idx(m);
  std::vector<double> lambda(m + 1);
  for (const auto& s : triangulate(P)) {
    std::vector<std::vector<double>> v;
    for (const auto& p : s.vertices) {
      std::vector<double> d;
      for (const auto& c : p) d.push_back(c.get_d());
      v.push_back(std::move(d));
    }
    const double scale = mfact * s.mass.get_d();
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      double jac = scale, prod = 1.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double u = nodes[idx[k]];
        lambda[k] = prod * (1.0 - u);
        prod *= u;
        jac *= w1[idx[k]];
        for (std::size_t e = 0; e + k + 1 < m; ++e) jac *= u;
      }
      lambda[m] = prod;
      std::vector<double> x(m, 0.0);
      for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j < m; ++j) x[j] += lambda[i] * v[i][j];
      rule.points.push_back(std::move(x));
      rule.weights.push_back(jac);
      std::size_t d = m;
      while (d > 0 && idx[d - 1] + 1 == n) idx[--d] = 0;
      if (d == 0) break;
      ++idx[d - 1];
    }
  }
  return rule;
}

}  // namespace sasaki
