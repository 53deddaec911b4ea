#include "sasaki/extremal_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sasaki/integration.hpp"

namespace sasaki {

namespace {

using Layout = std::shared_ptr<const JetLayout>;

std::vector<double> to_double(const RatVector& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

double label_value(const AffineFunction& l, const std::vector<double>& x) {
  double s = l.constant.get_d();
  for (std::size_t j = 0; j < x.size(); ++j) s += l.normal[j].get_d() * x[j];
  return s;
}

std::vector<unsigned> unit(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<unsigned> e(n, 0);
  ++e[i];
  ++e[j];
  return e;
}

// Smallest pivot of the unpivoted Cholesky factorization; <= 0 if the
// matrix is not positive definite.
double cholesky_min_pivot(const Eigen::MatrixXd& H) {
  const auto n = H.rows();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = H(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    best = std::min(best, d);
    if (!(d > 0)) return d;
    L(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = H(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      L(i, j) = s / L(j, j);
    }
  }
  return best;
}

Eigen::MatrixXd hessian_of(const Jet& J) {
  const std::size_t n = J.layout().nvars;
  Eigen::MatrixXd H(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      H(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = J.derivative(unit(n, i, j));
  return H;
}

Eigen::MatrixXd checked_inverse(const Eigen::MatrixXd& H) {
  const Eigen::LLT<Eigen::MatrixXd> llt(H);
  if (llt.info() != Eigen::Success || cholesky_min_pivot(H) <= 0)
    throw Error(ErrorCode::not_convex_here, "Hessian of the potential is not positive definite");
  return llt.solve(Eigen::MatrixXd::Identity(H.rows(), H.cols()));
}

// R_u and (Hess u)^{-1} at x from an order-4 jet: with Hess u = H0 + E(h),
// the inverse to second order is W0 - W0 E W0 + W0 E W0 E W0.
double curvature(const SymplecticPotential& u, const std::vector<double>& x, Eigen::MatrixXd* W0_out) {
  const std::size_t n = x.size();
  const Jet J = u.jet(x, 4);
  std::vector<Jet> H;
  for (std::size_t i = 0; i < n; ++i) {
    const Jet Ji = J.differentiate(i);
    for (std::size_t j = 0; j < n; ++j) H.push_back(Ji.differentiate(j));
  }
  Eigen::MatrixXd H0(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) H0(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = H[i * n + j].value();
  const Eigen::MatrixXd W0 = checked_inverse(H0);
  if (W0_out) *W0_out = W0;

  const Layout L2 = H[0].layout_ptr();
  for (auto& h : H) h[0] = 0.0;
  auto w0 = [&](std::size_t i, std::size_t j) {
    return W0(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  };
  // A = W0 E
  std::vector<Jet> A(n * n, Jet(L2, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) A[i * n + j] += H[k * n + j] * w0(i, k);
  // B = A - A A, then W = W0 - B W0
  std::vector<Jet> B = A;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) B[i * n + j] -= A[i * n + k] * A[k * n + j];
  double R = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Jet Wij(L2, w0(i, j));
      for (std::size_t k = 0; k < n; ++k) Wij -= B[i * n + k] * w0(k, j);
      R -= Wij.derivative(unit(n, i, j));
    }
  return R;
}

std::vector<std::size_t> restriction_indices(const Layout& small, const Layout& big, std::size_t offset) {
  std::vector<std::size_t> idx;
  for (const auto& e : small->exponents) {
    std::vector<unsigned> full(big->nvars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) full[offset + i] = e[i];
    idx.push_back(big->index_of(full));
  }
  return idx;
}

double factor_min_pivot(const LabelledPolytope& P, const JetFunction& f) {
  const SymplecticPotential u(P, f);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x : interior_grid(P, GridSpec{8, 1})) best = std::min(best, convexity_pivot(u, x));
  return best;
}

}  // namespace

GuilleminValue guillemin_eval(const LabelledPolytope& P, const std::vector<double>& x) {
  const std::size_t n = P.dim();
  if (x.size() != n) throw Error(ErrorCode::invalid_argument, "point dimension mismatch");
  GuilleminValue g;
  g.gradient = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  g.hessian = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& f : P.facets()) {
    const double l = label_value(f, x);
    if (!(l > 0)) throw Error(ErrorCode::out_of_domain, "point is not interior");
    Eigen::VectorXd nv(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) nv(static_cast<Eigen::Index>(j)) = f.normal[j].get_d();
    g.value += 0.5 * l * std::log(l);
    g.gradient += 0.5 * (std::log(l) + 1.0) * nv;
    g.hessian += 0.5 / l * nv * nv.transpose();
  }
  return g;
}

SymplecticPotential::SymplecticPotential(LabelledPolytope P) : P_(std::move(P)) {}

SymplecticPotential::SymplecticPotential(LabelledPolytope P, Expr f)
    : P_(std::move(P)), kind_(Relative::expression) {
  if (f.arity() > P_.dim())
    throw Error(ErrorCode::invalid_argument, "potential uses more coordinates than the polytope has");
  f_ = jets_of(f);
}

SymplecticPotential::SymplecticPotential(LabelledPolytope P, GridSpline f)
    : P_(std::move(P)), kind_(Relative::grid) {
  if (f.dim() != P_.dim())
    throw Error(ErrorCode::invalid_argument, "grid dimension does not match the polytope");
  f_ = [s = std::move(f)](const Layout& L, const std::vector<double>& x) { return s.jet(L, x); };
}

SymplecticPotential::SymplecticPotential(LabelledPolytope P, JetFunction f)
    : P_(std::move(P)), kind_(Relative::jets), f_(std::move(f)) {}

Jet SymplecticPotential::relative_jet(const Layout& layout, const std::vector<double>& x) const {
  if (kind_ == Relative::none) return Jet(layout, 0.0);
  return f_(layout, x);
}

Jet SymplecticPotential::jet(const std::vector<double>& x, unsigned order) const {
  const std::size_t n = P_.dim();
  if (x.size() != n) throw Error(ErrorCode::invalid_argument, "point dimension mismatch");
  if (order > 4) throw Error(ErrorCode::invalid_argument, "jets are limited to order 4");
  const Layout L = JetLayout::get(n, order);
  Jet u(L, 0.0);
  for (const auto& f : P_.facets()) {
    Jet l(L, label_value(f, x));
    if (!(l.value() > 0)) throw Error(ErrorCode::out_of_domain, "point is not interior");
    if (order >= 1)
      for (std::size_t j = 0; j < n; ++j) l[j + 1] = f.normal[j].get_d();
    u += xlogx(l) * 0.5;
  }
  return u + relative_jet(L, x);
}

double convexity_pivot(const SymplecticPotential& u, const std::vector<double>& x) {
  return cholesky_min_pivot(hessian_of(u.jet(x, 2)));
}

Eigen::MatrixXd inverse_hessian(const SymplecticPotential& u, const std::vector<double>& x) {
  return checked_inverse(hessian_of(u.jet(x, 2)));
}

double abreu_scalar_curvature(const SymplecticPotential& u, const std::vector<double>& x) {
  return curvature(u, x, nullptr);
}

double abreu_scalar_curvature_fd(const SymplecticPotential& u, const std::vector<double>& x, double h) {
  const auto& P = u.polytope();
  double dist = std::numeric_limits<double>::infinity();
  for (const auto& f : P.facets()) {
    const auto nv = to_double(f.normal);
    double norm = 0;
    for (double c : nv) norm += c * c;
    dist = std::min(dist, label_value(f, x) / std::sqrt(norm));
  }
  if (!(dist > 0)) throw Error(ErrorCode::out_of_domain, "point is not interior");
  h = std::min(h, dist / 3.0);
  const std::size_t n = x.size();
  static const int off[4] = {-2, -1, 1, 2};
  static const double d1[4] = {1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12};
  auto W = [&](std::size_t i, int a, std::size_t j, int b) {
    std::vector<double> y = x;
    y[i] += a * h;
    y[j] += b * h;
    return inverse_hessian(u, y);
  };
  double R = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      double s = 0.0;
      if (i == j) {
        static const double d2[5] = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};
        for (int a = -2; a <= 2; ++a) s += d2[a + 2] * W(i, a, i, 0)(ii, ii);
      } else {
        for (int p = 0; p < 4; ++p)
          for (int q = 0; q < 4; ++q) s += d1[p] * d1[q] * W(i, off[p], j, off[q])(ii, jj);
      }
      R -= s / (h * h);
    }
  return R;
}

AffineFunction extremal_affine_function(const LabelledPolytope& P) {
  const std::size_t n = P.dim();
  std::vector<Polynomial> basis{Polynomial::constant(n, 1)};
  for (std::size_t i = 0; i < n; ++i) basis.push_back(Polynomial::variable(n, i));
  RatMatrix G(n + 1, n + 1);
  RatVector rhs(n + 1);
  for (std::size_t a = 0; a <= n; ++a) {
    rhs[a] = 2 * integrate_boundary(P, basis[a]);
    for (std::size_t b = a; b <= n; ++b) G(a, b) = G(b, a) = integrate(P, basis[a] * basis[b]);
  }
  const auto c = solve(G, rhs);
  if (!c) throw Error(ErrorCode::invalid_polytope, "moment matrix is singular");
  AffineFunction R;
  R.constant = (*c)[0];
  R.normal.assign(c->begin() + 1, c->end());
  return R;
}

DonaldsonTerms donaldson_identity_check(const SymplecticPotential& u, const Polynomial& f,
                                        RuleKind kind, std::size_t n) {
  const auto& P = u.polytope();
  const std::size_t dim = P.dim();
  if (f.nvars() != dim) throw Error(ErrorCode::invalid_argument, "test function dimension mismatch");
  std::vector<Polynomial> fij;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) fij.push_back(f.derivative(i).derivative(j));
  DonaldsonTerms t;
  t.boundary = 2 * integrate_boundary(P, f).get_d();
  const auto rule = polytope_rule(P, kind, n);
  for (std::size_t q = 0; q < rule.points.size(); ++q) {
    const auto& x = rule.points[q];
    Eigen::MatrixXd W;
    const double R = curvature(u, x, &W);
    t.lhs += rule.weights[q] * R * f(std::span<const double>(x));
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        s += W(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
             fij[i * dim + j](std::span<const double>(x));
    t.hessian_term += rule.weights[q] * s;
  }
  t.residual = std::abs(t.lhs - t.boundary + t.hessian_term);
  return t;
}

std::vector<std::vector<double>> interior_grid(const LabelledPolytope& P, const GridSpec& spec) {
  const std::size_t n = P.dim(), N = spec.points_per_axis;
  if (N == 0) throw Error(ErrorCode::invalid_argument, "grid needs at least one point per axis");
  if (!(spec.margin_cells >= 0)) throw Error(ErrorCode::invalid_argument, "grid margin must be non-negative");
  std::vector<double> lo(n, std::numeric_limits<double>::infinity()), hi(n, -lo[0]);
  for (const auto& v : P.vertices())
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = std::min(lo[j], v[j].get_d());
      hi[j] = std::max(hi[j], v[j].get_d());
    }
  std::vector<double> step(n), start(n);
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    const double cells = static_cast<double>(N - 1) + 2 * spec.margin_cells;
    step[j] = cells > 0 ? (hi[j] - lo[j]) / cells : 0.0;
    start[j] = N == 1 ? 0.5 * (lo[j] + hi[j]) : lo[j] + spec.margin_cells * step[j];
    margin = std::min(margin, spec.margin_cells * step[j]);
  }
  std::vector<std::vector<double>> nd;
  for (const auto& f : P.facets()) nd.push_back(to_double(f.normal));
  std::vector<double> norms;
  for (const auto& v : nd) {
    double s = 0;
    for (double c : v) s += c * c;
    norms.push_back(std::sqrt(s));
  }
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = start[j] + static_cast<double>(idx[j]) * step[j];
    bool keep = true;
    for (std::size_t i = 0; i < P.num_facets() && keep; ++i) {
      const double dist = label_value(P.facet(i), x) / norms[i];
      keep = dist > 0 && dist >= margin * (1 - 1e-9);
    }
    if (keep) out.push_back(std::move(x));
    std::size_t d = n;
    while (d > 0 && idx[d - 1] + 1 == N) idx[--d] = 0;
    if (d == 0) break;
    ++idx[d - 1];
  }
  return out;
}

ExtremalReport extremality_residual(const SymplecticPotential& u, const GridSpec& grid) {
  const auto& P = u.polytope();
  ExtremalReport rep;
  rep.extremal = extremal_affine_function(P);
  rep.grid = grid;
  rep.interpolation_degree = u.interpolation_degree();
  rep.min_pivot = std::numeric_limits<double>::infinity();
  double sumsq = 0.0;
  for (const auto& x : interior_grid(P, grid)) {
    const double r = std::abs(abreu_scalar_curvature(u, x) - label_value(rep.extremal, x));
    rep.residual_sup = std::max(rep.residual_sup, r);
    sumsq += r * r;
    rep.min_pivot = std::min(rep.min_pivot, convexity_pivot(u, x));
    ++rep.grid_points;
  }
  if (rep.grid_points == 0) throw Error(ErrorCode::invalid_argument, "grid has no interior points");
  rep.residual_l2 = std::sqrt(volume(P).get_d() * sumsq / static_cast<double>(rep.grid_points));
  return rep;
}

SplitResult average_split(const LabelledPolytope& P, const JetFunction& f, std::size_t nodes) {
  ProductCoordinates pc = coordinate_product(P);
  const std::size_t n = P.dim(), n1 = pc.first.dim(), n2 = pc.second.dim();

  auto average = [&](const LabelledPolytope& other, std::size_t own_offset, std::size_t own_dim,
                     std::size_t other_offset) -> JetFunction {
    const auto rule = std::make_shared<QuadratureRule>(polytope_rule(other, RuleKind::gauss_legendre, nodes));
    const double vol = volume(other).get_d();
    return [rule, vol, f, n, own_offset, own_dim, other_offset](const Layout& L, const std::vector<double>& x) {
      if (x.size() != own_dim) throw Error(ErrorCode::invalid_argument, "point dimension mismatch");
      const Layout big = JetLayout::get(n, L->order);
      const auto idx = restriction_indices(L, big, own_offset);
      Jet out(L, 0.0);
      std::vector<double> z(n);
      for (std::size_t q = 0; q < rule->points.size(); ++q) {
        for (std::size_t j = 0; j < own_dim; ++j) z[own_offset + j] = x[j];
        for (std::size_t j = 0; j < rule->points[q].size(); ++j) z[other_offset + j] = rule->points[q][j];
        const Jet J = f(big, z);
        const double w = rule->weights[q] / vol;
        for (std::size_t k = 0; k < idx.size(); ++k) out[k] += w * J[idx[k]];
      }
      return out;
    };
  };

  SplitResult r{pc, average(pc.second, 0, n1, n1), average(pc.first, n1, n2, 0), 0, 0};
  r.min_pivot_first = factor_min_pivot(r.product.first, r.f1);
  r.min_pivot_second = factor_min_pivot(r.product.second, r.f2);
  return r;
}

double split_defect(const LabelledPolytope& P, const ScalarFunction& f, const ScalarFunction& f1,
                    const ScalarFunction& f2, std::size_t nodes) {
  const ProductCoordinates pc = coordinate_product(P);
  const std::size_t n = P.dim();
  const auto r1 = polytope_rule(pc.first, RuleKind::gauss_legendre, nodes);
  const auto r2 = polytope_rule(pc.second, RuleKind::gauss_legendre, nodes);
  const auto rule = tensor_rule(r1, r2);

  std::vector<Polynomial> basis{Polynomial::constant(n, 1)};
  for (std::size_t i = 0; i < n; ++i) basis.push_back(Polynomial::variable(n, i));
  const auto m = static_cast<Eigen::Index>(n + 1);
  Eigen::MatrixXd G(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = a; b < m; ++b)
      G(a, b) = G(b, a) = integrate(P, basis[static_cast<std::size_t>(a)] * basis[static_cast<std::size_t>(b)]).get_d();

  // rule points are ordered (a, b) with b fastest
  std::vector<double> v1, v2;
  for (const auto& x : r1.points) v1.push_back(f1(x));
  for (const auto& y : r2.points) v2.push_back(f2(y));
  std::vector<double> g(rule.points.size());
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  for (std::size_t q = 0; q < rule.points.size(); ++q) {
    const auto& z = rule.points[q];
    g[q] = f(z) - v1[q / v2.size()] - v2[q % v2.size()];
    rhs(0) += rule.weights[q] * g[q];
    for (std::size_t i = 0; i < n; ++i) rhs(static_cast<Eigen::Index>(i + 1)) += rule.weights[q] * g[q] * z[i];
  }
  const Eigen::VectorXd c = G.ldlt().solve(rhs);
  double sq = 0.0;
  for (std::size_t q = 0; q < rule.points.size(); ++q) {
    double e = g[q] - c(0);
    for (std::size_t i = 0; i < n; ++i) e -= c(static_cast<Eigen::Index>(i + 1)) * rule.points[q][i];
    sq += rule.weights[q] * e * e;
  }
  return std::sqrt(std::max(0.0, sq));
}

ScalarFunction values_of(const JetFunction& f, std::size_t nvars) {
  const Layout L = JetLayout::get(nvars, 0);
  return [f, L](const std::vector<double>& x) { return f(L, x).value(); };
}

JetFunction jets_of(const Expr& e) {
  return [e](const Layout& L, const std::vector<double>& x) { return e.jet(L, x); };
}

}  // namespace sasaki
