#include "sasaki/spline.hpp"

#include <algorithm>
#include <map>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

constexpr unsigned P = GridSpline::degree;

std::size_t find_span(const std::vector<double>& U, std::size_t nbasis, double u) {
  if (u >= U[nbasis]) return nbasis - 1;
  const auto it = std::upper_bound(U.begin() + P, U.begin() + static_cast<std::ptrdiff_t>(nbasis) + 1, u);
  return static_cast<std::size_t>(it - U.begin()) - 1;
}

// ders[k][j]: k-th derivative of basis span - P + j at u (de Boor recursion).
std::vector<std::vector<double>> basis_derivatives(const std::vector<double>& U, std::size_t span,
                                                   double u, unsigned nd) {
  std::vector<std::vector<double>> ndu(P + 1, std::vector<double>(P + 1));
  std::vector<double> left(P + 1), right(P + 1);
  ndu[0][0] = 1.0;
  for (unsigned j = 1; j <= P; ++j) {
    left[j] = u - U[span + 1 - j];
    right[j] = U[span + j] - u;
    double saved = 0.0;
    for (unsigned r = 0; r < j; ++r) {
      ndu[j][r] = right[r + 1] + left[j - r];
      const double tmp = ndu[r][j - 1] / ndu[j][r];
      ndu[r][j] = saved + right[r + 1] * tmp;
      saved = left[j - r] * tmp;
    }
    ndu[j][j] = saved;
  }
  std::vector<std::vector<double>> ders(nd + 1, std::vector<double>(P + 1, 0.0));
  for (unsigned j = 0; j <= P; ++j) ders[0][j] = ndu[j][P];
  std::vector<std::vector<double>> a(2, std::vector<double>(P + 1));
  for (int r = 0; r <= static_cast<int>(P); ++r) {
    int s1 = 0, s2 = 1;
    a[0][0] = 1.0;
    for (int k = 1; k <= static_cast<int>(nd); ++k) {
      double d = 0.0;
      const int rk = r - k, pk = static_cast<int>(P) - k;
      if (r >= k) {
        a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
        d = a[s2][0] * ndu[rk][pk];
      }
      const int j1 = rk >= -1 ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : static_cast<int>(P) - r;
      for (int j = j1; j <= j2; ++j) {
        a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][rk + j];
        d += a[s2][j] * ndu[rk + j][pk];
      }
      if (r <= pk) {
        a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
        d += a[s2][k] * ndu[r][pk];
      }
      ders[k][r] = d;
      std::swap(s1, s2);
    }
  }
  double f = P;
  for (unsigned k = 1; k <= nd; ++k) {
    for (unsigned j = 0; j <= P; ++j) ders[k][j] *= f;
    f *= P - k;
  }
  return ders;
}

std::vector<double> make_knots(const std::vector<double>& t) {
  const std::size_t N = t.size();
  std::vector<double> U(N + P + 1);
  for (unsigned i = 0; i <= P; ++i) {
    U[i] = t.front();
    U[N + i] = t.back();
  }
  for (std::size_t j = 1; j + P < N; ++j) {
    double s = 0;
    for (std::size_t i = j; i < j + P; ++i) s += t[i];
    U[j + P] = s / P;
  }
  return U;
}

}  // namespace

GridSpline::GridSpline(std::vector<std::vector<double>> axes, std::vector<double> values)
    : axes_(std::move(axes)) {
  if (axes_.empty()) throw Error(ErrorCode::invalid_argument, "spline needs at least one axis");
  std::size_t total = 1;
  for (const auto& t : axes_) {
    if (t.size() < P + 1)
      throw Error(ErrorCode::invalid_argument, "each spline axis needs at least 6 sites");
    for (std::size_t i = 1; i < t.size(); ++i)
      if (!(t[i] > t[i - 1])) throw Error(ErrorCode::invalid_argument, "spline sites must increase");
    total *= t.size();
  }
  if (values.size() != total)
    throw Error(ErrorCode::invalid_argument, "sample count does not match the grid");
  coef_ = std::move(values);

  // solve the collocation system along each axis in turn
  std::size_t stride = total;
  for (std::size_t d = 0; d < axes_.size(); ++d) {
    const auto& t = axes_[d];
    const std::size_t N = t.size();
    knots_.push_back(make_knots(t));
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    for (std::size_t r = 0; r < N; ++r) {
      const std::size_t span = find_span(knots_[d], N, t[r]);
      const auto b = basis_derivatives(knots_[d], span, t[r], 0);
      for (unsigned j = 0; j <= P; ++j)
        A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(span - P + j)) = b[0][j];
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    stride /= N;
    const std::size_t outer = total / (N * stride);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(N));
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t s = 0; s < stride; ++s) {
        const std::size_t base = o * N * stride + s;
        for (std::size_t i = 0; i < N; ++i) rhs(static_cast<Eigen::Index>(i)) = coef_[base + i * stride];
        const Eigen::VectorXd sol = lu.solve(rhs);
        for (std::size_t i = 0; i < N; ++i) coef_[base + i * stride] = sol(static_cast<Eigen::Index>(i));
      }
  }
}

GridSpline GridSpline::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows[0].size() < 2)
    throw Error(ErrorCode::invalid_argument, "grid rows need coordinates and a value");
  const std::size_t n = rows[0].size() - 1;
  std::vector<std::vector<double>> axes(n);
  for (const auto& r : rows) {
    if (r.size() != n + 1) throw Error(ErrorCode::invalid_argument, "ragged grid rows");
    for (std::size_t d = 0; d < n; ++d) axes[d].push_back(r[d]);
  }
  std::size_t total = 1;
  for (auto& a : axes) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    total *= a.size();
  }
  if (total != rows.size())
    throw Error(ErrorCode::invalid_argument, "grid rows do not form a full tensor grid");
  std::vector<double> values(total);
  std::vector<bool> seen(total, false);
  for (const auto& r : rows) {
    std::size_t idx = 0;
    for (std::size_t d = 0; d < n; ++d) {
      const auto pos = std::lower_bound(axes[d].begin(), axes[d].end(), r[d]) - axes[d].begin();
      idx = idx * axes[d].size() + static_cast<std::size_t>(pos);
    }
    if (seen[idx]) throw Error(ErrorCode::invalid_argument, "duplicate grid row");
    seen[idx] = true;
    values[idx] = r[n];
  }
  return GridSpline(std::move(axes), std::move(values));
}

double GridSpline::operator()(const std::vector<double>& x) const {
  return jet(JetLayout::get(dim(), 0), x).value();
}

Jet GridSpline::jet(const std::shared_ptr<const JetLayout>& layout, const std::vector<double>& x) const {
  const std::size_t n = dim();
  if (x.size() != n || layout->nvars != n)
    throw Error(ErrorCode::invalid_argument, "point dimension does not match the spline");
  const unsigned K = layout->order;
  std::vector<std::size_t> span(n);
  std::vector<std::vector<std::vector<double>>> ders(n);
  for (std::size_t d = 0; d < n; ++d) {
    const auto& t = axes_[d];
    if (x[d] < t.front() || x[d] > t.back())
      throw Error(ErrorCode::out_of_domain, "point outside the sampled grid");
    span[d] = find_span(knots_[d], t.size(), x[d]);
    ders[d] = basis_derivatives(knots_[d], span[d], x[d], std::min(K, P));
  }
  std::vector<std::size_t> strides(n, 1);
  for (std::size_t d = n - 1; d-- > 0;) strides[d] = strides[d + 1] * axes_[d + 1].size();

  Jet out(layout, 0.0);
  std::vector<unsigned> local(n);
  for (std::size_t k = 0; k < layout->exponents.size(); ++k) {
    const auto& a = layout->exponents[k];
    bool beyond = false;
    for (auto ad : a) beyond = beyond || ad > P;
    if (beyond) continue;
    double sum = 0.0;
    std::fill(local.begin(), local.end(), 0);
    for (;;) {
      double w = 1.0;
      std::size_t idx = 0;
      for (std::size_t d = 0; d < n; ++d) {
        w *= ders[d][a[d]][local[d]];
        idx += (span[d] - P + local[d]) * strides[d];
      }
      sum += w * coef_[idx];
      std::size_t d = n;
      while (d > 0 && local[d - 1] == P) local[--d] = 0;
      if (d == 0) break;
      ++local[d - 1];
    }
    double fact = 1.0;
    for (auto ad : a)
      for (unsigned i = 2; i <= ad; ++i) fact *= i;
    out[k] = sum / fact;
  }
  return out;
}

}  // namespace sasaki
