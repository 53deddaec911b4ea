#include "sasaki/jet.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

void enumerate(std::size_t nvars, unsigned total, std::vector<unsigned>& cur, std::size_t pos,
               std::vector<std::vector<unsigned>>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (unsigned k = total + 1; k-- > 0;) {
    cur[pos] = k;
    enumerate(nvars, total - k, cur, pos + 1, out);
  }
}

double factorial(unsigned n) {
  double f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::size_t JetLayout::index_of(const std::vector<unsigned>& e) const {
  for (std::size_t k = 0; k < exponents.size(); ++k)
    if (exponents[k] == e) return k;
  throw Error(ErrorCode::invalid_argument, "exponent outside the jet order");
}

std::shared_ptr<const JetLayout> JetLayout::get(std::size_t nvars, unsigned order) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<const JetLayout>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{nvars, order}];
  if (slot) return slot;

  auto layout = std::make_shared<JetLayout>();
  layout->nvars = nvars;
  layout->order = order;
  std::vector<unsigned> cur(nvars, 0);
  for (unsigned t = 0; t <= order; ++t) {
    if (nvars == 0) {
      if (t == 0) layout->exponents.push_back({});
      continue;
    }
    enumerate(nvars, t, cur, 0, layout->exponents);
  }
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t k = 0; k < layout->exponents.size(); ++k) index[layout->exponents[k]] = k;
  std::vector<unsigned> sum(nvars);
  for (std::size_t i = 0; i < layout->exponents.size(); ++i)
    for (std::size_t j = 0; j < layout->exponents.size(); ++j) {
      unsigned deg = 0;
      for (std::size_t v = 0; v < nvars; ++v) {
        sum[v] = layout->exponents[i][v] + layout->exponents[j][v];
        deg += sum[v];
      }
      if (deg > order) continue;
      layout->prod_i.push_back(i);
      layout->prod_j.push_back(j);
      layout->prod_k.push_back(index.at(sum));
    }
  slot = std::move(layout);
  return slot;
}

Jet::Jet(std::shared_ptr<const JetLayout> layout, double c)
    : layout_(std::move(layout)), c_(layout_->exponents.size(), 0.0) {
  c_[0] = c;
}

Jet Jet::variable(std::shared_ptr<const JetLayout> layout, std::size_t i, double xi) {
  Jet j(layout, xi);
  if (layout->order >= 1) {
    std::vector<unsigned> e(layout->nvars, 0);
    e.at(i) = 1;
    j.c_[layout->index_of(e)] = 1.0;
  }
  return j;
}

double Jet::derivative(const std::vector<unsigned>& a) const {
  double f = 1;
  for (auto x : a) f *= factorial(x);
  return c_[layout_->index_of(a)] * f;
}

Jet Jet::differentiate(std::size_t i) const {
  if (layout_->order == 0) throw Error(ErrorCode::invalid_argument, "cannot differentiate an order-0 jet");
  auto lower = JetLayout::get(layout_->nvars, layout_->order - 1);
  Jet d(lower, 0.0);
  for (std::size_t k = 0; k < lower->exponents.size(); ++k) {
    auto e = lower->exponents[k];
    ++e[i];
    d.c_[k] = c_[layout_->index_of(e)] * e[i];
  }
  return d;
}

Jet& Jet::operator+=(const Jet& o) {
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.layout_, 0.0);
  const auto& L = *a.layout_;
  for (std::size_t t = 0; t < L.prod_i.size(); ++t)
    r.c_[L.prod_k[t]] += a.c_[L.prod_i[t]] * b.c_[L.prod_j[t]];
  return r;
}

Jet compose(const Jet& f, const std::vector<double>& g_derivs) {
  // sum_k g^(k)(f0) / k! * (f - f0)^k, truncated
  Jet h = f;
  h[0] = 0.0;
  Jet result(f.layout_ptr(), g_derivs.at(0));
  Jet power(f.layout_ptr(), 1.0);
  for (unsigned k = 1; k <= f.layout().order && k < g_derivs.size(); ++k) {
    power = power * h;
    result += power * (g_derivs[k] / factorial(k));
  }
  return result;
}

Jet log(const Jet& f) {
  const double v = f.value();
  if (!(v > 0)) throw Error(ErrorCode::out_of_domain, "logarithm of a non-positive value");
  std::vector<double> d{std::log(v)};
  double inv = 1.0 / v, p = inv;
  for (unsigned k = 1; k <= f.layout().order; ++k) {
    d.push_back(((k % 2) ? 1.0 : -1.0) * factorial(k - 1) * p);
    p *= inv;
  }
  return compose(f, d);
}

Jet pow(const Jet& f, double p) {
  const double v = f.value();
  const bool integral = p == std::floor(p);
  if (!integral && !(v > 0)) throw Error(ErrorCode::out_of_domain, "fractional power of a non-positive value");
  if (integral && p < 0 && v == 0) throw Error(ErrorCode::out_of_domain, "negative power of zero");
  if (integral && p >= 0 && p <= 16) {
    Jet r(f.layout_ptr(), 1.0);
    for (int k = 0; k < static_cast<int>(p); ++k) r = r * f;
    return r;
  }
  std::vector<double> d;
  double coef = 1.0;
  for (unsigned k = 0; k <= f.layout().order; ++k) {
    d.push_back(coef * std::pow(v, p - k));
    coef *= p - k;
  }
  return compose(f, d);
}

Jet xlogx(const Jet& f) { return f * log(f); }

}  // namespace sasaki
