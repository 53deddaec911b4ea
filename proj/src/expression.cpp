#include "sasaki/expression.hpp"

#include <algorithm>

#include "sasaki/errors.hpp"

namespace sasaki {

Expr Expr::constant(double c) {
  return Expr(std::make_shared<const Node>(Node{Kind::constant, c, 0, {}}));
}

Expr Expr::coord(std::size_t i) {
  return Expr(std::make_shared<const Node>(Node{Kind::coord, 0, i, {}}));
}

Expr Expr::add(std::vector<Expr> terms) {
  if (terms.empty()) return constant(0);
  return Expr(std::make_shared<const Node>(Node{Kind::add, 0, 0, std::move(terms)}));
}

Expr Expr::mul(std::vector<Expr> factors) {
  if (factors.empty()) return constant(1);
  return Expr(std::make_shared<const Node>(Node{Kind::mul, 0, 0, std::move(factors)}));
}

Expr Expr::pow(Expr base, double exponent) {
  return Expr(std::make_shared<const Node>(Node{Kind::pow, exponent, 0, {std::move(base)}}));
}

Expr Expr::log(Expr arg) {
  return Expr(std::make_shared<const Node>(Node{Kind::log, 0, 0, {std::move(arg)}}));
}

std::size_t Expr::arity() const {
  std::size_t a = kind() == Kind::coord ? index() + 1 : 0;
  for (const auto& c : children()) a = std::max(a, c.arity());
  return a;
}

double Expr::operator()(const std::vector<double>& x) const {
  return jet(x, 0).value();
}

Jet Expr::jet(const std::vector<double>& x, unsigned order) const {
  return jet(JetLayout::get(x.size(), order), x);
}

Jet Expr::jet(const std::shared_ptr<const JetLayout>& layout, const std::vector<double>& x) const {
  switch (kind()) {
    case Kind::constant:
      return Jet(layout, value());
    case Kind::coord:
      if (index() >= x.size())
        throw Error(ErrorCode::invalid_argument, "expression uses a coordinate beyond the dimension");
      return Jet::variable(layout, index(), x[index()]);
    case Kind::add: {
      Jet s(layout, 0.0);
      for (const auto& c : children()) s += c.jet(layout, x);
      return s;
    }
    case Kind::mul: {
      Jet p(layout, 1.0);
      for (const auto& c : children()) p = p * c.jet(layout, x);
      return p;
    }
    case Kind::pow:
      return sasaki::pow(children()[0].jet(layout, x), value());
    case Kind::log:
      return sasaki::log(children()[0].jet(layout, x));
  }
  throw Error(ErrorCode::internal_inconsistency, "unknown expression node");
}

}  // namespace sasaki
