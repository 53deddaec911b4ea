#include "sasaki/join_calculus.hpp"

namespace sasaki {

namespace {

void require_positive(const Integer& x, const char* what) {
  if (x <= 0) throw Error(ErrorCode::invalid_argument, std::string(what) + " must be positive");
}

void require_coprime_pair(const Integer& l1, const Integer& l2) {
  require_positive(l1, "l1");
  require_positive(l2, "l2");
  if (gcd(l1, l2) != 1) throw Error(ErrorCode::invalid_argument, "l1 and l2 must be coprime");
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

JoinParams make_join_params(Integer l1, Integer l2, Integer upsilon1, Integer upsilon2) {
  require_coprime_pair(l1, l2);
  require_positive(upsilon1, "upsilon1");
  require_positive(upsilon2, "upsilon2");
  return {std::move(l1), std::move(l2), std::move(upsilon1), std::move(upsilon2)};
}

bool join_is_smooth(const JoinParams& p) {
  return gcd(Integer(p.l1 * p.upsilon2), Integer(p.l2 * p.upsilon1)) == 1;
}

JoinGenerators join_generators(const Integer& l1, const Integer& l2) {
  require_coprime_pair(l1, l2);
  const Rational a = make_rational(1, 2 * l1), b = make_rational(1, 2 * l2);
  return {{a, b}, {a, Rational(-b)}};
}

CoverData s1_join_cover(const Integer& l1, const Integer& l2) {
  require_coprime_pair(l1, l2);
  return {l1, l2};
}

LensData weighted_sphere_s1_join(const IntVector& w, const Integer& l1, const Integer& l2) {
  require_coprime_pair(l1, l2);
  LensData out{l1, {}};
  for (const auto& wi : w) {
    require_positive(wi, "sphere weight");
    out.weights.push_back(l2 * wi);
  }
  return out;
}

LabelledPolytope join_polytope(const LabelledPolytope& P1, const LabelledPolytope& P2,
                               const Integer& l1, const Integer& l2) {
  require_coprime_pair(l1, l2);
  return product(rescale(P1, Rational(l1)), rescale(P2, Rational(l2)));
}

ReverseJoinSolution reverse_join(const ReverseJoinProblem& prob) {
  require_positive(prob.m1, "m1");
  require_positive(prob.m2, "m2");
  require_positive(prob.k1, "k1");
  require_positive(prob.k2, "k2");
  if (prob.k1 + prob.n * prob.k2 <= 0)
    throw Error(ErrorCode::invalid_kahler_class, "Kahler class requires k1/k2 > -n");

  ReverseJoinSolution sol;
  if (prob.n == 0) {
    sol.r = 0;
    sol.degenerate_product = true;
    sol.joinable = true;
    return sol;
  }
  sol.r = make_rational(prob.n * prob.k2, 2 * prob.k1 + prob.n * prob.k2);

  const Integer p = sol.r.get_num(), q = sol.r.get_den();
  Integer w1 = (q + p) * prob.m1, w2 = (q - p) * prob.m2;
  const Integer gw = gcd(w1, w2);
  w1 /= gw;
  w2 /= gw;
  if (w1 <= 0 || w2 <= 0)
    throw Error(ErrorCode::inconsistent_input, "no positive coprime weight solution");

  const Integer D = w1 * prob.m2 - w2 * prob.m1;
  if (D == 0) throw Error(ErrorCode::inconsistent_input, "weights give a vanishing join degree");
  const Integer g = gcd(prob.n, D);
  const Integer l1 = abs(prob.n) / g, l2 = abs(D) / g;

  const Integer m = gcd(prob.m1, prob.m2);
  sol.w = {w1, w2};
  sol.l = {l1, l2};
  sol.joinable = l2 == gcd(Integer(m * l2), Integer(abs(D)));
  sol.smooth = gcd(w1, l2) == 1 && gcd(w2, l2) == 1;
  return sol;
}

EasyReverseSolution easy_reverse(const Integer& n, const Integer& v1, const Integer& v2) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be nonzero");
  require_positive(v1, "v1");
  require_positive(v2, "v2");
  if (gcd(v1, v2) != 1) throw Error(ErrorCode::invalid_argument, "v1 and v2 must be coprime");
  const int s = sgn(n);
  // x v2 + y v1 = 1, so (s x, -s y) solves w1 v2 - w2 v1 = s
  const auto cert = gcd_ext(v2, v1);
  const Integer w1p = s * cert.x, w2p = -s * cert.y;
  const Integer t = std::max(floor_div(-w1p, v1), floor_div(-w2p, v2)) + 1;
  return {w1p + t * v1, w2p + t * v2, abs(n), 1};
}

bool harder_reverse_guarantee(const ReverseJoinProblem& prob) {
  if (prob.n != 0 && gcd(gcd(prob.m1, prob.m2), prob.n) != 1)
    throw Error(ErrorCode::guarantee_not_applicable, "requires gcd(m1, m2, n) = 1");
  const auto sol = reverse_join(prob);
  if (!sol.joinable)
    throw Error(ErrorCode::internal_inconsistency, "admissibility fails where it is guaranteed");
  return sol.joinable;
}

}  // namespace sasaki
