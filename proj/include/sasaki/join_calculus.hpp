#pragma once

#include <optional>
#include <utility>

#include "sasaki/exact_linalg.hpp"
#include "sasaki/labelled_polytope.hpp"

namespace sasaki {

/// (l1, l2) coprime positive; upsilon_i are the orbifold orders of the factors.
struct JoinParams {
  Integer l1, l2;
  Integer upsilon1 = 1, upsilon2 = 1;
};

/// Throws invalid-argument unless every entry is positive and gcd(l1, l2) = 1.
JoinParams make_join_params(Integer l1, Integer l2, Integer upsilon1 = 1,
                            Integer upsilon2 = 1);

bool join_is_smooth(const JoinParams& p);

struct JoinGenerators {
  std::pair<Rational, Rational> reeb;
  std::pair<Rational, Rational> quotient;
};

/// reeb = (1/(2 l1), 1/(2 l2)), quotient = (1/(2 l1), -1/(2 l2)).
JoinGenerators join_generators(const Integer& l1, const Integer& l2);

struct CoverData {
  Integer cover_degree;
  Integer reeb_scale;
};

/// Joining with S^1 on the right: an l1-fold cover with Reeb field scaled by l2.
CoverData s1_join_cover(const Integer& l1, const Integer& l2);

/// Lens space data L(p; q_1, ..., q_n).
struct LensData {
  Integer order;
  IntVector weights;
};

/// S^{2n-1}_w joined on the right with S^1: L(l1; l2 w_1, ..., l2 w_n).
LensData weighted_sphere_s1_join(const IntVector& w, const Integer& l1, const Integer& l2);

/// rescale(P1, l1) x rescale(P2, l2), facets of P1 first.
LabelledPolytope join_polytope(const LabelledPolytope& P1, const LabelledPolytope& P2,
                               const Integer& l1, const Integer& l2);

struct ReverseJoinProblem {
  Integer n;
  Integer m1, m2;
  Integer k1, k2;
};

/// For n = 0 only `degenerate_product` (true), `joinable` (true) and r = 0
/// are meaningful; w and l are left empty.
struct ReverseJoinSolution {
  Rational r;
  std::optional<std::pair<Integer, Integer>> w;
  std::optional<std::pair<Integer, Integer>> l;
  bool joinable = false;
  bool smooth = false;
  bool degenerate_product = false;
};

ReverseJoinSolution reverse_join(const ReverseJoinProblem& prob);

struct EasyReverseSolution {
  Integer w1, w2;
  Integer l1, l2;
};

/// Coprime positive (w1, w2) with |n| (w1 v2 - w2 v1) = n, l = (|n|, 1).
/// Among the solution family (w1 + t v1, w2 + t v2) returns the one with
/// the smallest positive w2.
EasyReverseSolution easy_reverse(const Integer& n, const Integer& v1, const Integer& v2);

/// Runs reverse_join and confirms the admissibility condition holds, which
/// is guaranteed when n = 0 or gcd(m1, m2, n) = 1. Throws
/// guarantee-not-applicable outside that case.
bool harder_reverse_guarantee(const ReverseJoinProblem& prob);

}  // namespace sasaki
