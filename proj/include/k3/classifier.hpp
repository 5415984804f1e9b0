#pragma once

#include <set>
#include <vector>

#include "k3/lattice.hpp"

namespace k3 {

// Partition of queries by the sign and size of lambda = d^2 - 4n(g-1):
//   lambda < 0   -> HodgeViolation (no lattice of signature (1,1) at all)
//   lambda = 0   -> I   (C and H proportional; rank-1 Picard group)
//   0 < l < 4n   -> II
//   lambda = 4n  -> III
//   lambda > 4n  -> IV
enum class TheoremCase { I, II, III, IV, HodgeViolation };

enum class ExceptionClause {
  A,               // d = +-1 or +-2 (mod 2n)
  B,               // lambda = 1 and d = n +- 1 (mod 2n)
  C,               // lambda = n and d = n (mod 2n)
  D,               // lambda = 1 and d - 1 or d + 1 divides 2n
  RankOneFail,     // lambda = 0 with no admissible (k, m)
  DDivisible,      // lambda = 4n with 2n | d
  Exceptional2n1,  // (d, g) = (2n + 1, n + 1)
};

enum class Quadrics { Only, AndCubics, NotApplicable };

struct PicardDescription {
  int rank = 2;                           // 1 exactly in case I
  std::vector<RankOneWitness> witnesses;  // rank 1 only; ascending k
};

struct ClassificationResult {
  bool exists = false;
  TheoremCase theorem_case = TheoremCase::HodgeViolation;
  Int lambda = 0;
  std::set<ExceptionClause> exceptions;  // nonempty iff not exists (or Hodge)
  PicardDescription picard;
  Quadrics quadrics = Quadrics::NotApplicable;
  // True when the pair is ruled out on embedded surfaces but realized on a
  // birational projective model (case II with exactly clause C). The flag
  // depends on (n, d, g) only, not on the query mode.
  bool birational_only = false;
};

// All (k, m) with k^2 m = n, 2n | kd and (k, m) != (2, 1), ascending in k.
// Case I existence is equivalent to this list being nonempty.
std::vector<RankOneWitness> case_i_witnesses(Int n, Int d);

// The set of clauses (a)-(d) whose congruence/divisibility conditions hold,
// evaluated literally and without short-circuiting (clauses overlap).
// Requires 0 < lambda < 4n.
std::set<ExceptionClause> exceptions_ii(Int n, Int d, Int g);

ClassificationResult classify(const CurveQuery& q);

}  // namespace k3
