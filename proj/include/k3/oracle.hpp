#pragma once

#include <set>
#include <string>
#include <vector>

#include "k3/lattice.hpp"

namespace k3 {

enum class Against { H, C };

// Naive counterpart of the closed-form class searches: enumerate every
// nonzero (x, y) with |x| <= x_bound, |y| <= y_bound and keep those with
// E^2 = e and the prescribed pairing m. Evaluates the quadratic form
// directly; no use of the lambda identity.
std::set<DivisorClass> brute_solve(const GramLattice& lat, Int e, Int m,
                                   Against against, Int x_bound, Int y_bound);

struct Mismatch {
  Int n = 0, d = 0, g = 0;
  std::string check;
  std::string expected;
  std::string actual;
};

struct SweepReport {
  Int n_max = 0;
  Int d_max = 0;
  std::string g_policy;
  long long triples_checked = 0;
  long long comparisons = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

// Confronts the closed-form solver with brute-force enumeration over every
// lattice in the box (n <= n_max, d <= d_max, 0 <= g <= d^2/4n + 2) and
// every target (e, m) in {(0,1), (0,2), (0,3), (-2,0)} vs H and (0,1) vs C.
// Also re-checks soundness, the cardinality bound and m = 0 symmetry, and
// reruns a thinner sample against a generous fixed box (|x|, |y| <= 3d) so
// the completeness bounds are not taken on faith.
SweepReport sweep_solver(Int n_max, Int d_max);

// Confronts the classifier's congruence logic with the obstruction searches
// over the same box: case II exception clauses vs concrete obstruction
// classes, case III divisibility vs contracted classes, case IV vs the
// (2n+1, n+1) dichotomy, case I witnesses vs the degenerate kernel class,
// birational mode differences, and the quadrics status vs cubic-forcing
// classes.
SweepReport sweep_theorem(Int n_max, Int d_max);

}  // namespace k3
