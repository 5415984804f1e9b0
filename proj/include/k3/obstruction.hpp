#pragma once

#include <set>
#include <vector>

#include "k3/lattice.hpp"

namespace k3 {

enum class Criterion {
  HNotBpf,         // isotropic E with E.H = 1: |H| has base points
  HHyperelliptic,  // isotropic E with E.H = 2: H maps 2:1 onto its image
  HContracts,      // (-2)-class orthogonal to H: H contracts a rational curve
  CNotNef,         // (-2)-class pairing negatively with C
  CNotBpf,         // isotropic E with E.C = 1: |C| has base points
  CubicsNeeded,    // isotropic E with E.H = 3: quadrics do not cut the surface
};

/// Concrete divisor classes witnessing one failed criterion. Only emitted
/// with a nonempty witness set; every witness satisfies its defining
/// equations exactly (re-checkable through GramLattice).
struct ObstructionReport {
  Criterion criterion;
  std::set<DivisorClass> witnesses;
};

// Exact set of nonzero integer classes E with E^2 = e and E.H = m, from the
// identity 2n E^2 = (E.H)^2 - lambda y^2: lambda y^2 = m^2 - 2ne must have a
// perfect-square solution and x = (m - dy)/2n must be integral. At most two
// solutions exist (a line meets a conic twice). Requires lambda > 0 and e
// even.
std::set<DivisorClass> solve_vs_h(const GramLattice& lat, Int e, Int m);

// Same with prescribed E.C = c, via 2(g-1) E^2 = (E.C)^2 - lambda x^2.
// For g = 1 (C^2 = 0) the pairing degenerates to E.C = d x and x is pinned
// directly.
std::set<DivisorClass> solve_vs_c(const GramLattice& lat, Int e, Int c);

struct AmplenessCheck {
  bool ok = false;
  bool degree_too_small = false;  // H^2 < 4; unreachable for n >= 2
  std::vector<ObstructionReport> reports;
};

// H is very ample iff H^2 >= 4 and no isotropic class pairs 1 or 2 with H
// and no (-2)-class is orthogonal to H. The remaining classical condition
// (H ~ 2E with E^2 = 2) is vacuous here: H = (1,0) is primitive in the
// (H, C) basis.
AmplenessCheck h_very_ample(const GramLattice& lat);

// Birational very ampleness tolerates contracted (-2)-curves: only the
// base-point and hyperelliptic searches count.
AmplenessCheck h_birationally_very_ample(const GramLattice& lat);

// Obstructions against the curve class itself (requires g >= 1):
// C fails to be nef exactly for (d, g) = (2n+1, n+1), witnessed by C - H;
// C fails to be base point free when an isotropic class pairs 1 with C.
std::vector<ObstructionReport> c_obstructions(const GramLattice& lat);

// Isotropic classes pairing 3 with H. Nonempty exactly when the surface
// needs cubic generators on top of quadrics (meaningful for n >= 4).
std::set<DivisorClass> cubics_needed(const GramLattice& lat);

}  // namespace k3
