#pragma once

#include <array>
#include <compare>

#include "k3/int_arith.hpp"

namespace k3 {

enum class Mode { Embedded, Birational };

/// Integer coordinates of a divisor class in the (H, C) basis:
/// H is the hyperplane class, C the curve class. H = (1,0), C = (0,1).
struct DivisorClass {
  Int x = 0;  // coefficient of H
  Int y = 0;  // coefficient of C

  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

inline DivisorClass operator-(DivisorClass e) { return {-e.x, -e.y}; }

/// The question being decided: does some projective K3 surface of degree 2n
/// in P^(n+1) carry a smooth curve of degree d and genus g?
/// Embedded mode asks for an embedded surface; Birational mode also accepts
/// birational projective models (rational double points allowed).
struct CurveQuery {
  Int n;  // half the surface degree, H^2 = 2n
  Int d;  // curve degree, C.H
  Int g;  // curve genus, C^2 = 2(g-1)
  Mode mode = Mode::Embedded;

  CurveQuery(Int n, Int d, Int g, Mode mode = Mode::Embedded);
};

/// Rank-2 even lattice spanned by H and C with intersection matrix
/// [[2n, d], [d, 2(g-1)]]; degenerates to rank 1 when the discriminant
/// lambda = d^2 - 4n(g-1) vanishes. Immutable; all operations are pure and
/// overflow-checked.
class GramLattice {
 public:
  // Direct construction. n >= 1 is enough for lattice arithmetic; the n >= 2
  // classification hypothesis lives in CurveQuery, not here.
  GramLattice(Int n, Int d, Int g);

  Int n() const { return n_; }
  Int d() const { return d_; }
  Int g() const { return g_; }

  std::array<std::array<Int, 2>, 2> gram() const;

  // lambda = d^2 - 4n(g-1) = -det(gram). Positive for signature (1,1),
  // zero for the degenerate rank-1 case, negative when no surface lattice
  // with these numbers exists at all.
  Int lambda() const { return lambda_; }

  // E^2 = 2n x^2 + 2d xy + 2(g-1) y^2; always even.
  Int self_int(DivisorClass e) const;

  // Symmetric bilinear extension of the Gram matrix.
  Int pairing(DivisorClass a, DivisorClass b) const;

  // Reflection in the hyperplane of a (-2)-class: D -> D + (D.gamma) gamma.
  // An isometric involution. Rejects gamma with gamma^2 != -2.
  DivisorClass reflect(DivisorClass d, DivisorClass gamma) const;

 private:
  Int n_, d_, g_;
  Int lambda_;
};

GramLattice make_lattice(const CurveQuery& q);

/// Rank-1 Picard description for the degenerate case: Pic = Z*D with
/// D^2 = 2m, H = k D and C = (dk/2n) D.
struct RankOneWitness {
  Int k = 1;
  Int m = 1;

  friend auto operator<=>(const RankOneWitness&, const RankOneWitness&) = default;
};

// k^2 m = n, 2n | kd, and (k, m) != (2, 1) (H ~ 2D with D^2 = 2 cannot be
// very ample).
bool valid_rank_one_witness(Int n, Int d, const RankOneWitness& w);

}  // namespace k3
