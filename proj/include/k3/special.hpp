#pragma once

#include <optional>

#include "k3/classifier.hpp"

namespace k3 {

/// The three complete intersection K3 families: a quartic in P^3 (n = 2),
/// type (2,3) in P^4 (n = 3) and type (2,2,2) in P^5 (n = 4).
enum class CiFamily { QuarticP3, Type23P4, Type222P5 };

Int ci_half_degree(CiFamily f);  // n = 2, 3, 4 respectively

// O_C(k) is non-special (h^1 vanishes for every member of |C|) iff
//   d <= 2nk  or  dk > nk^2 + g.
// Requires k >= 1; accepts any n >= 1, d >= 1, g >= 0.
bool nonspecial(Int n, Int d, Int g, Int k);

// Lattice-side form of the same condition: h^1(O_C(k)) = h^0(C - kH), which
// vanishes iff NOT ((C - kH).H > 0 and (C - kH)^2 >= -2). Kept as a separate
// code path so the two can be tested against each other.
bool nonspecial_lattice_equiv(Int n, Int d, Int g, Int k);

struct CiResult {
  // Full classification for the family's degree (embedded mode).
  ClassificationResult classification;
  // Existence on the family itself. A complete intersection of quadrics
  // never needs cubic generators, so the (2,2,2) family excludes the
  // degree-8 surfaces whose ideal requires cubics; the other two families
  // coincide with their degree.
  bool exists = false;
  // Set in the dependent case: C is cut out by a hypersurface of this degree.
  std::optional<Int> hypersurface_degree;
};

CiResult ci_classify(CiFamily f, Int d, Int g);

}  // namespace k3
