#pragma once

#include "k3/special.hpp"

namespace k3test {

// Standalone closed-form existence predicate for the three complete
// intersection families, written directly as arithmetic on (d, g). It shares
// no code with the classifier pipeline and exists to be compared against it.
inline bool ci_exists_reference(k3::CiFamily f, k3::Int d, k3::Int g) {
  using k3::Int;
  const Int dd = d * d;
  switch (f) {
    case k3::CiFamily::QuarticP3:
      // g = d^2/8 + 1, or g < d^2/8 away from (5, 3).
      return 8 * (g - 1) == dd || (8 * g < dd && !(d == 5 && g == 3));
    case k3::CiFamily::Type23P4:
      // g = d^2/12 + 1, g = d^2/12 + 1/4 (cleared denominators), or
      // g < d^2/12 away from (7, 4).
      return 12 * (g - 1) == dd || 12 * (g - 1) == dd - 9 ||
             (12 * g < dd && !(d == 7 && g == 4));
    case k3::CiFamily::Type222P5:
      // g = d^2/16 + 1 with 8 | d, g = d^2/16 with d = 4 (mod 8), or
      // g < d^2/16 away from (9, 5).
      return (16 * (g - 1) == dd && d % 8 == 0) ||
             (16 * g == dd && d % 8 == 4) ||
             (16 * g < dd && !(d == 9 && g == 5));
  }
  return false;
}

}  // namespace k3test
