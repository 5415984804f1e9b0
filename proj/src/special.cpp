#include "k3/special.hpp"

#include <stdexcept>

namespace k3 {

Int ci_half_degree(CiFamily f) {
  switch (f) {
    case CiFamily::QuarticP3: return 2;
    case CiFamily::Type23P4: return 3;
    case CiFamily::Type222P5: return 4;
  }
  throw std::logic_error("ci_half_degree: bad family tag");
}

namespace {

void check_nonspecial_domain(Int n, Int d, Int g, Int k) {
  if (k < 1) throw std::domain_error("nonspecial: k must be >= 1");
  if (n < 1) throw std::domain_error("nonspecial: n must be >= 1");
  if (d < 1) throw std::domain_error("nonspecial: d must be >= 1");
  if (g < 0) throw std::domain_error("nonspecial: g must be >= 0");
}

}  // namespace

bool nonspecial(Int n, Int d, Int g, Int k) {
  check_nonspecial_domain(n, d, g, k);
  if (d <= checked_mul(2, checked_mul(n, k))) return true;
  const Int dk = checked_mul(d, k);
  const Int nk2 = checked_mul(n, checked_mul(k, k));
  return dk > checked_add(nk2, g);
}

bool nonspecial_lattice_equiv(Int n, Int d, Int g, Int k) {
  check_nonspecial_domain(n, d, g, k);
  const GramLattice lat(n, d, g);
  const DivisorClass twist{-k, 1};  // C - kH
  const Int deg = lat.pairing(twist, {1, 0});
  const Int sq = lat.self_int(twist);
  // h^0(C - kH) > 0 exactly when the twist meets H positively and clears -2.
  return !(deg > 0 && sq >= -2);
}

CiResult ci_classify(CiFamily f, Int d, Int g) {
  const Int n = ci_half_degree(f);
  CiResult res;
  res.classification = classify(CurveQuery(n, d, g, Mode::Embedded));
  res.exists = res.classification.exists &&
               res.classification.quadrics != Quadrics::AndCubics;
  if (res.exists && res.classification.theorem_case == TheoremCase::I) {
    // Dependent case: C ~ (d/2n) H is cut out by a hypersurface.
    if (d % checked_mul(2, n) != 0)
      throw std::logic_error("ci_classify: dependent case without 2n | d");
    res.hypersurface_degree = d / (2 * n);
  }
  return res;
}

}  // namespace k3
