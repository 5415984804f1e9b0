#include "k3/lattice.hpp"

#include <stdexcept>

namespace k3 {

CurveQuery::CurveQuery(Int n_in, Int d_in, Int g_in, Mode mode_in)
    : n(n_in), d(d_in), g(g_in), mode(mode_in) {
  if (n < 2) throw std::domain_error("CurveQuery: n must be >= 2");
  if (d < 1) throw std::domain_error("CurveQuery: d must be >= 1");
  if (g < 0) throw std::domain_error("CurveQuery: g must be >= 0");
}

GramLattice::GramLattice(Int n, Int d, Int g) : n_(n), d_(d), g_(g) {
  if (n < 1) throw std::domain_error("GramLattice: n must be >= 1");
  if (d < 1) throw std::domain_error("GramLattice: d must be >= 1");
  if (g < 0) throw std::domain_error("GramLattice: g must be >= 0");
  // lambda = d^2 - 4n(g-1) = -det([[2n, d], [d, 2(g-1)]])
  lambda_ = checked_sub(checked_mul(d, d),
                        checked_mul(checked_mul(4, n), checked_sub(g, 1)));
}

std::array<std::array<Int, 2>, 2> GramLattice::gram() const {
  const Int two_g1 = checked_mul(2, checked_sub(g_, 1));
  return {{{checked_mul(2, n_), d_}, {d_, two_g1}}};
}

Int GramLattice::self_int(DivisorClass e) const {
  // 2n x^2 + 2d xy + 2(g-1) y^2
  Int t = checked_mul(checked_mul(2, n_), checked_mul(e.x, e.x));
  t = checked_add(t, checked_mul(checked_mul(2, d_), checked_mul(e.x, e.y)));
  t = checked_add(t, checked_mul(checked_mul(2, checked_sub(g_, 1)),
                                 checked_mul(e.y, e.y)));
  return t;
}

Int GramLattice::pairing(DivisorClass a, DivisorClass b) const {
  // 2n x1 x2 + d (x1 y2 + x2 y1) + 2(g-1) y1 y2
  Int t = checked_mul(checked_mul(2, n_), checked_mul(a.x, b.x));
  const Int cross = checked_add(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
  t = checked_add(t, checked_mul(d_, cross));
  t = checked_add(t, checked_mul(checked_mul(2, checked_sub(g_, 1)),
                                 checked_mul(a.y, b.y)));
  return t;
}

DivisorClass GramLattice::reflect(DivisorClass d, DivisorClass gamma) const {
  if (self_int(gamma) != -2)
    throw std::domain_error("reflect: gamma must have self-intersection -2");
  const Int t = pairing(d, gamma);
  return {checked_add(d.x, checked_mul(t, gamma.x)),
          checked_add(d.y, checked_mul(t, gamma.y))};
}

GramLattice make_lattice(const CurveQuery& q) {
  return GramLattice(q.n, q.d, q.g);
}

bool valid_rank_one_witness(Int n, Int d, const RankOneWitness& w) {
  if (w.k < 1 || w.m < 1) return false;
  if (w.k == 2 && w.m == 1) return false;
  if (checked_mul(checked_mul(w.k, w.k), w.m) != n) return false;
  return checked_mul(w.k, d) % checked_mul(2, n) == 0;
}

}  // namespace k3
