#include "k3/obstruction.hpp"

#include <stdexcept>
#include <utility>

namespace k3 {

namespace {

void require_solvable(const GramLattice& lat, Int e) {
  if (lat.lambda() <= 0)
    throw std::domain_error(
        "class search requires lambda > 0 (degenerate lattices are handled "
        "by the classifier)");
  if (mod_floor(e, 2) != 0)
    throw std::domain_error("class search: target self-intersection must be even");
}

}  // namespace

std::set<DivisorClass> solve_vs_h(const GramLattice& lat, Int e, Int m) {
  require_solvable(lat, e);
  std::set<DivisorClass> out;
  const Int two_n = checked_mul(2, lat.n());
  // 2n E^2 = (E.H)^2 - lambda y^2  =>  lambda y^2 = m^2 - 2n e
  const Int target = checked_sub(checked_mul(m, m), checked_mul(two_n, e));
  if (target < 0) return out;
  if (target % lat.lambda() != 0) return out;
  const auto y0 = perfect_square_root(target / lat.lambda());
  if (!y0) return out;
  if (*y0 == 0) {
    // y = 0 pins x = m / 2n; the zero class is excluded.
    if (m != 0 && m % two_n == 0) out.insert({m / two_n, 0});
    return out;
  }
  for (const Int y : {*y0, -*y0}) {
    const Int num = checked_sub(m, checked_mul(lat.d(), y));
    if (num % two_n == 0) out.insert({num / two_n, y});
  }
  return out;
}

std::set<DivisorClass> solve_vs_c(const GramLattice& lat, Int e, Int c) {
  require_solvable(lat, e);
  std::set<DivisorClass> out;
  if (lat.g() == 1) {
    // C^2 = 0: the pairing degenerates to E.C = d x, so x is pinned and y
    // is solved from E^2 = 2n x^2 + 2d x y.
    if (c == 0) {
      if (e == 0)
        throw std::domain_error(
            "solve_vs_c: for g = 1 every multiple of C has E^2 = 0 and "
            "E.C = 0; the solution family is unbounded");
      return out;  // x = 0 forces E^2 = 0 != e
    }
    if (c % lat.d() != 0) return out;
    const Int x = c / lat.d();
    const Int num =
        checked_sub(e, checked_mul(checked_mul(2, lat.n()), checked_mul(x, x)));
    const Int den = checked_mul(checked_mul(2, lat.d()), x);
    if (num % den == 0) out.insert({x, num / den});
    return out;
  }
  const Int two_g1 = checked_mul(2, checked_sub(lat.g(), 1));
  // 2(g-1) E^2 = (E.C)^2 - lambda x^2  =>  lambda x^2 = c^2 - 2(g-1) e
  const Int target = checked_sub(checked_mul(c, c), checked_mul(two_g1, e));
  if (target < 0) return out;
  if (target % lat.lambda() != 0) return out;
  const auto x0 = perfect_square_root(target / lat.lambda());
  if (!x0) return out;
  if (*x0 == 0) {
    if (c != 0 && c % two_g1 == 0) out.insert({0, c / two_g1});
    return out;
  }
  for (const Int x : {*x0, -*x0}) {
    const Int num = checked_sub(c, checked_mul(lat.d(), x));
    if (num % two_g1 == 0) out.insert({x, num / two_g1});
  }
  return out;
}

AmplenessCheck h_very_ample(const GramLattice& lat) {
  AmplenessCheck res;
  res.degree_too_small = lat.n() < 2;
  auto bpf = solve_vs_h(lat, 0, 1);
  if (!bpf.empty())
    res.reports.push_back({Criterion::HNotBpf, std::move(bpf)});
  auto hyper = solve_vs_h(lat, 0, 2);
  if (!hyper.empty())
    res.reports.push_back({Criterion::HHyperelliptic, std::move(hyper)});
  auto contracted = solve_vs_h(lat, -2, 0);
  if (!contracted.empty())
    res.reports.push_back({Criterion::HContracts, std::move(contracted)});
  res.ok = !res.degree_too_small && res.reports.empty();
  return res;
}

AmplenessCheck h_birationally_very_ample(const GramLattice& lat) {
  AmplenessCheck res;
  auto bpf = solve_vs_h(lat, 0, 1);
  if (!bpf.empty())
    res.reports.push_back({Criterion::HNotBpf, std::move(bpf)});
  auto hyper = solve_vs_h(lat, 0, 2);
  if (!hyper.empty())
    res.reports.push_back({Criterion::HHyperelliptic, std::move(hyper)});
  res.ok = res.reports.empty();
  return res;
}

std::vector<ObstructionReport> c_obstructions(const GramLattice& lat) {
  if (lat.lambda() <= 0)
    throw std::domain_error("c_obstructions requires lambda > 0");
  if (lat.g() < 1)
    throw std::domain_error("c_obstructions requires g >= 1");
  std::vector<ObstructionReport> out;
  if (lat.d() == checked_add(checked_mul(2, lat.n()), 1) &&
      lat.g() == lat.n() + 1) {
    // Gamma = C - H has Gamma^2 = -2 and Gamma.C = -1: C is not even nef.
    out.push_back({Criterion::CNotNef, {DivisorClass{-1, 1}}});
  }
  auto bpf = solve_vs_c(lat, 0, 1);
  if (!bpf.empty())
    out.push_back({Criterion::CNotBpf, std::move(bpf)});
  return out;
}

std::set<DivisorClass> cubics_needed(const GramLattice& lat) {
  return solve_vs_h(lat, 0, 3);
}

}  // namespace k3
