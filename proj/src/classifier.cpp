#include "k3/classifier.hpp"

#include <stdexcept>

namespace k3 {

std::vector<RankOneWitness> case_i_witnesses(Int n, Int d) {
  if (n < 2) throw std::domain_error("case_i_witnesses: n must be >= 2");
  if (d < 1) throw std::domain_error("case_i_witnesses: d must be >= 1");
  std::vector<RankOneWitness> out;
  for (Int k = 1; k <= n / k; ++k) {
    if (n % (k * k) != 0) continue;
    const Int m = n / (k * k);
    if (k == 2 && m == 1) continue;
    if (checked_mul(k, d) % checked_mul(2, n) == 0) out.push_back({k, m});
  }
  return out;
}

std::set<ExceptionClause> exceptions_ii(Int n, Int d, Int g) {
  const GramLattice lat(n, d, g);
  const Int lambda = lat.lambda();
  if (lambda <= 0 || lambda >= 4 * n)
    throw std::domain_error("exceptions_ii requires 0 < lambda < 4n");
  const Int two_n = 2 * n;
  const Int r = mod_floor(d, two_n);
  std::set<ExceptionClause> out;
  if (r == mod_floor(1, two_n) || r == mod_floor(-1, two_n) ||
      r == mod_floor(2, two_n) || r == mod_floor(-2, two_n))
    out.insert(ExceptionClause::A);
  if (lambda == 1 &&
      (r == mod_floor(n + 1, two_n) || r == mod_floor(n - 1, two_n)))
    out.insert(ExceptionClause::B);
  if (lambda == n && r == mod_floor(n, two_n))
    out.insert(ExceptionClause::C);
  if (lambda == 1 && (divides(d - 1, two_n) || divides(d + 1, two_n)))
    out.insert(ExceptionClause::D);
  return out;
}

namespace {

bool cubic_forcing_congruence(Int n, Int d, Int lambda) {
  const Int two_n = 2 * n;
  if (lambda == 1) {
    const Int r = mod_floor(checked_mul(3, d), two_n);
    return r == mod_floor(3, two_n) || r == mod_floor(-3, two_n);
  }
  if (lambda == 9) {
    const Int r = mod_floor(d, two_n);
    return r == mod_floor(3, two_n) || r == mod_floor(-3, two_n);
  }
  return false;
}

}  // namespace

ClassificationResult classify(const CurveQuery& q) {
  const GramLattice lat = make_lattice(q);
  ClassificationResult res;
  res.lambda = lat.lambda();
  const Int four_n = checked_mul(4, q.n);

  if (res.lambda < 0) {
    // (C.H)^2 >= C^2 H^2 fails: no surface carries such a pair at all.
    res.theorem_case = TheoremCase::HodgeViolation;
    res.exists = false;
    res.quadrics = Quadrics::NotApplicable;
    return res;
  }

  if (res.lambda == 0) {
    res.theorem_case = TheoremCase::I;
    res.picard.rank = 1;
    res.picard.witnesses = case_i_witnesses(q.n, q.d);
    res.exists = !res.picard.witnesses.empty();
    if (!res.exists) res.exceptions.insert(ExceptionClause::RankOneFail);
  } else if (res.lambda < four_n) {
    res.theorem_case = TheoremCase::II;
    res.exceptions = exceptions_ii(q.n, q.d, q.g);
    const bool only_c =
        res.exceptions == std::set<ExceptionClause>{ExceptionClause::C};
    res.birational_only = only_c;
    res.exists = res.exceptions.empty() ||
                 (q.mode == Mode::Birational && only_c);
  } else if (res.lambda == four_n) {
    res.theorem_case = TheoremCase::III;
    // With 2n | d the image of every member of |C| is singular, so this
    // failure survives even on birational models.
    if (q.d % checked_mul(2, q.n) == 0) {
      res.exceptions.insert(ExceptionClause::DDivisible);
      res.exists = false;
    } else {
      res.exists = true;
    }
  } else {
    res.theorem_case = TheoremCase::IV;
    if (q.d == checked_add(checked_mul(2, q.n), 1) && q.g == q.n + 1) {
      res.exceptions.insert(ExceptionClause::Exceptional2n1);
      res.exists = false;
    } else {
      res.exists = true;
    }
  }

  if (q.n < 4 || !res.exists) {
    res.quadrics = Quadrics::NotApplicable;
  } else if (res.theorem_case == TheoremCase::II &&
             cubic_forcing_congruence(q.n, q.d, res.lambda)) {
    res.quadrics = Quadrics::AndCubics;
  } else {
    res.quadrics = Quadrics::Only;
  }
  return res;
}

}  // namespace k3
