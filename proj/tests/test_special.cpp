#include "ci_reference.hpp"
#include "doctest.h"
#include "k3/special.hpp"

using k3::CiFamily;
using k3::Int;
using k3::Quadrics;
using k3::TheoremCase;

TEST_CASE("nonspecial frozen examples") {
  CHECK(k3::nonspecial(2, 5, 0, 1));
  CHECK(!k3::nonspecial(2, 6, 4, 1));  // dk = nk^2 + g, boundary stays false
  CHECK(k3::nonspecial(2, 6, 4, 2));   // d <= 2nk branch
  CHECK_THROWS_AS(k3::nonspecial(2, 5, 0, 0), std::domain_error);
}

TEST_CASE("nonspecial_lattice_equiv frozen examples") {
  CHECK(k3::nonspecial_lattice_equiv(2, 5, 0, 1));
  CHECK(!k3::nonspecial_lattice_equiv(2, 6, 4, 1));
  CHECK(k3::nonspecial_lattice_equiv(2, 6, 4, 2));
}

TEST_CASE("the two non-specialty routes agree on a sampled box") {
  for (Int n = 1; n <= 8; ++n)
    for (Int k = 1; k <= 8; ++k)
      for (Int d = 1; d <= 60; ++d)
        for (Int g = 0; g <= 80; g += 3)
          CHECK(k3::nonspecial(n, d, g, k) ==
                k3::nonspecial_lattice_equiv(n, d, g, k));
}

TEST_CASE("nonspecial is monotone in k once the degree bound holds") {
  for (Int n = 1; n <= 6; ++n)
    for (Int d = 1; d <= 40; ++d)
      for (Int g = 0; g <= 30; ++g)
        for (Int k = 1; k <= 10; ++k)
          if (d <= 2 * n * k)
            for (Int k2 = k; k2 <= k + 5; ++k2)
              CHECK(k3::nonspecial(n, d, g, k2));
}

TEST_CASE("ci_classify frozen examples") {
  const auto quartic = k3::ci_classify(CiFamily::QuarticP3, 8, 9);
  CHECK(quartic.exists);
  CHECK(quartic.classification.theorem_case == TheoremCase::I);
  CHECK(quartic.hypersurface_degree == 2);

  const auto excluded = k3::ci_classify(CiFamily::Type23P4, 7, 4);
  CHECK(!excluded.exists);
  CHECK(!excluded.hypersurface_degree);

  const auto triple = k3::ci_classify(CiFamily::Type222P5, 12, 9);
  CHECK(triple.exists);
  CHECK(triple.classification.theorem_case == TheoremCase::III);
  CHECK(!triple.hypersurface_degree);

  const auto dependent23 = k3::ci_classify(CiFamily::Type23P4, 12, 13);
  // g = 144/12 + 1
  CHECK(dependent23.exists);
  CHECK(dependent23.hypersurface_degree == 2);
}

TEST_CASE("the (2,2,2) family excludes surfaces that need cubic generators") {
  // (4, 3, 1) lives on a degree-8 K3, but every such surface is cut out by
  // quadrics and cubics, so no complete intersection of quadrics carries it.
  const auto ci = k3::ci_classify(CiFamily::Type222P5, 3, 1);
  CHECK(ci.classification.exists);
  CHECK(ci.classification.quadrics == Quadrics::AndCubics);
  CHECK(!ci.exists);
  CHECK(!k3test::ci_exists_reference(CiFamily::Type222P5, 3, 1));
}

TEST_CASE("ci_classify agrees with the standalone closed form on a box") {
  for (const auto f :
       {CiFamily::QuarticP3, CiFamily::Type23P4, CiFamily::Type222P5}) {
    for (Int d = 1; d <= 40; ++d) {
      for (Int g = 0; g <= 220; ++g) {
        CAPTURE(static_cast<int>(f));
        CAPTURE(d);
        CAPTURE(g);
        CHECK(k3::ci_classify(f, d, g).exists ==
              k3test::ci_exists_reference(f, d, g));
      }
    }
  }
}
