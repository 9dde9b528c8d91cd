#include <gtest/gtest.h>

#include "cmarr/arrangement.hpp"
#include "cmarr/finite_field.hpp"
#include "cmarr/lattice.hpp"
#include "oracles.hpp"

#include <set>
#include <tuple>

using namespace cmarr;

namespace {

IntPolynomial falling_factorial(std::size_t k) {
  IntPolynomial p{1};
  for (std::size_t j = 0; j < k; ++j) p = p * IntPolynomial{-static_cast<long long>(j), 1};
  return p;
}


std::vector<std::vector<long long>> small_forms(const Arrangement& a) {
  std::vector<std::vector<long long>> out;
  for (const auto& h : a.hyperplanes) {
    std::vector<long long> f;
    for (const auto& c : h.normal.coefficients()) f.push_back(c.convert_to<long long>());
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(BuildLattice, BraidThreeIsPartitionLattice) {
  auto lattice = build_lattice(build_arrangement(1, 3));
  ASSERT_EQ(lattice.size(), 5u);
  EXPECT_EQ(lattice.flats_by_codim(), (std::vector<std::size_t>{1, 3, 1}));
  EXPECT_EQ(lattice.mobius(0), 1);
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(lattice.mobius(i), -1);
  EXPECT_EQ(lattice.mobius(4), 2);
  // the top flat x1 = x2 = x3 lies in all three hyperplanes
  EXPECT_EQ(lattice.flat(4).contained_hyperplanes(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(lattice.parents(4), (std::vector<std::size_t>{1, 2, 3}));
}

TEST(BuildLattice, EmptyArrangementHasOneFlat) {
  auto lattice = build_lattice(Arrangement{1, 2, ArrangementKind::single_t, {}});
  EXPECT_EQ(lattice.size(), 1u);
  EXPECT_EQ(lattice.flat(0).codim, 0u);
  EXPECT_EQ(lattice.mobius(0), 1);
  EXPECT_EQ(char_poly(lattice), IntPolynomial::monomial(2));
  EXPECT_EQ(poincare_poly(lattice), IntPolynomial{1});
}

TEST(BuildLattice, FlatInvariants) {
  for (auto [t, k] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 5}, {1, 5}}) {
    auto a = build_arrangement(t, k);
    auto lattice = build_lattice(a);
    std::set<std::vector<std::vector<BigInt>>> keys;
    for (std::size_t x = 0; x < lattice.size(); ++x) {
      const Flat& f = lattice.flat(x);
      EXPECT_EQ(f.codim, f.normal_span.row_count());
      EXPECT_EQ(rref(f.normal_span).matrix, f.normal_span);
      EXPECT_TRUE(keys.insert(f.integer_rows()).second);
      RrefResult basis{f.normal_span, f.pivots};
      for (std::size_t h = 0; h < a.size(); ++h)
        EXPECT_EQ(f.contained.test(h), in_row_space(basis, a.hyperplanes[h].normal.as_rationals()));
      // Moebius recursion: sum over the closed interval [bottom, X] vanishes
      if (x > 0) {
        BigInt sum = 0;
        for (std::size_t y = 0; y < lattice.size(); ++y)
          if (lattice.below(y, x)) sum += lattice.mobius(y);
        EXPECT_EQ(sum, 0);
      }
    }
    // codim-1 flats are exactly the hyperplanes
    EXPECT_EQ(lattice.flats_by_codim()[1], a.size());
  }
}

TEST(BuildLattice, CapSignalsSizeError) {
  try {
    build_lattice(build_arrangement(1, 5), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::size_limit);
    EXPECT_NE(std::string(e.what()).find("10"), std::string::npos);
  }
}

TEST(CharPoly, BraidIsFallingFactorial) {
  EXPECT_EQ(char_poly(build_lattice(build_arrangement(1, 3))), (IntPolynomial{0, 2, -3, 1}));
  for (std::size_t k = 1; k <= 5; ++k)
    EXPECT_EQ(char_poly(build_lattice(build_arrangement(1, k))), falling_factorial(k)) << k;
}

TEST(PoincarePoly, BraidAndSubstitutionIdentity) {
  auto lattice = build_lattice(build_arrangement(1, 3));
  EXPECT_EQ(poincare_poly(lattice), (IntPolynomial{1, 3, 2}));

  // pi(q) = (-q)^k chi(-1/q): coefficient of q^c in pi is (-1)^c [q^(k-c)] chi
  for (auto [t, k] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 5}}) {
    auto l = build_lattice(build_arrangement(t, k));
    auto chi = char_poly(l), pi = poincare_poly(l);
    for (std::size_t c = 0; c <= static_cast<std::size_t>(k); ++c) {
      BigInt expect = chi.coefficient(k - c);
      if (c % 2) expect = -expect;
      EXPECT_EQ(pi.coefficient(c), expect);
      EXPECT_GE(pi.coefficient(c), 0);
    }
  }
}

TEST(PoincarePoly, MTwoFour) {
  auto a = build_arrangement(2, 4);
  auto pi = poincare_poly(build_lattice(a));
  EXPECT_EQ(pi.coefficient(0), 1);
  EXPECT_EQ(pi.coefficient(1), 9);
  EXPECT_EQ(pi, (IntPolynomial{1, 9, 23, 15}));
}

TEST(RegionCount, WorkedExamples) {
  auto braid3 = region_count(build_lattice(build_arrangement(1, 3)));
  EXPECT_EQ(braid3.regions, 6);
  EXPECT_EQ(braid3.bounded, 0);

  auto empty1 = region_count(build_lattice(Arrangement{1, 1, ArrangementKind::single_t, {}}));
  EXPECT_EQ(empty1.regions, 1);
}

TEST(RegionCount, AgreesWithSignCensusAndPoincareAtOne) {
  for (auto [t, k] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}, {2, 5}}) {
    auto a = build_arrangement(t, k);
    auto lattice = build_lattice(a);
    auto rc = region_count(lattice);
    EXPECT_EQ(rc.regions, poincare_poly(lattice).evaluate(1));
    EXPECT_EQ(rc.bounded, 0);
    EXPECT_EQ(rc.regions, oracle::sign_vector_census(small_forms(a), k, k == 5 ? 15 : 8, true)) << t << "," << k;
  }
}

TEST(RegionCount, MTwoFourFrozen) {
  // Orderings of four reals (24), each split by comparing a+d with b+c.
  auto rc = region_count(build_lattice(build_arrangement(2, 4)));
  EXPECT_EQ(rc.regions, 48);
}

TEST(CharPoly, LatticeRouteMatchesFiniteFieldRoute) {
  for (auto [t, k, modified] : std::vector<std::tuple<int, int, bool>>{
           {1, 2, false}, {1, 4, false}, {2, 4, false}, {2, 5, false}, {3, 5, false}, {3, 4, true}, {2, 5, true}}) {
    auto a = build(t, k, modified);
    EXPECT_EQ(char_poly(build_lattice(a)), finite_field_charpoly(a)) << t << "," << k;
  }
}

TEST(CharPoly, MTwoFourFactorsCompletely) {
  // frozen from the finite-field counts; q(q-1)(q-3)(q-5)
  auto chi = char_poly(build_lattice(build_arrangement(2, 4)));
  EXPECT_EQ(chi, (IntPolynomial{0, -15, 23, -9, 1}));
  EXPECT_EQ(chi, IntPolynomial({0, 1}) * IntPolynomial({-1, 1}) * IntPolynomial({-3, 1}) * IntPolynomial({-5, 1}));
}

TEST(CharPoly, DeletionMonotonicity) {
  for (std::size_t k = 2; k <= 5; ++k)
    for (std::size_t t = 1; t <= 4; ++t)
      EXPECT_LE(build_arrangement(1, k).size(), build_modified_arrangement(t, k).size());
}
