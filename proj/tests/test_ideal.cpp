#include "properties.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace qgor;
using namespace qgor::testing;

TEST(Ideal, MembershipAgreesWithLinearAlgebraOracle) {
  SuiteResult r = membership_suite();
  EXPECT_EQ(r.cases, 900);
  EXPECT_TRUE(r.ok()) << r.failures << " mismatches, first: " << r.first_failure;
}

TEST(Ideal, DimensionAgreesWithSubsetOracle) {
  SuiteResult r = dimension_suite();
  EXPECT_EQ(r.cases, 50);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Ideal, CompleteIntersectionHilbertFunctions) {
  SuiteResult r = complete_intersection_suite();
  EXPECT_EQ(r.cases, 20);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Ideal, OraclesOnKnownInput) {
  RingPtr r = qq({"x", "y"});
  EXPECT_TRUE(member_by_linear_algebra(poly(r, "x^2*y + y^3"), polys(r, "x^2 + y^2")));
  EXPECT_FALSE(member_by_linear_algebra(poly(r, "x*y"), polys(r, "x^2 + y^2")));
  EXPECT_EQ(dimension_by_subsets(3, {0b001u, 0b110u}), 1u);
  // (1 - t^2)^2 / (1 - t)^2 = (1 + t)^2.
  EXPECT_EQ(complete_intersection_series(2, {2, 2}, 4), (std::vector<std::int64_t>{1, 2, 1, 0, 0}));
}

TEST(Ideal, HilbertFunctionOfTwistedCubicCone) {
  RingPtr r = qq({"x", "y", "z", "w"});
  Ideal cubic = ideal(r, "x*z - y^2, y*w - z^2, x*w - y*z");
  for (std::uint64_t n = 0; n <= 6; ++n) EXPECT_EQ(hilbert_function(cubic, n), 3 * n + 1);
  EXPECT_EQ(dimension(cubic), 2u);
}

TEST(Ideal, HilbertFunctionWithWeights) {
  RingPtr r = Ring::make(Field::rationals(), {"x", "y"}, {1, 2});
  Ideal zero = Ideal::zero(r);
  const std::uint64_t expected[] = {1, 1, 2, 2, 3, 3};
  for (std::uint64_t n = 0; n < 6; ++n) EXPECT_EQ(hilbert_function(zero, n), expected[n]);
  EXPECT_EQ(hilbert_function(ideal(r, "x^2 - y"), 4), 1u);
}

TEST(Ideal, HilbertFunctionRejectsUnsupportedInput) {
  RingPtr weighted = Ring::make(Field::rationals(), {"x", "t"}, {1, 0});
  EXPECT_THROW(hilbert_function(ideal(weighted, "x"), 1), UnsupportedError);
  RingPtr r = qq({"x", "y"});
  EXPECT_THROW(hilbert_function(ideal(r, "x^2 - y"), 1), UnsupportedError);
}

TEST(Ideal, IntersectionAndColonProperties) {
  std::mt19937 rng(5);
  RingPtr r = qq({"x", "y", "z"});
  for (int trial = 0; trial < 15; ++trial) {
    Ideal a(r, {random_form(rng, r, 2), random_form(rng, r, 2)});
    Ideal b(r, {random_form(rng, r, 1), random_form(rng, r, 3)});
    Ideal meet = intersect(a, b);
    EXPECT_TRUE(meet.is_subset_of(a));
    EXPECT_TRUE(meet.is_subset_of(b));
    EXPECT_TRUE(ideal_product(a, b).is_subset_of(meet));
    EXPECT_EQ(intersect(b, a), meet);
    EXPECT_TRUE(is_groebner_basis(meet.groebner_basis().elements()));

    Polynomial f = random_form(rng, r, 1);
    Ideal q = colon(a, f);
    EXPECT_TRUE(a.is_subset_of(q));
    for (const Polynomial& g : q.generators()) EXPECT_TRUE(a.contains(g * f));
    Ideal qb = colon(a, b);
    EXPECT_TRUE(ideal_product(qb, b).is_subset_of(a));
  }
}

TEST(Ideal, KnownColonsAndIntersections) {
  RingPtr r = qq({"x", "y"});
  EXPECT_EQ(intersect(ideal(r, "x"), ideal(r, "y")), ideal(r, "x*y"));
  EXPECT_EQ(colon(ideal(r, "x^2, x*y"), poly(r, "x")), ideal(r, "x, y"));
  EXPECT_EQ(colon(ideal(r, "x^2, x*y"), ideal(r, "x, y")), ideal(r, "x"));
  EXPECT_TRUE(colon(ideal(r, "x"), poly(r, "x^3")).is_unit());
  EXPECT_THROW(colon(ideal(r, "x"), Polynomial(r)), std::invalid_argument);
  EXPECT_EQ(intersect(ideal(r, "x"), Ideal::unit(r)), ideal(r, "x"));
  EXPECT_TRUE(intersect(ideal(r, "x"), Ideal::zero(r)).is_zero());
}

TEST(Ideal, Elimination) {
  RingPtr r = qq({"t", "x", "y"});
  Ideal cusp = eliminate(ideal(r, "x - t^2, y - t^3"), {"t"});
  EXPECT_EQ(cusp, ideal(r, "y^2 - x^3"));
  Ideal line = eliminate(ideal(r, "x - t, y - 2*t"), {"t"});
  EXPECT_EQ(line, ideal(r, "y - 2*x"));
  EXPECT_TRUE(eliminate(ideal(r, "x - t"), {"t"}).is_zero());
  EXPECT_THROW(eliminate(ideal(r, "x"), {"q"}), std::invalid_argument);
}

TEST(Ideal, RegularElements) {
  RingPtr r = qq({"x", "y"});
  EXPECT_TRUE(is_regular_element(ideal(r, "x^2"), poly(r, "y")));
  EXPECT_FALSE(is_regular_element(ideal(r, "x^2, x*y"), poly(r, "y")));
  EXPECT_THROW(is_regular_element(Ideal::unit(r), poly(r, "y")), std::domain_error);
}

TEST(Ideal, EqualityIsByReducedBasis) {
  RingPtr r = qq({"x", "y"});
  EXPECT_EQ(ideal(r, "x + y, x - y"), ideal(r, "x, y"));
  EXPECT_FALSE(ideal(r, "x") == ideal(r, "y"));
  EXPECT_EQ(ideal_sum(ideal(r, "x"), ideal(r, "y")), irrelevant_ideal(r));
}

TEST(Ideal, DimensionEdgeCases) {
  RingPtr r = qq({"x", "y"});
  EXPECT_EQ(dimension(Ideal::zero(r)), 2u);
  EXPECT_EQ(dimension(ideal(r, "x, y")), 0u);
  EXPECT_THROW(dimension(Ideal::unit(r)), std::domain_error);
}

TEST(Ideal, ConcurrentBasisRequestsShareOneComputation) {
  RingPtr r = qq({"x", "y", "z", "w"});
  Ideal cubic = ideal(r, "x*z - y^2, y*w - z^2, x*w - y*z");
  std::vector<const GroebnerBasis*> seen(4, nullptr);
  std::vector<std::thread> threads;
  for (int k = 0; k < 4; ++k) {
    threads.emplace_back([&, k] { seen[k] = &cubic.groebner_basis(); });
  }
  for (auto& t : threads) t.join();
  for (const GroebnerBasis* p : seen) EXPECT_EQ(p, seen[0]);
}
