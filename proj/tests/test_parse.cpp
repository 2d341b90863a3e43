#include "support.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace qgor;
using namespace qgor::testing;

TEST(Parse, RingStatements) {
  RingPtr r = parse_ring("field F2; vars Z1..Z3, Y; weights 1,1,1,0; order grevlex");
  EXPECT_EQ(r->field(), Field::prime(2));
  EXPECT_EQ(r->names(), (std::vector<std::string>{"Z1", "Z2", "Z3", "Y"}));
  EXPECT_EQ(r->weights(), (std::vector<std::uint32_t>{1, 1, 1, 0}));
  EXPECT_EQ(parse_ring("vars x,y")->field(), Field::rationals());
  EXPECT_EQ(parse_ring("field Fp:7; vars x")->field(), Field::prime(7));
  EXPECT_EQ(parse_ring("field ZZ/11; vars x")->field(), Field::prime(11));
}

TEST(Parse, FieldNames) {
  EXPECT_EQ(parse_field("Q"), Field::rationals());
  EXPECT_EQ(parse_field("F2"), Field::prime(2));
  EXPECT_EQ(parse_field("Fp:32003"), Field::prime(32003));
  EXPECT_THROW(parse_field("F4"), ParseError);
  EXPECT_THROW(parse_field("R"), ParseError);
  EXPECT_THROW(parse_field("Q Q"), ParseError);
}

TEST(Parse, RingErrors) {
  EXPECT_THROW(parse_ring("vars x, x"), ParseError);
  EXPECT_THROW(parse_ring("vars x, y; weights 1"), ParseError);
  EXPECT_THROW(parse_ring("field F9; vars x"), ParseError);
  EXPECT_THROW(parse_ring("vars Z3..Z1"), ParseError);
  EXPECT_THROW(parse_ring("field Q"), ParseError);
  EXPECT_THROW(parse_ring("vars x; order weird"), ParseError);
  EXPECT_THROW(parse_ring("vars x, y; order elim 2"), ParseError);
}

TEST(Parse, ErrorPositions) {
  RingPtr r = qq({"x", "y"});
  try {
    parse_polynomial("x +\n  * y", r);
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Parse, PolynomialErrors) {
  RingPtr r = qq({"x", "y"});
  for (const char* bad : {"", "x +", "x ^ y", "z", "x / y", "x / 0", "(x", "x y", "2 ** x"}) {
    EXPECT_THROW(parse_polynomial(bad, r), ParseError) << bad;
  }
}

TEST(Parse, ArithmeticSyntax) {
  RingPtr r = qq({"x", "y"});
  EXPECT_EQ(poly(r, "-x^2 + (x+y)^2 - 2*x*y"), poly(r, "y^2"));
  EXPECT_EQ(poly(r, "x/2 + x/2"), poly(r, "x"));
  EXPECT_EQ(poly(r, "# comment\n x  # trailing\n"), poly(r, "x"));
  RingPtr f3 = ring_over(Field::prime(3), {"x"});
  EXPECT_EQ(poly(f3, "x/2"), poly(f3, "2*x"));
}

TEST(Parse, RoundTripOnRandomPolynomials) {
  std::mt19937 rng(7);
  for (Field f : {Field::rationals(), Field::prime(2), Field::prime(101)}) {
    RingPtr r = ring_over(f, {"x", "y", "z"});
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial g = random_polynomial(rng, r, 4);
      if (f.is_rational()) g = Scalar::from_rational(f, 1, 1 + trial % 5) * g;
      EXPECT_EQ(poly(r, g.to_string()), g) << g.to_string();
    }
  }
}

TEST(Parse, IdealFiles) {
  IdealFile file = parse_ideal_file("field Q; vars x, y; ideal I = x^2, x*y; ideal J = y;");
  ASSERT_EQ(file.ideals.size(), 2u);
  EXPECT_EQ(file.find("I").size(), 2u);
  EXPECT_THROW(file.find("K"), std::out_of_range);
  EXPECT_THROW(parse_ideal_file("vars x; ideal I = x; ideal I = x^2;"), ParseError);
  EXPECT_THROW(parse_ideal_file("vars x; ideal I = x; vars y;"), ParseError);
  EXPECT_THROW(parse_ideal_file("vars x; ideal I = ;"), ParseError);
  IdealFile over_f2 = parse_ideal_file("field Q; vars x; ideal I = 3*x;", Field::prime(2));
  EXPECT_EQ(over_f2.ring->field(), Field::prime(2));
  EXPECT_EQ(over_f2.find("I")[0].to_string(), "x");
}

TEST(Parse, OverrideToCharacteristicDividingDenominatorFails) {
  EXPECT_THROW(parse_ideal_file("field Q; vars x; ideal I = x/2;", Field::prime(2)), ParseError);
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST(Parse, ShippedDataMatchesEmbeddedCopies) {
  EXPECT_EQ(slurp(std::string(QGOR_DATA_DIR) + "/counterexample.ideal"), kCounterexampleIdeals);
  EXPECT_EQ(slurp(std::string(QGOR_DATA_DIR) + "/quotient.ideal"), kQuotientIdeals);
}

TEST(Parse, CounterexampleFileShape) {
  IdealFile file = parse_ideal_file(kCounterexampleIdeals);
  EXPECT_EQ(file.ring->num_vars(), 10u);
  EXPECT_EQ(file.find("a").size(), 28u);
  EXPECT_EQ(file.find("c").size(), 6u);
  IdealFile s = parse_ideal_file(kQuotientIdeals);
  EXPECT_EQ(s.ring->num_vars(), 9u);
  EXPECT_EQ(s.find("b").size(), 28u);
}
