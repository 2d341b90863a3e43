#include "qgor/scalar.hpp"

#include <gtest/gtest.h>

using qgor::Field;
using qgor::Scalar;

TEST(Field, NamesAndCharacteristic) {
  EXPECT_EQ(Field::rationals().name(), "Q");
  EXPECT_EQ(Field::prime(2).name(), "F2");
  EXPECT_EQ(Field::prime(32003).characteristic(), 32003u);
  EXPECT_TRUE(Field::rationals().is_rational());
}

TEST(Field, RejectsComposites) {
  for (std::uint32_t n : {0u, 1u, 4u, 9u, 91u, 65535u}) EXPECT_THROW(Field::prime(n), std::invalid_argument) << n;
}

TEST(Scalar, RationalArithmeticIsExact) {
  Field q = Field::rationals();
  Scalar a = Scalar::from_rational(q, 1, 3);
  Scalar b = Scalar::from_rational(q, 1, 6);
  EXPECT_EQ((a + b).to_string(), "1/2");
  EXPECT_EQ((a - b - b).to_string(), "0");
  EXPECT_TRUE((a - b - b).is_zero());
  EXPECT_EQ((a * b).to_string(), "1/18");
  EXPECT_EQ((a / b).to_string(), "2");
  EXPECT_EQ(Scalar::from_rational(q, 10, -16).to_string(), "-5/8");
  EXPECT_TRUE(Scalar::from_rational(q, 10, -16).is_negative());
}

TEST(Scalar, ResidueArithmetic) {
  Field f7 = Field::prime(7);
  Scalar three = Scalar::from_int(f7, 3);
  EXPECT_EQ((three * three).to_string(), "2");
  EXPECT_EQ(Scalar::from_int(f7, -1).to_string(), "6");
  EXPECT_TRUE((three * three.inverse()).is_one());
  EXPECT_EQ(Scalar::from_rational(f7, 1, 2).to_string(), "4");
  EXPECT_FALSE(Scalar::from_int(f7, -1).is_negative());
}

TEST(Scalar, EveryNonzeroResidueIsInvertible) {
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    Field f = Field::prime(p);
    for (long v = 1; v < static_cast<long>(p); ++v) {
      Scalar s = Scalar::from_int(f, v);
      EXPECT_TRUE((s * s.inverse()).is_one()) << v << " mod " << p;
    }
  }
}

TEST(Scalar, FrobeniusIsAdditive) {
  // (a + b)^p = a^p + b^p in characteristic p.
  for (std::uint32_t p : {2u, 3u, 7u}) {
    Field f = Field::prime(p);
    auto power = [&](Scalar s) {
      Scalar out = Scalar::one(f);
      for (std::uint32_t k = 0; k < p; ++k) out *= s;
      return out;
    };
    for (long a = 0; a < static_cast<long>(p); ++a) {
      for (long b = 0; b < static_cast<long>(p); ++b) {
        Scalar x = Scalar::from_int(f, a), y = Scalar::from_int(f, b);
        EXPECT_EQ(power(x + y), power(x) + power(y));
      }
    }
  }
}

TEST(Scalar, ZeroDenominatorsThrow) {
  EXPECT_THROW(Scalar::from_rational(Field::rationals(), 1, 0), std::domain_error);
  EXPECT_THROW(Scalar::from_rational(Field::prime(5), 1, 10), std::domain_error);
  EXPECT_THROW(Scalar::zero(Field::rationals()).inverse(), std::domain_error);
}

TEST(Scalar, MixingFieldsThrows) {
  Scalar a = Scalar::one(Field::prime(3));
  Scalar b = Scalar::one(Field::prime(5));
  EXPECT_ANY_THROW(a + b);
  EXPECT_ANY_THROW(a + Scalar::one(Field::rationals()));
}
