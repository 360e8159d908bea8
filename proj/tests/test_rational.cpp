#include "dhymlab/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using dhymlab::Integer;
using dhymlab::Rational;

TEST(Rational, LowestTermsPositiveDenominator) {
  Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r.str(), "-3/4");
  EXPECT_EQ(Rational(10, 5).str(), "2");
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-12"), Rational(-12));
  EXPECT_EQ(Rational::parse("+5/10"), Rational(1, 2));
  for (const char* bad : {"", "1/", "/2", "1.5", "pi", "3/-4", "1 /2", "--1"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, ArbitraryPrecision) {
  Rational big(Integer("123456789012345678901234567890"), Integer(7));
  Rational sq = big * big;
  EXPECT_EQ(sq / big, big);
  EXPECT_TRUE((sq - big * big).is_zero());
}

TEST(Rational, OrderingAndSign) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(Rational(-7, 3).sign(), -1);
  EXPECT_EQ(dhymlab::abs(Rational(-7, 3)), Rational(7, 3));
  EXPECT_EQ(dhymlab::factorial(5), 120);
}

// Serialized rationals parse back to the identical value.
TEST(Rational, StringRoundTripProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 100000);
  for (int k = 0; k < 2000; ++k) {
    Rational r(num(rng), den(rng));
    r *= Rational(num(rng), den(rng));
    EXPECT_EQ(Rational::parse(r.str()), r);
  }
}
