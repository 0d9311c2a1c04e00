#include "kantor/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using kantor::Field;
using kantor::Scalar;

TEST(Scalar, CanonicalRationalForm) {
  EXPECT_EQ(Scalar::fraction(2, 4).str(), "1/2");
  EXPECT_EQ(Scalar::fraction(3, -6).str(), "-1/2");
  EXPECT_EQ(Scalar::fraction(6, 3).str(), "2");
  EXPECT_EQ(Scalar(0).str(), "0");
  EXPECT_TRUE(Scalar::fraction(2, 4) == Scalar::fraction(1, 2));
}

TEST(Scalar, DivisionByZeroRejected) {
  EXPECT_THROW(Scalar(1) / Scalar(0), kantor::FieldError);
  EXPECT_THROW(Scalar(0).inverse(), kantor::FieldError);
  EXPECT_THROW(Scalar::modular(0, 7).inverse(), kantor::FieldError);
}

TEST(Scalar, PrimeField) {
  Field f = Field::prime(7);
  Scalar a = f(3), b = f(5);
  EXPECT_EQ((a + b).str(), "1 mod 7");
  EXPECT_EQ((a * b).str(), "1 mod 7");
  EXPECT_EQ((a / b).str(), "2 mod 7");
  EXPECT_EQ(f(-1).str(), "6 mod 7");
  EXPECT_EQ(f(Scalar::fraction(1, 2)).str(), "4 mod 7");
  EXPECT_THROW(Field::prime(8), kantor::InputError);
}

TEST(Scalar, MixedModuliRejected) {
  EXPECT_THROW(Scalar::modular(1, 5) + Scalar::modular(1, 7), kantor::FieldError);
  EXPECT_THROW(Scalar::modular(1, 9), kantor::InputError);
}

TEST(Scalar, OverflowPromotesToBigRational) {
  Scalar x(INT64_MAX);
  Scalar y = x * x * x;
  EXPECT_EQ(y / x / x, x);
  EXPECT_EQ((y - y).str(), "0");
  Scalar big = Scalar::parse("123456789012345678901234567890/11");
  EXPECT_EQ(big.str(), "123456789012345678901234567890/11");
}

TEST(Scalar, ParseErrors) {
  EXPECT_THROW(Scalar::parse(""), kantor::InputError);
  EXPECT_THROW(Scalar::parse("1/0"), kantor::InputError);
  EXPECT_THROW(Scalar::parse("x"), kantor::InputError);
  EXPECT_THROW(Scalar::parse("3 mod 4"), kantor::InputError);
}

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000);
  if (rng() % 5 == 0) return Scalar(kantor::BigRational(num(rng)) * kantor::BigRational(INT64_MAX) / den(rng));
  return Scalar::fraction(num(rng), den(rng));
}

}  // namespace

TEST(ScalarProperty, FieldAxiomsAndRoundTrip) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Scalar(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Scalar(1));
    }
    EXPECT_EQ(Scalar::parse(a.str()), a);
    EXPECT_EQ(Scalar::parse(a.str()).str(), a.str());
  }
}

TEST(ScalarProperty, PrimeFieldRoundTrip) {
  std::mt19937_64 rng(7);
  Field f = Field::prime(1000003);
  for (int trial = 0; trial < 300; ++trial) {
    Scalar a = f(static_cast<long long>(rng() % 5000000) - 2500000);
    Scalar b = f(static_cast<long long>(rng() % 5000000) - 2500000);
    EXPECT_EQ(Scalar::parse(a.str()), a);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a * b) / b, a);
    }
  }
}
