#include "kantor/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using kantor::Field;
using kantor::Poly;
using kantor::Scalar;

namespace {

const std::vector<std::string> kNames = kantor::seed_variable_names(4);

Poly random_poly(std::mt19937& rng) {
  Poly p;
  int terms = static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    Poly m = Scalar(static_cast<long long>(rng() % 7) - 3);
    for (int k = 0; k < 3; ++k) m *= Poly::variable(rng() % 4);
    p += m;
  }
  return p;
}

}  // namespace

TEST(Poly, ZeroCoefficientsDropped) {
  Poly x = Poly::variable(0);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ((x - x).size(), 0u);
  EXPECT_TRUE(Poly(0).is_zero());
}

TEST(Poly, GradedLexPrinting) {
  Poly x = Poly::variable(0), y = Poly::variable(1);
  Poly p = y + x * x + Poly(3) - Scalar::fraction(1, 2) * x * y;
  EXPECT_EQ(p.str(kNames), "u0^2 - 1/2*u0*u1 + u1 + 3");
}

TEST(Poly, ParseRoundTrip) {
  Poly p = Poly::parse("2*u0*u1^2 - u3 + 1/3", kNames, Field::rational());
  EXPECT_EQ(Poly::parse(p.str(kNames), kNames, Field::rational()), p);
  EXPECT_THROW(Poly::parse("w", kNames, Field::rational()), kantor::InputError);
  EXPECT_THROW(Poly::parse("", kNames, Field::rational()), kantor::InputError);
}

TEST(Poly, Evaluate) {
  Poly x = Poly::variable(0), y = Poly::variable(1);
  Poly p = x * x * y - Poly(5);
  std::vector<Scalar> at = {Scalar(2), Scalar(3)};
  EXPECT_EQ(p.evaluate(at), Scalar(7));
}

TEST(PolyProperty, RingAxioms) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a.is_zero(), a.terms().empty());
    for (const auto& [m, coeff] : a.terms()) EXPECT_FALSE(coeff.is_zero());
    EXPECT_EQ(Poly::parse(a.str(kNames), kNames, Field::rational()), a);
  }
}
