#include "kantor/constructions.hpp"
#include "kantor/kantor.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace kantor;

namespace {

Element<Scalar> evaluate_at(const Element<Poly>& v, const Element<Scalar>& point) {
  Element<Scalar> out;
  for (const auto& c : v) out.push_back(c.evaluate(point));
  return out;
}

}  // namespace

TEST(KantorSquare, MatrixIdentitySeedIsMinusProduct) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  MultTable<Scalar> k = kantor_square(m2, "m", Element<Scalar>{1, 0, 0, 1});
  EXPECT_EQ(k, m2.product("m").scaled(Scalar(-1)));
}

TEST(KantorSquare, MatrixE11SeedTable) {
  // e11 * e11 = -e11, e11 * e12 = -e12, e21 * e11 = -e21, e21 * e12 = -e22, all else 0
  Algebra<Scalar> m2 = matrix_algebra(2);
  MultTable<Scalar> k = kantor_square(m2, "m", m2.basis_vector(0));
  MultTable<Scalar> expected(4);
  expected.set(0, 0, 0, Scalar(-1));
  expected.set(0, 1, 1, Scalar(-1));
  expected.set(2, 0, 2, Scalar(-1));
  expected.set(2, 1, 3, Scalar(-1));
  EXPECT_EQ(k, expected);
}

TEST(KantorSquare, AssociativeGivesMinusXuy) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  const auto& t = m2.product("m");
  Element<Poly> u = generic_element(4);
  MultTable<Poly> k = kantor_square(m2, "m", u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Element<Poly> x = to_poly(m2.basis_vector(i)), y = to_poly(m2.basis_vector(j));
      EXPECT_EQ(k.basis_product(i, j), scale(multiply(t, multiply(t, x, u), y), Scalar(-1)));
    }
}

TEST(KantorSquare, LieAndLeibnizVanish) {
  EXPECT_TRUE(kantor_square(lie_cross(), "m", generic_element(3)).is_zero());
  EXPECT_TRUE(kantor_square(lie_affine2(), "m", generic_element(2)).is_zero());
  EXPECT_TRUE(kantor_square(leibniz2(), "m", generic_element(2)).is_zero());
}

TEST(KantorProduct, DefinitionOnRandomElements) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = testgen::table(rng, 3), b = testgen::table(rng, 3);
    auto u = testgen::element(rng, 3), x = testgen::element(rng, 3), y = testgen::element(rng, 3);
    Element<Scalar> expected =
        sub(sub(multiply(a, u, multiply(b, x, y)), multiply(b, multiply(a, u, x), y)), multiply(b, x, multiply(a, u, y)));
    EXPECT_EQ(multiply(kantor_product(a, b, u), x, y), expected);
  }
}

TEST(KantorProduct, LinearInSeed) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = testgen::table(rng, 3), b = testgen::table(rng, 3);
    auto u = testgen::element(rng, 3), v = testgen::element(rng, 3);
    Scalar c = testgen::small(rng);
    EXPECT_EQ(kantor_product(a, b, add(u, v)), kantor_product(a, b, u) + kantor_product(a, b, v));
    EXPECT_EQ(kantor_product(a, b, scale(u, c)), kantor_product(a, b, u).scaled(c));
  }
}

TEST(KantorProduct, GenericSeedSpecializes) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = testgen::table(rng, 3), b = testgen::table(rng, 3);
    auto u = testgen::element(rng, 3);
    MultTable<Poly> g = kantor_product(a, b, generic_element(3));
    MultTable<Scalar> s = kantor_product(a, b, u);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(evaluate_at(g.basis_product(i, j), u), s.basis_product(i, j));
  }
}

TEST(KantorSquare, OperatorBracket) {
  // x * y = [L_u, L_x] y - L_{ux} y, i.e. u(xy) - (ux)y - x(uy)
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 15; ++trial) {
    auto t = testgen::table(rng, 4);
    auto u = testgen::element(rng, 4), x = testgen::element(rng, 4);
    Matrix lu = left_operator(t, u), lx = left_operator(t, x);
    Matrix expected = lu * lx - lx * lu - left_operator(t, multiply(t, u, x));
    EXPECT_EQ(left_operator(kantor_product(t, t, u), x), expected);
  }
}

TEST(KantorSquare, AlgebraWrappers) {
  Algebra<Scalar> q = generalized_quaternion(Scalar(-1), Scalar(-1));
  Algebra<Scalar> k = kantor_square_algebra(q, "m", q.basis_vector(0), "star");
  EXPECT_EQ(k.labels, q.labels);
  EXPECT_EQ(k.product("star"), q.product("m").scaled(Scalar(-1)));
  EXPECT_THROW(kantor_square(q, "m", Element<Scalar>(3)), InputError);
  EXPECT_THROW(kantor_square_algebra(q, "m", generic_element(4)), InputError);
}
