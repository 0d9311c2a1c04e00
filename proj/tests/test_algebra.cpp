#include "kantor/constructions.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace kantor;

TEST(MultTable, SetGetAndZeroEntries) {
  MultTable<Scalar> t(3);
  t.set(0, 1, 2, Scalar(5));
  EXPECT_EQ(t.get(0, 1, 2), Scalar(5));
  EXPECT_EQ(t.get(1, 0, 2), Scalar(0));
  EXPECT_EQ(t.nonzero_count(), 1u);
  t.set(0, 1, 2, Scalar(0));
  EXPECT_TRUE(t.is_zero());
  EXPECT_THROW(t.set(3, 0, 0, Scalar(1)), std::out_of_range);
}

TEST(MultTable, TransposeIsOpposite) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = testgen::table(rng, 3);
    auto x = testgen::element(rng, 3), y = testgen::element(rng, 3);
    EXPECT_EQ(multiply(t.transposed(), x, y), multiply(t, y, x));
  }
}

TEST(Multiply, Bilinear) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = testgen::table(rng, 4);
    auto x = testgen::element(rng, 4), y = testgen::element(rng, 4), z = testgen::element(rng, 4);
    Scalar c = testgen::small(rng);
    EXPECT_EQ(multiply(t, add(x, z), y), add(multiply(t, x, y), multiply(t, z, y)));
    EXPECT_EQ(multiply(t, x, add(y, z)), add(multiply(t, x, y), multiply(t, x, z)));
    EXPECT_EQ(multiply(t, scale(x, c), y), scale(multiply(t, x, y), c));
  }
}

TEST(Multiply, DimensionMismatchThrows) {
  MultTable<Scalar> t(2);
  EXPECT_THROW(multiply(t, Element<Scalar>(2), Element<Scalar>(3)), std::invalid_argument);
}

TEST(Operators, ColumnsAreProducts) {
  std::mt19937_64 rng(5);
  auto t = testgen::table(rng, 3);
  auto x = testgen::element(rng, 3), y = testgen::element(rng, 3);
  EXPECT_EQ(left_operator(t, x).apply(y), multiply(t, x, y));
  EXPECT_EQ(right_operator(t, x).apply(y), multiply(t, y, x));
}

TEST(Unit, MatrixAlgebraHasIdentity) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  auto u = find_unit(m2.product("m"));
  ASSERT_TRUE(u);
  EXPECT_EQ(*u, (Element<Scalar>{1, 0, 0, 1}));
  EXPECT_FALSE(find_unit(dorofeev().product("m")));
}

TEST(Unit, InverseInMatrixAlgebra) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  const auto& t = m2.product("m");
  Element<Scalar> g{1, 1, 0, 1};
  auto gi = invert_element(t, g);
  ASSERT_TRUE(gi);
  EXPECT_EQ(*gi, (Element<Scalar>{1, -1, 0, 1}));
  EXPECT_EQ(multiply(t, g, *gi), (Element<Scalar>{1, 0, 0, 1}));
  EXPECT_FALSE(invert_element(t, m2.basis_vector(0)));
}

TEST(Algebra, ProductLookup) {
  Algebra<Scalar> a = matrix_algebra(2);
  EXPECT_EQ(a.default_product(), "m");
  EXPECT_THROW(a.product("nope"), InputError);
  EXPECT_EQ(a.label(1), "e12");
  EXPECT_EQ(a.index_of("e21"), 2u);
}

TEST(Algebra, ToPolyKeepsTable) {
  std::mt19937_64 rng(8);
  Algebra<Scalar> a = testgen::algebra(rng, 3);
  Algebra<Poly> p = to_poly(a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(p.product("m").basis_product(i, j), to_poly(a.product("m").basis_product(i, j)));
}

TEST(SubspaceProduct, SquareOfTruncation) {
  Algebra<Scalar> a = truncated_polynomial(4, false);
  Subspace whole = Subspace::full(4);
  EXPECT_EQ(subspace_product(a.product("m"), whole, whole).dim(), 3u);
}

TEST(ElementText, LinearCombination) {
  EXPECT_EQ(element_expr(Element<Scalar>{0, -1, Scalar::fraction(1, 2)}, {"a", "b", "c"}), "-b + 1/2*c");
  EXPECT_EQ(element_expr(Element<Scalar>{0, 0}, {}), "0");
  EXPECT_EQ(element_str(Element<Scalar>{1, -2}), "[1,-2]");
}
