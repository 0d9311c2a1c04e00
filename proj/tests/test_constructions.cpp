#include "kantor/catalog.hpp"
#include "kantor/registry.hpp"

#include <gtest/gtest.h>

using namespace kantor;

namespace {

Algebra<Scalar> octonions() { return cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1)); }

}  // namespace

TEST(CayleyDickson, SquaresOfUnits) {
  Scalar a(2), b(3), g(5);
  Algebra<Scalar> o = cayley_dickson(a, b, g);
  const auto& t = o.product("m");
  std::vector<Scalar> squares{a, b, -a * b, g, -a * g, -b * g, a * b * g};
  for (std::size_t i = 1; i < 8; ++i) EXPECT_EQ(t.basis_product(i, i), scale(o.basis_vector(0), squares[i - 1])) << i;
}

TEST(CayleyDickson, CorrectedCell) {
  // e5 e7 = alpha gamma e2 = -e7 e5
  Scalar a(2), b(3), g(5);
  Algebra<Scalar> o = cayley_dickson(a, b, g);
  EXPECT_EQ(o.product("m").basis_product(5, 7), scale(o.basis_vector(2), a * g));
  EXPECT_EQ(o.product("m").basis_product(7, 5), scale(o.basis_vector(2), -a * g));
}

TEST(CayleyDickson, AlternativeNotAssociative) {
  for (auto [a, b, g] : std::vector<std::tuple<int, int, int>>{{-1, -1, -1}, {2, 3, 5}, {-1, 1, 1}, {7, -2, 3}}) {
    Algebra<Scalar> o = cayley_dickson(Scalar(a), Scalar(b), Scalar(g));
    EXPECT_TRUE(check_variety(o, "alternative").holds());
    EXPECT_FALSE(check_variety(o, "associative").holds());
    EXPECT_TRUE(find_unit(o.product("m")));
  }
}

TEST(CayleyDickson, ImaginaryUnitsAnticommute) {
  Algebra<Scalar> o = octonions();
  const auto& t = o.product("m");
  for (std::size_t i = 1; i < 8; ++i)
    for (std::size_t j = 1; j < 8; ++j)
      if (i != j) {
        EXPECT_EQ(t.basis_product(i, j), scale(t.basis_product(j, i), Scalar(-1)));
      }
}

TEST(CayleyDickson, RejectsBadInput) {
  EXPECT_THROW(cayley_dickson(Scalar(0), Scalar(1), Scalar(1)), InputError);
  EXPECT_THROW(cayley_dickson(Scalar(1), Scalar(1), Scalar(1), Field::prime(2)), InputError);
  EXPECT_NO_THROW(cayley_dickson(Scalar(1), Scalar(1), Scalar(1), Field::prime(5)));
}

TEST(Quaternions, SkewField) {
  Algebra<Scalar> h = generalized_quaternion(Scalar(-1), Scalar(-1));
  EXPECT_TRUE(check_variety(h, "associative").holds());
  EXPECT_EQ(h.product("m").basis_product(1, 2), h.basis_vector(3));
  EXPECT_EQ(h.product("m").basis_product(1, 1), scale(h.basis_vector(0), Scalar(-1)));
}

TEST(Matrix, UnitsMultiply) {
  Algebra<Scalar> m3 = matrix_algebra(3);
  EXPECT_EQ(m3.dim, 9u);
  const auto& t = m3.product("m");
  EXPECT_EQ(t.basis_product(1, 5), m3.basis_vector(2));  // e12 e23 = e13
  EXPECT_TRUE(is_zero(t.basis_product(1, 1)));
  EXPECT_TRUE(check_variety(m3, "associative").holds());
}

TEST(DirectSum, Blocks) {
  Algebra<Scalar> a = direct_sum(matrix_algebra(2), matrix_algebra(2));
  EXPECT_EQ(a.dim, 8u);
  EXPECT_TRUE(is_zero(a.product("m").basis_product(0, 4)));
  EXPECT_EQ(a.product("m").basis_product(4, 4), a.basis_vector(4));
}

TEST(Truncated, NilpotentAndUnital) {
  Algebra<Scalar> t = truncated_polynomial(4, false), u = truncated_polynomial(4, true);
  EXPECT_EQ(t.dim, 4u);
  EXPECT_EQ(u.dim, 5u);
  EXPECT_TRUE(is_zero(t.product("m").basis_product(1, 2)));  // t^2 t^3 = t^5 = 0
  EXPECT_EQ(t.product("m").basis_product(0, 1), t.basis_vector(2));
  EXPECT_TRUE(check_variety(u, "associative_commutative").holds());
}

TEST(Dorofeev, Table) {
  Algebra<Scalar> d = dorofeev();
  EXPECT_TRUE(check_variety(d, "right_alternative").holds());
  EXPECT_FALSE(check_variety(d, "left_alternative").holds());
  EXPECT_EQ(d.product("m").basis_product(0, 2), d.basis_vector(3));  // ac = d
}

TEST(Zinbiel, Values) {
  Algebra<Scalar> z = zinbiel_truncated(6);
  EXPECT_EQ(z.product("m").basis_product(0, 0), scale(z.basis_vector(2), Scalar::fraction(1, 2)));
  EXPECT_EQ(z.product("m").basis_product(1, 0), scale(z.basis_vector(3), Scalar::fraction(1, 3)));
  EXPECT_TRUE(check_variety(z, "zinbiel_left").holds());
}

TEST(Novikov, EulerDerivation) {
  Algebra<Scalar> n = derivation_left_novikov(4);
  EXPECT_EQ(n.product("m").basis_product(1, 2), n.basis_vector(3));                      // t o t^2 = t^3
  EXPECT_EQ(n.product("m").basis_product(2, 1), scale(n.basis_vector(3), Scalar(2)));   // t^2 o t = 2t^3
  EXPECT_TRUE(n.product("m").basis_product(0, 3) == Element<Scalar>(5));                 // D(1) = 0
  EXPECT_TRUE(check_variety(n, "novikov_left").holds());
  EXPECT_TRUE(check_variety(left_novikov_poisson(4), "novikov_poisson_left").holds());
  EXPECT_TRUE(check_variety(right_novikov_poisson(4), "novikov_poisson_right").holds());
}

TEST(Tridendriform, Values) {
  Algebra<Scalar> a = comm_tridendriform_truncated(6);
  EXPECT_EQ(a.product("p").basis_product(0, 1), scale(a.basis_vector(3), Scalar::fraction(1, 3)));  // t p t^2 = t^4/3
  EXPECT_TRUE(check_variety(a, "comm_tridendriform").holds());
}

TEST(SmallFixtures, Varieties) {
  EXPECT_TRUE(check_variety(poisson_small(), "poisson").holds());
  EXPECT_TRUE(check_variety(lie_cross(), "lie").holds());
  EXPECT_TRUE(check_variety(lie_affine2(), "lie").holds());
  EXPECT_TRUE(check_variety(leibniz2(), "leibniz_left").holds());
  EXPECT_FALSE(check_variety(leibniz2(), "lie").holds());
  EXPECT_TRUE(zero_algebra(3).product("m").is_zero());
}

TEST(Mutation, LambdaHalfIsCommutative) {
  Algebra<Scalar> j = lambda_mutation(matrix_algebra(2), "m", Scalar::fraction(1, 2));
  EXPECT_TRUE(check_variety(j, "jordan").holds());
  Algebra<Scalar> same = lambda_mutation(matrix_algebra(2), "m", Scalar(1));
  EXPECT_EQ(same.product("m"), matrix_algebra(2).product("m"));
}

TEST(Commutator, OctonionCommutatorIsMalcevLike) {
  Algebra<Scalar> c = commutator_algebra(octonions());
  EXPECT_TRUE(check_variety(c, "anticommutative").holds());
  EXPECT_FALSE(check_variety(c, "lie").holds());
  EXPECT_TRUE(check_variety(commutator_algebra(matrix_algebra(2)), "lie").holds());
}

TEST(Catalog, EveryEntryBuilds) {
  for (const auto& [name, entry] : construction_catalog()) {
    Algebra<Scalar> a = construct_named(name);
    EXPECT_GT(a.dim, 0u) << name;
    EXPECT_FALSE(a.products.empty()) << name;
  }
  EXPECT_EQ(construct_named("matrix", {{"k", "3"}}).dim, 9u);
  EXPECT_THROW(construct_named("matrix", {{"k", "1/2"}}), InputError);
  EXPECT_THROW(construct_named("matrix", {{"q", "2"}}), InputError);
  EXPECT_THROW(construct_named("nope"), InputError);
  EXPECT_EQ(construct_named("quaternions", {}, Field::prime(7)).field.characteristic(), 7u);
}
