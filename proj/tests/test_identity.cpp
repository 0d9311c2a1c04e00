#include "kantor/constructions.hpp"
#include "kantor/kantor.hpp"
#include "kantor/registry.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace kantor;

TEST(Parser, AssociatorSugarExpands) {
  IdentityExpr e = parse_identity("assoc(m;x,y,z)");
  EXPECT_EQ(to_string(e), "m(m(x,y),z) - m(x,m(y,z))");
  EXPECT_EQ(e.variables, (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(e.degree(), 3u);
  EXPECT_TRUE(is_multilinear(e));
}

TEST(Parser, EqualsMovesRightSide) {
  EXPECT_EQ(to_string(parse_identity("m(x,y) = m(y,x)")), "m(x,y) - m(y,x)");
  EXPECT_EQ(to_string(parse_identity("comm(m;x,y)")), "m(x,y) - m(y,x)");
}

TEST(Parser, CoefficientsParamsAndConstants) {
  IdentityExpr e = parse_identity("2/3*m(x,y) - @alpha*m(y,x) + m($u,x)");
  EXPECT_EQ(e.parameters(), (std::set<std::string>{"alpha"}));
  EXPECT_EQ(e.constants(), (std::set<std::string>{"u"}));
  EXPECT_EQ(e.terms.front().coeff, Scalar::fraction(2, 3));
}

TEST(Parser, CyclicSum) {
  IdentityExpr e = parse_identity("cyc(x,y,z){m(m(x,y),z)}");
  EXPECT_EQ(e.terms.size(), 3u);
  EXPECT_EQ(to_string(e), "m(m(x,y),z) + m(m(y,z),x) + m(m(z,x),y)");
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_identity("m(x,"), ParseError);
  EXPECT_THROW(parse_identity("m(x,y) = = y"), ParseError);
  EXPECT_THROW(parse_identity("assoc(x,y,z)"), ParseError);
  EXPECT_THROW(parse_identity(""), ParseError);
}

TEST(Parser, RoundTripOverRegistry) {
  for (const auto& [name, v] : variety_registry())
    for (const auto& id : v.identities) {
      IdentityExpr again = parse_identity(to_string(id));
      EXPECT_EQ(to_string(again), to_string(id)) << name;
    }
}

TEST(Identity, NormalizeCancels) {
  EXPECT_TRUE(normalize(parse_identity("m(x,y) - m(x,y)")).empty());
}

TEST(Identity, StandardPolynomialShape) {
  IdentityExpr s4 = standard_polynomial(4);
  EXPECT_EQ(s4.terms.size(), 24u);
  EXPECT_TRUE(is_multilinear(s4));
  EXPECT_EQ(standard_polynomial(2).terms.size(), 2u);
  EXPECT_EQ(to_string(standard_polynomial(2)), "m(x1,x2) - m(x2,x1)");
  IdentityExpr g = times_variable(s4, "z");
  EXPECT_EQ(g.variables.back(), "z");
  EXPECT_EQ(g.degree(), 5u);
}

TEST(Identity, LinearizeLeftAlternative) {
  auto lin = linearize(parse_identity("m(m(x,x),y) = m(x,m(x,y))"));
  ASSERT_EQ(lin.size(), 1u);
  EXPECT_TRUE(is_multilinear(lin[0]));
  EXPECT_EQ(lin[0].terms.size(), 4u);
  EXPECT_THROW(linearize(parse_identity("m(m(x,x),x)"), 3), InputError);
}

TEST(Identity, MirrorSwapsArguments) {
  EXPECT_EQ(to_string(mirror(parse_identity("m(x,m(y,z))"))), "m(m(z,y),x)");
}

TEST(Check, MatrixAlgebraAssociative) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  IdentityExpr a = parse_identity("assoc(m;x,y,z)");
  for (Method method : {Method::Basis, Method::Generic, Method::Random}) {
    CheckOptions opt;
    opt.method = method;
    EXPECT_TRUE(check_identity(m2, a, opt).passed()) << to_string(method);
  }
  CheckOptions basis;
  basis.method = Method::Basis;
  EXPECT_EQ(check_identity(m2, a, basis).evaluations, 64u);
  EXPECT_FALSE(check_identity(m2, parse_identity("comm(m;x,y)")).passed());
}

TEST(Check, WitnessReproducesDefect) {
  Algebra<Scalar> oct = cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1));
  for (Method method : {Method::Basis, Method::Generic, Method::Random}) {
    CheckOptions opt;
    opt.method = method;
    Verdict v = check_identity(oct, parse_identity("assoc(m;x,y,z)"), opt);
    ASSERT_EQ(v.status, Status::Fails);
    ASSERT_TRUE(v.witness);
    const auto& as = v.witness->assignment;
    ASSERT_EQ(as.size(), 3u);
    const auto& t = oct.product("m");
    Element<Scalar> d = sub(multiply(t, multiply(t, as[0].second, as[1].second), as[2].second),
                            multiply(t, as[0].second, multiply(t, as[1].second, as[2].second)));
    EXPECT_EQ(d, v.witness->defect);
    EXPECT_FALSE(is_zero(d));
  }
}

TEST(Check, ConstantsAndParameters) {
  Algebra<Scalar> oct = cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1));
  IdentityExpr altass = parse_identity("assoc(m;x,$u,assoc(m;x,$u,y))");
  CheckOptions opt;
  opt.constants["u"] = oct.basis_vector(1);
  EXPECT_FALSE(check_identity(oct, altass, opt).passed());
  opt.constants["u"] = scale(oct.basis_vector(0), Scalar(5));
  EXPECT_TRUE(check_identity(oct, altass, opt).passed());
  EXPECT_THROW(check_identity(oct, altass), InputError);
  EXPECT_THROW(check_identity(oct, parse_identity("m(x,y) = @a*m(y,x)")), InputError);
  CheckOptions p;
  p.params["a"] = Scalar(-1);
  EXPECT_TRUE(check_identity(lie_cross(), parse_identity("m(x,y) = @a*m(y,x)"), p).passed());
}

TEST(Check, UnitConstant) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  EXPECT_TRUE(check_identity(m2, parse_identity("m($1,x) = x")).passed());
  EXPECT_THROW(check_identity(dorofeev(), parse_identity("m($1,x) = x")), InputError);
}

TEST(Check, NonMultilinearGeneric) {
  EXPECT_TRUE(check_identity(cayley_dickson(Scalar(-1), Scalar(2), Scalar(3)), parse_identity("assoc(m;x,x,y)")).passed());
  EXPECT_FALSE(check_identity(dorofeev(), parse_identity("assoc(m;x,x,y)")).passed());
}

TEST(Check, GenericSeedTables) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  Algebra<Poly> k(4, m2.field);
  k.products.emplace("m", kantor_product(m2, "m", "m", generic_element(4)));
  EXPECT_TRUE(check_identity(k, parse_identity("assoc(m;x,y,z)")).holds());
  Verdict v = check_identity(k, parse_identity("comm(m;x,y)"));
  EXPECT_EQ(v.status, Status::Fails);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->table_point.size(), 4u);
}

TEST(Check, RandomAgreesWithBasisOnRandomTables) {
  std::mt19937_64 rng(31);
  IdentityExpr id = parse_identity("assoc(m;x,y,z)");
  for (int trial = 0; trial < 20; ++trial) {
    Algebra<Scalar> a = testgen::algebra(rng, 2);
    CheckOptions basis, generic;
    basis.method = Method::Basis;
    EXPECT_EQ(check_identity(a, id, basis).passed(), check_identity(a, id, generic).passed());
  }
}

TEST(FitParameter, QuasiAssociativeMutation) {
  Algebra<Scalar> q = lambda_mutation(matrix_algebra(2), "m", Scalar::fraction(2, 3));
  auto alpha = fit_parameter(q, variety_spec("quasi_associative").identities[1], "alpha");
  ASSERT_TRUE(alpha);
  EXPECT_EQ(*alpha, Scalar(2));
  EXPECT_FALSE(fit_parameter(cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1)),
                             variety_spec("quasi_associative").identities[1], "alpha"));
}

TEST(Registry, EveryVarietyWellFormed) {
  for (const auto& [name, v] : variety_registry()) {
    EXPECT_EQ(name, v.name);
    EXPECT_FALSE(v.identities.empty()) << name;
    for (const auto& id : v.identities) {
      for (const auto& p : id.products())
        EXPECT_NE(std::find(v.products.begin(), v.products.end(), p), v.products.end()) << name;
      for (const auto& p : id.parameters())
        EXPECT_NE(std::find(v.params.begin(), v.params.end(), p), v.params.end()) << name;
    }
  }
  EXPECT_THROW(variety_spec("nope"), InputError);
  EXPECT_NE(registry_dsl().find("associative: m(m(x,y),z) - m(x,m(y,z))"), std::string::npos);
}

TEST(Registry, MirroredVarietiesOnOpposite) {
  Algebra<Scalar> z = zinbiel_truncated(5);
  Algebra<Scalar> op(z.dim, z.field);
  op.products.emplace("m", z.product("m").transposed());
  EXPECT_TRUE(check_variety(z, "zinbiel_left").holds());
  EXPECT_TRUE(check_variety(op, "zinbiel_right").holds());
  EXPECT_FALSE(check_variety(z, "zinbiel_right").holds());
}

TEST(Registry, RenameProducts) {
  Algebra<Scalar> a = left_novikov_poisson(4);
  EXPECT_TRUE(check_variety(a, "novikov_left", {}, {{"m", "o"}}).holds());
  EXPECT_THROW(check_variety(a, "eps_commutative", {{"eps", Scalar(2)}}), InputError);
  EXPECT_THROW(check_variety(a, "quasi_associative"), InputError);
}
