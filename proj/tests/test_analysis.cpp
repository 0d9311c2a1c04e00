#include "kantor/analysis.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace kantor;

namespace {

Algebra<Scalar> octonions() { return cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1)); }

Element<Scalar> identity2() { return {1, 0, 0, 1}; }

}  // namespace

TEST(Series, TruncatedPolynomial) {
  Algebra<Scalar> a = truncated_polynomial(8, false);
  SeriesReport s = power_series(a, "m", SeriesKind::Nilpotent);
  EXPECT_EQ(s.dims, (std::vector<std::size_t>{8, 7, 6, 5, 4, 3, 2, 1, 0}));
  EXPECT_EQ(s.index, std::optional<std::size_t>(9));
  SeriesReport k = power_series(kantor_square(a, "m", generic_element(8)), SeriesKind::Nilpotent);
  EXPECT_TRUE(k.flattened);
  EXPECT_EQ(k.dims, (std::vector<std::size_t>{8, 6, 4, 2, 0}));
  EXPECT_EQ(k.index, std::optional<std::size_t>(5));
}

TEST(Series, NilpotentBoundOnTruncations) {
  for (std::size_t k = 2; k <= 7; ++k) {
    Algebra<Scalar> a = truncated_polynomial(k, false);
    std::size_t n = *power_series(a, "m", SeriesKind::Nilpotent).index;
    EXPECT_EQ(n, k + 1);
    auto ks = power_series(kantor_square(a, "m", generic_element(k)), SeriesKind::Nilpotent);
    ASSERT_TRUE(ks.index);
    EXPECT_LE(*ks.index, n / 2 + 1) << k;
  }
}

TEST(Series, Dorofeev) {
  Algebra<Scalar> d = dorofeev();
  SeriesReport right = power_series(d, "m", SeriesKind::Right);
  EXPECT_EQ(right.dims, (std::vector<std::size_t>{5, 3, 1, 0}));
  EXPECT_EQ(right.index, std::optional<std::size_t>(4));
  SeriesReport nil = power_series(d, "m", SeriesKind::Nilpotent);
  EXPECT_FALSE(nil.index);
  EXPECT_EQ(nil.dims[1], 3u);
  EXPECT_EQ(nil.dims.back(), 3u);
  MultTable<Scalar> star = kantor_square(d, "m", d.basis_vector(0));
  SeriesReport sr = power_series(star, SeriesKind::Right);
  EXPECT_EQ(sr.dims, (std::vector<std::size_t>{5, 3, 2, 2}));
  EXPECT_TRUE(sr.stabilized);
  EXPECT_FALSE(sr.index);
  SeriesReport sd = power_series(star, SeriesKind::Derived);
  EXPECT_EQ(sd.dims, (std::vector<std::size_t>{5, 3, 0}));
  EXPECT_EQ(sd.index, std::optional<std::size_t>(2));
  EXPECT_EQ(multiply(star, d.basis_vector(2), d.basis_vector(1)), d.basis_vector(2));
}

TEST(Series, Names) {
  for (auto k : {SeriesKind::Nilpotent, SeriesKind::Right, SeriesKind::Left, SeriesKind::Derived})
    EXPECT_EQ(parse_series_kind(to_string(k)), k);
  EXPECT_THROW(parse_series_kind("sideways"), InputError);
}

TEST(Ideals, DirectSumBlocks) {
  Algebra<Scalar> a = direct_sum(matrix_algebra(2), matrix_algebra(2));
  std::vector<Vector> b1;
  for (std::size_t i = 0; i < 4; ++i) b1.push_back(a.basis_vector(i));
  Subspace a1 = Subspace::span(8, b1);
  EXPECT_TRUE(is_ideal(a.product("m"), a1).ideal);
  EXPECT_TRUE(is_ideal(kantor_square(a, "m", generic_element(8)), a1).ideal);
  Subspace line = Subspace::span(8, {a.basis_vector(0)});
  IdealReport r = is_ideal(a.product("m"), line);
  EXPECT_FALSE(r.ideal);
  ASSERT_TRUE(r.witness);
}

TEST(Ideals, ConverseFails) {
  Algebra<Scalar> a = direct_sum(matrix_algebra(2), matrix_algebra(2));
  Element<Scalar> e1(8), e2(8);
  e1[0] = e1[3] = Scalar(1);
  e2[4] = e2[7] = Scalar(1);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < 4; ++i) rows.push_back(a.basis_vector(i));
  rows.push_back(e2);
  Subspace s = Subspace::span(8, rows);
  EXPECT_TRUE(is_ideal(kantor_square(a, "m", e1), s).ideal);
  EXPECT_FALSE(is_ideal(a.product("m"), s).ideal);
}

TEST(Ideals, IdealsOfAStayIdealsProperty) {
  // ideals of A are ideals of (A,*_u) for random tables and random seeds
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    auto t = testgen::table(rng, 3);
    Subspace ideal = subspace_product(t, Subspace::full(3), Subspace::full(3));
    // A^2 is always an ideal
    ASSERT_TRUE(is_ideal(t, ideal).ideal);
    EXPECT_TRUE(is_ideal(kantor_product(t, t, testgen::element(rng, 3)), ideal).ideal);
  }
}

TEST(Jacobi, Oracles) {
  EXPECT_TRUE(jacobi_space(matrix_algebra(2).product("m")).is_zero());
  EXPECT_EQ(jacobi_space(lie_cross().product("m")).dim(), 3u);
  EXPECT_EQ(jacobi_space(leibniz2().product("m")).dim(), 2u);
  EXPECT_TRUE(jacobi_space(octonions().product("m")).is_zero());
}

TEST(Derivations, MatrixAlgebra) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  DerivationSpace d = derivation_space(m2.product("m"));
  EXPECT_EQ(d.dim(), 3u);
  for (const auto& op : d.operators()) EXPECT_TRUE(is_derivation(m2.product("m"), op));
  Algebra<Poly> pm = to_poly(m2);
  MultTable<Poly> k = kantor_square(m2, "m", generic_element(4));
  EXPECT_EQ(derivation_space<Poly>({&pm.product("m"), &k}).dim(), 0u);
  MultTable<Scalar> fixed = kantor_square(m2, "m", identity2());
  EXPECT_EQ(derivation_space<Scalar>({&m2.product("m"), &fixed}).dim(), 3u);
}

TEST(Derivations, InnerDerivationsProperty) {
  // ad_a = L_a - R_a is a derivation of every associative algebra
  std::mt19937_64 rng(42);
  Algebra<Scalar> m3 = matrix_algebra(3);
  const auto& t = m3.product("m");
  for (int trial = 0; trial < 10; ++trial) {
    auto a = testgen::element(rng, 9);
    EXPECT_TRUE(is_derivation(t, left_operator(t, a) - right_operator(t, a)));
  }
  EXPECT_FALSE(is_derivation(t, Matrix::identity(9)));
}

TEST(Derivations, LeibnizInvertible) {
  Algebra<Scalar> l = leibniz2();
  Matrix d{{1, 0}, {0, 2}};
  EXPECT_TRUE(is_derivation(l.product("m"), d));
  EXPECT_TRUE(inverse(d));
}

TEST(Automorphisms, Conjugation) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  const auto& t = m2.product("m");
  Element<Scalar> g{1, 1, 0, 1};
  Element<Scalar> gi = *invert_element(t, g);
  Matrix phi(4, 4);
  for (std::size_t k = 0; k < 4; ++k) phi.set_column(k, multiply(t, multiply(t, g, m2.basis_vector(k)), gi));
  EXPECT_TRUE(check_automorphism(t, phi).holds);
  EXPECT_TRUE(check_automorphism(kantor_square(m2, "m", g), phi).holds);
  EXPECT_TRUE(check_automorphism(kantor_square(m2, "m", identity2()), phi).holds);
  AutomorphismReport gen = check_automorphism(kantor_square(m2, "m", generic_element(4)), phi);
  EXPECT_FALSE(gen.holds);
  EXPECT_TRUE(gen.witness);
  EXPECT_TRUE(check_automorphism(t, Matrix::identity(4)).holds);
  EXPECT_FALSE(check_automorphism(t, Matrix(4, 4)).invertible);
}

TEST(Annihilators, KantorSquareOfMatrix) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  Annihilators a = annihilators(kantor_square(m2, "m", m2.basis_vector(0)));
  EXPECT_EQ(a.left.dim(), 2u);
  EXPECT_EQ(a.right.dim(), 2u);
  EXPECT_EQ(a.two_sided.dim(), 1u);
  EXPECT_TRUE(annihilators(m2.product("m")).left.is_zero());
}

TEST(Isomorphism, QuaternionSeeds) {
  Algebra<Scalar> h = generalized_quaternion(Scalar(-1), Scalar(-1));
  std::mt19937_64 rng(43);
  std::vector<Element<Scalar>> seeds{h.basis_vector(0), h.basis_vector(1), add(h.basis_vector(0), h.basis_vector(2))};
  for (int i = 0; i < 5; ++i) seeds.push_back(testgen::element(rng, 4));
  for (const auto& u : seeds) {
    if (is_zero(u)) continue;
    auto w = skewfield_isomorphism(h, "m", u);
    ASSERT_TRUE(w) << element_str(u);
    EXPECT_TRUE(w->verified) << element_str(u);
  }
}

TEST(Isomorphism, MatrixNotSkewField) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  EXPECT_FALSE(skewfield_isomorphism(m2, "m", m2.basis_vector(0)));
  EXPECT_FALSE(fingerprint(m2.product("m")) == fingerprint(kantor_square(m2, "m", m2.basis_vector(0))));
  EXPECT_THROW(skewfield_isomorphism(octonions(), "m", octonions().basis_vector(0)), InputError);
  EXPECT_THROW(skewfield_isomorphism(dorofeev(), "m", dorofeev().basis_vector(0)), InputError);
}

TEST(GTriples, OctonionCount) {
  GTripleReport r = g_triples(octonions());
  EXPECT_EQ(r.triples.size(), 168u);
  EXPECT_EQ(r.ratios, (std::set<std::string>{"-4"}));
  EXPECT_FALSE(r.all_match_stated);
  for (const auto& t : r.triples) EXPECT_TRUE(t.proportional);
  EXPECT_TRUE(g_triples(octonions(), "m", Scalar(-4)).all_match_stated);
}

TEST(GTriples, GeneralParameters) {
  Algebra<Scalar> o = cayley_dickson(Scalar(2), Scalar(3), Scalar(5));
  GTripleReport r = g_triples(o);
  EXPECT_EQ(r.triples.size(), 168u);
  EXPECT_EQ(r.ratios, (std::set<std::string>{"-4"}));
  auto it = std::find_if(r.triples.begin(), r.triples.end(), [](const GTriple& t) { return t.i1 == 1 && t.i2 == 2 && t.i3 == 4; });
  ASSERT_NE(it, r.triples.end());
  EXPECT_EQ(it->nested, scale(o.basis_vector(4), Scalar(-4 * 2 * 3)));
}

TEST(AltSeed, SystemOracles) {
  AltSeedSystem s = alt_seed_system(Scalar(-1), Scalar(-1), Scalar(-1));
  EXPECT_EQ(s.rank, 7u);
  EXPECT_TRUE(s.pattern_holds);
  ASSERT_TRUE(s.probes_force_u7_zero);
  EXPECT_TRUE(*s.probes_force_u7_zero);
  ASSERT_FALSE(s.probe_values.empty());
  EXPECT_EQ(s.probe_values.front(), "[0,-8*u7^2,8*u7^2,0,0,0,4*u7^2,4*u7^2]");
  AltSeedSystem g = alt_seed_system(Scalar(2), Scalar(3), Scalar(5));
  EXPECT_EQ(g.rank, 7u);
  EXPECT_FALSE(g.probes_force_u7_zero);
}

TEST(AltSeed, ScalarSeedsPassProbes) {
  Algebra<Scalar> o = octonions();
  for (int c : {1, -2, 5}) {
    Element<Scalar> u = scale(o.basis_vector(0), Scalar(c));
    EXPECT_TRUE(alt_probes_vanish(o, u));
    EXPECT_TRUE(check_variety(kantor_square_algebra(o, "m", u), "alternative").holds());
  }
  Element<Scalar> cand{1, 1, 0, 0, 0, 0, 1, 1};
  EXPECT_FALSE(alt_probes_vanish(o, cand));
  EXPECT_FALSE(check_variety(kantor_square_algebra(o, "m", cand), "alternative").holds());
}

TEST(OperatorIdentity, OctonionsUnitSeed) {
  Algebra<Scalar> o = octonions();
  std::mt19937_64 rng(44);
  OperatorIdentityReport r = operator_identity_check(o, "m", o.basis_vector(0), testgen::element(rng, 8));
  EXPECT_EQ(r.variants.size(), 4u);
  for (const auto& v : r.variants) EXPECT_TRUE(v.holds) << v.name;
  EXPECT_TRUE(r.jordan_holds);
}

TEST(Associator, Octonions) {
  Algebra<Scalar> o = octonions();
  const auto& t = o.product("m");
  EXPECT_TRUE(is_zero(associator(t, o.basis_vector(1), o.basis_vector(2), o.basis_vector(3))));
  EXPECT_FALSE(is_zero(associator(t, o.basis_vector(1), o.basis_vector(2), o.basis_vector(4))));
}
