#include "kantor/search.hpp"

#include <gtest/gtest.h>

using namespace kantor;

TEST(Search, OneDimensionalAssociative) {
  // e e = c e for c in {-1, 0, 1}: three algebras, all associative
  SearchSpec s;
  s.variety = "associative";
  s.dim = 1;
  SearchResult r = search_instance(s);
  EXPECT_EQ(r.instances.size(), 3u);
  EXPECT_FALSE(r.budget_exhausted);
  s.nontrivial = true;
  EXPECT_TRUE(search_instance(s).instances.empty());
}

TEST(Search, PermutationClassesDeduplicated) {
  // dim 2 zero-or-idempotent tables: (e0 e0 = e0, rest 0) and its swap are one class
  SearchSpec s;
  s.variety = "associative";
  s.dim = 2;
  s.coeffs = {Scalar(0), Scalar(1)};
  SearchResult r = search_instance(s);
  for (const auto& a : r.instances) EXPECT_TRUE(check_variety(a, "associative").holds());
  std::size_t single = 0;
  for (const auto& a : r.instances) {
    const auto& t = a.product("m");
    if (t.nonzero_count() == 1 && (t.get(0, 0, 0) == Scalar(1) || t.get(1, 1, 1) == Scalar(1))) ++single;
  }
  EXPECT_EQ(single, 1u);
}

TEST(Search, InstancesSatisfyVariety) {
  for (const std::string v : {"perm", "left_commutative", "bicommutative", "dialgebra_assoc", "dual_duplicial"}) {
    SearchSpec s;
    s.variety = v;
    s.nontrivial = true;
    s.limit = 3;
    SearchResult r = search_instance(s);
    ASSERT_FALSE(r.instances.empty()) << v;
    EXPECT_LE(r.instances.size(), 3u);
    for (const auto& a : r.instances) EXPECT_TRUE(check_variety(a, v).holds()) << v;
  }
}

TEST(Search, BudgetAndErrors) {
  SearchSpec s;
  s.variety = "associative";
  s.dim = 2;
  s.budget = 10;
  SearchResult r = search_instance(s);
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_EQ(r.examined, 10u);
  s.dim = 5;
  EXPECT_THROW(search_instance(s), InputError);
  s.dim = 2;
  s.coeffs.clear();
  EXPECT_THROW(search_instance(s), InputError);
  SearchSpec q;
  q.variety = "quasi_associative";
  EXPECT_THROW(search_instance(q), InputError);
  q.variety = "nope";
  EXPECT_THROW(search_instance(q), InputError);
}

TEST(Search, Deterministic) {
  SearchSpec s;
  s.variety = "perm";
  s.nontrivial = true;
  SearchResult a = search_instance(s), b = search_instance(s);
  ASSERT_EQ(a.instances.size(), b.instances.size());
  for (std::size_t i = 0; i < a.instances.size(); ++i) EXPECT_EQ(a.instances[i].product("m"), b.instances[i].product("m"));
}
