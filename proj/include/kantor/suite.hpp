#ifndef KANTOR_SUITE_HPP
#define KANTOR_SUITE_HPP

#include "kantor/algebra_json.hpp"
#include "kantor/analysis.hpp"
#include "kantor/mining.hpp"
#include "kantor/search.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace kantor {

struct SuiteOptions {
  bool exhaustive = false;
  std::uint64_t seed = 1;
};

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TheoremCase {
  std::string id;
  std::string anchor;
  std::string title;
  std::function<std::vector<SuiteCheck>(const SuiteOptions&)> run;
};

struct CaseResult {
  std::string id, anchor, title;
  std::vector<SuiteCheck> checks;
  std::string error;
  bool passed() const {
    if (!error.empty() || checks.empty()) return false;
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

struct SuiteReport {
  std::vector<CaseResult> cases;
  bool passed() const {
    for (const auto& c : cases)
      if (!c.passed()) return false;
    return !cases.empty();
  }
};

/// Statements the theorem cases reproduce, keyed by anchor.
inline const std::map<std::string, std::string>& anchor_registry() {
  static const std::map<std::string, std::string> anchors{
      {"associative", "associative A gives an associative Kantor square"},
      {"eps-commutative", "(anti)commutative A gives an (anti)commutative Kantor square"},
      {"perm", "Perm A gives a Perm Kantor square"},
      {"lie", "Lie algebras have zero Kantor square"},
      {"leibniz", "left Leibniz algebras have zero Kantor square"},
      {"left-commutative", "left-commutative A gives a left-commutative Kantor square"},
      {"bicommutative", "bicommutative A gives an associative-commutative Kantor square"},
      {"zinbiel", "left Zinbiel A gives a left Zinbiel Kantor square"},
      {"novikov", "left Novikov A gives a left Novikov Kantor square"},
      {"alternative", "alternative A gives a flexible Kantor square; alternative iff (x,u,(x,u,y)) = 0; "
                      "noncommutative Jordan iff an operator identity; Jordan for commutative alternative A"},
      {"alternative-seed", "the Kantor square of the octonions is alternative for every u only for u = u0*1"},
      {"quasi-associative", "quasi-associative A gives a quasi-associative Kantor square"},
      {"quasi-alternative", "quasi-alternative A gives a flexible Kantor square"},
      {"dialgebra", "associative dialgebra: [left, right] is associative"},
      {"duplicial", "duplicial algebra: [succ, prec] is associative"},
      {"dual-duplicial", "dual duplicial algebra: [succ, prec] = 0 and [prec, succ] is 2-nilpotent"},
      {"as2", "As2 algebra: [dot, circ] and [circ, dot] are associative"},
      {"tridendriform", "commutative tridendriform: [prec, dot] commutative, [dot, prec] right Zinbiel"},
      {"poisson", "Poisson algebra: [bracket, dot] = 0 and [dot, bracket] is Lie"},
      {"generalized-poisson", "generalized Poisson: [bracket, dot] associative-commutative, [dot, bracket] Lie"},
      {"novikov-poisson-left", "left Novikov-Poisson: [dot, circ] left Novikov, [circ, dot] associative-commutative"},
      {"novikov-poisson-right", "right Novikov-Poisson: [dot, circ] right Novikov, [circ, dot] commutative"},
      {"ideals", "ideals of A are ideals of (A,*); the converse fails"},
      {"pi-product", "associative A with identity f: A and (A,*) satisfy g = f z"},
      {"pi-standard", "associative A satisfying s_n gives (A,*) satisfying s_(n+1)"},
      {"nilpotent", "nilpotent A of index n gives (A,*) of index at most [n/2]+1"},
      {"right-nilpotent", "a right nilpotent A whose Kantor square is not right nilpotent but solvable"},
      {"derivations", "a common derivation of A and (A,*) vanishes when A has zero Jacobi space; "
                      "an invertible one forces left Leibniz A and zero (A,*)"},
      {"automorphisms", "a common automorphism of A and (A,*) is the identity when A has zero Jacobi space"},
      {"isomorphism", "finite-dimensional associative A is isomorphic to (A,*) iff A is a skew field"},
  };
  return anchors;
}

namespace suite_detail {

inline std::string witness_text(const Verdict& v) {
  if (!v.witness) return v.identity;
  std::string s = v.identity + " at";
  for (const auto& [name, val] : v.witness->assignment) s += " " + name + "=" + element_str(val);
  return s + " defect " + element_str(v.witness->defect);
}

template <class R>
SuiteCheck variety_check(const std::string& name, const Algebra<R>& a, const std::string& variety,
                         const std::map<std::string, Scalar>& params = {}, bool expect = true) {
  VarietyReport rep = check_variety(a, variety, params);
  SuiteCheck c{name, rep.holds() == expect, {}};
  if (rep.holds()) {
    c.detail = variety + " holds";
  } else {
    for (const auto& v : rep.verdicts)
      if (!v.passed()) {
        c.detail = variety + " fails: " + witness_text(v);
        break;
      }
  }
  return c;
}

inline Algebra<Poly> generic_kantor(const Algebra<Scalar>& a, const std::string& pa, const std::string& pb) {
  Algebra<Poly> out(a.dim, a.field);
  out.labels = a.labels;
  out.products.emplace("m", kantor_product(a, pa, pb, generic_element(a.dim)));
  return out;
}

inline Algebra<Scalar> search_first(const std::string& variety) {
  SearchSpec s;
  s.variety = variety;
  s.dim = 2;
  s.nontrivial = true;
  s.limit = 1;
  SearchResult r = search_instance(s);
  if (r.instances.empty()) throw std::runtime_error("search found no nontrivial " + variety + " instance");
  return r.instances.front();
}

inline std::string table_summary(const Algebra<Scalar>& a) {
  std::string s;
  for (const auto& [name, t] : a.products) {
    s += (s.empty() ? "" : "; ") + name + ":";
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) {
        Element<Scalar> v = t.basis_product(i, j);
        if (!is_zero(v)) s += " " + a.label(i) + a.label(j) + "=" + element_expr(v, a.labels);
      }
  }
  return s;
}

inline SuiteCheck flag(std::string name, bool ok, std::string detail) { return {std::move(name), ok, std::move(detail)}; }

inline Element<Scalar> random_element(std::size_t n, std::mt19937_64& rng, const Field& f) {
  std::uniform_int_distribution<int> d(-3, 3);
  Element<Scalar> v(n);
  for (auto& c : v) c = f(d(rng));
  return v;
}

inline Element<Scalar> random_invertible(const Algebra<Scalar>& a, std::mt19937_64& rng) {
  for (;;) {
    Element<Scalar> u = random_element(a.dim, rng, a.field);
    if (invert_element(a.product("m"), u)) return u;
  }
}

/// Matrix of x -> g x g^{-1} on a matrix algebra.
inline Matrix conjugation(const Algebra<Scalar>& a, const Element<Scalar>& g) {
  const auto& t = a.product("m");
  auto gi = invert_element(t, g);
  if (!gi) throw InputError("conjugating element is not invertible");
  Matrix m(a.dim, a.dim);
  for (std::size_t k = 0; k < a.dim; ++k) m.set_column(k, multiply(t, multiply(t, g, a.basis_vector(k)), *gi));
  return m;
}

inline std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

using Checks = std::vector<SuiteCheck>;

inline Checks case_associative(const SuiteOptions&) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  Checks c{variety_check("M2 is associative", m2, "associative")};
  Algebra<Poly> k = generic_kantor(m2, "m", "m");
  c.push_back(variety_check("(M2,*) associative for generic u", k, "associative"));
  MultTable<Poly> expected(4);
  Element<Poly> u = generic_element(4);
  const auto& t = m2.product("m");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Element<Poly> x(4), y(4);
      x[i] = Poly(1);
      y[j] = Poly(1);
      expected.set_product(i, j, scale(multiply(t, multiply(t, x, u), y), Scalar(-1)));
    }
  c.push_back(flag("x*y = -xuy as a polynomial identity in u", expected == k.product("m"), "16 basis pairs compared"));
  return c;
}

inline Checks case_eps_commutative(const SuiteOptions&) {
  Algebra<Scalar> comm = truncated_polynomial(4, true);
  Algebra<Scalar> anti = commutator_algebra(cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1)));
  return {variety_check("F[t]/(t^5) is commutative", comm, "eps_commutative", {{"eps", Scalar(1)}}),
          variety_check("its Kantor square is commutative", generic_kantor(comm, "m", "m"), "eps_commutative",
                        {{"eps", Scalar(1)}}),
          variety_check("octonion commutator algebra is anticommutative", anti, "eps_commutative", {{"eps", Scalar(-1)}}),
          variety_check("octonion commutator algebra is not Lie", anti, "lie", {}, false),
          variety_check("its Kantor square is anticommutative", generic_kantor(anti, "m", "m"), "eps_commutative",
                        {{"eps", Scalar(-1)}})};
}

inline Checks single_lemma(const Algebra<Scalar>& a, const std::string& hyp, const std::string& concl,
                           const std::string& what, std::map<std::string, Scalar> params = {}) {
  Checks c{variety_check(what + " satisfies " + hyp, a, hyp, params)};
  for (const auto& part : {concl}) c.push_back(variety_check("Kantor square is " + part + " for generic u",
                                                             generic_kantor(a, "m", "m"), part, params));
  return c;
}

inline Checks case_perm(const SuiteOptions&) {
  Algebra<Scalar> a = search_first("perm");
  Checks c = single_lemma(a, "perm", "perm", "searched instance");
  c.push_back(flag("instance", true, table_summary(a)));
  return c;
}

inline Checks case_lie(const SuiteOptions&) {
  Algebra<Scalar> a = lie_cross();
  Checks c{variety_check("cross product algebra is Lie", a, "lie")};
  c.push_back(flag("Kantor square is zero for generic u", kantor_square(a, "m", generic_element(3)).is_zero(), "zero table"));
  Algebra<Scalar> b = lie_affine2();
  c.push_back(variety_check("2-dim non-abelian algebra is Lie", b, "lie"));
  c.push_back(flag("its Kantor square is zero for generic u", kantor_square(b, "m", generic_element(2)).is_zero(), "zero table"));
  return c;
}

inline Checks case_leibniz(const SuiteOptions&) {
  Algebra<Scalar> a = leibniz2();
  return {variety_check("e1e1 = e2 is left Leibniz", a, "leibniz_left"),
          variety_check("it is not Lie", a, "lie", {}, false),
          flag("Kantor square is zero for generic u", kantor_square(a, "m", generic_element(2)).is_zero(), "zero table")};
}

inline Checks case_left_commutative(const SuiteOptions&) {
  Algebra<Scalar> a = search_first("left_commutative");
  Checks c = single_lemma(a, "left_commutative", "left_commutative", "searched instance");
  c.push_back(flag("instance", true, table_summary(a)));
  return c;
}

inline Checks case_bicommutative(const SuiteOptions&) {
  Algebra<Scalar> a = search_first("bicommutative");
  Algebra<Poly> k = generic_kantor(a, "m", "m");
  return {variety_check("searched instance is bicommutative", a, "bicommutative"),
          variety_check("searched instance is not commutative", a, "commutative", {}, false),
          variety_check("Kantor square is associative", k, "associative"),
          variety_check("Kantor square is commutative", k, "commutative"), flag("instance", true, table_summary(a))};
}

inline Checks case_zinbiel(const SuiteOptions&) {
  Algebra<Scalar> a = zinbiel_truncated(6);
  Checks c = single_lemma(a, "zinbiel_left", "zinbiel_left", "t^i o t^j = t^(i+j+1)/(i+1)");
  c.push_back(flag("t o t = 1/2 t^3", a.product("m").basis_product(0, 0) == Element<Scalar>{0, 0, Scalar::fraction(1, 2), 0, 0, 0},
                   element_expr(a.product("m").basis_product(0, 0), a.labels)));
  return c;
}

inline Checks case_novikov(const SuiteOptions&) {
  return single_lemma(derivation_left_novikov(4), "novikov_left", "novikov_left", "a o b = D(a)b, D = t d/dt");
}

inline Checks case_alternative(const SuiteOptions& opt) {
  Algebra<Scalar> oct = cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1));
  Checks c{variety_check("octonions are alternative", oct, "alternative"),
           variety_check("octonions are not associative", oct, "associative", {}, false),
           variety_check("Kantor square is flexible for generic u", generic_kantor(oct, "m", "m"), "flexible")};
  IdentityExpr altass = parse_identity("assoc(m;x,$u,assoc(m;x,$u,y))");
  for (const auto& [label, u] : std::vector<std::pair<std::string, Element<Scalar>>>{
           {"u = 5*1", scale(oct.basis_vector(0), Scalar(5))}, {"u = e1", oct.basis_vector(1)}}) {
    CheckOptions o;
    o.constants["u"] = u;
    bool cond = check_identity(oct, altass, o).holds();
    bool alt = check_variety(kantor_square_algebra(oct, "m", u), "alternative").holds();
    c.push_back(flag("alternative iff (x,u,(x,u,y)) = 0, " + label, cond == alt,
                     std::string("condition ") + (cond ? "holds" : "fails") + ", square " + (alt ? "alternative" : "not alternative")));
  }
  Algebra<Scalar> comm = truncated_polynomial(4, true);
  c.push_back(variety_check("F[t]/(t^5) is commutative alternative", comm, "alternative"));
  c.push_back(variety_check("its Kantor square is Jordan for generic u", generic_kantor(comm, "m", "m"), "jordan"));
  std::mt19937_64 rng(opt.seed);
  Element<Scalar> x = random_element(5, rng, comm.field), uc = random_element(5, rng, comm.field);
  OperatorIdentityReport r = operator_identity_check(comm, "m", uc, x);
  bool all = std::all_of(r.variants.begin(), r.variants.end(), [](const auto& v) { return v.holds; });
  c.push_back(flag("operator identity variants on the commutative instance", all && r.jordan_holds,
                   std::string(all ? "all variants hold" : "some variant fails") + ", Jordan " + (r.jordan_holds ? "holds" : "fails")));
  OperatorIdentityReport r1 = operator_identity_check(oct, "m", oct.basis_vector(0), random_element(8, rng, oct.field));
  c.push_back(flag("octonions with u = 1: noncommutative Jordan", r1.jordan_holds, "Jordan law checked directly"));
  OperatorIdentityReport rr = operator_identity_check(oct, "m", random_element(8, rng, oct.field), random_element(8, rng, oct.field));
  std::string table;
  for (const auto& v : rr.variants) table += v.name + "=" + (v.holds ? "holds" : "fails") + "; ";
  c.push_back(flag("octonions with random u, x: operator variants", true,
                   table + "Jordan for *_u " + (rr.jordan_holds ? "holds" : "fails")));
  return c;
}

inline Checks case_alternative_seed(const SuiteOptions&) {
  Algebra<Scalar> oct = cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1));
  GTripleReport g = g_triples(oct);
  std::string ratios;
  for (const auto& r : g.ratios) ratios += (ratios.empty() ? "" : ",") + r;
  Checks c{flag("g-triples found", g.triples.size() == 168, std::to_string(g.triples.size()) + " triples"),
           flag("(1,2,4) is a g-triple",
                std::any_of(g.triples.begin(), g.triples.end(), [](const GTriple& t) { return t.i1 == 1 && t.i2 == 2 && t.i3 == 4; }),
                "associator (e1,e2,e4) is nonzero"),
           flag("(e1,e2,(e1,e2,e3)) = 2 e1^2 e2^2 e3 on every g-triple", g.all_match_stated,
                "observed constant(s) " + ratios + " instead of " + g.stated.str())};
  AltSeedSystem sys = alt_seed_system(Scalar(-1), Scalar(-1), Scalar(-1));
  c.push_back(flag("seed system solutions follow u2..u5 = 0, u1^2 = bg u7^2, u6^2 = -a u7^2", sys.pattern_holds,
                   "7 equations of rank " + std::to_string(sys.rank) + ", solution space of dimension " +
                       std::to_string(sys.solutions.dim())));
  c.push_back(flag("probes on u0 + u7(e1 + e6 + e7) force u7 = 0", sys.probes_force_u7_zero.value_or(false),
                   sys.probe_values.empty() ? "no rational family" : sys.probe_values.front()));
  AltSeedSystem general = alt_seed_system(Scalar(2), Scalar(3), Scalar(5));
  c.push_back(flag("seed system rank for (2,3,5)", general.rank == 7, "rank " + std::to_string(general.rank)));
  Element<Scalar> cand(8);
  cand[0] = cand[1] = cand[6] = cand[7] = Scalar(1);
  c.push_back(flag("u = 1 + e1 + e6 + e7 fails the probes", !alt_probes_vanish(oct, cand), "nonzero probe value"));
  c.push_back(variety_check("u = 5*1 gives an alternative square", kantor_square_algebra(oct, "m", scale(oct.basis_vector(0), Scalar(5))),
                            "alternative"));
  c.push_back(variety_check("u = e1 gives a non-alternative square", kantor_square_algebra(oct, "m", oct.basis_vector(1)),
                            "left_alternative", {}, false));
  return c;
}

inline Checks case_quasi_associative(const SuiteOptions&) {
  Algebra<Scalar> q = lambda_mutation(matrix_algebra(2), "m", Scalar::fraction(2, 3));
  const IdentityExpr& law = variety_spec("quasi_associative").identities[1];
  auto alpha = fit_parameter(q, law, "alpha");
  if (!alpha) return {flag("alpha fitted for the mutation", false, "no alpha")};
  Algebra<Poly> k = generic_kantor(q, "m", "m");
  auto beta = fit_parameter(k, law, "alpha");
  return {flag("alpha fitted for lambda = 2/3", true, "alpha = " + alpha->str()),
          variety_check("mutation of M2 is quasi-associative", q, "quasi_associative", {{"alpha", *alpha}}),
          flag("alpha fitted for the Kantor square", beta.has_value(), beta ? "alpha = " + beta->str() : "none"),
          beta ? variety_check("Kantor square is quasi-associative for generic u", k, "quasi_associative", {{"alpha", *beta}})
               : flag("Kantor square is quasi-associative", false, "no alpha")};
}

inline Checks case_quasi_alternative(const SuiteOptions&) {
  Algebra<Scalar> q = lambda_mutation(cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1)), "m", Scalar::fraction(2, 3));
  auto alpha = fit_parameter(q, variety_spec("quasi_alternative").identities[1], "alpha");
  if (!alpha) return {flag("alpha fitted for the mutation", false, "no alpha")};
  return {flag("alpha fitted for lambda = 2/3", true, "alpha = " + alpha->str()),
          variety_check("mutation of the octonions is quasi-alternative", q, "quasi_alternative", {{"alpha", *alpha}}),
          variety_check("Kantor square is flexible for generic u", generic_kantor(q, "m", "m"), "flexible")};
}

inline Checks two_product(const std::string& variety, const Algebra<Scalar>& a,
                          const std::vector<std::tuple<std::string, std::string, std::string, bool>>& concl) {
  Checks c{variety_check("instance satisfies " + variety, a, variety)};
  for (const auto& [pa, pb, v, expect] : concl) {
    Algebra<Poly> k = generic_kantor(a, pa, pb);
    if (v == "zero")
      c.push_back(flag("[" + pa + "," + pb + "] = 0", k.product("m").is_zero() == expect, "generic u"));
    else
      c.push_back(variety_check("[" + pa + "," + pb + "] is " + v + " for generic u", k, v, {}, expect));
  }
  return c;
}

inline Checks with_instance(Checks c, const Algebra<Scalar>& a) {
  c.push_back(flag("instance", true, table_summary(a)));
  return c;
}

inline Checks case_dialgebra(const SuiteOptions&) {
  Algebra<Scalar> a = search_first("dialgebra_assoc");
  return with_instance(two_product("dialgebra_assoc", a, {{"l", "r", "associative", true}}), a);
}

inline Checks case_duplicial(const SuiteOptions&) {
  Algebra<Scalar> a = search_first("duplicial");
  return with_instance(two_product("duplicial", a, {{"s", "p", "associative", true}}), a);
}

inline Checks case_dual_duplicial(const SuiteOptions&) {
  Algebra<Scalar> a = search_first("dual_duplicial");
  return with_instance(
      two_product("dual_duplicial", a, {{"s", "p", "zero", true}, {"p", "s", "two_step_nilpotent", true}}), a);
}

inline Checks case_as2(const SuiteOptions&) {
  Algebra<Scalar> a = search_first("as2");
  return with_instance(two_product("as2", a, {{"m", "o", "associative", true}, {"o", "m", "associative", true}}), a);
}

inline Checks case_tridendriform(const SuiteOptions&) {
  return two_product("comm_tridendriform", comm_tridendriform_truncated(6),
                     {{"p", "m", "commutative", true}, {"m", "p", "zinbiel_right", true}});
}

inline Checks case_poisson(const SuiteOptions&) {
  return two_product("poisson", poisson_small(), {{"b", "m", "zero", true}, {"m", "b", "lie", true}});
}

inline Checks case_generalized_poisson(const SuiteOptions&) {
  SearchSpec s;
  s.variety = "generalized_poisson";
  s.dim = 2;
  s.nontrivial = true;
  SearchResult r = search_instance(s);
  Algebra<Scalar> a = r.instances.empty() ? poisson_small() : r.instances.front();
  Checks c = two_product("generalized_poisson", a, {{"b", "m", "associative_commutative", true}, {"m", "b", "lie", true}});
  c.push_back(flag("instance source", true,
                   r.instances.empty() ? "no nontrivial dim-2 instance; Poisson instance used (D = 0 is forced by the unit)"
                                       : table_summary(a)));
  return c;
}

inline Checks case_novikov_poisson_left(const SuiteOptions&) {
  return two_product("novikov_poisson_left", left_novikov_poisson(4),
                     {{"m", "o", "novikov_left", true}, {"o", "m", "associative_commutative", true}});
}

inline Checks case_novikov_poisson_right(const SuiteOptions&) {
  return two_product("novikov_poisson_right", right_novikov_poisson(4),
                     {{"m", "o", "novikov_right", true}, {"o", "m", "commutative", true}});
}

inline Checks case_ideals(const SuiteOptions&) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  Algebra<Scalar> a = direct_sum(m2, m2);
  std::vector<Vector> b1, b2;
  for (std::size_t i = 0; i < 4; ++i) {
    b1.push_back(a.basis_vector(i));
    b2.push_back(a.basis_vector(4 + i));
  }
  std::vector<std::pair<std::string, Subspace>> ideals{{"0", Subspace(8)},
                                                       {"A1", Subspace::span(8, b1)},
                                                       {"A2", Subspace::span(8, b2)},
                                                       {"A", Subspace::full(8)}};
  Checks c;
  const auto& t = a.product("m");
  MultTable<Poly> generic = kantor_square(a, "m", generic_element(8));
  for (const auto& [name, s] : ideals) {
    bool ok = is_ideal(t, s).ideal;
    std::size_t good = 0;
    for (std::size_t i = 0; i < 8; ++i) good += is_ideal(kantor_square(a, "m", a.basis_vector(i)), s).ideal;
    bool gen = is_ideal(generic, s).ideal;
    c.push_back(flag("ideal " + name + " stays an ideal of (A,*_u)", ok && good == 8 && gen,
                     std::to_string(good) + "/8 basis seeds, generic seed " + (gen ? "yes" : "no")));
  }
  Element<Scalar> e1(8), e2(8);
  e1[0] = e1[3] = Scalar(1);
  e2[4] = e2[7] = Scalar(1);
  std::vector<Vector> rows = b1;
  rows.push_back(e2);
  Subspace s = Subspace::span(8, rows);
  IdealReport in_star = is_ideal(kantor_square(a, "m", e1), s);
  IdealReport in_a = is_ideal(t, s);
  c.push_back(flag("span(A1, e2) is an ideal of (A,*_e1)", in_star.ideal, "checked on all basis products"));
  c.push_back(flag("span(A1, e2) is not an ideal of A", !in_a.ideal,
                   in_a.witness ? "product " + in_a.witness->product + " leaves the subspace" : "no witness"));
  return c;
}

inline Checks case_pi_product(const SuiteOptions& opt) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  IdentityExpr s4 = standard_polynomial(4);
  IdentityExpr g = times_variable(s4, "z");
  CheckOptions basis;
  basis.method = Method::Basis;
  std::mt19937_64 rng(opt.seed);
  Element<Scalar> u = random_invertible(m2, rng);
  Checks c;
  auto add_check = [&](const std::string& name, const Algebra<Scalar>& a, const IdentityExpr& id) {
    Verdict v = check_identity(a, id, basis);
    c.push_back(flag(name, v.holds(), std::to_string(v.evaluations) + " basis tuples"));
  };
  add_check("M2 satisfies s4", m2, s4);
  add_check("M2 satisfies g = s4 z", m2, g);
  Element<Scalar> one(4);
  one[0] = one[3] = Scalar(1);
  add_check("(M2,*_u) satisfies g for u = identity", kantor_square_algebra(m2, "m", one), g);
  add_check("(M2,*_u) satisfies g for random invertible u = " + element_str(u), kantor_square_algebra(m2, "m", u), g);
  return c;
}

inline Checks case_pi_standard(const SuiteOptions& opt) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  IdentityExpr s5 = standard_polynomial(5);
  std::mt19937_64 rng(opt.seed);
  Element<Scalar> one(4);
  one[0] = one[3] = Scalar(1);
  Element<Scalar> u = random_invertible(m2, rng);
  Checks c{variety_check("(M2,*_u) is associative for generic u", generic_kantor(m2, "m", "m"), "associative")};
  for (const auto& [label, seed] : std::vector<std::pair<std::string, Element<Scalar>>>{{"identity", one}, {element_str(u), u}}) {
    Algebra<Scalar> k = kantor_square_algebra(m2, "m", seed);
    CheckOptions rnd;
    rnd.method = Method::Random;
    rnd.trials = 200;
    rnd.seed = opt.seed;
    Verdict v = check_identity(k, s5, rnd);
    c.push_back(flag("s5 on (M2,*_u), u = " + label + ", 200 random trials", v.passed(), to_string(v.status)));
    if (opt.exhaustive) {
      CheckOptions b;
      b.method = Method::Basis;
      Verdict e = check_identity(k, s5, b);
      c.push_back(flag("s5 on (M2,*_u), u = " + label + ", all basis tuples", e.holds(),
                       std::to_string(e.evaluations) + " tuples"));
    }
  }
  return c;
}

inline Checks case_nilpotent(const SuiteOptions&) {
  Algebra<Scalar> a = truncated_polynomial(8, false);
  SeriesReport s = power_series(a, "m", SeriesKind::Nilpotent);
  SeriesReport k = power_series(kantor_square(a, "m", generic_element(8)), SeriesKind::Nilpotent);
  std::size_t bound = 9 / 2 + 1;
  return {flag("t F[t]/(t^9) has nilpotency index 9", s.index == std::optional<std::size_t>(9), s.str()),
          flag("Kantor square (generic u) has index at most 5", k.index && *k.index <= bound,
               "index " + (k.index ? std::to_string(*k.index) : std::string("none")))};
}

inline Checks case_right_nilpotent(const SuiteOptions&) {
  Algebra<Scalar> d = dorofeev();
  const auto& t = d.product("m");
  MultTable<Scalar> star = kantor_square(d, "m", d.basis_vector(0));
  SeriesReport right = power_series(t, SeriesKind::Right), nil = power_series(t, SeriesKind::Nilpotent);
  SeriesReport sright = power_series(star, SeriesKind::Right), sder = power_series(star, SeriesKind::Derived);
  Element<Scalar> cb = multiply(star, d.basis_vector(2), d.basis_vector(1));
  return {variety_check("Dorofeev algebra is right alternative", d, "right_alternative"),
          flag("A is right nilpotent", right.index.has_value(), right.str()),
          flag("A is not nilpotent", !nil.index.has_value(), nil.str()),
          flag("c *_a b = c", cb == d.basis_vector(2), element_expr(cb, d.labels)),
          flag("(A,*_a) is not right nilpotent", !sright.index && sright.stabilized, sright.str()),
          flag("(A,*_a) is solvable of derived index 2", sder.index == std::optional<std::size_t>(2), sder.str())};
}

inline Checks case_derivations(const SuiteOptions&) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  Algebra<Poly> pm = to_poly(m2);
  MultTable<Poly> k = kantor_square(m2, "m", generic_element(4));
  DerivationSpace own = derivation_space(m2.product("m"));
  DerivationSpace joint = derivation_space<Poly>({&pm.product("m"), &k});
  Element<Scalar> one(4);
  one[0] = one[3] = Scalar(1);
  MultTable<Scalar> fixed = kantor_square(m2, "m", one);
  DerivationSpace joint_fixed = derivation_space<Scalar>({&m2.product("m"), &fixed});
  bool round_trip = true;
  for (const auto& d : own.operators()) round_trip = round_trip && is_derivation(m2.product("m"), d);
  Checks c{flag("M2 has derivation space of dimension 3", own.dim() == 3, "dimension " + std::to_string(own.dim())),
           flag("every computed derivation satisfies D(xy) = D(x)y + xD(y)", round_trip, "basis pairs"),
           flag("Jacobi space of M2 is zero", jacobi_space(m2.product("m")).is_zero(), "unital"),
           flag("common derivations of M2 and (M2,*_u), generic u", joint.dim() == 0,
                "dimension " + std::to_string(joint.dim()) + " (fixed u = 1: " + std::to_string(joint_fixed.dim()) + ")")};
  std::vector<std::pair<std::string, Algebra<Scalar>>> unital{
      {"M2", m2},
      {"M3", matrix_algebra(3)},
      {"quaternions", generalized_quaternion(Scalar(-1), Scalar(-1))},
      {"octonions", cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1))},
      {"F[t]/(t^5)", truncated_polynomial(4, true)},
      {"F[x,y]/(x,y)^3", poisson_small()}};
  std::string zero;
  bool all = true;
  for (const auto& [name, a] : unital) {
    bool z = jacobi_space(a.product("m")).is_zero();
    all = all && z;
    zero += name + (z ? " 0; " : " nonzero; ");
  }
  c.push_back(flag("Jacobi space of every unital fixture is zero", all, zero));
  Algebra<Scalar> l = leibniz2();
  Matrix d{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(2)}};
  MultTable<Poly> lk = kantor_square(l, "m", generic_element(2));
  Algebra<Poly> lp = to_poly(l);
  bool common = is_derivation(lp.product("m"), d) && is_derivation(lk, d) && inverse(d).has_value();
  c.push_back(flag("leibniz2: D = diag(1,2) is an invertible common derivation", common, "generic u"));
  c.push_back(variety_check("leibniz2 is left Leibniz", l, "leibniz_left"));
  c.push_back(flag("leibniz2 has zero Kantor square", lk.is_zero(), "generic u"));
  return c;
}

inline Checks case_automorphisms(const SuiteOptions&) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  Algebra<Poly> pm = to_poly(m2);
  MultTable<Poly> generic = kantor_square(m2, "m", generic_element(4));
  Checks c;
  Matrix id = Matrix::identity(4);
  c.push_back(flag("identity is a common automorphism for generic u",
                   check_automorphism(m2.product("m"), id).holds && check_automorphism(generic, id).holds, "exact"));
  Matrix neg = id.scaled(Scalar(-1));
  c.push_back(flag("negation is not an automorphism of M2", !check_automorphism(m2.product("m"), neg).holds, "(-x)(-y) = xy"));
  std::vector<Element<Scalar>> gs{{Scalar(1), Scalar(1), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(0), Scalar(2)},
                                  {Scalar(0), Scalar(1), Scalar(1), Scalar(0)}};
  for (const auto& g : gs) {
    Matrix phi = conjugation(m2, g);
    bool of_a = check_automorphism(m2.product("m"), phi).holds;
    bool fixed = check_automorphism(kantor_square(m2, "m", g), phi).holds;
    bool gen = check_automorphism(generic, phi).holds;
    c.push_back(flag("conjugation by " + element_str(g) + ": automorphism of M2 and of (M2,*_g), not for generic u",
                     of_a && fixed && !gen,
                     std::string("M2 ") + (of_a ? "yes" : "no") + ", u = g " + (fixed ? "yes" : "no") + ", generic " +
                         (gen ? "yes" : "no")));
  }
  return c;
}

inline Checks case_isomorphism(const SuiteOptions&) {
  Algebra<Scalar> q = generalized_quaternion(Scalar(-1), Scalar(-1));
  Checks c;
  std::vector<std::pair<std::string, Element<Scalar>>> seeds{
      {"1", q.basis_vector(0)}, {"e1", q.basis_vector(1)}, {"1+e2", add(q.basis_vector(0), q.basis_vector(2))}};
  for (const auto& [label, u] : seeds) {
    auto w = skewfield_isomorphism(q, "m", u);
    c.push_back(flag("f(a) = -a u^-1 is an isomorphism onto (H,*_u), u = " + label, w && w->verified, "16 basis pairs"));
  }
  Algebra<Scalar> m2 = matrix_algebra(2);
  auto none = skewfield_isomorphism(m2, "m", m2.basis_vector(0));
  c.push_back(flag("M2, u = e11: u is not invertible", !none.has_value(), "no map"));
  Fingerprint fa = fingerprint(m2.product("m")), fs = fingerprint(kantor_square(m2, "m", m2.basis_vector(0)));
  c.push_back(flag("(M2,*_e11) is not isomorphic to M2", !(fa == fs) && fs.left_annihilator == 2 && fa.left_annihilator == 0,
                   "M2 " + fa.str() + "; (M2,*_e11) " + fs.str()));
  return c;
}

}  // namespace suite_detail

inline const std::vector<TheoremCase>& theorem_cases() {
  using namespace suite_detail;
  static const std::vector<TheoremCase> cases{
      {"T-ass", "associative", "associative algebras", case_associative},
      {"T-com", "eps-commutative", "commutative and anticommutative algebras", case_eps_commutative},
      {"T-perm", "perm", "Perm algebras", case_perm},
      {"T-lie", "lie", "Lie algebras", case_lie},
      {"T-leib", "leibniz", "left Leibniz algebras", case_leibniz},
      {"T-lcom", "left-commutative", "left-commutative algebras", case_left_commutative},
      {"T-bicom", "bicommutative", "bicommutative algebras", case_bicommutative},
      {"T-zin", "zinbiel", "Zinbiel algebras", case_zinbiel},
      {"T-nov", "novikov", "Novikov algebras", case_novikov},
      {"T-alt", "alternative", "alternative algebras", case_alternative},
      {"T-alt-4", "alternative-seed", "octonion seeds with alternative square", case_alternative_seed},
      {"T-qass", "quasi-associative", "quasi-associative algebras", case_quasi_associative},
      {"T-qalt", "quasi-alternative", "quasi-alternative algebras", case_quasi_alternative},
      {"T-dialg", "dialgebra", "associative dialgebras", case_dialgebra},
      {"T-dup", "duplicial", "duplicial algebras", case_duplicial},
      {"T-ddup", "dual-duplicial", "dual duplicial algebras", case_dual_duplicial},
      {"T-as2", "as2", "As2 algebras", case_as2},
      {"T-tri", "tridendriform", "commutative tridendriform algebras", case_tridendriform},
      {"T-poisson", "poisson", "Poisson algebras", case_poisson},
      {"T-gp", "generalized-poisson", "generalized Poisson algebras", case_generalized_poisson},
      {"T-np-left", "novikov-poisson-left", "left Novikov-Poisson algebras", case_novikov_poisson_left},
      {"T-np-right", "novikov-poisson-right", "right Novikov-Poisson algebras", case_novikov_poisson_right},
      {"T-ideal", "ideals", "ideals", case_ideals},
      {"T-pi-1", "pi-product", "polynomial identities f z", case_pi_product},
      {"T-pi-2", "pi-standard", "standard polynomial identities", case_pi_standard},
      {"T-nil", "nilpotent", "nilpotent algebras", case_nilpotent},
      {"T-rnil", "right-nilpotent", "right nilpotent algebras", case_right_nilpotent},
      {"T-der", "derivations", "derivations", case_derivations},
      {"T-aut", "automorphisms", "automorphisms", case_automorphisms},
      {"T-iso", "isomorphism", "isomorphic Kantor squares", case_isomorphism},
  };
  return cases;
}

inline CaseResult run_case(const TheoremCase& tc, const SuiteOptions& opt = {}) {
  CaseResult r{tc.id, tc.anchor, tc.title, {}, {}};
  try {
    r.checks = tc.run(opt);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

/// Runs every case, or only `only` when given; throws InputError for an unknown id.
inline SuiteReport run_suite(const SuiteOptions& opt = {}, const std::string& only = {}) {
  SuiteReport rep;
  for (const auto& tc : theorem_cases())
    if (only.empty() || tc.id == only) rep.cases.push_back(run_case(tc, opt));
  if (rep.cases.empty()) throw InputError("unknown suite case '" + only + "'");
  return rep;
}

inline std::string report_text(const SuiteReport& rep) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : rep.cases) {
    passed += c.passed();
    out << (c.passed() ? "PASS " : "FAIL ") << c.id << "  " << c.title << "\n";
    if (!c.error.empty()) out << "    error: " << c.error << "\n";
    for (const auto& ch : c.checks)
      out << "    [" << (ch.passed ? "ok" : "FAILED") << "] " << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
  }
  out << passed << "/" << rep.cases.size() << " cases passed\n";
  return out.str();
}

inline Json report_json(const SuiteReport& rep) {
  Json j;
  j["passed"] = rep.passed();
  j["cases"] = Json::array();
  for (const auto& c : rep.cases) {
    Json cj;
    cj["id"] = c.id;
    cj["anchor"] = c.anchor;
    cj["statement"] = anchor_registry().at(c.anchor);
    cj["passed"] = c.passed();
    if (!c.error.empty()) cj["error"] = c.error;
    cj["checks"] = Json::array();
    for (const auto& ch : c.checks) cj["checks"].push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
    j["cases"].push_back(std::move(cj));
  }
  return j;
}

}  // namespace kantor

#endif  // KANTOR_SUITE_HPP
