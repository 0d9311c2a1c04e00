#include "kantor/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>

using namespace kantor;
using suite_detail::generic_kantor;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Outcome(const SuiteOptions&)> run;
};

std::string failed_checks(const CaseResult& r) {
  if (!r.error.empty()) return r.id + " error: " + r.error;
  std::string s;
  for (const auto& c : r.checks)
    if (!c.passed) s += (s.empty() ? "" : "; ") + r.id + ": " + c.name + " (" + c.detail + ")";
  return s;
}

Outcome run_cases(const std::vector<std::string>& ids, const SuiteOptions& opt) {
  Outcome o{true, {}};
  std::size_t checks = 0;
  std::string failures;
  for (const auto& id : ids) {
    CaseResult r = run_suite(opt, id).cases.front();
    checks += r.checks.size();
    if (!r.passed()) {
      o.ok = false;
      failures += (failures.empty() ? "" : "; ") + failed_checks(r);
    }
  }
  o.detail = o.ok ? std::to_string(ids.size()) + (ids.size() == 1 ? " case, " : " cases, ") + std::to_string(checks) + " checks" : failures;
  return o;
}

Outcome kantor_engine(const SuiteOptions&) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  const auto& t = m2.product("m");
  MultTable<Poly> k = kantor_square(m2, "m", generic_element(4));
  Element<Poly> u = generic_element(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Element<Poly> x = to_poly(m2.basis_vector(i)), y = to_poly(m2.basis_vector(j));
      Element<Poly> expected = scale(multiply(t, multiply(t, x, u), y), Scalar(-1));
      if (expected != k.basis_product(i, j))
        return {false, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") differs from -xuy"};
    }
  return {true, "all 16 basis products equal -e_i u e_j in Q[u0..u3]"};
}

Outcome zero_squares(const SuiteOptions&) {
  bool lie = kantor_square(lie_cross(), "m", generic_element(3)).is_zero();
  bool leib = kantor_square(leibniz2(), "m", generic_element(2)).is_zero();
  return {lie && leib, std::string("cross product ") + (lie ? "zero" : "nonzero") + ", leibniz2 " + (leib ? "zero" : "nonzero")};
}

Outcome octonion_seeds(const SuiteOptions&) {
  Algebra<Scalar> oct = cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1));
  std::vector<std::string> fails;
  if (!check_variety(generic_kantor(oct, "m", "m"), "flexible").holds()) fails.push_back("flexibility for generic u");
  if (!check_variety(kantor_square_algebra(oct, "m", scale(oct.basis_vector(0), Scalar(3))), "alternative").holds())
    fails.push_back("alternativity for u = 3*1");
  VarietyReport e1 = check_variety(kantor_square_algebra(oct, "m", oct.basis_vector(1)), "alternative");
  bool witness = !e1.holds() && std::any_of(e1.verdicts.begin(), e1.verdicts.end(),
                                            [](const Verdict& v) { return !v.passed() && v.witness; });
  if (!witness) fails.push_back("failure witness for u = e1");
  GTripleReport g = g_triples(oct);
  if (!g.all_match_stated) {
    std::string c;
    for (const auto& r : g.ratios) c += (c.empty() ? "" : ",") + r;
    fails.push_back("g-triple value 2 e_i1^2 e_i2^2 e_i3 (observed constant " + c + " on " + std::to_string(g.triples.size()) +
                    " triples)");
  }
  AltSeedSystem s = alt_seed_system(Scalar(-1), Scalar(-1), Scalar(-1));
  if (!s.pattern_holds) fails.push_back("solution pattern of the seed system");
  if (!s.probes_force_u7_zero.value_or(false)) fails.push_back("probes eliminate u7");
  if (fails.empty()) return {true, "flexible, alternative at 3*1, witness at e1, 168 g-triples at 2, pattern and probes"};
  std::string d = "failed: ";
  for (std::size_t i = 0; i < fails.size(); ++i) d += (i ? "; " : "") + fails[i];
  return {false, d};
}

Outcome pi_theorems(const SuiteOptions& opt) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  CheckOptions basis;
  basis.method = Method::Basis;
  Verdict s4 = check_identity(m2, standard_polynomial(4), basis);
  std::mt19937_64 rng(opt.seed);
  Element<Scalar> one(4);
  one[0] = one[3] = Scalar(1);
  std::string detail = "s4 on M2: " + to_string(s4.status) + " (" + std::to_string(s4.evaluations) + " tuples)";
  bool ok = s4.holds();
  for (const auto& u : {one, suite_detail::random_invertible(m2, rng)}) {
    Algebra<Scalar> k = kantor_square_algebra(m2, "m", u);
    CheckOptions rnd;
    rnd.method = Method::Random;
    rnd.trials = 200;
    rnd.seed = opt.seed;
    Verdict v = check_identity(k, standard_polynomial(5), rnd);
    ok = ok && v.passed();
    detail += "; s5 on (M2,*_" + element_str(u) + "): " + to_string(v.status) + " in 200 trials";
    if (opt.exhaustive) {
      Verdict e = check_identity(k, standard_polynomial(5), basis);
      ok = ok && e.holds();
      detail += ", exhaustive " + to_string(e.status);
    }
  }
  return {ok, detail};
}

Outcome mining(const SuiteOptions&) {
  std::vector<Algebra<Scalar>> samples;
  for (const auto& a : {matrix_algebra(2), matrix_algebra(3), generalized_quaternion(Scalar(-1), Scalar(-1))}) {
    auto more = kantor_samples(a, "m", 2, 1);
    samples.insert(samples.end(), more.begin(), more.end());
  }
  MinedSpace m = mine(samples, 3);
  IdentityExpr assoc = parse_identity("assoc(m;x,y,z)");
  bool contains = contains_identity(m, assoc);
  Algebra<Scalar> m2 = matrix_algebra(2);
  std::vector<Algebra<Scalar>> fresh;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 3; ++i) fresh.push_back(kantor_square_algebra(m2, "m", suite_detail::random_element(4, rng, m2.field)));
  CrossCheckReport cc = cross_check({assoc}, fresh);
  CrossCheckReport all = cross_check(identities_from(m), fresh);
  return {contains && cc.survivors() == 1,
          std::to_string(samples.size()) + " seeds, mined dimension " + std::to_string(m.space.dim()) + ", associativity " +
              (contains ? "contained" : "missing") + ", " + std::to_string(all.survivors()) + "/" +
              std::to_string(all.entries.size()) + " mined identities survive the fresh sample"};
}

std::vector<Criterion> criteria() {
  auto cases = [](std::vector<std::string> ids) {
    return [ids](const SuiteOptions& o) { return run_cases(ids, o); };
  };
  return {
      {1, "Kantor square of M2 with generic u is -xuy", 1, kantor_engine},
      {2, "zero Kantor squares of Lie and left Leibniz instances", 1, zero_squares},
      {3, "hypothesis and conclusion varieties for the one-product and two-product lemmas", 120,
       cases({"T-ass", "T-com", "T-perm", "T-lcom", "T-bicom", "T-zin", "T-nov", "T-qass", "T-qalt", "T-dialg", "T-dup",
              "T-ddup", "T-as2", "T-tri"})},
      {4, "octonion Kantor squares: flexibility, alternative seeds, g-triples, seed system", 30, octonion_seeds},
      {5, "Poisson, generalized Poisson and Novikov-Poisson products", 60,
       cases({"T-poisson", "T-gp", "T-np-left", "T-np-right"})},
      {6, "standard polynomials s4 on M2 and s5 on (M2,*_u)", 30, pi_theorems},
      {7, "nilpotency index of t Q[t]/(t^9) and its Kantor square", 5, cases({"T-nil"})},
      {8, "right nilpotent Dorofeev algebra and its solvable square", 5, cases({"T-rnil"})},
      {9, "ideals of M2 + M2 and the span(A1, e2) counterexample", 5, cases({"T-ideal"})},
      {10, "common derivations and automorphisms", 10, cases({"T-der", "T-aut"})},
      {11, "skew-field isomorphisms and the M2 non-isomorphism", 5, cases({"T-iso"})},
      {12, "mined degree-3 identities of Kantor squares", 60, mining},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria: one pass/fail line per criterion"};
  int only = 0;
  SuiteOptions opt;
  app.add_option("--criterion", only, "run a single criterion (1-12)");
  app.add_flag("--exhaustive", opt.exhaustive, "exhaustive s5 check on (M2,*_u)");
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  int ran = 0;
  for (const auto& c : criteria()) {
    if (only && c.number != only) continue;
    ++ran;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(opt);
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok && secs < c.limit_seconds;
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  AC-" << std::setw(2) << std::setfill('0') << c.number << "  " << c.title << "  ["
              << std::fixed << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds
              << " s]  " << o.detail << (o.ok && !ok ? " (over time limit)" : "") << "\n";
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all_ok ? 0 : 1;
}
