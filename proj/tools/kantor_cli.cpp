#include "kantor/algebra_json.hpp"
#include "kantor/analysis.hpp"
#include "kantor/catalog.hpp"
#include "kantor/mining.hpp"
#include "kantor/search.hpp"
#include "kantor/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace kantor;

namespace {

constexpr int kOk = 0, kNegative = 1, kInputError = 2;

std::map<std::string, std::string> key_values(const std::vector<std::string>& items, const char* what) {
  std::map<std::string, std::string> out;
  for (const auto& s : items) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError(std::string(what) + " must look like name=value, got '" + s + "'");
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

std::map<std::string, Scalar> scalar_params(const std::vector<std::string>& items, const Field& f) {
  std::map<std::string, Scalar> out;
  for (const auto& [k, v] : key_values(items, "--param")) out[k] = f.parse(v);
  return out;
}

Element<Scalar> parse_coords(const std::string& text, std::size_t n, const Field& f) {
  Element<Scalar> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(f.parse(item));
  if (v.size() != n)
    throw InputError("expected " + std::to_string(n) + " coordinates, got " + std::to_string(v.size()) + " in '" + text + "'");
  return v;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  out << text;
}

std::string witness_text(const Witness& w) {
  std::string s;
  for (const auto& [name, val] : w.assignment) s += "  " + name + " = " + element_str(val) + "\n";
  if (!w.table_point.empty()) s += "  u = " + element_str(w.table_point) + "\n";
  return s + "  defect = " + element_str(w.defect) + "\n";
}

Json verdict_json(const Verdict& v) {
  Json j{{"identity", v.identity}, {"status", to_string(v.status)}, {"method", to_string(v.method)},
         {"evaluations", v.evaluations}};
  if (!v.note.empty()) j["note"] = v.note;
  if (v.witness) {
    Json w;
    for (const auto& [name, val] : v.witness->assignment) w["assignment"][name] = element_str(val);
    if (!v.witness->table_point.empty()) w["seed"] = element_str(v.witness->table_point);
    w["defect"] = element_str(v.witness->defect);
    j["witness"] = w;
  }
  return j;
}

void print_verdict(const Verdict& v) {
  std::cout << v.identity << ": " << to_string(v.status) << " (" << to_string(v.method) << ", " << v.evaluations
            << " evaluations)\n";
  if (!v.note.empty()) std::cout << "  " << v.note << "\n";
  if (v.witness) std::cout << witness_text(*v.witness);
}

Json subspace_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& v : s.basis()) {
    Json r = Json::array();
    for (const auto& c : v) r.push_back(c.str());
    rows.push_back(r);
  }
  return {{"dim", s.dim()}, {"basis", rows}};
}

Json series_json(const SeriesReport& r) {
  Json j{{"kind", to_string(r.kind)}, {"dims", r.dims}, {"stabilized", r.stabilized}};
  j["index"] = r.index ? Json(*r.index) : Json(nullptr);
  if (r.flattened) j["generic"] = true;
  return j;
}

template <class R>
Json analyze_json(const Algebra<R>& a, const std::string& p) {
  const MultTable<R>& t = a.product(p);
  Json j;
  j["dim"] = a.dim;
  j["product"] = p;
  for (auto kind : {SeriesKind::Nilpotent, SeriesKind::Left, SeriesKind::Right, SeriesKind::Derived})
    j["series"][to_string(kind)] = series_json(power_series(t, kind));
  if constexpr (std::is_same_v<R, Scalar>) {
    Annihilators ann = annihilators(t);
    j["annihilators"] = {{"left", subspace_json(ann.left)}, {"right", subspace_json(ann.right)},
                         {"two_sided", subspace_json(ann.two_sided)}};
    auto unit = find_unit(t);
    j["unit"] = unit ? Json(element_str(*unit)) : Json(nullptr);
  } else {
    j["annihilators"] = nullptr;
    j["unit"] = nullptr;
  }
  j["jacobi_dim"] = jacobi_space(t).dim();
  j["derivation_dim"] = derivation_space(t).dim();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure-constant algebra toolkit: Kantor products, identities, invariants"};
  app.require_subcommand(1);

  // product / square
  std::string alg_path, pa = "m", pb = "m", seed_text, out_path;
  bool generic_u = false;
  auto* product = app.add_subcommand("product", "Kantor product [A,B] of two products for a seed u");
  product->add_option("--algebra", alg_path, "algebra JSON")->required();
  product->add_option("--a", pa, "outer product A");
  product->add_option("--b", pb, "inner product B");
  auto* square = app.add_subcommand("square", "Kantor square of one product for a seed u");
  square->add_option("--algebra", alg_path, "algebra JSON")->required();
  square->add_option("--product", pa, "product name");
  for (auto* c : {product, square}) {
    auto* u = c->add_option("--u", seed_text, "seed coordinates, comma separated");
    auto* g = c->add_flag("--generic-u", generic_u, "use indeterminates u0..u{n-1} as the seed");
    u->excludes(g);
    c->add_option("--out", out_path, "write the table here instead of stdout");
  }

  // check / variety
  std::string identity_text, method = "generic", variety_name;
  std::vector<std::string> params, consts, renames;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool json = false, list = false;
  auto* check = app.add_subcommand("check", "check one identity (exit 1 with a witness when it fails)");
  check->add_option("--algebra", alg_path, "algebra JSON")->required();
  check->add_option("--identity", identity_text, "identity in the DSL")->required();
  check->add_option("--const", consts, "constant $name=coords");
  check->add_option("--method", method, "basis | generic | random");
  auto* variety = app.add_subcommand("variety", "check every law of a named variety");
  variety->add_option("--algebra", alg_path, "algebra JSON");
  variety->add_option("--name", variety_name, "variety name");
  variety->add_option("--rename", renames, "map a variety product onto the algebra's, e.g. m=o");
  variety->add_flag("--list", list, "print the variety registry in the DSL");
  for (auto* c : {check, variety}) {
    c->add_option("--param", params, "parameter @name=value");
    c->add_option("--trials", trials, "random trials");
    c->add_option("--seed", seed, "random seed");
    c->add_flag("--json", json, "machine-readable output");
  }

  // analyze
  auto* analyze = app.add_subcommand("analyze", "power series, annihilators, Jacobi and derivation dimensions");
  analyze->add_option("--algebra", alg_path, "algebra JSON")->required();
  analyze->add_option("--product", pa, "product name");

  // construct
  std::string construction;
  std::uint64_t prime = 0;
  auto* construct = app.add_subcommand("construct", "emit a named construction as algebra JSON");
  construct->add_option("name", construction, "construction name");
  construct->add_option("--param", params, "parameter name=value");
  construct->add_option("--prime", prime, "work over F_p instead of Q");
  construct->add_option("--out", out_path, "output file");
  construct->add_flag("--list", list, "list the constructions");

  // search
  std::string spec_text, out_dir;
  auto* search = app.add_subcommand("search", "enumerate small instances of a variety");
  search->add_option("--spec", spec_text, "search spec JSON (file or inline)")->required();
  search->add_option("--out-dir", out_dir, "write each instance as NNN.json here");

  // mine / cross-check
  std::size_t degree = 3, extra = 2;
  std::string samples_dir, ids_path, kantor_of;
  std::vector<std::string> products{"m"};
  auto* mine_cmd = app.add_subcommand("mine", "multilinear identities satisfied by every sample");
  mine_cmd->add_option("--degree", degree, "degree 2..5");
  mine_cmd->add_option("--samples", samples_dir, "directory of sample algebra JSON files");
  mine_cmd->add_option("--kantor-of", kantor_of, "use Kantor squares of this algebra (basis seeds plus random ones)");
  mine_cmd->add_option("--extra-seeds", extra, "random seeds for --kantor-of");
  mine_cmd->add_option("--seed", seed, "random seed for --kantor-of");
  mine_cmd->add_option("--products", products, "product names")->delimiter(',');
  mine_cmd->add_option("--out", out_path, "write identities here, one per line");
  auto* cross = app.add_subcommand("cross-check", "re-check identities on other samples (exit 1 if one fails)");
  cross->add_option("--identities", ids_path, "identity file, one per line")->required();
  cross->add_option("--samples", samples_dir, "directory of sample algebra JSON files")->required();

  // suite
  std::string case_id;
  bool exhaustive = false;
  auto* suite = app.add_subcommand("suite", "run the theorem suite (exit 0 iff every case passes)");
  suite->add_option("--case", case_id, "run one case");
  suite->add_flag("--exhaustive", exhaustive, "add exhaustive basis checks");
  suite->add_option("--seed", seed, "random seed");
  suite->add_flag("--json", json, "machine-readable output");
  suite->add_flag("--list", list, "list cases and statements");

  // octonion tools
  std::string stated = "2";
  auto* gtrip = app.add_subcommand("g-triples", "nested associators on g-triples of a Cayley-Dickson algebra");
  gtrip->add_option("--algebra", alg_path, "algebra JSON (default: octonions with alpha = beta = gamma = -1)");
  gtrip->add_option("--stated", stated, "constant c in (ei,ej,(ei,ej,ek)) = c ei^2 ej^2 ek");
  gtrip->add_flag("--json", json, "machine-readable output");
  std::string alpha = "-1", beta = "-1", gamma = "-1";
  auto* altsys = app.add_subcommand("alt-system", "linear system on the squares of u for an alternative square");
  altsys->add_option("--alpha", alpha);
  altsys->add_option("--beta", beta);
  altsys->add_option("--gamma", gamma);
  auto* iso = app.add_subcommand("iso", "isomorphism a -> -a u^-1 onto the Kantor square");
  iso->add_option("--algebra", alg_path, "algebra JSON")->required();
  iso->add_option("--u", seed_text, "seed coordinates")->required();
  iso->add_option("--product", pa, "product name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*product || *square) {
      AnyAlgebra any = load_algebra(alg_path);
      auto* a = std::get_if<Algebra<Scalar>>(&any);
      if (!a) throw InputError("the input algebra must have scalar structure constants");
      std::string b = *square ? pa : pb;
      if (generic_u) {
        emit(to_json_text(kantor_product_algebra(*a, pa, b, generic_element(a->dim))), out_path);
      } else {
        if (seed_text.empty()) throw InputError("give --u or --generic-u");
        Element<Scalar> u = parse_coords(seed_text, a->dim, a->field);
        emit(to_json_text(kantor_product_algebra(*a, pa, b, u)), out_path);
      }
      return kOk;
    }

    if (*check) {
      AnyAlgebra any = load_algebra(alg_path);
      IdentityExpr id = parse_identity(identity_text);
      CheckOptions opt;
      opt.method = parse_method(method);
      opt.trials = trials;
      opt.seed = seed;
      const Field field = std::visit([](const auto& a) { return a.field; }, any);
      const std::size_t n = std::visit([](const auto& a) { return a.dim; }, any);
      opt.params = scalar_params(params, field);
      for (const auto& [k, v] : key_values(consts, "--const")) opt.constants[k] = parse_coords(v, n, field);
      Verdict v = std::visit([&](const auto& a) { return check_identity(a, id, opt); }, any);
      if (json)
        std::cout << verdict_json(v).dump(2) << "\n";
      else
        print_verdict(v);
      return v.passed() ? kOk : kNegative;
    }

    if (*variety) {
      if (list) {
        for (const auto& [name, v] : variety_registry()) {
          std::cout << name << " [";
          for (std::size_t i = 0; i < v.products.size(); ++i) std::cout << (i ? "," : "") << v.products[i];
          std::cout << "]";
          for (const auto& p : v.params) std::cout << " @" << p;
          std::cout << "  " << v.summary << "\n";
        }
        std::cout << "\n" << registry_dsl();
        return kOk;
      }
      if (alg_path.empty() || variety_name.empty()) throw InputError("variety needs --algebra and --name (or --list)");
      AnyAlgebra any = load_algebra(alg_path);
      const Field field = std::visit([](const auto& a) { return a.field; }, any);
      CheckOptions opt;
      opt.trials = trials;
      opt.seed = seed;
      auto ren = key_values(renames, "--rename");
      VarietyReport rep =
          std::visit([&](const auto& a) { return check_variety(a, variety_name, scalar_params(params, field), ren, opt); }, any);
      if (json) {
        Json j{{"variety", rep.variety}, {"holds", rep.holds()}, {"verdicts", Json::array()}};
        for (const auto& v : rep.verdicts) j["verdicts"].push_back(verdict_json(v));
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& v : rep.verdicts) print_verdict(v);
        std::cout << variety_name << ": " << (rep.holds() ? "holds" : "fails") << "\n";
      }
      return rep.holds() ? kOk : kNegative;
    }

    if (*analyze) {
      AnyAlgebra any = load_algebra(alg_path);
      Json j = std::visit([&](const auto& a) { return analyze_json(a, pa); }, any);
      std::cout << j.dump(2) << "\n";
      return kOk;
    }

    if (*construct) {
      if (list) {
        for (const auto& [name, e] : construction_catalog()) {
          std::cout << name;
          for (const auto& [k, v] : e.defaults) std::cout << " " << k << "=" << v;
          std::cout << "  " << e.summary << "\n";
        }
        return kOk;
      }
      if (construction.empty()) throw InputError("construct needs a name (see --list)");
      Field field = prime ? Field::prime(prime) : Field::rational();
      emit(to_json_text(construct_named(construction, key_values(params, "--param"), field)), out_path);
      return kOk;
    }

    if (*search) {
      std::string text = spec_text;
      if (!text.empty() && text.front() != '{') text = read_file(spec_text);
      Json j;
      try {
        j = Json::parse(text);
      } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed search spec: ") + e.what());
      }
      SearchSpec s;
      try {
        s.variety = j.at("variety").get<std::string>();
        if (j.contains("field")) s.field = parse_field(j["field"]);
        if (j.contains("dim")) s.dim = j["dim"].get<std::size_t>();
        if (j.contains("coeffs")) {
          s.coeffs.clear();
          for (const auto& c : j["coeffs"]) s.coeffs.push_back(s.field.parse(c.is_string() ? c.get<std::string>() : c.dump()));
        }
        if (j.contains("budget")) s.budget = j["budget"].get<std::size_t>();
        if (j.contains("nontrivial")) s.nontrivial = j["nontrivial"].get<bool>();
        if (j.contains("limit")) s.limit = j["limit"].get<std::size_t>();
        if (j.contains("params"))
          for (const auto& [k, v] : j["params"].items()) s.params[k] = s.field.parse(v.is_string() ? v.get<std::string>() : v.dump());
      } catch (const Json::exception& e) {
        throw InputError(std::string("bad search spec: ") + e.what());
      }
      SearchResult r = search_instance(s);
      std::cerr << r.instances.size() << " instance(s), " << r.examined << " candidates examined"
                << (r.budget_exhausted ? ", budget exhausted" : "") << "\n";
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < r.instances.size(); ++i) {
          char name[32];
          std::snprintf(name, sizeof name, "%03zu.json", i);
          save_algebra((std::filesystem::path(out_dir) / name).string(), r.instances[i]);
        }
      } else {
        std::cout << "[";
        for (std::size_t i = 0; i < r.instances.size(); ++i) std::cout << (i ? "," : "") << "\n" << to_json_text(r.instances[i]);
        std::cout << "]\n";
      }
      return r.instances.empty() ? kNegative : kOk;
    }

    if (*mine_cmd) {
      std::vector<Algebra<Scalar>> samples;
      if (!kantor_of.empty()) {
        Algebra<Scalar> base = load_scalar_algebra(kantor_of);
        for (const auto& p : products) {
          auto more = kantor_samples(base, p, extra, seed);
          samples.insert(samples.end(), more.begin(), more.end());
        }
        products = {"m"};
      }
      if (!samples_dir.empty()) {
        auto more = load_sample_dir(samples_dir);
        samples.insert(samples.end(), more.begin(), more.end());
      }
      if (samples.empty()) throw InputError("mine needs --samples or --kantor-of");
      MinedSpace m = mine(samples, degree, products);
      std::cerr << "degree " << degree << ": " << m.basis.size() << " monomials, " << m.samples << " samples, " << m.rows
                << " rows, mined dimension " << m.space.dim() << "\n";
      std::string text;
      for (const auto& id : identities_from(m)) text += to_string(id) + "\n";
      emit(text, out_path);
      return kOk;
    }

    if (*cross) {
      std::istringstream in(read_file(ids_path));
      std::vector<IdentityExpr> ids;
      std::string line;
      while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        ids.push_back(parse_identity(line));
      }
      CrossCheckReport rep = cross_check(ids, load_sample_dir(samples_dir));
      for (const auto& e : rep.entries)
        std::cout << (e.survived ? "ok     " : "FAILED ") << e.identity
                  << (e.failing_sample ? "  (sample " + std::to_string(*e.failing_sample) + ")" : "") << "\n";
      std::cout << rep.survivors() << "/" << rep.entries.size() << " identities survive\n";
      return rep.survivors() == rep.entries.size() ? kOk : kNegative;
    }

    if (*suite) {
      if (list) {
        for (const auto& tc : theorem_cases())
          std::cout << tc.id << "  " << tc.title << ": " << anchor_registry().at(tc.anchor) << "\n";
        return kOk;
      }
      SuiteOptions opt;
      opt.exhaustive = exhaustive;
      opt.seed = seed;
      SuiteReport rep = run_suite(opt, case_id);
      if (json)
        std::cout << report_json(rep).dump(2) << "\n";
      else
        std::cout << report_text(rep);
      return rep.passed() ? kOk : kNegative;
    }

    if (*gtrip) {
      Algebra<Scalar> a = alg_path.empty() ? cayley_dickson(Scalar(-1), Scalar(-1), Scalar(-1)) : load_scalar_algebra(alg_path);
      GTripleReport r = g_triples(a, "m", a.field.parse(stated));
      if (json) {
        Json j{{"count", r.triples.size()}, {"stated", r.stated.str()}, {"all_match_stated", r.all_match_stated},
               {"ratios", r.ratios}, {"triples", Json::array()}};
        for (const auto& t : r.triples)
          j["triples"].push_back({{"i", {t.i1, t.i2, t.i3}}, {"nested", element_str(t.nested)}, {"ratio", t.ratio.str()}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& t : r.triples)
          std::cout << "(" << t.i1 << "," << t.i2 << "," << t.i3 << ")  nested = " << element_expr(t.nested, a.labels)
                    << "  ratio " << (t.proportional ? t.ratio.str() : "not proportional") << "\n";
        std::cout << r.triples.size() << " g-triples; constants {";
        bool first = true;
        for (const auto& c : r.ratios) std::cout << (first ? "" : ",") << c, first = false;
        std::cout << "}; stated " << r.stated.str() << ": " << (r.all_match_stated ? "confirmed" : "not confirmed") << "\n";
      }
      return r.all_match_stated ? kOk : kNegative;
    }

    if (*altsys) {
      AltSeedSystem s = alt_seed_system(Scalar::parse(alpha), Scalar::parse(beta), Scalar::parse(gamma));
      std::cout << "equations in s_i = u_i^2 (reduced, columns s1..s7):\n" << to_string(s.equations) << "\n";
      std::cout << "rank " << s.rank << ", solution space dimension " << s.solutions.dim() << "\n";
      std::cout << "solution pattern u2..u5 = 0, u1^2 = bg u7^2, u6^2 = -a u7^2: " << (s.pattern_holds ? "holds" : "fails") << "\n";
      if (s.probes_force_u7_zero) {
        std::cout << "probe values on u0 + u7(r1 e1 + r6 e6 + e7):\n";
        for (const auto& v : s.probe_values) std::cout << "  " << v << "\n";
        std::cout << "probes force u7 = 0: " << (*s.probes_force_u7_zero ? "yes" : "no") << "\n";
      } else {
        std::cout << "probes: bg or -a is not a rational square\n";
      }
      return s.pattern_holds ? kOk : kNegative;
    }

    if (*iso) {
      Algebra<Scalar> a = load_scalar_algebra(alg_path);
      Element<Scalar> u = parse_coords(seed_text, a.dim, a.field);
      auto w = skewfield_isomorphism(a, pa, u);
      if (!w) {
        Fingerprint fa = fingerprint(a.product(pa)), fs = fingerprint(kantor_square(a, pa, u));
        std::cout << "u is not invertible; no map a -> -a u^-1\n"
                  << "A:     " << fa.str() << "\n(A,*): " << fs.str() << "\n"
                  << (fa == fs ? "fingerprints agree" : "fingerprints differ: not isomorphic") << "\n";
        return kNegative;
      }
      std::cout << "f(a) = -a u^-1:\n" << to_string(w->map) << "\n" << (w->verified ? "verified isomorphism\n" : "not an isomorphism\n");
      return w->verified ? kOk : kNegative;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
