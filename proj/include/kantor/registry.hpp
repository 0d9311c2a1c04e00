#ifndef KANTOR_REGISTRY_HPP
#define KANTOR_REGISTRY_HPP

#include "kantor/identity_check.hpp"

#include <map>
#include <string>
#include <vector>

namespace kantor {

struct VarietySpec {
  std::string name;
  std::vector<std::string> products;
  std::vector<std::string> params;
  std::vector<IdentityExpr> identities;
  std::string summary;
};

namespace detail {

inline VarietySpec variety(std::string name, std::vector<std::string> products, std::vector<std::string> params,
                           std::initializer_list<const char*> ids, std::string summary) {
  VarietySpec v{std::move(name), std::move(products), std::move(params), {}, std::move(summary)};
  for (const char* s : ids) v.identities.push_back(parse_identity(s));
  return v;
}

inline VarietySpec mirrored(const VarietySpec& v, std::string name, std::string summary) {
  VarietySpec out = v;
  out.name = std::move(name);
  out.summary = std::move(summary);
  for (auto& id : out.identities) id = mirror(id);
  return out;
}

inline std::map<std::string, VarietySpec> build_registry() {
  std::map<std::string, VarietySpec> r;
  auto add = [&](VarietySpec v) { r.emplace(v.name, std::move(v)); };
  const std::vector<std::string> m{"m"};

  add(variety("associative", m, {}, {"assoc(m;x,y,z)"}, "(xy)z = x(yz)"));
  add(variety("commutative", m, {}, {"comm(m;x,y)"}, "xy = yx"));
  add(variety("anticommutative", m, {}, {"m(x,y) + m(y,x)"}, "xy = -yx"));
  add(variety("eps_commutative", m, {"eps"}, {"m(x,y) = @eps*m(y,x)"}, "xy = eps yx, eps in {1,-1}"));
  add(variety("associative_commutative", m, {}, {"assoc(m;x,y,z)", "comm(m;x,y)"}, "commutative and associative"));
  add(variety("perm", m, {}, {"m(m(x,y),z) = m(x,m(y,z))", "m(x,m(y,z)) = m(x,m(z,y))"}, "(xy)z = x(yz) = x(zy)"));
  add(variety("lie", m, {}, {"m(x,y) + m(y,x)", "cyc(x,y,z){m(m(x,y),z)}"}, "anticommutative with the Jacobi identity"));
  add(variety("leibniz_left", m, {}, {"m(x,m(y,z)) = m(m(x,y),z) + m(y,m(x,z))"}, "x(yz) = (xy)z + y(xz)"));
  add(variety("left_commutative", m, {}, {"m(x,m(y,z)) = m(y,m(x,z))"}, "x(yz) = y(xz)"));
  add(variety("bicommutative", m, {}, {"m(x,m(y,z)) = m(y,m(x,z))", "m(m(x,y),z) = m(m(x,z),y)"},
              "x(yz) = y(xz) and (xy)z = (xz)y"));
  add(variety("zinbiel_left", m, {}, {"m(x,m(y,z)) = m(m(x,y),z) + m(m(y,x),z)"}, "x(yz) = (xy)z + (yx)z"));
  add(mirrored(r.at("zinbiel_left"), "zinbiel_right", "(zy)x = z(yx) + z(xy)"));
  add(variety("novikov_left", m, {}, {"m(x,m(y,z)) = m(y,m(x,z))", "assoc(m;x,y,z) = assoc(m;x,z,y)"},
              "x(yz) = y(xz) and (x,y,z) = (x,z,y)"));
  add(mirrored(r.at("novikov_left"), "novikov_right", "(zy)x = (zx)y and (x,y,z) = (y,x,z)"));
  add(variety("alternative", m, {}, {"m(m(x,x),y) = m(x,m(x,y))", "m(x,m(y,y)) = m(m(x,y),y)"}, "x^2y = x(xy) and xy^2 = (xy)y"));
  add(variety("left_alternative", m, {}, {"m(m(x,x),y) = m(x,m(x,y))"}, "x^2y = x(xy)"));
  add(variety("right_alternative", m, {}, {"assoc(m;x,y,y)"}, "(x,y,y) = 0"));
  add(variety("flexible", m, {}, {"m(m(x,y),x) = m(x,m(y,x))"}, "(xy)x = x(yx)"));
  add(variety("moufang", m, {},
              {"m(x,m(m(y,z),y)) = m(m(m(x,y),z),y)", "m(m(m(y,z),y),x) = m(y,m(z,m(y,x)))",
               "m(m(x,y),m(z,x)) = m(x,m(m(y,z),x))"},
              "the three Moufang laws, middle law (xy)(zx) = x((yz)x)"));
  add(variety("jordan", m, {}, {"comm(m;x,y)", "assoc(m;m(x,x),y,x)"}, "commutative with (x^2,y,x) = 0"));
  add(variety("noncommutative_jordan", m, {}, {"m(m(x,y),x) = m(x,m(y,x))", "assoc(m;m(x,x),y,x)"},
              "flexible with (x^2,y,x) = 0"));
  add(variety("quasi_associative", m, {"alpha"},
              {"cyc(x,y,z){assoc(m;x,y,z)}", "assoc(m;x,y,z) = @alpha*comm(m;y,comm(m;x,z))"},
              "cyclic associator sum vanishes and (x,y,z) = alpha [y,[x,z]]"));
  add(variety("quasi_alternative", m, {"alpha"},
              {"assoc(m;x,y,x)", "assoc(m;x,x,y) = @alpha*comm(m;x,comm(m;x,y))"},
              "(x,y,x) = 0 and (x,x,y) = alpha [x,[x,y]]"));
  add(variety("two_step_nilpotent", m, {}, {"m(m(x,y),z)", "m(x,m(y,z))"}, "all products of three elements vanish"));
  add(variety("zero", m, {}, {"m(x,y)"}, "zero multiplication"));

  add(variety("dialgebra_assoc", {"l", "r"}, {},
              {"l(l(x,y),z) = l(r(x,y),z)", "r(x,l(y,z)) = r(x,r(y,z))", "assoc(l;x,y,z)", "assoc(r;x,y,z)",
               "r(l(x,y),z) = l(x,r(y,z))"},
              "associative dialgebra with l = left product, r = right product"));
  add(variety("duplicial", {"p", "s"}, {},
              {"assoc(p;x,y,z)", "p(s(x,y),z) = s(x,p(y,z))", "assoc(s;x,y,z)"},
              "duplicial algebra with p = prec, s = succ"));
  add(variety("dual_duplicial", {"p", "s"}, {},
              {"assoc(p;x,y,z)", "p(s(x,y),z) = s(x,p(y,z))", "assoc(s;x,y,z)", "p(x,s(y,z))", "s(p(x,y),z)"},
              "dual duplicial algebra with p = prec, s = succ"));
  add(variety("as2", {"m", "o"}, {},
              {"m(o(x,y),z) = o(x,m(y,z))", "o(m(x,y),z) = m(x,o(y,z))", "assoc(o;x,y,z)", "assoc(m;x,y,z)"},
              "two compatible associative products m and o"));
  add(variety("comm_tridendriform", {"m", "p"}, {},
              {"comm(m;x,y)", "assoc(m;x,y,z)", "p(p(x,y),z) = p(x,p(y,z)) + p(x,p(z,y))", "p(m(x,y),z) = m(x,p(y,z))"},
              "commutative tridendriform algebra with m = dot, p = prec"));
  add(variety("poisson", {"m", "b"}, {},
              {"comm(m;x,y)", "assoc(m;x,y,z)", "b(m(x,y),z) = m(b(x,z),y) + m(x,b(y,z))", "b(x,y) + b(y,x)",
               "cyc(x,y,z){b(b(x,y),z)}"},
              "Poisson algebra with product m and bracket b"));
  add(variety("generalized_poisson", {"m", "b"}, {},
              {"comm(m;x,y)", "assoc(m;x,y,z)", "b(m(x,y),z) = m(b(x,z),y) + m(x,b(y,z)) + m(b($1,z),m(x,y))",
               "b(x,y) + b(y,x)", "cyc(x,y,z){b(b(x,y),z)}"},
              "unital generalized Poisson algebra, D(x) = {1,x}"));
  add(variety("novikov_poisson_left", {"m", "o"}, {},
              {"comm(m;x,y)", "assoc(m;x,y,z)", "o(x,o(y,z)) = o(y,o(x,z))", "assoc(o;x,y,z) = assoc(o;x,z,y)",
               "o(x,m(y,z)) = m(o(x,y),z)", "o(m(x,y),z) - m(x,o(y,z)) = o(m(x,z),y) - m(x,o(z,y))"},
              "left Novikov-Poisson algebra with product m and Novikov product o"));
  add(mirrored(r.at("novikov_poisson_left"), "novikov_poisson_right",
               "right Novikov-Poisson algebra (opposite of the left laws)"));
  return r;
}

}  // namespace detail

inline const std::map<std::string, VarietySpec>& variety_registry() {
  static const std::map<std::string, VarietySpec> registry = detail::build_registry();
  return registry;
}

inline const VarietySpec& variety_spec(const std::string& name) {
  const auto& r = variety_registry();
  auto it = r.find(name);
  if (it == r.end()) throw InputError("unknown variety '" + name + "'");
  return it->second;
}

/// Registry as DSL text, one "name: identity" line per law.
inline std::string registry_dsl() {
  std::string out;
  for (const auto& [name, v] : variety_registry())
    for (const auto& id : v.identities) out += name + ": " + to_string(id) + "\n";
  return out;
}

struct VarietyReport {
  std::string variety;
  std::vector<Verdict> verdicts;
  bool holds() const {
    for (const auto& v : verdicts)
      if (!v.passed()) return false;
    return true;
  }
};

/// Checks every law of the variety. `rename` maps the variety's product
/// names onto the algebra's (e.g. {"m", "star"}).
template <class R>
VarietyReport check_variety(const Algebra<R>& a, const std::string& name, const std::map<std::string, Scalar>& params = {},
                            const std::map<std::string, std::string>& rename = {}, CheckOptions opt = {}) {
  const VarietySpec& spec = variety_spec(name);
  for (const auto& p : spec.params)
    if (params.find(p) == params.end()) throw InputError("variety " + name + " needs parameter " + p);
  if (name == "eps_commutative") {
    const Scalar& e = params.at("eps");
    if (!(e == Scalar(1)) && !(e == Scalar(-1))) throw InputError("eps must be 1 or -1");
  }
  for (const auto& p : spec.products) {
    auto it = rename.find(p);
    a.product(it == rename.end() ? p : it->second);
  }
  opt.params = params;
  VarietyReport report{name, {}};
  for (const auto& id : spec.identities) {
    IdentityExpr actual = rename.empty() ? id : rename_products(id, rename);
    opt.method = is_multilinear(actual) ? Method::Basis : Method::Generic;
    report.verdicts.push_back(check_identity(a, actual, opt));
  }
  return report;
}

}  // namespace kantor

#endif  // KANTOR_REGISTRY_HPP
