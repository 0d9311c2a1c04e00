#ifndef KANTOR_CATALOG_HPP
#define KANTOR_CATALOG_HPP

#include "kantor/constructions.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace kantor {

/// A named construction with defaulted numeric parameters.
struct CatalogEntry {
  std::string summary;
  std::map<std::string, std::string> defaults;
  std::function<Algebra<Scalar>(const std::map<std::string, Scalar>&, const Field&)> build;
};

namespace detail {

inline std::size_t size_param(const std::map<std::string, Scalar>& p, const std::string& name, std::size_t lo, std::size_t hi) {
  const Scalar& v = p.at(name);
  if (!v.is_integer() || v.modulus() != 0) throw InputError("parameter " + name + " must be an integer");
  BigRational q = v.to_rational();
  if (q < lo || q > hi)
    throw InputError("parameter " + name + " must be between " + std::to_string(lo) + " and " + std::to_string(hi));
  return static_cast<std::size_t>(numerator(q));
}

}  // namespace detail

inline const std::map<std::string, CatalogEntry>& construction_catalog() {
  using P = std::map<std::string, Scalar>;
  using detail::size_param;
  static const std::map<std::string, CatalogEntry> catalog{
      {"octonions",
       {"Cayley-Dickson algebra with parameters alpha, beta, gamma",
        {{"alpha", "-1"}, {"beta", "-1"}, {"gamma", "-1"}},
        [](const P& p, const Field& f) { return cayley_dickson(p.at("alpha"), p.at("beta"), p.at("gamma"), f); }}},
      {"quaternions",
       {"generalized quaternion algebra (alpha, beta)",
        {{"alpha", "-1"}, {"beta", "-1"}},
        [](const P& p, const Field& f) { return generalized_quaternion(p.at("alpha"), p.at("beta"), f); }}},
      {"matrix",
       {"full matrix algebra M_k",
        {{"k", "2"}},
        [](const P& p, const Field& f) { return matrix_algebra(size_param(p, "k", 1, 8), f); }}},
      {"m2_plus_m2",
       {"direct sum M_2 + M_2",
        {},
        [](const P&, const Field& f) { return direct_sum(matrix_algebra(2, f), matrix_algebra(2, f)); }}},
      {"truncated_polynomial",
       {"F[t]/(t^(k+1)), with unit when unital = 1",
        {{"k", "4"}, {"unital", "1"}},
        [](const P& p, const Field& f) { return truncated_polynomial(size_param(p, "k", 1, 64), !p.at("unital").is_zero(), f); }}},
      {"dorofeev",
       {"five-dimensional right alternative, right nilpotent algebra",
        {},
        [](const P&, const Field& f) { return dorofeev(f); }}},
      {"zinbiel",
       {"left Zinbiel algebra t^i o t^j = t^(i+j+1)/(i+1) on t..t^k",
        {{"k", "6"}},
        [](const P& p, const Field& f) { return zinbiel_truncated(size_param(p, "k", 1, 64), f); }}},
      {"novikov",
       {"left Novikov algebra a o b = D(a)b, D = t d/dt, on t..t^k",
        {{"k", "4"}},
        [](const P& p, const Field& f) { return derivation_left_novikov(size_param(p, "k", 1, 64), f); }}},
      {"novikov_poisson_left",
       {"left Novikov-Poisson algebra on t..t^k",
        {{"k", "4"}},
        [](const P& p, const Field& f) { return left_novikov_poisson(size_param(p, "k", 1, 64), f); }}},
      {"novikov_poisson_right",
       {"right Novikov-Poisson algebra on t..t^k",
        {{"k", "4"}},
        [](const P& p, const Field& f) { return right_novikov_poisson(size_param(p, "k", 1, 64), f); }}},
      {"comm_tridendriform",
       {"commutative tridendriform algebra on t..t^k",
        {{"k", "6"}},
        [](const P& p, const Field& f) { return comm_tridendriform_truncated(size_param(p, "k", 1, 64), f); }}},
      {"poisson",
       {"six-dimensional Poisson algebra F[x,y]/(x,y)^3",
        {},
        [](const P&, const Field& f) { return poisson_small(f); }}},
      {"lie_cross",
       {"three-dimensional cross product Lie algebra",
        {},
        [](const P&, const Field& f) { return lie_cross(f); }}},
      {"lie_affine2",
       {"two-dimensional non-abelian Lie algebra",
        {},
        [](const P&, const Field& f) { return lie_affine2(f); }}},
      {"leibniz2",
       {"two-dimensional left Leibniz algebra e1e1 = e2",
        {},
        [](const P&, const Field& f) { return leibniz2(f); }}},
      {"zero",
       {"zero multiplication on F^n",
        {{"n", "2"}},
        [](const P& p, const Field& f) { return zero_algebra(size_param(p, "n", 1, 64), f); }}},
  };
  return catalog;
}

/// Builds a catalog entry; `params` overrides the defaults (rational literals, reduced into the field by each builder).
inline Algebra<Scalar> construct_named(const std::string& name, const std::map<std::string, std::string>& params = {},
                                       const Field& field = Field::rational()) {
  const auto& cat = construction_catalog();
  auto it = cat.find(name);
  if (it == cat.end()) throw InputError("unknown construction '" + name + "'");
  std::map<std::string, Scalar> values;
  for (const auto& [k, v] : it->second.defaults) values[k] = Scalar::parse(v);
  for (const auto& [k, v] : params) {
    if (!it->second.defaults.count(k)) throw InputError("construction " + name + " has no parameter " + k);
    values[k] = Scalar::parse(v);
  }
  return it->second.build(values, field);
}

}  // namespace kantor

#endif  // KANTOR_CATALOG_HPP
