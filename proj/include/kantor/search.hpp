#ifndef KANTOR_SEARCH_HPP
#define KANTOR_SEARCH_HPP

#include "kantor/registry.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace kantor {

struct SearchSpec {
  std::string variety;
  std::size_t dim = 2;
  std::vector<Scalar> coeffs{Scalar(-1), Scalar(0), Scalar(1)};
  std::map<std::string, Scalar> params;
  std::size_t budget = 1000000;  // candidate tables examined
  bool nontrivial = false;
  std::size_t limit = 0;         // stop after this many instances (0: no limit)
  Field field = Field::rational();
};

struct SearchResult {
  std::vector<Algebra<Scalar>> instances;
  std::size_t examined = 0;
  bool budget_exhausted = false;
};

namespace detail {

inline bool laws_hold(const Algebra<Scalar>& a, const std::vector<IdentityExpr>& ids,
                      const std::map<std::string, Scalar>& params) {
  CheckOptions opt;
  opt.params = params;
  try {
    for (const auto& id : ids) {
      opt.method = is_multilinear(id) ? Method::Basis : Method::Generic;
      if (!check_identity(a, id, opt).passed()) return false;
    }
  } catch (const InputError&) {
    return false;  // e.g. $1 without a unit
  }
  return true;
}

/// Coefficient-index digits of the table for every product, basis permuted by `perm`.
inline std::vector<std::size_t> encode(const std::vector<std::vector<std::size_t>>& digits, std::size_t n,
                                       const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> out;
  out.reserve(digits.size() * n * n * n);
  for (const auto& d : digits) {
    std::vector<std::size_t> moved(d.size());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) moved[(perm[i] * n + perm[j]) * n + perm[k]] = d[(i * n + j) * n + k];
    out.insert(out.end(), moved.begin(), moved.end());
  }
  return out;
}

/// True when no basis permutation gives a lexicographically smaller encoding.
inline bool canonical(const std::vector<std::vector<std::size_t>>& digits, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const std::vector<std::size_t> base = encode(digits, n, perm);
  while (std::next_permutation(perm.begin(), perm.end()))
    if (encode(digits, n, perm) < base) return false;
  return true;
}

inline MultTable<Scalar> table_from(const std::vector<std::size_t>& d, std::size_t n, const std::vector<Scalar>& coeffs,
                                    const Field& field) {
  MultTable<Scalar> t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.set(i, j, k, field(coeffs[d[(i * n + j) * n + k]]));
  return t;
}

inline bool trivial(const Algebra<Scalar>& a) {
  for (const auto& [name, t] : a.products) {
    if (t.is_zero()) continue;
    if (!check_variety(a, "associative_commutative", {}, {{"m", name}}).holds()) return false;
  }
  return true;
}

}  // namespace detail

/// Enumerates structure constants drawn from spec.coeffs, one basis ordering
/// per permutation class, and keeps the algebras in the variety. Laws that
/// involve a single product prune that product's tables before the mixed
/// laws are checked on combinations.
inline SearchResult search_instance(const SearchSpec& spec) {
  const VarietySpec& v = variety_spec(spec.variety);
  const std::size_t n = spec.dim;
  if (n == 0 || n > 4) throw InputError("search dimension must be between 1 and 4");
  if (spec.coeffs.empty()) throw InputError("search needs a nonempty coefficient set");
  for (const auto& p : v.params)
    if (spec.params.find(p) == spec.params.end()) throw InputError("variety " + v.name + " needs parameter " + p);
  const std::size_t cells = n * n * n, base = spec.coeffs.size();
  SearchResult res;

  std::vector<std::vector<std::vector<std::size_t>>> options(v.products.size());
  std::vector<IdentityExpr> mixed;
  std::vector<std::vector<IdentityExpr>> own(v.products.size());
  for (const auto& id : v.identities) {
    auto ps = id.products();
    if (ps.size() == 1) {
      auto it = std::find(v.products.begin(), v.products.end(), *ps.begin());
      own[static_cast<std::size_t>(it - v.products.begin())].push_back(id);
    } else {
      mixed.push_back(id);
    }
  }

  for (std::size_t p = 0; p < v.products.size(); ++p) {
    std::vector<std::size_t> d(cells, 0);
    for (;;) {
      if (res.examined >= spec.budget) {
        res.budget_exhausted = true;
        return res;
      }
      ++res.examined;
      Algebra<Scalar> a(n, spec.field);
      a.products.emplace(v.products[p], detail::table_from(d, n, spec.coeffs, spec.field));
      if (detail::laws_hold(a, own[p], spec.params)) options[p].push_back(d);
      std::size_t pos = 0;
      while (pos < cells && ++d[pos] == base) d[pos++] = 0;
      if (pos == cells) break;
    }
  }

  std::vector<std::size_t> pick(v.products.size(), 0);
  for (const auto& o : options)
    if (o.empty()) return res;
  for (;;) {
    std::vector<std::vector<std::size_t>> digits;
    for (std::size_t p = 0; p < pick.size(); ++p) digits.push_back(options[p][pick[p]]);
    if (detail::canonical(digits, n)) {
      if (res.examined >= spec.budget) {
        res.budget_exhausted = true;
        return res;
      }
      ++res.examined;
      Algebra<Scalar> a(n, spec.field);
      for (std::size_t p = 0; p < pick.size(); ++p)
        a.products.emplace(v.products[p], detail::table_from(digits[p], n, spec.coeffs, spec.field));
      if (detail::laws_hold(a, mixed, spec.params) && !(spec.nontrivial && detail::trivial(a))) {
        res.instances.push_back(std::move(a));
        if (spec.limit && res.instances.size() >= spec.limit) return res;
      }
    }
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == options[pos].size()) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
  return res;
}

}  // namespace kantor

#endif  // KANTOR_SEARCH_HPP
