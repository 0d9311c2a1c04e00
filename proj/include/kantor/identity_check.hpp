#ifndef KANTOR_IDENTITY_CHECK_HPP
#define KANTOR_IDENTITY_CHECK_HPP

#include "kantor/algebra.hpp"
#include "kantor/identity.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace kantor {

/// Identity compiled into a hash-consed DAG so shared subterms are evaluated once.
struct CompiledIdentity {
  enum class Kind { Var, Const, Prod };
  struct Node {
    Kind kind;
    std::size_t index;
    std::size_t left = 0, right = 0;
  };
  std::vector<Node> nodes;
  std::vector<std::string> variables, constants, products;
  std::vector<std::pair<Scalar, std::size_t>> terms;
};

namespace detail {

inline std::size_t intern(const std::string& s, std::vector<std::string>& v) {
  auto it = std::find(v.begin(), v.end(), s);
  if (it != v.end()) return static_cast<std::size_t>(it - v.begin());
  v.push_back(s);
  return v.size() - 1;
}

inline std::size_t compile_term(const Term& t, CompiledIdentity& ci, std::unordered_map<std::string, std::size_t>& memo) {
  std::string key = term_str(t);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  CompiledIdentity::Node node{};
  switch (t.kind) {
    case Term::Kind::Var:
      node = {CompiledIdentity::Kind::Var, intern(t.name, ci.variables)};
      break;
    case Term::Kind::Const:
      node = {CompiledIdentity::Kind::Const, intern(t.name, ci.constants)};
      break;
    case Term::Kind::Prod: {
      std::size_t l = compile_term(*t.left, ci, memo);
      std::size_t r = compile_term(*t.right, ci, memo);
      node = {CompiledIdentity::Kind::Prod, intern(t.name, ci.products), l, r};
      break;
    }
  }
  ci.nodes.push_back(node);
  memo.emplace(std::move(key), ci.nodes.size() - 1);
  return ci.nodes.size() - 1;
}

}  // namespace detail

inline CompiledIdentity compile(const IdentityExpr& e) {
  CompiledIdentity ci;
  ci.variables = e.variables;
  std::unordered_map<std::string, std::size_t> memo;
  for (const auto& t : e.terms) {
    if (!t.params.empty()) throw InputError("unbound parameter @" + t.params.front());
    ci.terms.emplace_back(t.coeff, detail::compile_term(*t.term, ci, memo));
  }
  return ci;
}

/// Evaluates a compiled identity on concrete (or polynomial) elements.
template <class T, class R>
Element<T> evaluate(const CompiledIdentity& ci, const std::vector<const MultTable<R>*>& tables,
                    const std::vector<Element<T>>& vars, const std::vector<Element<T>>& consts, std::size_t n) {
  std::vector<Element<T>> val(ci.nodes.size());
  for (std::size_t i = 0; i < ci.nodes.size(); ++i) {
    const auto& nd = ci.nodes[i];
    switch (nd.kind) {
      case CompiledIdentity::Kind::Var: val[i] = vars[nd.index]; break;
      case CompiledIdentity::Kind::Const: val[i] = consts[nd.index]; break;
      case CompiledIdentity::Kind::Prod: val[i] = multiply(*tables[nd.index], val[nd.left], val[nd.right]); break;
    }
  }
  std::vector<Accumulator<T>> acc(n);
  for (const auto& [c, root] : ci.terms)
    for (std::size_t k = 0; k < n; ++k)
      if (!val[root][k].is_zero()) acc[k].add_product(val[root][k], c);
  Element<T> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = acc[k].finish();
  return out;
}

enum class Method { Basis, Generic, Random };
enum class Status { Holds, HoldsGenerically, NotFalsified, Fails };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::Basis: return "basis";
    case Method::Generic: return "generic";
    case Method::Random: return "random";
  }
  return {};
}

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::HoldsGenerically: return "holds_generically";
    case Status::NotFalsified: return "not_falsified";
    case Status::Fails: return "fails";
  }
  return {};
}

inline Method parse_method(const std::string& s) {
  if (s == "basis") return Method::Basis;
  if (s == "generic") return Method::Generic;
  if (s == "random") return Method::Random;
  throw InputError("unknown method '" + s + "' (expected basis, generic or random)");
}

struct CheckOptions {
  Method method = Method::Generic;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::map<std::string, Scalar> params;
  std::map<std::string, Element<Scalar>> constants;
};

struct Witness {
  std::vector<std::pair<std::string, Element<Scalar>>> assignment;
  std::vector<Scalar> table_point;
  Element<Scalar> defect;
};

struct Verdict {
  Status status = Status::Holds;
  Method method = Method::Generic;
  std::string identity;
  std::optional<Witness> witness;
  std::size_t evaluations = 0;
  std::string note;

  bool holds() const { return status == Status::Holds || status == Status::HoldsGenerically; }
  bool passed() const { return status != Status::Fails; }
};

/// Number of indeterminates used by the coefficients of the given tables.
template <class R>
std::size_t table_variable_count(const std::vector<const MultTable<R>*>& tables) {
  if constexpr (std::is_same_v<R, Poly>) {
    std::size_t s = 0;
    for (const auto* t : tables)
      for (std::size_t i = 0; i < t->dim(); ++i)
        for (std::size_t j = 0; j < t->dim(); ++j)
          for (const auto& [k, c] : t->cell(i, j)) s = std::max(s, c.variable_span());
    return s;
  } else {
    return 0;
  }
}

/// Table with every coefficient evaluated at `point`.
template <class R>
MultTable<Scalar> specialize(const MultTable<R>& t, const std::vector<Scalar>& point) {
  if constexpr (std::is_same_v<R, Poly>) {
    return t.template map<Scalar>([&](const Poly& p) { return p.evaluate(point); });
  } else {
    (void)point;
    return t;
  }
}

template <class R>
Algebra<Scalar> specialize(const Algebra<R>& a, const std::vector<Scalar>& point) {
  Algebra<Scalar> out(a.dim, a.field);
  out.labels = a.labels;
  for (const auto& [name, t] : a.products) out.products.emplace(name, specialize(t, point));
  return out;
}

namespace detail {

template <class R>
std::vector<const MultTable<R>*> resolve_tables(const Algebra<R>& a, const CompiledIdentity& ci) {
  std::vector<const MultTable<R>*> out;
  for (const auto& p : ci.products) out.push_back(&a.product(p));
  return out;
}

template <class R>
std::vector<Element<Scalar>> resolve_constants(const Algebra<R>& a, const CompiledIdentity& ci, const CheckOptions& opt) {
  std::vector<Element<Scalar>> out;
  for (const auto& name : ci.constants) {
    if (auto it = opt.constants.find(name); it != opt.constants.end()) {
      if (it->second.size() != a.dim) throw InputError("constant $" + name + " has wrong dimension");
      out.push_back(it->second);
      continue;
    }
    if (name == "1") {
      if constexpr (std::is_same_v<R, Scalar>) {
        std::optional<Element<Scalar>> unit;
        for (const auto& [pname, t] : a.products)
          if ((unit = find_unit(t))) break;
        if (!unit) throw InputError("identity uses $1 but the algebra has no unit");
        out.push_back(*unit);
        continue;
      }
      throw InputError("identity uses $1; supply the unit explicitly for polynomial tables");
    }
    throw InputError("no value supplied for constant $" + name);
  }
  return out;
}

template <class T>
std::vector<Element<T>> cast_all(const std::vector<Element<Scalar>>& v) {
  std::vector<Element<T>> out;
  for (const auto& e : v) out.emplace_back(e.begin(), e.end());
  return out;
}

/// Scans points until some coordinate of `defect` is nonzero.
inline std::optional<std::vector<Scalar>> find_nonzero_point(const Element<Poly>& defect, std::size_t nvars,
                                                             const Field& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 600; ++attempt) {
    long long radius = attempt < 200 ? 3 : attempt < 400 ? 20 : 1000;
    std::vector<Scalar> point(nvars);
    for (auto& x : point) {
      long long v = static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * radius + 1)) - radius;
      x = field(v);
    }
    for (const auto& p : defect)
      if (!p.evaluate(point).is_zero()) return point;
  }
  return std::nullopt;
}

inline void advance(std::vector<std::size_t>& idx, std::size_t n, bool& done) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < n) return;
    idx[i] = 0;
  }
  done = true;
}

}  // namespace detail

/// Independent scalar evaluation of the identity at the witness data.
template <class R>
Element<Scalar> defect_at(const Algebra<R>& a, const IdentityExpr& id, const Witness& w, const CheckOptions& opt = {}) {
  IdentityExpr bound = bind_params(id, opt.params);
  CompiledIdentity ci = compile(bound);
  Algebra<Scalar> sa = specialize(a, w.table_point);
  auto tables = detail::resolve_tables(sa, ci);
  auto consts = detail::resolve_constants(sa, ci, opt);
  std::vector<Element<Scalar>> vars;
  for (const auto& v : ci.variables) {
    auto it = std::find_if(w.assignment.begin(), w.assignment.end(), [&](const auto& p) { return p.first == v; });
    if (it == w.assignment.end()) throw InputError("witness lacks a value for " + v);
    vars.push_back(it->second);
  }
  return evaluate(ci, tables, vars, consts, a.dim);
}

/// Decides id on the algebra with the chosen method.
template <class R>
Verdict check_identity(const Algebra<R>& a, const IdentityExpr& id_in, const CheckOptions& opt = {}) {
  IdentityExpr id = bind_params(id_in, opt.params);
  for (const auto& v : id_in.variables)
    if (std::find(id.variables.begin(), id.variables.end(), v) == id.variables.end()) id.variables.push_back(v);
  Verdict verdict;
  verdict.method = opt.method;
  verdict.identity = to_string(id_in);
  CompiledIdentity ci = compile(id);
  auto tables = detail::resolve_tables(a, ci);
  auto consts = detail::resolve_constants(a, ci, opt);
  const std::size_t n = a.dim;
  const std::size_t tv = table_variable_count(tables);
  const std::size_t nv = ci.variables.size();

  auto make_witness = [&](const std::vector<Element<Scalar>>& vals, const std::vector<Scalar>& point) {
    Witness w;
    for (std::size_t i = 0; i < nv; ++i) w.assignment.emplace_back(ci.variables[i], vals[i]);
    w.table_point = point;
    CheckOptions o = opt;
    w.defect = defect_at(a, id, w, o);
    if (is_zero(w.defect)) throw std::logic_error("witness re-evaluated to zero defect");
    return w;
  };

  if (opt.method == Method::Random) {
    std::mt19937_64 rng(opt.seed);
    auto draw = [&]() {
      if (!a.field.is_rational()) return a.field(static_cast<long long>(rng() % a.field.characteristic()));
      return Scalar(static_cast<long long>(rng() % 7) - 3);
    };
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
      std::vector<Scalar> point(tv);
      for (auto& x : point) x = draw();
      std::vector<MultTable<Scalar>> st;
      for (const auto* t : tables) st.push_back(specialize(*t, point));
      std::vector<const MultTable<Scalar>*> sp;
      for (const auto& t : st) sp.push_back(&t);
      std::vector<Element<Scalar>> vals(nv, Element<Scalar>(n));
      for (auto& v : vals)
        for (auto& x : v) x = draw();
      ++verdict.evaluations;
      if (!is_zero(evaluate(ci, sp, vals, consts, n))) {
        verdict.status = Status::Fails;
        verdict.witness = make_witness(vals, point);
        return verdict;
      }
    }
    verdict.status = Status::NotFalsified;
    return verdict;
  }

  // Variables of degree exactly one in every term are enumerated over the
  // basis; the others receive fresh indeterminates.
  std::vector<bool> linear(nv, true);
  for (std::size_t i = 0; i < nv; ++i)
    for (const auto& t : id.terms)
      if (occurrences(*t.term, ci.variables[i]) != 1) linear[i] = false;
  if (opt.method == Method::Basis) {
    for (std::size_t i = 0; i < nv; ++i)
      if (!linear[i]) throw InputError("basis method needs a multilinear identity");
  }
  std::vector<std::size_t> lin_idx, gen_idx;
  for (std::size_t i = 0; i < nv; ++i) (linear[i] ? lin_idx : gen_idx).push_back(i);
  const std::size_t total_vars = tv + gen_idx.size() * n;
  if (total_vars > kMaxVariables)
    throw InputError("identity needs " + std::to_string(total_vars) + " indeterminates (limit " +
                     std::to_string(kMaxVariables) + ")");

  auto basis_elem = [&](std::size_t k) {
    Element<Scalar> e(n);
    e[k] = a.field(1);
    return e;
  };

  const bool poly_path = tv > 0 || !gen_idx.empty() || !std::is_same_v<R, Scalar>;
  std::vector<std::size_t> idx(lin_idx.size(), 0);
  bool done = false;
  while (!done) {
    ++verdict.evaluations;
    if (!poly_path) {
      if constexpr (std::is_same_v<R, Scalar>) {
        std::vector<Element<Scalar>> vals(nv);
        for (std::size_t t = 0; t < lin_idx.size(); ++t) vals[lin_idx[t]] = basis_elem(idx[t]);
        if (!is_zero(evaluate(ci, tables, vals, consts, n))) {
          verdict.status = Status::Fails;
          verdict.witness = make_witness(vals, {});
          return verdict;
        }
      }
    } else {
      std::vector<Element<Poly>> vals(nv);
      for (std::size_t t = 0; t < lin_idx.size(); ++t) vals[lin_idx[t]] = to_poly(basis_elem(idx[t]));
      for (std::size_t g = 0; g < gen_idx.size(); ++g) {
        Element<Poly> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = Poly::variable(tv + g * n + k);
        vals[gen_idx[g]] = std::move(v);
      }
      Element<Poly> defect = evaluate(ci, tables, vals, detail::cast_all<Poly>(consts), n);
      if (!is_zero(defect)) {
        auto point = detail::find_nonzero_point(defect, total_vars, a.field, opt.seed);
        if (!point) {
          verdict.status = Status::NotFalsified;
          verdict.note = "formal defect is nonzero but no nonvanishing point was found";
          return verdict;
        }
        std::vector<Scalar> table_point(point->begin(), point->begin() + static_cast<std::ptrdiff_t>(tv));
        std::vector<Element<Scalar>> svals(nv);
        for (std::size_t t = 0; t < lin_idx.size(); ++t) svals[lin_idx[t]] = basis_elem(idx[t]);
        for (std::size_t g = 0; g < gen_idx.size(); ++g) {
          Element<Scalar> v(n);
          for (std::size_t k = 0; k < n; ++k) v[k] = (*point)[tv + g * n + k];
          svals[gen_idx[g]] = std::move(v);
        }
        verdict.status = Status::Fails;
        verdict.witness = make_witness(svals, table_point);
        return verdict;
      }
    }
    detail::advance(idx, n, done);
  }
  verdict.status = (!a.field.is_rational() && !gen_idx.empty()) ? Status::HoldsGenerically : Status::Holds;
  return verdict;
}

/// The value of the single parameter `param` (occurring linearly) for which
/// the identity holds, or nullopt if none does. When the parameter's
/// coefficient vanishes identically and the identity holds, returns 0.
template <class R>
std::optional<Scalar> fit_parameter(const Algebra<R>& a, const IdentityExpr& id, const std::string& param,
                                    CheckOptions opt = {}) {
  IdentityExpr d0, d1;
  d0.variables = d1.variables = id.variables;
  for (const auto& t : id.terms) {
    auto c = std::count(t.params.begin(), t.params.end(), param);
    if (c == 0) {
      d0.terms.push_back(t);
    } else if (c == 1) {
      IdTerm u = t;
      u.params.erase(std::find(u.params.begin(), u.params.end(), param));
      d1.terms.push_back(u);
    } else {
      throw InputError("parameter @" + param + " must occur linearly");
    }
  }
  opt.method = Method::Generic;
  opt.params.erase(param);
  CompiledIdentity c0 = compile(bind_params(d0, opt.params)), c1 = compile(bind_params(d1, opt.params));
  c0.variables = c1.variables = id.variables;
  auto t0 = detail::resolve_tables(a, c0);
  auto t1 = detail::resolve_tables(a, c1);
  auto k0 = detail::cast_all<Poly>(detail::resolve_constants(a, c0, opt));
  auto k1 = detail::cast_all<Poly>(detail::resolve_constants(a, c1, opt));
  const std::size_t n = a.dim;
  std::size_t tv = std::max(table_variable_count(t0), table_variable_count(t1));
  std::size_t nv = id.variables.size();
  if (tv + nv * n > kMaxVariables) throw InputError("too many indeterminates for parameter fitting");
  std::vector<Element<Poly>> vals(nv);
  for (std::size_t g = 0; g < nv; ++g) {
    Element<Poly> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = Poly::variable(tv + g * n + k);
    vals[g] = std::move(v);
  }
  Element<Poly> e0 = evaluate(c0, t0, vals, k0, n);
  Element<Poly> e1 = evaluate(c1, t1, vals, k1, n);
  std::optional<Scalar> alpha;
  for (std::size_t k = 0; k < n && !alpha; ++k)
    if (!e1[k].is_zero()) {
      const auto& [mono, coeff] = e1[k].terms().front();
      Scalar c0v;
      for (const auto& [m, c] : e0[k].terms())
        if (m == mono) c0v = c;
      alpha = -c0v / coeff;
    }
  if (!alpha) return is_zero(e0) ? std::optional<Scalar>(Scalar(0)) : std::nullopt;
  for (std::size_t k = 0; k < n; ++k)
    if (!(e0[k] + e1[k].scaled(*alpha)).is_zero()) return std::nullopt;
  return alpha;
}

}  // namespace kantor

#endif  // KANTOR_IDENTITY_CHECK_HPP
