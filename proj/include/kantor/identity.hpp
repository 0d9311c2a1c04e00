#ifndef KANTOR_IDENTITY_HPP
#define KANTOR_IDENTITY_HPP

#include "kantor/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace kantor {

/// Binary product tree. Leaves are variables or named constant elements
/// ("$1" for the unit, "$u" for a seed).
struct Term {
  enum class Kind { Var, Const, Prod };
  Kind kind = Kind::Var;
  std::string name;
  std::shared_ptr<const Term> left, right;
};

using TermPtr = std::shared_ptr<const Term>;

inline TermPtr var(std::string name) { return std::make_shared<const Term>(Term{Term::Kind::Var, std::move(name), {}, {}}); }
inline TermPtr constant(std::string name) {
  return std::make_shared<const Term>(Term{Term::Kind::Const, std::move(name), {}, {}});
}
inline TermPtr prod(std::string p, TermPtr l, TermPtr r) {
  return std::make_shared<const Term>(Term{Term::Kind::Prod, std::move(p), std::move(l), std::move(r)});
}

inline std::string term_str(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var: return t.name;
    case Term::Kind::Const: return "$" + t.name;
    case Term::Kind::Prod: return t.name + "(" + term_str(*t.left) + "," + term_str(*t.right) + ")";
  }
  return {};
}

inline std::size_t occurrences(const Term& t, const std::string& v) {
  if (t.kind == Term::Kind::Var) return t.name == v ? 1 : 0;
  if (t.kind == Term::Kind::Const) return 0;
  return occurrences(*t.left, v) + occurrences(*t.right, v);
}

inline std::size_t term_degree(const Term& t) {
  if (t.kind == Term::Kind::Var) return 1;
  if (t.kind == Term::Kind::Const) return 0;
  return term_degree(*t.left) + term_degree(*t.right);
}

/// One summand: coeff * @p1 * @p2 * ... * term.
struct IdTerm {
  Scalar coeff{1};
  std::vector<std::string> params;
  TermPtr term;
};

/// Linear combination of product trees, read as "sum = 0".
struct IdentityExpr {
  std::vector<IdTerm> terms;
  std::vector<std::string> variables;

  bool empty() const { return terms.empty(); }
  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& t : terms) d = std::max(d, term_degree(*t.term));
    return d;
  }
  std::set<std::string> products() const;
  std::set<std::string> constants() const;
  std::set<std::string> parameters() const {
    std::set<std::string> s;
    for (const auto& t : terms) s.insert(t.params.begin(), t.params.end());
    return s;
  }
};

namespace detail {

inline void collect(const Term& t, Term::Kind kind, std::set<std::string>& out) {
  if (t.kind == kind) out.insert(t.name);
  if (t.kind == Term::Kind::Prod) {
    collect(*t.left, kind, out);
    collect(*t.right, kind, out);
  }
}

inline void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.kind == Term::Kind::Var) {
    if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
  } else if (t.kind == Term::Kind::Prod) {
    collect_vars(*t.left, out);
    collect_vars(*t.right, out);
  }
}

}  // namespace detail

inline std::set<std::string> IdentityExpr::products() const {
  std::set<std::string> s;
  for (const auto& t : terms) detail::collect(*t.term, Term::Kind::Prod, s);
  return s;
}

inline std::set<std::string> IdentityExpr::constants() const {
  std::set<std::string> s;
  for (const auto& t : terms) detail::collect(*t.term, Term::Kind::Const, s);
  return s;
}

/// Merges like terms (same tree and parameters), drops zeros and keeps the
/// first-occurrence order. The variable list is kept, extended by any
/// variable that is not yet declared.
inline IdentityExpr normalize(const IdentityExpr& e) {
  IdentityExpr out;
  out.variables = e.variables;
  std::map<std::string, std::size_t> index;
  for (const auto& t : e.terms) {
    std::vector<std::string> params = t.params;
    std::sort(params.begin(), params.end());
    std::string key = term_str(*t.term);
    for (const auto& p : params) key += "|@" + p;
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, out.terms.size());
      out.terms.push_back({t.coeff, params, t.term});
    } else {
      out.terms[it->second].coeff += t.coeff;
    }
  }
  std::erase_if(out.terms, [](const IdTerm& t) { return t.coeff.is_zero(); });
  for (const auto& t : e.terms) detail::collect_vars(*t.term, out.variables);
  return out;
}

/// Renders in the identity DSL; parse_identity(to_string(e)) reproduces e.
inline std::string to_string(const IdentityExpr& e) {
  if (e.terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const auto& t = e.terms[i];
    std::string c = t.coeff.short_str();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    s += i == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (c != "1") s += c + "*";
    for (const auto& p : t.params) s += "@" + p + "*";
    s += term_str(*t.term);
  }
  return s;
}

struct ParseError : InputError {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : InputError(msg + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

class IdentityParser {
 public:
  explicit IdentityParser(std::string_view text) : s_(text) {}

  IdentityExpr parse_identity() {
    auto lhs = parse_expr();
    skip();
    if (peek() == '=') {
      ++pos_;
      auto rhs = parse_expr();
      for (auto& t : rhs) t.coeff = -t.coeff;
      lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    IdentityExpr e;
    e.terms = std::move(lhs);
    for (const auto& t : e.terms) detail::collect_vars(*t.term, e.variables);
    e.variables.insert(e.variables.begin(), header_vars_.begin(), header_vars_.end());
    std::vector<std::string> uniq;
    for (const auto& v : e.variables)
      if (std::find(uniq.begin(), uniq.end(), v) == uniq.end()) uniq.push_back(v);
    e.variables = order_by_appearance(uniq);
    return normalize(e);
  }

 private:
  using Lin = std::vector<IdTerm>;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident() {
    skip();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected identifier");
    std::size_t b = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    std::string name(s_.substr(b, pos_ - b));
    if (appearance_.find(name) == appearance_.end()) appearance_.emplace(name, appearance_.size());
    return name;
  }

  std::string integer() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected integer");
    return std::string(s_.substr(b, pos_ - b));
  }

  Lin parse_expr() {
    Lin out;
    bool first = true;
    while (true) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Lin t = parse_term();
      for (auto& x : t) {
        if (neg) x.coeff = -x.coeff;
        out.push_back(std::move(x));
      }
      first = false;
    }
    return out;
  }

  Lin parse_term() {
    Scalar coeff(1);
    std::vector<std::string> params;
    while (true) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t save = pos_;
        std::string num = integer();
        std::string den;
        if (peek() == '/') {
          ++pos_;
          den = integer();
          if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        }
        if (peek() == '*') {
          ++pos_;
          coeff *= Scalar::parse(den.empty() ? num : num + "/" + den);
          continue;
        }
        if (den.empty() && num.find_first_not_of('0') == std::string::npos) return {};
        pos_ = save;
        fail("numeric literal must be followed by '*' (only 0 may stand alone)");
      }
      if (c == '@') {
        ++pos_;
        std::size_t b = pos_;
        while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
        if (b == pos_) fail("expected parameter name after '@'");
        params.emplace_back(s_.substr(b, pos_ - b));
        expect('*');
        continue;
      }
      break;
    }
    Lin f = parse_factor();
    for (auto& x : f) {
      x.coeff *= coeff;
      x.params.insert(x.params.end(), params.begin(), params.end());
    }
    return f;
  }

  Lin parse_factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Lin e = parse_expr();
      expect(')');
      return e;
    }
    if (c == '$') {
      ++pos_;
      std::size_t b = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      if (b == pos_) fail("expected constant name after '$'");
      return {IdTerm{Scalar(1), {}, constant(std::string(s_.substr(b, pos_ - b)))}};
    }
    if (!ident_start(c)) fail(c ? std::string("unexpected '") + c + "'" : "unexpected end of input");
    std::size_t start = pos_;
    std::string name = ident();
    if (peek() != '(') return {IdTerm{Scalar(1), {}, var(name)}};
    if (name == "assoc" || name == "comm") {
      std::size_t save = pos_;
      ++pos_;
      if (ident_start(peek())) {
        std::string p = ident();
        if (peek() == ';') {
          ++pos_;
          return name == "assoc" ? parse_assoc(p) : parse_comm(p);
        }
      }
      pos_ = save;
    }
    if (name == "cyc") {
      std::size_t save = pos_;
      if (auto r = try_cyc()) return *r;
      pos_ = save;
    }
    (void)start;
    expect('(');
    Lin l = parse_expr();
    expect(',');
    Lin r = parse_expr();
    expect(')');
    return bilinear(name, l, r);
  }

  static Lin bilinear(const std::string& p, const Lin& l, const Lin& r) {
    Lin out;
    for (const auto& a : l)
      for (const auto& b : r) {
        IdTerm t{a.coeff * b.coeff, a.params, prod(p, a.term, b.term)};
        t.params.insert(t.params.end(), b.params.begin(), b.params.end());
        out.push_back(std::move(t));
      }
    return out;
  }

  static Lin negated(Lin v) {
    for (auto& t : v) t.coeff = -t.coeff;
    return v;
  }

  static Lin concat(Lin a, const Lin& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  Lin parse_assoc(const std::string& p) {
    Lin a = parse_expr();
    expect(',');
    Lin b = parse_expr();
    expect(',');
    Lin c = parse_expr();
    expect(')');
    return concat(bilinear(p, bilinear(p, a, b), c), negated(bilinear(p, a, bilinear(p, b, c))));
  }

  Lin parse_comm(const std::string& p) {
    Lin a = parse_expr();
    expect(',');
    Lin b = parse_expr();
    expect(')');
    return concat(bilinear(p, a, b), negated(bilinear(p, b, a)));
  }

  std::optional<Lin> try_cyc() {
    if (peek() != '(') return std::nullopt;
    ++pos_;
    std::string v[3];
    for (int i = 0; i < 3; ++i) {
      if (!ident_start(peek())) return std::nullopt;
      v[i] = ident();
      if (peek() != (i < 2 ? ',' : ')')) return std::nullopt;
      ++pos_;
    }
    if (peek() != '{') return std::nullopt;
    ++pos_;
    for (const auto& x : v) header_vars_.push_back(x);
    Lin body = parse_expr();
    expect('}');
    Lin out = body;
    for (int shift = 1; shift < 3; ++shift) {
      std::map<std::string, std::string> ren;
      for (int i = 0; i < 3; ++i) ren[v[i]] = v[(i + shift) % 3];
      for (const auto& t : body) out.push_back({t.coeff, t.params, rename(t.term, ren)});
    }
    return out;
  }

  static TermPtr rename(const TermPtr& t, const std::map<std::string, std::string>& ren) {
    if (t->kind == Term::Kind::Var) {
      auto it = ren.find(t->name);
      return it == ren.end() ? t : var(it->second);
    }
    if (t->kind == Term::Kind::Const) return t;
    return prod(t->name, rename(t->left, ren), rename(t->right, ren));
  }

  std::vector<std::string> order_by_appearance(std::vector<std::string> vars) const {
    std::stable_sort(vars.begin(), vars.end(), [&](const std::string& a, const std::string& b) {
      return appearance_.at(a) < appearance_.at(b);
    });
    return vars;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::string> header_vars_;
  std::map<std::string, std::size_t> appearance_;
};

}  // namespace detail

/// Parses `identity := expr ('=' expr)?`; a missing right side means "= 0".
inline IdentityExpr parse_identity(std::string_view text) { return detail::IdentityParser(text).parse_identity(); }

/// True iff every declared variable occurs exactly once in every term.
inline bool is_multilinear(const IdentityExpr& e) {
  for (const auto& t : e.terms)
    for (const auto& v : e.variables)
      if (occurrences(*t.term, v) != 1) return false;
  return true;
}

/// Swaps the arguments of every product (identity of the opposite algebra).
inline TermPtr mirror(const TermPtr& t) {
  if (t->kind != Term::Kind::Prod) return t;
  return prod(t->name, mirror(t->right), mirror(t->left));
}

inline IdentityExpr mirror(const IdentityExpr& e) {
  IdentityExpr out = e;
  for (auto& t : out.terms) t.term = mirror(t.term);
  return out;
}

/// Renames product symbols (e.g. "m" -> "p").
inline TermPtr rename_products(const TermPtr& t, const std::map<std::string, std::string>& ren) {
  if (t->kind != Term::Kind::Prod) return t;
  auto it = ren.find(t->name);
  return prod(it == ren.end() ? t->name : it->second, rename_products(t->left, ren), rename_products(t->right, ren));
}

inline IdentityExpr rename_products(const IdentityExpr& e, const std::map<std::string, std::string>& ren) {
  IdentityExpr out = e;
  for (auto& t : out.terms) t.term = rename_products(t.term, ren);
  return out;
}

/// Replaces parameters by values; parameters without a binding are kept.
inline IdentityExpr bind_params(const IdentityExpr& e, const std::map<std::string, Scalar>& values) {
  IdentityExpr out = e;
  for (auto& t : out.terms) {
    std::vector<std::string> rest;
    for (const auto& p : t.params) {
      auto it = values.find(p);
      if (it == values.end()) {
        rest.push_back(p);
      } else {
        t.coeff *= it->second;
      }
    }
    t.params = std::move(rest);
  }
  return normalize(out);
}

namespace detail {

/// Replaces the occurrences of variable v in t, left to right, by names[order[i]].
inline TermPtr assign_occurrences(const TermPtr& t, const std::string& v, const std::vector<std::string>& names,
                                  std::size_t& next) {
  if (t->kind == Term::Kind::Var) return t->name == v ? var(names[next++]) : t;
  if (t->kind == Term::Kind::Const) return t;
  auto l = assign_occurrences(t->left, v, names, next);
  auto r = assign_occurrences(t->right, v, names, next);
  return prod(t->name, l, r);
}

inline std::string fresh_name(const std::string& base, std::size_t i, const std::vector<std::string>& taken) {
  std::string name = base + std::to_string(i);
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
  return name;
}

}  // namespace detail

/// Full polarization. The identity is first split into components that are
/// homogeneous in every variable; in each component a variable of degree d
/// is replaced by d fresh variables x1..xd and the multilinear part is kept.
/// Requires characteristic 0 or larger than every such d.
inline std::vector<IdentityExpr> linearize(const IdentityExpr& e, std::uint64_t characteristic = 0) {
  IdentityExpr n = normalize(e);
  if (n.terms.empty()) return {};
  if (is_multilinear(n)) return {n};

  std::map<std::vector<std::size_t>, IdentityExpr> components;
  for (const auto& t : n.terms) {
    std::vector<std::size_t> degs;
    for (const auto& v : n.variables) degs.push_back(occurrences(*t.term, v));
    auto& c = components[degs];
    c.variables = n.variables;
    c.terms.push_back(t);
  }

  std::vector<IdentityExpr> out;
  for (auto& [degs, comp] : components) {
    for (std::size_t vi = 0; vi < comp.variables.size(); ++vi) {
      std::size_t d = degs[vi];
      if (d > 0 && characteristic != 0 && characteristic <= d)
        throw InputError("cannot linearize a variable of degree " + std::to_string(d) + " in characteristic " +
                         std::to_string(characteristic));
    }
    IdentityExpr cur = comp;
    std::vector<std::string> new_vars;
    for (std::size_t vi = 0; vi < comp.variables.size(); ++vi) {
      const std::string& v = comp.variables[vi];
      std::size_t d = degs[vi];
      if (d == 0) continue;
      if (d == 1) {
        new_vars.push_back(v);
        continue;
      }
      std::vector<std::string> fresh;
      for (std::size_t i = 1; i <= d; ++i) fresh.push_back(detail::fresh_name(v, i, comp.variables));
      IdentityExpr next;
      for (const auto& t : cur.terms) {
        std::vector<std::size_t> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<std::string> names;
          for (auto p : perm) names.push_back(fresh[p]);
          std::size_t pos = 0;
          next.terms.push_back({t.coeff, t.params, detail::assign_occurrences(t.term, v, names, pos)});
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      cur = next;
      new_vars.insert(new_vars.end(), fresh.begin(), fresh.end());
    }
    cur.variables = new_vars;
    cur = normalize(cur);
    if (!cur.terms.empty()) out.push_back(std::move(cur));
  }
  return out;
}

/// s_n = sum over permutations of sign * (((x_s1 x_s2) x_s3) ... x_sn).
inline IdentityExpr standard_polynomial(std::size_t n, const std::string& p = "m", const std::string& base = "x") {
  if (n < 2) throw InputError("standard polynomial needs n >= 2");
  if (n > 8) throw InputError("standard polynomial degree too large");
  IdentityExpr e;
  for (std::size_t i = 1; i <= n; ++i) e.variables.push_back(base + std::to_string(i));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    TermPtr t = var(e.variables[perm[0]]);
    for (std::size_t i = 1; i < n; ++i) t = prod(p, t, var(e.variables[perm[i]]));
    e.terms.push_back({Scalar(inversions % 2 ? -1 : 1), {}, t});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return e;
}

/// f * z as a new identity in the extra variable z.
inline IdentityExpr times_variable(const IdentityExpr& f, const std::string& z, const std::string& p = "m") {
  IdentityExpr e = f;
  e.variables.push_back(z);
  for (auto& t : e.terms) t.term = prod(p, t.term, var(z));
  return e;
}

}  // namespace kantor

#endif  // KANTOR_IDENTITY_HPP
