#ifndef KANTOR_MINING_HPP
#define KANTOR_MINING_HPP

#include "kantor/identity_check.hpp"
#include "kantor/kantor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace kantor {

/// All multilinear monomials of degree d in x1..xd: every bracketing shape,
/// every variable order and every assignment of product names to the d - 1
/// inner nodes, in that nesting order.
struct MonomialBasis {
  std::size_t degree = 0;
  std::vector<std::string> products;
  std::vector<TermPtr> terms;
  std::vector<std::string> variables;

  std::size_t size() const { return terms.size(); }
  std::optional<std::size_t> index_of(const Term& t) const {
    auto it = lookup_.find(term_str(t));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

 private:
  friend MonomialBasis monomial_basis(std::size_t, const std::vector<std::string>&);
  friend struct MiningEngine;
  struct Column {
    std::size_t shape, labels;
    std::vector<std::size_t> perm;  // slot -> variable
  };
  std::vector<TermPtr> shapes_;                 // leaves named by slot "0".."d-1"
  std::vector<std::vector<std::string>> labelings_;
  std::vector<Column> columns_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

namespace detail {

/// Bracketing shapes on the leaf slots [lo, hi), leaves named by slot number.
inline std::vector<TermPtr> shapes(std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return {var(std::to_string(lo))};
  std::vector<TermPtr> out;
  for (std::size_t mid = lo + 1; mid < hi; ++mid)
    for (const auto& l : shapes(lo, mid))
      for (const auto& r : shapes(mid, hi)) out.push_back(prod("*", l, r));
  return out;
}

/// Replaces inner-node names (pre-order) by `labels` and leaf slots by `names[perm[slot]]`.
inline TermPtr instantiate(const TermPtr& shape, const std::vector<std::string>& labels, std::size_t& next,
                           const std::vector<std::size_t>& perm, const std::vector<std::string>& names) {
  if (shape->kind == Term::Kind::Var) return var(names[perm[std::stoul(shape->name)]]);
  const std::string& label = labels[next++];
  TermPtr l = instantiate(shape->left, labels, next, perm, names);
  TermPtr r = instantiate(shape->right, labels, next, perm, names);
  return prod(label, l, r);
}

inline TermPtr rename_vars(const TermPtr& t, const std::map<std::string, std::string>& ren) {
  if (t->kind == Term::Kind::Var) {
    auto it = ren.find(t->name);
    return it == ren.end() ? t : var(it->second);
  }
  if (t->kind == Term::Kind::Const) return t;
  return prod(t->name, rename_vars(t->left, ren), rename_vars(t->right, ren));
}

}  // namespace detail

inline MonomialBasis monomial_basis(std::size_t d, const std::vector<std::string>& products = {"m"}) {
  if (d < 2 || d > 5) throw InputError("mining degree must be between 2 and 5");
  if (products.empty()) throw InputError("mining needs at least one product");
  MonomialBasis b;
  b.degree = d;
  b.products = products;
  for (std::size_t i = 1; i <= d; ++i) b.variables.push_back("x" + std::to_string(i));
  b.shapes_ = detail::shapes(0, d);
  std::vector<std::size_t> digits(d - 1, 0);
  for (;;) {
    std::vector<std::string> labels;
    for (auto x : digits) labels.push_back(products[x]);
    b.labelings_.push_back(std::move(labels));
    std::size_t pos = d - 1;
    while (pos > 0 && ++digits[pos - 1] == products.size()) digits[--pos] = 0;
    if (pos == 0) break;
  }
  for (std::size_t s = 0; s < b.shapes_.size(); ++s) {
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t l = 0; l < b.labelings_.size(); ++l) {
        std::size_t next = 0;
        TermPtr t = detail::instantiate(b.shapes_[s], b.labelings_[l], next, perm, b.variables);
        b.lookup_.emplace(term_str(*t), b.terms.size());
        b.terms.push_back(std::move(t));
        b.columns_.push_back({s, l, perm});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return b;
}

/// Identities satisfied by every sample, as a subspace of coefficient vectors
/// over the monomial basis.
struct MinedSpace {
  MonomialBasis basis;
  Subspace space;
  std::size_t rows = 0;
  std::size_t samples = 0;
};

struct MiningEngine {
  const MonomialBasis& basis;
  SparseEchelon echelon;
  std::size_t rows = 0;

  explicit MiningEngine(const MonomialBasis& b) : basis(b) {}

  static Element<Scalar> eval(const Algebra<Scalar>& a, const Term& t, const std::vector<std::size_t>& slots) {
    if (t.kind == Term::Kind::Var) return a.basis_vector(slots[std::stoul(t.name)]);
    return multiply(a.product(t.name), eval(a, *t.left, slots), eval(a, *t.right, slots));
  }

  static TermPtr label(const TermPtr& shape, const std::vector<std::string>& labels, std::size_t& next) {
    if (shape->kind == Term::Kind::Var) return shape;
    const std::string& l = labels[next++];
    TermPtr left = label(shape->left, labels, next);
    TermPtr right = label(shape->right, labels, next);
    return prod(l, left, right);
  }

  /// Adds the evaluation rows of one sample; returns false once the mined
  /// space is already zero.
  bool add_sample(const Algebra<Scalar>& a) {
    const std::size_t n = a.dim, d = basis.degree, N = basis.size();
    for (const auto& p : basis.products) a.product(p);
    std::vector<TermPtr> labeled;
    std::vector<std::size_t> key;  // (shape, labels) -> labeled index
    for (std::size_t s = 0; s < basis.shapes_.size(); ++s)
      for (std::size_t l = 0; l < basis.labelings_.size(); ++l) {
        std::size_t next = 0;
        labeled.push_back(label(basis.shapes_[s], basis.labelings_[l], next));
      }
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < d; ++i) tuples *= n;
    // values[tuple][labeled] for slot tuples in base-n order
    std::vector<std::vector<Element<Scalar>>> values(tuples);
    std::vector<std::size_t> slots(d);
    for (std::size_t code = 0; code < tuples; ++code) {
      std::size_t c = code;
      for (std::size_t i = d; i-- > 0;) {
        slots[i] = c % n;
        c /= n;
      }
      values[code].reserve(labeled.size());
      for (const auto& t : labeled) values[code].push_back(eval(a, *t, slots));
    }
    std::vector<std::size_t> vars(d);
    for (std::size_t code = 0; code < tuples; ++code) {
      std::size_t c = code;
      for (std::size_t i = d; i-- > 0;) {
        vars[i] = c % n;
        c /= n;
      }
      std::vector<SparseVector> block(n);
      for (std::size_t col = 0; col < N; ++col) {
        const auto& column = basis.columns_[col];
        std::size_t slot_code = 0;
        for (std::size_t s = 0; s < d; ++s) slot_code = slot_code * n + vars[column.perm[s]];
        const Element<Scalar>& v = values[slot_code][column.shape * basis.labelings_.size() + column.labels];
        for (std::size_t k = 0; k < n; ++k)
          if (!v[k].is_zero()) block[k][col] = v[k];
      }
      for (auto& row : block) {
        ++rows;
        if (!row.empty()) echelon.insert(std::move(row));
        if (echelon.rank() == N) return false;
      }
    }
    return true;
  }

  Subspace result() const {
    const std::size_t N = basis.size();
    Matrix m(std::max<std::size_t>(echelon.rank(), 1), N);
    std::size_t r = 0;
    for (const auto& [pivot, row] : echelon.rows()) {
      for (const auto& [col, c] : row) m(r, col) = c;
      ++r;
    }
    return Subspace::null_space(m);
  }
};

inline MinedSpace mine(const std::vector<Algebra<Scalar>>& samples, std::size_t d,
                       const std::vector<std::string>& products = {"m"}) {
  if (samples.empty()) throw InputError("mining needs at least one sample");
  MinedSpace out{monomial_basis(d, products), {}, 0, samples.size()};
  MiningEngine engine(out.basis);
  for (const auto& a : samples)
    if (!engine.add_sample(a)) break;
  out.rows = engine.rows;
  out.space = engine.result();
  return out;
}

/// Coefficient vector of a multilinear identity of the basis degree; its
/// variables are matched to x1, x2, ... in declaration order.
inline std::optional<Vector> coefficient_vector(const MonomialBasis& b, const IdentityExpr& id) {
  if (!is_multilinear(id) || id.variables.size() != b.degree || !id.parameters().empty()) return std::nullopt;
  std::map<std::string, std::string> ren;
  for (std::size_t i = 0; i < id.variables.size(); ++i) ren[id.variables[i]] = b.variables[i];
  Vector v(b.size());
  for (const auto& t : id.terms) {
    auto idx = b.index_of(*detail::rename_vars(t.term, ren));
    if (!idx) return std::nullopt;
    v[*idx] += t.coeff;
  }
  return v;
}

inline IdentityExpr identity_from(const MonomialBasis& b, const Vector& v) {
  IdentityExpr e;
  e.variables = b.variables;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) e.terms.push_back({v[i], {}, b.terms[i]});
  return e;
}

inline std::vector<IdentityExpr> identities_from(const MinedSpace& m) {
  std::vector<IdentityExpr> out;
  for (const auto& v : m.space.basis()) out.push_back(identity_from(m.basis, v));
  return out;
}

inline bool contains_identity(const MinedSpace& m, const IdentityExpr& id) {
  auto v = coefficient_vector(m.basis, id);
  return v && m.space.contains(*v);
}

struct CrossCheckEntry {
  std::string identity;
  bool survived = true;
  std::optional<std::size_t> failing_sample;
};

struct CrossCheckReport {
  std::vector<CrossCheckEntry> entries;
  std::size_t survivors() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.survived; }));
  }
};

/// Re-checks each identity on samples not used for mining.
inline CrossCheckReport cross_check(const std::vector<IdentityExpr>& ids, const std::vector<Algebra<Scalar>>& fresh) {
  CrossCheckReport rep;
  for (const auto& id : ids) {
    CrossCheckEntry e{to_string(id), true, std::nullopt};
    CheckOptions opt;
    opt.method = is_multilinear(id) ? Method::Basis : Method::Generic;
    for (std::size_t s = 0; s < fresh.size() && e.survived; ++s)
      if (!check_identity(fresh[s], id, opt).passed()) {
        e.survived = false;
        e.failing_sample = s;
      }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

/// Kantor squares of (a, p) for every basis seed plus `extra` seeds with
/// coordinates drawn from [-3, 3] by mt19937_64(seed).
inline std::vector<Algebra<Scalar>> kantor_samples(const Algebra<Scalar>& a, const std::string& p, std::size_t extra = 2,
                                                   std::uint64_t seed = 1) {
  std::vector<Algebra<Scalar>> out;
  for (std::size_t i = 0; i < a.dim; ++i) out.push_back(kantor_square_algebra(a, p, a.basis_vector(i)));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::size_t r = 0; r < extra; ++r) {
    Element<Scalar> u(a.dim);
    for (auto& c : u) c = a.field(coeff(rng));
    out.push_back(kantor_square_algebra(a, p, u));
  }
  return out;
}

}  // namespace kantor

#endif  // KANTOR_MINING_HPP
