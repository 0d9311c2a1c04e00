#ifndef KANTOR_ALGEBRA_HPP
#define KANTOR_ALGEBRA_HPP

#include "kantor/poly.hpp"
#include "kantor/subspace.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kantor {

template <class R>
using Element = std::vector<R>;

/// Accumulates sums of products in the ring T. Specialized for Poly so that
/// long sums avoid repeated merges.
template <class T>
struct Accumulator {
  T sum{};
  void add(const T& a) { sum += a; }
  void add_product(const T& a, const Scalar& c) { sum += a * c; }
  T finish() { return std::move(sum); }
};

template <>
struct Accumulator<Poly> {
  PolyAccumulator acc;
  void add(const Poly& a) { acc.add(a); }
  void add_product(const Poly& a, const Scalar& c) { acc.add_scaled(a, c); }
  void add_product(const Poly& a, const Poly& c) {
    if (c.is_constant()) {
      acc.add_scaled(a, c.constant_term());
    } else {
      acc.add_product(a, c);
    }
  }
  Poly finish() { return acc.finish(); }
};

/// Structure constants e_i e_j = sum_k c[i][j][k] e_k, stored sparsely per
/// cell (i, j) with entries sorted by k.
template <class R>
class MultTable {
 public:
  using Entry = std::pair<std::uint32_t, R>;

  MultTable() = default;
  explicit MultTable(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t dim() const { return n_; }
  const std::vector<Entry>& cell(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  R get(std::size_t i, std::size_t j, std::size_t k) const {
    check(i, j, k);
    for (const auto& [kk, c] : cell(i, j))
      if (kk == k) return c;
    return R{};
  }

  void set(std::size_t i, std::size_t j, std::size_t k, const R& value) {
    check(i, j, k);
    auto& c = cells_[i * n_ + j];
    auto it = std::lower_bound(c.begin(), c.end(), k, [](const Entry& e, std::size_t key) { return e.first < key; });
    if (it != c.end() && it->first == k) {
      if (value.is_zero()) {
        c.erase(it);
      } else {
        it->second = value;
      }
    } else if (!value.is_zero()) {
      c.insert(it, Entry(static_cast<std::uint32_t>(k), value));
    }
  }

  void add(std::size_t i, std::size_t j, std::size_t k, const R& value) { set(i, j, k, get(i, j, k) + value); }

  /// Product of basis vectors as a coordinate vector.
  Element<R> basis_product(std::size_t i, std::size_t j) const {
    Element<R> v(n_);
    for (const auto& [k, c] : cell(i, j)) v[k] = c;
    return v;
  }

  void set_product(std::size_t i, std::size_t j, const Element<R>& v) {
    cells_[i * n_ + j].clear();
    for (std::size_t k = 0; k < n_; ++k) set(i, j, k, v[k]);
  }

  bool is_zero() const {
    for (const auto& c : cells_)
      if (!c.empty()) return false;
    return true;
  }

  std::size_t nonzero_count() const {
    std::size_t s = 0;
    for (const auto& c : cells_) s += c.size();
    return s;
  }

  template <class S, class F>
  MultTable<S> map(F&& f) const {
    MultTable<S> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& [k, c] : cell(i, j)) out.set(i, j, k, f(c));
    return out;
  }

  /// Swaps the factor order: the result has c'[i][j][k] = c[j][i][k].
  MultTable transposed() const {
    MultTable out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out.cells_[j * n_ + i] = cells_[i * n_ + j];
    return out;
  }

  friend MultTable operator+(const MultTable& a, const MultTable& b) {
    MultTable out = a;
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j)
        for (const auto& [k, c] : b.cell(i, j)) out.add(i, j, k, c);
    return out;
  }
  friend MultTable operator-(const MultTable& a, const MultTable& b) {
    MultTable out = a;
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j)
        for (const auto& [k, c] : b.cell(i, j)) out.add(i, j, k, -c);
    return out;
  }
  MultTable scaled(const Scalar& s) const {
    return map<R>([&](const R& c) { return c * s; });
  }

  friend bool operator==(const MultTable& a, const MultTable& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.cells_.size(); ++i) {
      const auto &x = a.cells_[i], &y = b.cells_[i];
      if (x.size() != y.size()) return false;
      for (std::size_t t = 0; t < x.size(); ++t)
        if (x[t].first != y[t].first || !(x[t].second == y[t].second)) return false;
    }
    return true;
  }

 private:
  void check(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= n_ || j >= n_ || k >= n_) throw std::out_of_range("structure constant index out of range");
  }

  std::size_t n_ = 0;
  std::vector<std::vector<Entry>> cells_;
};

/// Finite-dimensional algebra with one or more named bilinear products.
template <class R>
struct Algebra {
  std::size_t dim = 0;
  Field field;
  std::map<std::string, MultTable<R>> products;
  std::vector<std::string> labels;

  Algebra() = default;
  Algebra(std::size_t n, Field f) : dim(n), field(f) {}

  const MultTable<R>& product(const std::string& name) const {
    auto it = products.find(name);
    if (it == products.end()) throw InputError("unknown product '" + name + "'");
    return it->second;
  }
  MultTable<R>& product(const std::string& name) {
    auto it = products.find(name);
    if (it == products.end()) throw InputError("unknown product '" + name + "'");
    return it->second;
  }
  MultTable<R>& add_product(const std::string& name) {
    return products.try_emplace(name, MultTable<R>(dim)).first->second;
  }

  std::string default_product() const {
    if (products.empty()) throw InputError("algebra has no products");
    return products.begin()->first;
  }

  std::string label(std::size_t i) const { return i < labels.size() ? labels[i] : "e" + std::to_string(i); }

  /// Basis index of a label (or of "e<i>").
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < dim; ++i)
      if (label(i) == name) return i;
    for (std::size_t i = 0; i < dim; ++i)
      if ("e" + std::to_string(i) == name) return i;
    throw InputError("unknown basis label '" + name + "'");
  }

  Element<Scalar> basis_vector(std::size_t i) const {
    Element<Scalar> v(dim);
    v.at(i) = field(1);
    return v;
  }
};

inline Algebra<Poly> to_poly(const Algebra<Scalar>& a) {
  Algebra<Poly> out(a.dim, a.field);
  out.labels = a.labels;
  for (const auto& [name, t] : a.products) out.products.emplace(name, t.template map<Poly>([](const Scalar& c) { return Poly(c); }));
  return out;
}

inline Element<Poly> to_poly(const Element<Scalar>& v) { return Element<Poly>(v.begin(), v.end()); }

/// Bilinear extension of a structure-constant table.
template <class T, class R>
Element<T> multiply(const MultTable<R>& t, const Element<T>& x, const Element<T>& y) {
  const std::size_t n = t.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("element dimension mismatch");
  std::vector<Accumulator<T>> acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& cell = t.cell(i, j);
      if (cell.empty()) continue;
      T xy = x[i] * y[j];
      for (const auto& [k, c] : cell) acc[k].add_product(xy, c);
    }
  }
  Element<T> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = acc[k].finish();
  return out;
}

template <class T, class R>
Element<T> multiply(const Algebra<R>& a, const std::string& p, const Element<T>& x, const Element<T>& y) {
  return multiply(a.product(p), x, y);
}

template <class T>
Element<T> add(const Element<T>& a, const Element<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("element dimension mismatch");
  Element<T> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class T>
Element<T> sub(const Element<T>& a, const Element<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("element dimension mismatch");
  Element<T> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class T>
Element<T> scale(const Element<T>& a, const Scalar& s) {
  Element<T> r = a;
  for (auto& x : r) x = x * s;
  return r;
}

template <class T>
bool is_zero(const Element<T>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Matrix of y -> x y; column k is x e_k.
template <class T, class R>
LinearOperator<T> left_operator(const MultTable<R>& t, const Element<T>& x) {
  const std::size_t n = t.dim();
  LinearOperator<T> m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Element<T> ek(n);
    ek[k] = T(1);
    m.set_column(k, multiply(t, x, ek));
  }
  return m;
}

/// Matrix of y -> y x; column k is e_k x.
template <class T, class R>
LinearOperator<T> right_operator(const MultTable<R>& t, const Element<T>& x) {
  const std::size_t n = t.dim();
  LinearOperator<T> m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Element<T> ek(n);
    ek[k] = T(1);
    m.set_column(k, multiply(t, ek, x));
  }
  return m;
}

/// span{ u w : u in basis(U), w in basis(W) }.
inline Subspace subspace_product(const MultTable<Scalar>& t, const Subspace& u, const Subspace& w) {
  if (u.ambient() != t.dim() || w.ambient() != t.dim()) throw std::invalid_argument("subspace: ambient dimension mismatch");
  std::vector<Vector> rows;
  for (const auto& a : u.basis())
    for (const auto& b : w.basis()) {
      Vector v = multiply(t, a, b);
      if (!is_zero(v)) rows.push_back(std::move(v));
    }
  return Subspace::span(t.dim(), rows);
}

/// Two-sided unit, found by solving e e_j = e_j = e_j e for all j.
inline std::optional<Element<Scalar>> find_unit(const MultTable<Scalar>& t) {
  const std::size_t n = t.dim();
  Matrix m(2 * n * n, n);
  Vector rhs(2 * n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t r1 = j * n + k, r2 = n * n + j * n + k;
      for (std::size_t i = 0; i < n; ++i) {
        m(r1, i) = t.get(i, j, k);
        m(r2, i) = t.get(j, i, k);
      }
      if (j == k) rhs[r1] = rhs[r2] = Scalar(1);
    }
  return solve(m, rhs);
}

/// y with x y = y x = 1, or nullopt when x is not invertible.
inline std::optional<Element<Scalar>> invert_element(const MultTable<Scalar>& t, const Element<Scalar>& x) {
  auto unit = find_unit(t);
  if (!unit) throw InputError("algebra has no unit element");
  const std::size_t n = t.dim();
  Matrix l = left_operator(t, x), r = right_operator(t, x);
  Matrix m(2 * n, n);
  Vector rhs(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = l(i, j);
      m(n + i, j) = r(i, j);
    }
    rhs[i] = rhs[n + i] = (*unit)[i];
  }
  return solve(m, rhs);
}

template <class T>
std::string element_str(const Element<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

/// Human-readable linear combination, e.g. "-e3 + 1/2*e5".
inline std::string element_expr(const Element<Scalar>& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string name = i < labels.size() ? labels[i] : "e" + std::to_string(i);
    std::string c = v[i].short_str();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    s += (c == "1" ? "" : c + "*") + name;
  }
  return s.empty() ? "0" : s;
}

}  // namespace kantor

#endif  // KANTOR_ALGEBRA_HPP
