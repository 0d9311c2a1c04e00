#ifndef KANTOR_ANALYSIS_HPP
#define KANTOR_ANALYSIS_HPP

#include "kantor/constructions.hpp"
#include "kantor/kantor.hpp"
#include "kantor/registry.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace kantor {

enum class SeriesKind { Nilpotent, Right, Left, Derived };

inline std::string to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::Nilpotent: return "nilpotent";
    case SeriesKind::Right: return "right";
    case SeriesKind::Left: return "left";
    case SeriesKind::Derived: return "derived";
  }
  return "?";
}

inline SeriesKind parse_series_kind(const std::string& s) {
  if (s == "nilpotent") return SeriesKind::Nilpotent;
  if (s == "right") return SeriesKind::Right;
  if (s == "left") return SeriesKind::Left;
  if (s == "derived") return SeriesKind::Derived;
  throw InputError("unknown series kind '" + s + "'");
}

/// Power chain of an algebra. dims[0] is the first term (A itself, or A^(0)
/// for the derived series). For generic tables the dims are ranks of the
/// coefficient span flattened over seed monomials.
struct SeriesReport {
  SeriesKind kind = SeriesKind::Nilpotent;
  std::vector<std::size_t> dims;
  std::optional<std::size_t> index;
  bool stabilized = false;
  bool flattened = false;

  bool terminates() const { return index.has_value(); }
  std::string str() const {
    std::string s = to_string(kind) + " series dims [";
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    s += "]";
    if (index) return s + ", index " + std::to_string(*index);
    return s + (stabilized ? ", stabilizes at a nonzero term" : ", does not terminate within bound");
  }
};

namespace detail {

class MonomialIndex {
 public:
  std::size_t id(const Monomial& m) {
    auto [it, fresh] = ids_.try_emplace(m, ids_.size());
    return it->second;
  }
  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<Monomial, std::size_t, MonomialHash> ids_;
};

template <class F>
void for_each_coefficient(const Scalar& c, F&& f) {
  if (!c.is_zero()) f(Monomial{}, c);
}

template <class F>
void for_each_coefficient(const Poly& p, F&& f) {
  for (const auto& [m, c] : p.terms()) f(m, c);
}

/// F-span of coordinate vectors with polynomial entries, flattened over
/// (coordinate, monomial) keys.
template <class T>
class FlatSpan {
 public:
  explicit FlatSpan(std::size_t n, MonomialIndex* monos) : n_(n), monos_(monos) {}

  SparseVector flatten(const Element<T>& v) const {
    SparseVector out;
    for (std::size_t k = 0; k < v.size(); ++k)
      for_each_coefficient(v[k], [&](const Monomial& m, const Scalar& c) { out[monos_->id(m) * n_ + k] = c; });
    return out;
  }

  bool insert(const Element<T>& v) {
    if (!echelon_.insert(flatten(v))) return false;
    basis_.push_back(v);
    return true;
  }
  bool contains(const Element<T>& v) const { return echelon_.contains(flatten(v)); }
  std::size_t rank() const { return echelon_.rank(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Element<T>>& basis() const { return basis_; }

 private:
  std::size_t n_;
  MonomialIndex* monos_;
  SparseEchelon echelon_;
  std::vector<Element<T>> basis_;
};

template <class T, class R>
FlatSpan<T> flat_product(const MultTable<R>& t, const FlatSpan<T>& a, const FlatSpan<T>& b, MonomialIndex* monos) {
  FlatSpan<T> out(t.dim(), monos);
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      Element<T> v = multiply(t, x, y);
      if (!is_zero(v)) out.insert(v);
    }
  return out;
}

template <class T>
bool same_span(const FlatSpan<T>& a, const FlatSpan<T>& b) {
  if (a.rank() != b.rank()) return false;
  for (const auto& v : b.basis())
    if (!a.contains(v)) return false;
  return true;
}

}  // namespace detail

/// Nilpotent (A^k = sum A^i A^j), right (A^[k+1] = A^[k] A), left or
/// derived series. The chain is followed until it reaches zero, stabilizes
/// (right, left, derived) or passes step max_steps (default n + 1).
template <class R>
SeriesReport power_series(const MultTable<R>& t, SeriesKind kind, std::size_t max_steps = 0) {
  const std::size_t n = t.dim();
  if (max_steps == 0) max_steps = n + 1;
  detail::MonomialIndex monos;
  using Span = detail::FlatSpan<R>;
  SeriesReport rep;
  rep.kind = kind;
  rep.flattened = !std::is_same_v<R, Scalar>;

  Span whole(n, &monos);
  for (std::size_t i = 0; i < n; ++i) {
    Element<R> e(n);
    e[i] = R(1);
    whole.insert(e);
  }
  std::vector<Span> chain{whole};
  rep.dims.push_back(whole.rank());
  if (whole.is_zero()) {
    rep.index = kind == SeriesKind::Derived ? 0 : 1;
    return rep;
  }
  for (std::size_t step = 2; step <= max_steps + 1; ++step) {
    Span next(n, &monos);
    const Span& prev = chain.back();
    switch (kind) {
      case SeriesKind::Nilpotent:
        for (std::size_t i = 1; i < step; ++i) {
          Span part = detail::flat_product(t, chain[i - 1], chain[step - i - 1], &monos);
          for (const auto& v : part.basis()) next.insert(v);
        }
        break;
      case SeriesKind::Right: next = detail::flat_product(t, prev, whole, &monos); break;
      case SeriesKind::Left: next = detail::flat_product(t, whole, prev, &monos); break;
      case SeriesKind::Derived: next = detail::flat_product(t, prev, prev, &monos); break;
    }
    rep.dims.push_back(next.rank());
    if (next.is_zero()) {
      rep.index = kind == SeriesKind::Derived ? step - 1 : step;
      return rep;
    }
    bool same = detail::same_span(prev, next);
    chain.push_back(std::move(next));
    if (same && kind != SeriesKind::Nilpotent && !rep.flattened) {
      rep.stabilized = true;
      return rep;
    }
    if (step > max_steps) break;
  }
  return rep;
}

template <class R>
SeriesReport power_series(const Algebra<R>& a, const std::string& p, SeriesKind kind, std::size_t max_steps = 0) {
  return power_series(a.product(p), kind, max_steps);
}

struct IdealWitness {
  bool left = false;          // true: a * s, false: s * a
  std::size_t member = 0;     // index into the subspace basis
  std::size_t basis = 0;      // algebra basis index
  std::string product;
};

struct IdealReport {
  bool ideal = true;
  std::optional<IdealWitness> witness;
};

/// Checks A*S and S*A inside S. For generic tables every seed monomial
/// coefficient has to lie in S.
template <class R>
IdealReport is_ideal(const MultTable<R>& t, const Subspace& s) {
  const std::size_t n = t.dim();
  if (s.ambient() != n) throw std::invalid_argument("subspace: ambient dimension mismatch");
  auto inside = [&](const Element<R>& v) {
    std::map<std::size_t, Vector> parts;
    detail::MonomialIndex monos;
    for (std::size_t k = 0; k < n; ++k)
      detail::for_each_coefficient(v[k], [&](const Monomial& m, const Scalar& c) {
        auto& part = parts[monos.id(m)];
        if (part.empty()) part.assign(n, Scalar(0));
        part[k] = c;
      });
    for (const auto& [id, part] : parts)
      if (!s.contains(part)) return false;
    return true;
  };
  for (std::size_t m = 0; m < s.dim(); ++m) {
    Element<R> x(s.basis()[m].begin(), s.basis()[m].end());
    for (std::size_t j = 0; j < n; ++j) {
      Element<R> e(n);
      e[j] = R(1);
      for (bool left : {true, false}) {
        Element<R> v = left ? multiply(t, e, x) : multiply(t, x, e);
        if (!inside(v)) return {false, IdealWitness{left, m, j, element_str(v)}};
      }
    }
  }
  return {};
}

/// Elements a with a(xy) = (ax)y + x(ay) for all x, y.
template <class R>
Subspace jacobi_space(const MultTable<R>& t) {
  const std::size_t n = t.dim();
  detail::MonomialIndex monos;
  std::map<std::size_t, SparseVector> rows;
  for (std::size_t l = 0; l < n; ++l) {
    Element<R> a(n);
    a[l] = R(1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Element<R> x(n), y(n);
        x[i] = R(1);
        y[j] = R(1);
        Element<R> r = sub(sub(multiply(t, a, multiply(t, x, y)), multiply(t, multiply(t, a, x), y)),
                           multiply(t, x, multiply(t, a, y)));
        for (std::size_t k = 0; k < n; ++k)
          detail::for_each_coefficient(r[k], [&](const Monomial& m, const Scalar& c) {
            rows[(monos.id(m) * n * n + i * n + j) * n + k][l] = c;
          });
      }
  }
  SparseEchelon ech;
  for (auto& [key, row] : rows) ech.insert(row);
  Matrix m(std::max<std::size_t>(ech.rank(), 1), n);
  std::size_t r = 0;
  for (const auto& [pivot, row] : ech.rows()) {
    for (const auto& [col, c] : row) m(r, col) = c;
    ++r;
  }
  return Subspace::null_space(m);
}

/// Linear maps D (as n x n matrices, D e_b = sum_a D(a,b) e_a) that are
/// derivations of every listed table.
struct DerivationSpace {
  std::size_t n = 0;
  Subspace flat;

  std::size_t dim() const { return flat.dim(); }
  std::vector<Matrix> operators() const {
    std::vector<Matrix> out;
    for (const auto& v : flat.basis()) {
      Matrix d(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) d(a, b) = v[a * n + b];
      out.push_back(std::move(d));
    }
    return out;
  }
};

template <class R>
DerivationSpace derivation_space(const std::vector<const MultTable<R>*>& tables) {
  if (tables.empty()) throw InputError("derivation space needs at least one product");
  const std::size_t n = tables.front()->dim();
  detail::MonomialIndex monos;
  std::map<std::size_t, SparseVector> rows;
  for (std::size_t ti = 0; ti < tables.size(); ++ti) {
    const MultTable<R>& t = *tables[ti];
    if (t.dim() != n) throw InputError("derivation space: products of different dimension");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t col = a * n + b;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            Element<R> r(n);
            for (const auto& [k, c] : t.cell(i, j))
              if (k == b) r[a] = r[a] + c;
            if (i == b) r = sub(r, t.basis_product(a, j));
            if (j == b) r = sub(r, t.basis_product(i, a));
            for (std::size_t k = 0; k < n; ++k)
              detail::for_each_coefficient(r[k], [&](const Monomial& m, const Scalar& c) {
                std::size_t key = (((monos.id(m) * tables.size() + ti) * n + i) * n + j) * n + k;
                rows[key][col] += c;
              });
          }
      }
  }
  SparseEchelon ech;
  for (auto& [key, row] : rows) {
    for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
    if (!row.empty()) ech.insert(row);
  }
  Matrix m(std::max<std::size_t>(ech.rank(), 1), n * n);
  std::size_t r = 0;
  for (const auto& [pivot, row] : ech.rows()) {
    for (const auto& [col, c] : row) m(r, col) = c;
    ++r;
  }
  return {n, Subspace::null_space(m)};
}

template <class R>
DerivationSpace derivation_space(const MultTable<R>& t) {
  return derivation_space<R>(std::vector<const MultTable<R>*>{&t});
}

template <class R>
Element<R> apply_map(const Matrix& m, const Element<R>& v) {
  Element<R> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + v[j] * m(i, j);
  return out;
}

/// True when D(e_i e_j) = D(e_i) e_j + e_i D(e_j) on all basis pairs.
template <class R>
bool is_derivation(const MultTable<R>& t, const Matrix& d) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element<R> x(n), y(n);
      x[i] = R(1);
      y[j] = R(1);
      Element<R> lhs = apply_map(d, multiply(t, x, y));
      Element<R> rhs = add(multiply(t, apply_map(d, x), y), multiply(t, x, apply_map(d, y)));
      if (!is_zero(sub(lhs, rhs))) return false;
    }
  return true;
}

struct AutomorphismReport {
  bool invertible = false;
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

template <class R>
AutomorphismReport check_automorphism(const MultTable<R>& t, const Matrix& phi) {
  const std::size_t n = t.dim();
  if (phi.rows() != n || phi.cols() != n) throw InputError("automorphism matrix has the wrong size");
  AutomorphismReport rep;
  rep.invertible = inverse(phi).has_value();
  if (!rep.invertible) return rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element<R> x(n), y(n);
      x[i] = R(1);
      y[j] = R(1);
      if (!is_zero(sub(apply_map(phi, multiply(t, x, y)), multiply(t, apply_map(phi, x), apply_map(phi, y))))) {
        rep.witness = std::make_pair(i, j);
        return rep;
      }
    }
  rep.holds = true;
  return rep;
}

struct Annihilators {
  Subspace left, right, two_sided;
};

inline Annihilators annihilators(const MultTable<Scalar>& t) {
  const std::size_t n = t.dim();
  Matrix l(n * n, n), r(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : t.cell(i, j)) l(j * n + k, i) = c;
      for (const auto& [k, c] : t.cell(j, i)) r(j * n + k, i) = c;
    }
  Annihilators a{Subspace::null_space(l), Subspace::null_space(r), {}};
  a.two_sided = a.left.intersect(a.right);
  return a;
}

/// Isomorphism-invariant data used to tell algebras apart.
struct Fingerprint {
  std::size_t left_annihilator = 0, right_annihilator = 0, annihilator = 0;
  std::vector<std::size_t> derived_dims;
  bool unital = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string str() const {
    std::string s = "ann(l,r,2)=(" + std::to_string(left_annihilator) + "," + std::to_string(right_annihilator) + "," +
                    std::to_string(annihilator) + ") derived=[";
    for (std::size_t i = 0; i < derived_dims.size(); ++i) s += (i ? "," : "") + std::to_string(derived_dims[i]);
    return s + "] unital=" + (unital ? "yes" : "no");
  }
};

inline Fingerprint fingerprint(const MultTable<Scalar>& t) {
  Annihilators a = annihilators(t);
  return {a.left.dim(), a.right.dim(), a.two_sided.dim(), power_series(t, SeriesKind::Derived).dims,
          find_unit(t).has_value()};
}

struct IsomorphismWitness {
  Matrix map;
  bool verified = false;
  std::optional<std::pair<std::size_t, std::size_t>> failure;
};

/// f(a) = -a u^{-1} from (A, p) onto (A, *_u). Returns nullopt when u is not
/// invertible.
inline std::optional<IsomorphismWitness> skewfield_isomorphism(const Algebra<Scalar>& a, const std::string& p,
                                                               const Element<Scalar>& u) {
  const MultTable<Scalar>& t = a.product(p);
  if (u.size() != a.dim) throw InputError("seed has the wrong dimension");
  if (!check_variety(a, "associative", {}, {{"m", p}}).holds()) throw InputError("algebra is not associative");
  if (!find_unit(t)) throw InputError("algebra has no unit element");
  auto inv = invert_element(t, u);
  if (!inv) return std::nullopt;
  const std::size_t n = a.dim;
  IsomorphismWitness w{Matrix(n, n), false, std::nullopt};
  Matrix r = right_operator(t, *inv);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.map(i, j) = -r(i, j);
  MultTable<Scalar> star = kantor_square(a, p, u);
  for (std::size_t i = 0; i < n && !w.failure; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element<Scalar> lhs = apply_map(w.map, t.basis_product(i, j));
      Element<Scalar> rhs = multiply(star, apply_map(w.map, a.basis_vector(i)), apply_map(w.map, a.basis_vector(j)));
      if (!is_zero(sub(lhs, rhs))) {
        w.failure = std::make_pair(i, j);
        break;
      }
    }
  w.verified = !w.failure && inverse(w.map).has_value();
  return w;
}

template <class T, class R>
Element<T> associator(const MultTable<R>& t, const Element<T>& x, const Element<T>& y, const Element<T>& z) {
  return sub(multiply(t, multiply(t, x, y), z), multiply(t, x, multiply(t, y, z)));
}

struct GTriple {
  std::size_t i1 = 0, i2 = 0, i3 = 0;
  Element<Scalar> nested;     // (e_i1, e_i2, (e_i1, e_i2, e_i3))
  Element<Scalar> reference;  // e_i1^2 e_i2^2 e_i3
  Scalar ratio;               // nested = ratio * reference
  bool proportional = false;
};

struct GTripleReport {
  std::vector<GTriple> triples;
  Scalar stated;  // constant the formula predicts
  bool all_match_stated = true;
  std::set<std::string> ratios;
};

namespace detail {

inline Scalar unit_square(const MultTable<Scalar>& t, std::size_t i) {
  Element<Scalar> v = t.basis_product(i, i);
  for (std::size_t k = 1; k < v.size(); ++k)
    if (!v[k].is_zero()) throw InputError("basis square is not a multiple of the unit");
  return v[0];
}

inline void require_cayley_dickson(const MultTable<Scalar>& t) {
  if (t.dim() != 8) throw InputError("expected an 8-dimensional Cayley-Dickson algebra");
  auto unit = find_unit(t);
  if (!unit) throw InputError("expected a unital algebra with unit e0");
  for (std::size_t k = 0; k < 8; ++k)
    if (!((*unit)[k] == Scalar(k == 0 ? 1 : 0))) throw InputError("expected the unit to be e0");
}

}  // namespace detail

/// Triples of distinct imaginary units where e_i3 is not proportional to
/// e_i1 e_i2 and the associator does not vanish; each one is tested against
/// (e_i1, e_i2, (e_i1, e_i2, e_i3)) = stated * e_i1^2 e_i2^2 e_i3.
inline GTripleReport g_triples(const Algebra<Scalar>& a, const std::string& p = "m", const Scalar& stated = Scalar(2)) {
  const MultTable<Scalar>& t = a.product(p);
  detail::require_cayley_dickson(t);
  GTripleReport rep;
  rep.stated = stated;
  for (std::size_t i1 = 1; i1 < 8; ++i1)
    for (std::size_t i2 = 1; i2 < 8; ++i2)
      for (std::size_t i3 = 1; i3 < 8; ++i3) {
        if (i1 == i2 || i2 == i3 || i1 == i3) continue;
        Element<Scalar> x = a.basis_vector(i1), y = a.basis_vector(i2), z = a.basis_vector(i3);
        Element<Scalar> xy = multiply(t, x, y);
        if (!xy[i3].is_zero()) continue;
        Element<Scalar> as = associator(t, x, y, z);
        if (is_zero(as)) continue;
        GTriple g{i1, i2, i3, associator(t, x, y, as), {}, Scalar(0), false};
        g.reference = scale(z, detail::unit_square(t, i1) * detail::unit_square(t, i2));
        const Scalar& ref = g.reference[i3];
        g.ratio = g.nested[i3] / ref;
        g.proportional = is_zero(sub(g.nested, scale(g.reference, g.ratio)));
        rep.ratios.insert(g.proportional ? g.ratio.str() : "not proportional");
        if (!g.proportional || !(g.ratio == stated)) rep.all_match_stated = false;
        rep.triples.push_back(std::move(g));
      }
  return rep;
}

struct AltSeedSystem {
  /// Rows over the unknowns s_1..s_7 = u_1^2..u_7^2, in reduced echelon form.
  Matrix equations;
  std::size_t rank = 0;
  /// Solutions of the linear system in the squares.
  Subspace solutions;
  /// Every solution has s2 = .. = s5 = 0, s1 = beta*gamma*s7, s6 = -alpha*s7.
  bool pattern_holds = false;
  /// On u = u0 + u7(r1 e1 + r6 e6 + e7) with r1^2 = beta*gamma, r6^2 = -alpha
  /// (rational roots only), the probes vanish exactly when u7 = 0.
  std::optional<bool> probes_force_u7_zero;
  std::vector<std::string> probe_values;
};

namespace detail {

inline std::optional<Scalar> rational_sqrt(const Scalar& s) {
  if (s.modulus() != 0) return std::nullopt;
  BigRational q = s.to_rational();
  auto root = [](const BigInt& v) -> std::optional<BigInt> {
    if (v < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(v);
    if (r * r != v) return std::nullopt;
    return r;
  };
  auto n = root(numerator(q)), d = root(denominator(q));
  if (!n || !d) return std::nullopt;
  return Scalar(BigRational(*n, *d));
}

/// (x, u, (x, u, y)) for the probe pairs x = e1+e2, y = e1 and x = e2+e6, y = e6.
template <class T>
std::vector<Element<T>> alt_probes(const MultTable<Scalar>& t, const Element<T>& u) {
  std::vector<Element<T>> out;
  auto e = [&](std::size_t i) {
    Element<T> v(8);
    v[i] = T(1);
    return v;
  };
  std::vector<std::pair<Element<T>, Element<T>>> probes{{add(e(1), e(2)), e(1)}, {add(e(2), e(6)), e(6)}};
  for (const auto& [x, y] : probes) out.push_back(associator(t, x, u, associator(t, x, u, y)));
  return out;
}

}  // namespace detail

/// Conditions on u = sum u_k e_k for (x, u, (x, u, y)) = 0, assembled from the
/// e_j-coefficients of (e_i, u, (e_i, u, e_j)) with generic u. Each such
/// coefficient must be a linear form in the squares u_k^2.
inline AltSeedSystem alt_seed_system(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                                     Field field = Field::rational()) {
  Algebra<Scalar> a = cayley_dickson(alpha, beta, gamma, field);
  const MultTable<Scalar>& t = a.product("m");
  Element<Poly> u = generic_element(8);
  std::vector<Vector> rows;
  for (std::size_t i = 1; i < 8; ++i)
    for (std::size_t j = 1; j < 8; ++j) {
      Element<Poly> ei(8), ej(8);
      ei[i] = Poly(1);
      ej[j] = Poly(1);
      Poly c = associator(t, ei, u, associator(t, ei, u, ej))[j];
      if (c.is_zero()) continue;
      Vector row(7);
      for (const auto& [m, coeff] : c.terms()) {
        std::size_t var = 0, count = 0;
        for (std::size_t v = 0; v < 8; ++v)
          if (m.exps[v]) {
            var = v;
            ++count;
          }
        if (count != 1 || m.exps[var] != 2 || var == 0) throw std::logic_error("seed system is not linear in squares");
        row[var - 1] = coeff;
      }
      rows.push_back(std::move(row));
    }
  AltSeedSystem sys;
  Subspace rowspace = Subspace::span(7, rows);
  sys.rank = rowspace.dim();
  sys.equations = Matrix::from_rows(rowspace.basis(), 7);
  sys.solutions = Subspace::null_space(sys.equations);
  sys.pattern_holds = true;
  for (const auto& s : sys.solutions.basis()) {
    bool ok = s[1].is_zero() && s[2].is_zero() && s[3].is_zero() && s[4].is_zero() && s[0] == beta * gamma * s[6] &&
              s[5] == -alpha * s[6];
    if (!ok) sys.pattern_holds = false;
  }
  auto r1 = detail::rational_sqrt(beta * gamma), r6 = detail::rational_sqrt(-alpha);
  if (r1 && r6) {
    Element<Poly> fam(8);
    Poly u0 = Poly::variable(0), u7 = Poly::variable(7);
    fam[0] = u0;
    fam[1] = u7 * Poly(*r1);
    fam[6] = u7 * Poly(*r6);
    fam[7] = u7;
    bool all_vanish_at_zero = true, forces = false;
    for (const auto& v : detail::alt_probes(t, fam)) {
      std::string text = "[";
      for (std::size_t k = 0; k < v.size(); ++k) text += (k ? "," : "") + v[k].str(seed_variable_names(8));
      sys.probe_values.push_back(text + "]");
      for (const Poly& c : v) {
        if (c.is_zero()) continue;
        if (!c.substitute({{7, Scalar(0)}}).is_zero()) all_vanish_at_zero = false;
        if (c.terms().size() == 1 && c.terms().front().first.exps[0] == 0) forces = true;
      }
    }
    sys.probes_force_u7_zero = all_vanish_at_zero && forces;
  }
  return sys;
}

/// True when both probe values vanish at the concrete seed u.
inline bool alt_probes_vanish(const Algebra<Scalar>& a, const Element<Scalar>& u, const std::string& p = "m") {
  detail::require_cayley_dickson(a.product(p));
  for (const auto& v : detail::alt_probes(a.product(p), u))
    if (!is_zero(v)) return false;
  return true;
}

struct OperatorVariant {
  std::string name;
  bool holds = false;
};

struct OperatorIdentityReport {
  std::vector<OperatorVariant> variants;
  bool jordan_holds = false;
};

/// Compares [L_w1 L_w2 L_w3 L_w4, R_u R_x] with [L_{xuxu}, R_{ux}] for the
/// orderings uxux / xuxu and the bracketings ((xu)x)u / (xu)(xu), and checks
/// the noncommutative Jordan law of (A, *_u) directly.
inline OperatorIdentityReport operator_identity_check(const Algebra<Scalar>& a, const std::string& p,
                                                      const Element<Scalar>& u, const Element<Scalar>& x) {
  const MultTable<Scalar>& t = a.product(p);
  auto L = [&](const Element<Scalar>& v) { return left_operator(t, v); };
  auto R = [&](const Element<Scalar>& v) { return right_operator(t, v); };
  auto comm = [](const Matrix& f, const Matrix& g) { return f * g - g * f; };
  Element<Scalar> xu = multiply(t, x, u);
  Element<Scalar> left_normed = multiply(t, multiply(t, xu, x), u);
  Element<Scalar> paired = multiply(t, xu, xu);
  Matrix rhs_base = R(multiply(t, u, x));
  Matrix ru_rx = R(u) * R(x);
  std::vector<std::pair<std::string, Matrix>> words{{"LuLxLuLx", L(u) * L(x) * L(u) * L(x)},
                                                    {"LxLuLxLu", L(x) * L(u) * L(x) * L(u)}};
  std::vector<std::pair<std::string, Element<Scalar>>> assoc{{"((xu)x)u", left_normed}, {"(xu)(xu)", paired}};
  OperatorIdentityReport rep;
  for (const auto& [wname, w] : words)
    for (const auto& [aname, v] : assoc)
      rep.variants.push_back({wname + " vs L_" + aname, comm(w, ru_rx) == comm(L(v), rhs_base)});
  Algebra<Scalar> star = kantor_square_algebra(a, p, u);
  rep.jordan_holds = check_variety(star, "noncommutative_jordan").holds();
  return rep;
}

}  // namespace kantor

#endif  // KANTOR_ANALYSIS_HPP
