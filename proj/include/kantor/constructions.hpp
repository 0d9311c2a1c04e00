#ifndef KANTOR_CONSTRUCTIONS_HPP
#define KANTOR_CONSTRUCTIONS_HPP

#include "kantor/algebra.hpp"

#include <array>
#include <string>

namespace kantor {

namespace detail {

inline void require_char_not_two(const Field& f, const char* what) {
  if (f.characteristic() == 2) throw InputError(std::string(what) + " requires characteristic different from 2");
}

inline void require_nonzero(const Scalar& s, const char* what) {
  if (s.is_zero()) throw InputError(std::string(what) + " parameters must be nonzero");
}

inline std::vector<std::string> labels_from(std::initializer_list<const char*> names) {
  return std::vector<std::string>(names.begin(), names.end());
}

}  // namespace detail

/// Octonion-type Cayley-Dickson algebra with basis 1, e1, ..., e7.
inline Algebra<Scalar> cayley_dickson(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                                      Field field = Field::rational()) {
  detail::require_char_not_two(field, "Cayley-Dickson algebra");
  Scalar a = field(alpha), b = field(beta), g = field(gamma);
  detail::require_nonzero(a, "Cayley-Dickson");
  detail::require_nonzero(b, "Cayley-Dickson");
  detail::require_nonzero(g, "Cayley-Dickson");

  // Entry e_i e_j (i, j >= 1) = sign * alpha^A * beta^B * gamma^G * e_k,
  // encoded as {sign, A, B, G, k}.
  struct Cell {
    int sign, pa, pb, pg, k;
  };
  static constexpr std::array<std::array<Cell, 7>, 7> kTable{{
      {{{1, 1, 0, 0, 0}, {1, 0, 0, 0, 3}, {1, 1, 0, 0, 2}, {1, 0, 0, 0, 5}, {1, 1, 0, 0, 4}, {-1, 0, 0, 0, 7}, {-1, 1, 0, 0, 6}}},
      {{{-1, 0, 0, 0, 3}, {1, 0, 1, 0, 0}, {-1, 0, 1, 0, 1}, {1, 0, 0, 0, 6}, {1, 0, 0, 0, 7}, {1, 0, 1, 0, 4}, {1, 0, 1, 0, 5}}},
      {{{-1, 1, 0, 0, 2}, {1, 0, 1, 0, 1}, {-1, 1, 1, 0, 0}, {1, 0, 0, 0, 7}, {1, 1, 0, 0, 6}, {-1, 0, 1, 0, 5}, {-1, 1, 1, 0, 4}}},
      {{{-1, 0, 0, 0, 5}, {-1, 0, 0, 0, 6}, {-1, 0, 0, 0, 7}, {1, 0, 0, 1, 0}, {-1, 0, 0, 1, 1}, {-1, 0, 0, 1, 2}, {-1, 0, 0, 1, 3}}},
      {{{-1, 1, 0, 0, 4}, {-1, 0, 0, 0, 7}, {-1, 1, 0, 0, 6}, {1, 0, 0, 1, 1}, {-1, 1, 0, 1, 0}, {1, 0, 0, 1, 3}, {1, 1, 0, 1, 2}}},
      {{{1, 0, 0, 0, 7}, {-1, 0, 1, 0, 4}, {1, 0, 1, 0, 5}, {1, 0, 0, 1, 2}, {-1, 0, 0, 1, 3}, {-1, 0, 1, 1, 0}, {-1, 0, 1, 1, 1}}},
      {{{1, 1, 0, 0, 6}, {-1, 0, 1, 0, 5}, {1, 1, 1, 0, 4}, {1, 0, 0, 1, 3}, {-1, 1, 0, 1, 2}, {1, 0, 1, 1, 1}, {1, 1, 1, 1, 0}}},
  }};

  Algebra<Scalar> alg(8, field);
  alg.labels = detail::labels_from({"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"});
  auto& m = alg.add_product("m");
  for (std::size_t i = 0; i < 8; ++i) {
    m.set(0, i, i, field(1));
    m.set(i, 0, i, field(1));
  }
  for (std::size_t i = 1; i < 8; ++i)
    for (std::size_t j = 1; j < 8; ++j) {
      const Cell& c = kTable[i - 1][j - 1];
      Scalar v = field(c.sign);
      if (c.pa) v *= a;
      if (c.pb) v *= b;
      if (c.pg) v *= g;
      m.set(i, j, static_cast<std::size_t>(c.k), v);
    }
  return alg;
}

/// Generalized quaternions: basis 1, e1, e2, e3 with e1^2 = alpha, e2^2 = beta, e1 e2 = e3.
inline Algebra<Scalar> generalized_quaternion(const Scalar& alpha, const Scalar& beta, Field field = Field::rational()) {
  detail::require_char_not_two(field, "quaternion algebra");
  Scalar a = field(alpha), b = field(beta);
  detail::require_nonzero(a, "quaternion");
  detail::require_nonzero(b, "quaternion");
  Algebra<Scalar> alg(4, field);
  alg.labels = detail::labels_from({"1", "e1", "e2", "e3"});
  auto& m = alg.add_product("m");
  for (std::size_t i = 0; i < 4; ++i) {
    m.set(0, i, i, field(1));
    m.set(i, 0, i, field(1));
  }
  m.set(1, 1, 0, a);
  m.set(1, 2, 3, field(1));
  m.set(1, 3, 2, a);
  m.set(2, 1, 3, field(-1));
  m.set(2, 2, 0, b);
  m.set(2, 3, 1, -b);
  m.set(3, 1, 2, -a);
  m.set(3, 2, 1, b);
  m.set(3, 3, 0, -(a * b));
  return alg;
}

/// Full matrix algebra M_k with matrix units e_ij at index i*k + j.
inline Algebra<Scalar> matrix_algebra(std::size_t k, Field field = Field::rational()) {
  if (k == 0) throw InputError("matrix algebra order must be positive");
  Algebra<Scalar> alg(k * k, field);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) alg.labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  auto& m = alg.add_product("m");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) m.set(i * k + j, j * k + l, i * k + l, field(1));
  return alg;
}

/// Block-diagonal direct sum; both summands must carry the same product names.
inline Algebra<Scalar> direct_sum(const Algebra<Scalar>& a, const Algebra<Scalar>& b) {
  if (!(a.field == b.field)) throw InputError("direct sum: field mismatch");
  std::size_t n = a.dim + b.dim;
  Algebra<Scalar> out(n, a.field);
  for (std::size_t i = 0; i < a.dim; ++i) out.labels.push_back(a.label(i) + "_1");
  for (std::size_t i = 0; i < b.dim; ++i) out.labels.push_back(b.label(i) + "_2");
  for (const auto& [name, ta] : a.products) {
    auto it = b.products.find(name);
    if (it == b.products.end()) throw InputError("direct sum: product '" + name + "' missing from second summand");
    auto& t = out.add_product(name);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        for (const auto& [k, c] : ta.cell(i, j)) t.set(i, j, k, c);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j)
        for (const auto& [k, c] : it->second.cell(i, j)) t.set(a.dim + i, a.dim + j, a.dim + k, c);
  }
  if (out.products.size() != b.products.size()) throw InputError("direct sum: product names differ");
  return out;
}

namespace detail {

inline std::string power_label(std::size_t e) {
  if (e == 0) return "1";
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

}  // namespace detail

/// t F[t] / (t^(k+1)) with basis t, ..., t^k, or F[t] / (t^(k+1)) with basis 1, t, ..., t^k when unital.
inline Algebra<Scalar> truncated_polynomial(std::size_t k, bool unital, Field field = Field::rational()) {
  if (k == 0) throw InputError("truncation degree must be positive");
  std::size_t lo = unital ? 0 : 1;
  std::size_t n = k - lo + 1;
  Algebra<Scalar> alg(n, field);
  for (std::size_t e = lo; e <= k; ++e) alg.labels.push_back(detail::power_label(e));
  auto& m = alg.add_product("m");
  for (std::size_t i = lo; i <= k; ++i)
    for (std::size_t j = lo; j <= k; ++j)
      if (i + j <= k) m.set(i - lo, j - lo, i + j - lo, field(1));
  return alg;
}

/// Five-dimensional right alternative algebra on a, b, c, d, e.
inline Algebra<Scalar> dorofeev(Field field = Field::rational()) {
  Algebra<Scalar> alg(5, field);
  alg.labels = detail::labels_from({"a", "b", "c", "d", "e"});
  enum { A, B, C, D, E };
  auto& m = alg.add_product("m");
  m.set(A, B, C, field(-1));
  m.set(B, A, C, field(1));
  m.set(A, E, C, field(-1));
  m.set(E, A, C, field(1));
  m.set(D, B, C, field(-1));
  m.set(B, D, C, field(1));
  m.set(A, C, D, field(1));
  m.set(B, C, E, field(1));
  return alg;
}

/// Product x.y = lambda xy + (1 - lambda) yx.
inline Algebra<Scalar> lambda_mutation(const Algebra<Scalar>& a, const std::string& p, const Scalar& lambda) {
  Algebra<Scalar> out = a;
  Scalar l = a.field(lambda);
  const auto& t = a.product(p);
  out.product(p) = t.scaled(l) + t.transposed().scaled(a.field(1) - l);
  return out;
}

/// Left Zinbiel algebra t^i o t^j = t^(i+j+1) / (i+1) on t, ..., t^k.
inline Algebra<Scalar> zinbiel_truncated(std::size_t k, Field field = Field::rational()) {
  if (k == 0) throw InputError("truncation degree must be positive");
  Algebra<Scalar> alg(k, field);
  for (std::size_t e = 1; e <= k; ++e) alg.labels.push_back(detail::power_label(e));
  auto& m = alg.add_product("m");
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j)
      if (i + j + 1 <= k)
        m.set(i - 1, j - 1, i + j, field(Scalar::fraction(1, static_cast<long long>(i + 1))));
  return alg;
}

namespace detail {

/// a o b = D(a) b on F[t] / (t^(k+1)) with the Euler derivation D = t d/dt
/// (d/dt itself does not preserve the ideal (t^(k+1))).
inline MultTable<Scalar> derivation_product(std::size_t k, const Field& field) {
  MultTable<Scalar> t(k + 1);
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 0; i + j <= k; ++j) t.set(i, j, i + j, field(static_cast<long long>(i)));
  return t;
}

}  // namespace detail

/// Left Novikov algebra a o b = D(a) b on unital truncated polynomials.
inline Algebra<Scalar> derivation_left_novikov(std::size_t k, Field field = Field::rational()) {
  Algebra<Scalar> alg = truncated_polynomial(k, true, field);
  alg.product("m") = detail::derivation_product(k, field);
  return alg;
}

/// Commutative product "m" together with o = D(a) b.
inline Algebra<Scalar> left_novikov_poisson(std::size_t k, Field field = Field::rational()) {
  Algebra<Scalar> alg = truncated_polynomial(k, true, field);
  alg.products.emplace("o", detail::derivation_product(k, field));
  return alg;
}

/// Mirror of left_novikov_poisson: o = a D(b).
inline Algebra<Scalar> right_novikov_poisson(std::size_t k, Field field = Field::rational()) {
  Algebra<Scalar> alg = left_novikov_poisson(k, field);
  alg.product("o") = alg.product("o").transposed();
  return alg;
}

/// F[x, y] / (x, y)^3 with bracket {f, g} = (f_x g_y - f_y g_x) x^2.
inline Algebra<Scalar> poisson_small(Field field = Field::rational()) {
  static constexpr std::array<std::array<int, 2>, 6> kExp{{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};
  auto index = [](int a, int b) -> int {
    for (int i = 0; i < 6; ++i)
      if (kExp[i][0] == a && kExp[i][1] == b) return i;
    return -1;
  };
  Algebra<Scalar> alg(6, field);
  alg.labels = detail::labels_from({"1", "x", "y", "x^2", "xy", "y^2"});
  auto& m = alg.add_product("m");
  auto& br = alg.add_product("b");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      int a = kExp[i][0], b = kExp[i][1], c = kExp[j][0], d = kExp[j][1];
      if (int k = index(a + c, b + d); k >= 0) m.set(i, j, static_cast<std::size_t>(k), field(1));
      int coeff = a * d - b * c;
      if (coeff != 0 && b + d >= 1)
        if (int k = index(a + c + 1, b + d - 1); k >= 0) br.set(i, j, static_cast<std::size_t>(k), field(coeff));
    }
  return alg;
}

/// Cross product on F^3: e1 e2 = e3, e2 e3 = e1, e3 e1 = e2.
inline Algebra<Scalar> lie_cross(Field field = Field::rational()) {
  Algebra<Scalar> alg(3, field);
  alg.labels = detail::labels_from({"e1", "e2", "e3"});
  auto& m = alg.add_product("m");
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    m.set(i, j, k, field(1));
    m.set(j, i, k, field(-1));
  }
  return alg;
}

/// Two-dimensional left Leibniz algebra e1 e1 = e2.
inline Algebra<Scalar> leibniz2(Field field = Field::rational()) {
  Algebra<Scalar> alg(2, field);
  alg.labels = detail::labels_from({"e1", "e2"});
  alg.add_product("m").set(0, 0, 1, field(1));
  return alg;
}

inline Algebra<Scalar> zero_algebra(std::size_t n, Field field = Field::rational()) {
  if (n == 0) throw InputError("dimension must be positive");
  Algebra<Scalar> alg(n, field);
  alg.add_product("m");
  return alg;
}

/// Two-dimensional non-abelian Lie algebra [e1, e2] = e2.
inline Algebra<Scalar> lie_affine2(Field field = Field::rational()) {
  Algebra<Scalar> alg(2, field);
  alg.labels = detail::labels_from({"e1", "e2"});
  auto& m = alg.add_product("m");
  m.set(0, 1, 1, field(1));
  m.set(1, 0, 1, field(-1));
  return alg;
}

/// Commutator algebra [x, y] = xy - yx of product p.
inline Algebra<Scalar> commutator_algebra(const Algebra<Scalar>& a, const std::string& p = "m") {
  Algebra<Scalar> out(a.dim, a.field);
  out.labels = a.labels;
  const auto& t = a.product(p);
  out.products.emplace("m", t - t.transposed());
  return out;
}

/// Commutative tridendriform algebra on t, ..., t^k: m is the truncated
/// polynomial product and p(a, b) = a * integral(b), so t^i p t^j = t^(i+j+1) / (j+1).
inline Algebra<Scalar> comm_tridendriform_truncated(std::size_t k, Field field = Field::rational()) {
  Algebra<Scalar> alg = truncated_polynomial(k, false, field);
  auto& prec = alg.add_product("p");
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j)
      if (i + j + 1 <= k) prec.set(i - 1, j - 1, i + j, field(Scalar::fraction(1, static_cast<long long>(j + 1))));
  return alg;
}

}  // namespace kantor

#endif  // KANTOR_CONSTRUCTIONS_HPP
