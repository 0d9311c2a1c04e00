#ifndef KANTOR_KANTOR_HPP
#define KANTOR_KANTOR_HPP

#include "kantor/algebra.hpp"

#include <string>

namespace kantor {

/// Element whose coordinates are the indeterminates first_var, ..., first_var + n - 1.
inline Element<Poly> generic_element(std::size_t n, std::size_t first_var = 0) {
  Element<Poly> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Poly::variable(first_var + i);
  return v;
}

/// x * y = A(u, B(x, y)) - B(A(u, x), y) - B(x, A(u, y)) on basis pairs.
template <class T, class R>
MultTable<T> kantor_product(const MultTable<R>& a, const MultTable<R>& b, const Element<T>& u) {
  const std::size_t n = a.dim();
  if (b.dim() != n || u.size() != n) throw std::invalid_argument("kantor product: dimension mismatch");
  LinearOperator<T> lu = left_operator(a, u);
  std::vector<Element<T>> lu_cols(n);
  for (std::size_t i = 0; i < n; ++i) lu_cols[i] = lu.column(i);

  MultTable<T> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Accumulator<T>> acc(n);
      for (const auto& [m, c] : b.cell(i, j))
        for (std::size_t k = 0; k < n; ++k)
          if (!lu(k, m).is_zero()) acc[k].add_product(lu(k, m), c);
      for (std::size_t s = 0; s < n; ++s) {
        const T& left = lu_cols[i][s];
        if (!left.is_zero())
          for (const auto& [k, c] : b.cell(s, j)) acc[k].add_product(-left, c);
        const T& right = lu_cols[j][s];
        if (!right.is_zero())
          for (const auto& [k, c] : b.cell(i, s)) acc[k].add_product(-right, c);
      }
      for (std::size_t k = 0; k < n; ++k) {
        T v = acc[k].finish();
        if (!v.is_zero()) out.set(i, j, k, v);
      }
    }
  return out;
}

template <class T, class R>
MultTable<T> kantor_product(const Algebra<R>& alg, const std::string& pa, const std::string& pb, const Element<T>& u) {
  if (u.size() != alg.dim) throw InputError("seed has " + std::to_string(u.size()) + " coordinates, expected " + std::to_string(alg.dim));
  return kantor_product(alg.product(pa), alg.product(pb), u);
}

template <class T, class R>
MultTable<T> kantor_square(const Algebra<R>& alg, const std::string& p, const Element<T>& u) {
  return kantor_product(alg, p, p, u);
}

/// (A, *_u) as a standalone single-product algebra named `out_name`.
inline Algebra<Scalar> kantor_square_algebra(const Algebra<Scalar>& alg, const std::string& p, const Element<Scalar>& u,
                                             const std::string& out_name = "m") {
  Algebra<Scalar> out(alg.dim, alg.field);
  out.labels = alg.labels;
  out.products.emplace(out_name, kantor_square(alg, p, u));
  return out;
}

inline Algebra<Scalar> kantor_square_algebra(const Algebra<Scalar>&, const std::string&, const Element<Poly>&,
                                             const std::string& = "m") {
  throw InputError("kantor_square_algebra needs a seed with scalar coordinates");
}

/// Kantor product packaged as an algebra over polynomial coefficients.
template <class T, class R>
Algebra<T> kantor_product_algebra(const Algebra<R>& alg, const std::string& pa, const std::string& pb, const Element<T>& u,
                                  const std::string& out_name = "m") {
  Algebra<T> out(alg.dim, alg.field);
  out.labels = alg.labels;
  out.products.emplace(out_name, kantor_product(alg, pa, pb, u));
  return out;
}

}  // namespace kantor

#endif  // KANTOR_KANTOR_HPP
