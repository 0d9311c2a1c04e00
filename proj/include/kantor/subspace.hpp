#ifndef KANTOR_SUBSPACE_HPP
#define KANTOR_SUBSPACE_HPP

#include "kantor/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace kantor {

using Vector = std::vector<Scalar>;

/// Subspace of F^n stored as the nonzero rows of a reduced row-echelon basis,
/// so two subspaces are equal iff their stored bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix m = Matrix::from_rows(vectors, ambient);
    auto [r, pivots] = rref(std::move(m));
    for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(r.row(i));
    s.pivots_ = std::move(pivots);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ambient; ++i) {
      Vector v(ambient);
      v[i] = Scalar(1);
      rows.push_back(std::move(v));
    }
    return span(ambient, rows);
  }

  static Subspace null_space(const Matrix& m) { return span(m.cols(), nullspace_basis(m)); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: ambient dimension mismatch");
    Vector r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      Scalar c = r[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!basis_[i][j].is_zero()) r[j] -= c * basis_[i][j];
    }
    for (const auto& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    check(other);
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check(b);
    std::vector<Vector> rows = a.basis_;
    rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
    return span(a.ambient_, rows);
  }

  Subspace intersect(const Subspace& b) const {
    check(b);
    std::size_t s = dim(), t = b.dim();
    if (s == 0 || t == 0) return Subspace(ambient_);
    Matrix m(ambient_, s + t);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < ambient_; ++j) m(j, i) = basis_[i][j];
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < ambient_; ++j) m(j, s + i) = -b.basis_[i][j];
    std::vector<Vector> rows;
    for (const auto& coeffs : nullspace_basis(m)) {
      Vector v(ambient_);
      for (std::size_t i = 0; i < s; ++i)
        if (!coeffs[i].is_zero())
          for (std::size_t j = 0; j < ambient_; ++j) v[j] += coeffs[i] * basis_[i][j];
      rows.push_back(std::move(v));
    }
    return span(ambient_, rows);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.basis_.size() != b.basis_.size()) return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
      for (std::size_t j = 0; j < a.ambient_; ++j)
        if (!(a.basis_[i][j] == b.basis_[i][j])) return false;
    return true;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < ambient_; ++j) s += (j ? "," : "") + basis_[i][j].str();
      s += "]";
    }
    return s + "]";
  }

 private:
  void check(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("subspace: ambient dimension mismatch");
  }

  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

using SparseVector = std::map<std::size_t, Scalar>;

/// Incremental row echelon form over sparse vectors with arbitrary integer
/// column keys. Each stored row has leading coefficient 1 at its pivot.
class SparseEchelon {
 public:
  /// Reduces `v` against the stored rows; the remainder is zero iff v lies in
  /// their span.
  SparseVector reduce(SparseVector v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      Scalar c = it->second;
      for (const auto& [k, x] : row) {
        Scalar& slot = v[k];
        slot -= c * x;
        if (slot.is_zero()) v.erase(k);
      }
    }
    return v;
  }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Scalar inv = v.begin()->second.inverse();
    for (auto& [k, x] : v) x *= inv;
    std::size_t pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseVector> rows_;
};

}  // namespace kantor

#endif  // KANTOR_SUBSPACE_HPP
