#ifndef KANTOR_POLY_HPP
#define KANTOR_POLY_HPP

#include "kantor/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kantor {

inline constexpr std::size_t kMaxVariables = 64;

/// Exponent vector over at most kMaxVariables indeterminates.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exps{};
  std::uint16_t degree = 0;

  static Monomial variable(std::size_t index, unsigned power = 1) {
    if (index >= kMaxVariables) throw std::out_of_range("polynomial variable index out of range");
    Monomial m;
    m.exps[index] = static_cast<std::uint8_t>(power);
    m.degree = static_cast<std::uint16_t>(power);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = unsigned(a.exps[i]) + b.exps[i];
      if (e > 255) throw std::overflow_error("monomial exponent overflow");
      r.exps[i] = static_cast<std::uint8_t>(e);
    }
    r.degree = static_cast<std::uint16_t>(a.degree + b.degree);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.exps == b.exps;
  }

  /// Graded-lexicographic order, x0 > x1 > ...; true when a precedes b.
  friend bool grlex_before(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    return std::memcmp(a.exps.data(), b.exps.data(), kMaxVariables) > 0;
  }

  std::size_t variable_span() const {
    for (std::size_t i = kMaxVariables; i > 0; --i)
      if (exps[i - 1]) return i;
    return 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    const auto* p = m.exps.data();
    for (std::size_t i = 0; i < kMaxVariables; i += 8) {
      std::uint64_t w;
      std::memcpy(&w, p + i, 8);
      h = (h ^ w) * 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

class Poly;

/// Hash-map accumulator used for sums of many products.
class PolyAccumulator {
 public:
  void add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
  }
  inline void add(const Poly& p);
  inline void add_scaled(const Poly& p, const Scalar& s);
  inline void add_product(const Poly& a, const Poly& b);
  inline Poly finish();

 private:
  std::unordered_map<Monomial, Scalar, MonomialHash> terms_;
};

/// Sparse polynomial with exact coefficients. Terms are kept in descending
/// graded-lexicographic order with no zero coefficients, so equality is
/// structural.
class Poly {
 public:
  using Term = std::pair<Monomial, Scalar>;

  Poly() = default;
  Poly(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
  }
  Poly(int c) : Poly(Scalar(c)) {}
  Poly(long long c) : Poly(Scalar(c)) {}

  static Poly variable(std::size_t index) {
    Poly p;
    p.terms_.emplace_back(Monomial::variable(index), Scalar(1));
    return p;
  }

  static Poly from_terms(std::vector<Term> terms) {
    PolyAccumulator acc;
    for (auto& [m, c] : terms) acc.add(m, c);
    return acc.finish();
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree == 0); }
  Scalar constant_term() const {
    if (!terms_.empty() && terms_.back().first.degree == 0) return terms_.back().second;
    return Scalar();
  }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree; }

  /// One past the highest variable index that occurs.
  std::size_t variable_span() const {
    std::size_t s = 0;
    for (const auto& t : terms_) s = std::max(s, t.first.variable_span());
    return s;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.is_constant()) return b.scaled(a.terms_[0].second);
    if (b.is_constant()) return a.scaled(b.terms_[0].second);
    PolyAccumulator acc;
    acc.add_product(a, b);
    return acc.finish();
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Scalar& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& t : r.terms_) t.second *= s;
    std::erase_if(r.terms_, [](const Term& t) { return t.second.is_zero(); });
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }

  /// Evaluates at a point; variables beyond `values` must not occur.
  Scalar evaluate(std::span<const Scalar> values) const {
    Scalar sum;
    for (const auto& [m, c] : terms_) {
      Scalar v = c;
      for (std::size_t i = 0; i < m.variable_span(); ++i) {
        if (!m.exps[i]) continue;
        if (i >= values.size()) throw std::out_of_range("evaluation point too short");
        for (unsigned e = 0; e < m.exps[i]; ++e) v *= values[i];
      }
      sum += v;
    }
    return sum;
  }

  /// Substitutes only the variables listed in `values` (index -> value).
  Poly substitute(const std::vector<std::pair<std::size_t, Scalar>>& values) const {
    PolyAccumulator acc;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      Scalar v = c;
      for (const auto& [idx, val] : values) {
        for (unsigned e = 0; e < m.exps[idx]; ++e) v *= val;
        rest.degree = static_cast<std::uint16_t>(rest.degree - rest.exps[idx]);
        rest.exps[idx] = 0;
      }
      acc.add(rest, v);
    }
    return acc.finish();
  }

  /// Renders as e.g. "3*u0^2*u1 - u2 + 1/2". `names[i]` names variable i;
  /// missing names fall back to "v<i>".
  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Scalar mag = c;
      bool negative = false;
      if (c.modulus() == 0 && c.to_rational() < 0) {
        negative = true;
        mag = -c;
      }
      out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < m.variable_span(); ++i) {
        if (!m.exps[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : "v" + std::to_string(i);
        if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
      }
      if (mono.empty()) {
        out += mag.short_str();
      } else {
        if (!mag.is_one()) out += mag.short_str() + "*";
        out += mono;
      }
    }
    return out;
  }

  /// Parses the output of str(). Variable names are looked up in `names`;
  /// coefficients are mapped into `field`.
  static Poly parse(std::string_view text, const std::vector<std::string>& names, const Field& field) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InputError("empty polynomial");
    PolyAccumulator acc;
    std::size_t pos = 0;
    while (pos < s.size()) {
      bool negative = false;
      if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
      } else if (pos != 0) {
        throw InputError("expected '+' or '-' in polynomial '" + s + "'");
      }
      std::size_t end = pos;
      while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
      std::string_view term(s.data() + pos, end - pos);
      if (term.empty()) throw InputError("empty term in polynomial '" + s + "'");
      Scalar coeff(1);
      Monomial mono;
      std::size_t fpos = 0;
      while (fpos <= term.size()) {
        std::size_t fend = term.find('*', fpos);
        if (fend == std::string_view::npos) fend = term.size();
        std::string_view factor = term.substr(fpos, fend - fpos);
        if (factor.empty()) throw InputError("empty factor in polynomial '" + s + "'");
        if (std::isdigit(static_cast<unsigned char>(factor.front()))) {
          coeff *= field.parse(factor);
        } else {
          std::string_view name = factor;
          unsigned power = 1;
          if (auto caret = factor.find('^'); caret != std::string_view::npos) {
            name = factor.substr(0, caret);
            power = static_cast<unsigned>(std::stoul(std::string(factor.substr(caret + 1))));
          }
          auto it = std::find(names.begin(), names.end(), name);
          if (it == names.end()) throw InputError("unknown polynomial variable '" + std::string(name) + "'");
          mono = mono * Monomial::variable(static_cast<std::size_t>(it - names.begin()), power);
        }
        fpos = fend + 1;
      }
      acc.add(mono, negative ? -field(coeff) : field(coeff));
      pos = end;
    }
    return acc.finish();
  }

 private:
  friend class PolyAccumulator;

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && grlex_before(a.terms_[i].first, b.terms_[j].first))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_before(b.terms_[j].first, a.terms_[i].first)) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        Scalar c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, c);
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline void PolyAccumulator::add(const Poly& p) {
  for (const auto& [m, c] : p.terms_) add(m, c);
}

inline void PolyAccumulator::add_scaled(const Poly& p, const Scalar& s) {
  if (s.is_zero()) return;
  for (const auto& [m, c] : p.terms_) add(m, c * s);
}

inline void PolyAccumulator::add_product(const Poly& a, const Poly& b) {
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) add(ma * mb, ca * cb);
}

inline Poly PolyAccumulator::finish() {
  Poly r;
  r.terms_.reserve(terms_.size());
  for (auto& [m, c] : terms_)
    if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Poly::Term& x, const Poly::Term& y) { return grlex_before(x.first, y.first); });
  terms_.clear();
  return r;
}

/// Names "u0".."u{n-1}" used for seed coordinates.
inline std::vector<std::string> seed_variable_names(std::size_t n, const std::string& prefix = "u") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace kantor

#endif  // KANTOR_POLY_HPP
