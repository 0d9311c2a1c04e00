#ifndef KANTOR_SCALAR_HPP
#define KANTOR_SCALAR_HPP

// Exact field elements: arbitrary-precision rationals or residues modulo a
// prime. Small rationals live in a pair of int64 values; anything that does
// not fit is promoted to a shared immutable Boost rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kantor {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Raised for malformed user input (files, DSL text, scalar strings).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when values from different fields are combined.
struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 abs_i128(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

inline bool fits_i64(i128 v) {
  return v >= i128(INT64_MIN) + 1 && v <= i128(INT64_MAX);
}

inline BigInt big_from_i128(i128 v) {
  u128 m = abs_i128(v);
  BigInt r = static_cast<std::uint64_t>(m >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(m);
  return v < 0 ? BigInt(-r) : r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((u128(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (p % d == 0) return p == d;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline BigInt parse_bigint(std::string_view s) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw InputError("empty integer in scalar '" + std::string(s) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("invalid integer '" + std::string(s) + "'");
  }
  BigInt v{std::string(digits)};
  return (s.front() == '-') ? BigInt(-v) : v;
}

}  // namespace detail

/// An element of Q or F_p. Canonical: rationals are reduced with positive
/// denominator, residues lie in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : num_(v) {}
  Scalar(long v) : num_(v) {}
  Scalar(long long v) : num_(v) {}

  explicit Scalar(const BigRational& q) { assign_big(q); }

  static Scalar fraction(long long n, long long d) {
    if (d == 0) throw FieldError("division by zero");
    Scalar s;
    s.set_small(detail::i128(n), detail::i128(d));
    return s;
  }

  /// Residue of `value` modulo the prime `p`.
  static Scalar modular(const BigInt& value, std::uint64_t p) {
    if (!detail::is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    return residue(value, p);
  }

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return p_ != 0 || (big_ ? denominator(*big_) == 1 : den_ == 1); }

  BigRational to_rational() const {
    if (p_ != 0) return BigRational(BigInt(static_cast<std::uint64_t>(num_)));
    if (big_) return *big_;
    return BigRational(BigInt(num_), BigInt(den_));
  }

  /// Reinterpret in F_p (p == 0 leaves the value unchanged).
  Scalar in_field(std::uint64_t p) const {
    if (p == p_) return *this;
    if (p == 0) throw FieldError("cannot lift a residue mod " + std::to_string(p_) + " to Q");
    if (p_ != 0)
      throw FieldError("field mismatch: mod " + std::to_string(p_) + " vs mod " + std::to_string(p));
    if (!big_) {
      auto reduce = [p](std::int64_t v) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
      };
      std::uint64_t d = reduce(den_);
      if (d == 0) throw FieldError("denominator vanishes mod " + std::to_string(p));
      Scalar s;
      s.p_ = p;
      s.num_ = static_cast<std::int64_t>(detail::mulmod(reduce(num_), detail::powmod(d, p - 2, p), p));
      return s;
    }
    BigRational q = to_rational();
    BigInt d = denominator(q) % p;
    if (d == 0) throw FieldError("denominator vanishes mod " + std::to_string(p));
    Scalar n = residue(numerator(q), p);
    Scalar inv = residue(d, p).inverse();
    return n * inv;
  }

  Scalar operator-() const {
    Scalar r = *this;
    if (p_ != 0) {
      if (num_ != 0) r.num_ = static_cast<std::int64_t>(p_ - static_cast<std::uint64_t>(num_));
      return r;
    }
    if (big_) {
      r.assign_big(-*big_);
      return r;
    }
    r.num_ = -num_;
    return r;
  }

  Scalar inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (p_ != 0) {
      Scalar r = *this;
      r.num_ = static_cast<std::int64_t>(detail::powmod(static_cast<std::uint64_t>(num_), p_ - 2, p_));
      return r;
    }
    if (big_) return Scalar(BigRational(1) / *big_);
    Scalar r;
    r.set_small(detail::i128(den_), detail::i128(num_));
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.p_ | b.p_) return modular_op(a, b, '+');
    if (!a.big_ && !b.big_) {
      Scalar r;
      if (a.den_ == 1 && b.den_ == 1) {
        r.set_small(detail::i128(a.num_) + b.num_, 1);
      } else {
        r.set_small(detail::i128(a.num_) * b.den_ + detail::i128(b.num_) * a.den_,
                    detail::i128(a.den_) * b.den_);
      }
      return r;
    }
    return Scalar(a.to_rational() + b.to_rational());
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.p_ | b.p_) return modular_op(a, b, '*');
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (!a.big_ && !b.big_) {
      Scalar r;
      r.set_small(detail::i128(a.num_) * b.num_, detail::i128(a.den_) * b.den_);
      return r;
    }
    return Scalar(a.to_rational() * b.to_rational());
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) {
      std::uint64_t p = a.p_ ? a.p_ : b.p_;
      if (a.p_ && b.p_) return false;
      try {
        return a.in_field(p).num_ == b.in_field(p).num_;
      } catch (const FieldError&) {
        return false;
      }
    }
    if (a.big_ || b.big_) return (a.big_ && b.big_) ? *a.big_ == *b.big_ : false;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "a/b" (omitting "/1") for rationals, "k mod p" for residues.
  std::string str() const {
    if (p_ != 0) return std::to_string(num_) + " mod " + std::to_string(p_);
    if (big_) {
      std::string s = numerator(*big_).str();
      if (denominator(*big_) != 1) s += "/" + denominator(*big_).str();
      return s;
    }
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Residue only (no " mod p" suffix); used inside polynomial strings.
  std::string short_str() const { return p_ != 0 ? std::to_string(num_) : str(); }

  /// Parses "a", "a/b" or "k mod p".
  static Scalar parse(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (auto pos = s.find("mod"); pos != std::string_view::npos) {
      BigInt k = detail::parse_bigint(s.substr(0, pos));
      BigInt p = detail::parse_bigint(s.substr(pos + 3));
      if (p <= 1 || p > BigInt(INT64_MAX)) throw InputError("invalid modulus in '" + std::string(s) + "'");
      return modular(k, static_cast<std::uint64_t>(p));
    }
    if (auto pos = s.find('/'); pos != std::string_view::npos) {
      BigInt n = detail::parse_bigint(s.substr(0, pos));
      BigInt d = detail::parse_bigint(s.substr(pos + 1));
      if (d == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
      return Scalar(BigRational(n, d));
    }
    return Scalar(BigRational(detail::parse_bigint(s)));
  }

 private:
  static Scalar residue(const BigInt& value, std::uint64_t p) {
    BigInt r = value % p;
    if (r < 0) r += p;
    Scalar s;
    s.p_ = p;
    s.num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(r));
    return s;
  }

  void set_small(detail::i128 n, detail::i128 d) {
    if (d == 0) throw FieldError("division by zero");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    if (d != 1) {
      detail::u128 g = detail::gcd_u128(detail::abs_i128(n), detail::u128(d));
      if (g > 1) {
        n /= detail::i128(g);
        d /= detail::i128(g);
      }
    }
    if (detail::fits_i64(n) && detail::fits_i64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      big_ = std::make_shared<const BigRational>(detail::big_from_i128(n), detail::big_from_i128(d));
      num_ = 1;
      den_ = 1;
    }
  }

  void assign_big(const BigRational& q) {
    const BigInt& n = numerator(q);
    const BigInt& d = denominator(q);
    static const BigInt kMax(INT64_MAX);
    if (abs(n) <= kMax && d <= kMax) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      big_ = std::make_shared<const BigRational>(q);
      num_ = 1;
      den_ = 1;
    }
  }

  static Scalar modular_op(const Scalar& a, const Scalar& b, char op) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (a.p_ && b.p_ && a.p_ != b.p_)
      throw FieldError("field mismatch: mod " + std::to_string(a.p_) + " vs mod " + std::to_string(b.p_));
    Scalar x = a.in_field(p), y = b.in_field(p);
    auto ux = static_cast<std::uint64_t>(x.num_), uy = static_cast<std::uint64_t>(y.num_);
    std::uint64_t r = op == '+' ? static_cast<std::uint64_t>((detail::u128(ux) + uy) % p) : detail::mulmod(ux, uy, p);
    Scalar s;
    s.p_ = p;
    s.num_ = static_cast<std::int64_t>(r);
    return s;
  }

  // Small representation: num_/den_ (den_ > 0, reduced) or residue num_.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
  std::uint64_t p_ = 0;
};

/// The ground field: Q (p == 0) or F_p.
struct Field {
  std::uint64_t p = 0;

  static Field rational() { return {}; }
  static Field prime(std::uint64_t p) {
    if (!detail::is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    return Field{p};
  }

  bool is_rational() const { return p == 0; }
  std::uint64_t characteristic() const { return p; }
  Scalar operator()(long long v) const { return Scalar(v).in_field(p); }
  Scalar operator()(const Scalar& v) const { return v.in_field(p); }
  Scalar parse(std::string_view s) const { return Scalar::parse(s).in_field(p); }
  std::string name() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }

  friend bool operator==(const Field&, const Field&) = default;
};

}  // namespace kantor

#endif  // KANTOR_SCALAR_HPP
