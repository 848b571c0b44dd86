#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qtheta {

// Exact integer coefficients.  Gaussian binomial coefficients at the sizes we
// verify overflow 64 bits, so everything runs on bignums.
using Int = mpz_class;

// Exact rational arithmetic for q-exponents.  Values stay tiny (exponents on a
// grid with denominator <= 8), but intermediates use 128-bit products so the
// comparisons and normalizations can never overflow silently.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  constexpr Rational(long n) : num_(n) {}       // NOLINT
  constexpr Rational(int n) : num_(n) {}        // NOLINT
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  constexpr long long numerator() const { return num_; }
  constexpr long long denominator() const { return den_; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(check(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                    check(i128(a.den_) * b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(check(i128(a.num_) * b.num_), check(i128(a.den_) * b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(check(i128(a.num_) * b.den_), check(i128(a.den_) * b.num_));
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

 private:
  using i128 = __int128;

  static long long check(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline constexpr int max_grid_scale = 8;

// Knowledge bounds are scaled integers; this sentinel means "exact everywhere"
// (used when a finite Laurent polynomial is embedded as a series).
inline constexpr std::int64_t exact_bound = INT64_MAX / 4;

inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= exact_bound || b >= exact_bound) return exact_bound;
  return a + b;
}

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An exponent does not lie on the requested grid.
struct OffGrid : Error { using Error::Error; };
// A coefficient beyond the truncation order of a series was requested.
struct OutOfKnowledge : Error { using Error::Error; };
// Reciprocal of a series whose q^0 part is not a signed power of a.
struct NonUnitLeading : Error { using Error::Error; };
// A sum or product whose terms do not leave any finite q-window.
struct NonTruncating : Error { using Error::Error; };
// a -> value substitution on a series with unbounded support in a.
struct InfiniteSupport : Error { using Error::Error; };
// Unknown multiple-sum tail selector.
struct UnsupportedTail : Error { using Error::Error; };
// Bailey machinery.
struct UnknownPair : Error { using Error::Error; };
struct WrongRelativeParam : Error { using Error::Error; };
struct UnsupportedSymbolicForm : Error { using Error::Error; };
// Identity registry.
struct UnknownIdentity : Error { using Error::Error; };
struct ParamsOutOfDomain : Error { using Error::Error; };
// Fermionic polynomial X_{s,b}(n) needs n+s+b even.
struct ParityViolation : Error { using Error::Error; };
// Polynomial identity table.
struct UnknownCase : Error { using Error::Error; };

// floor(a/b) for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

inline std::int64_t rational_floor(const Rational& x) {
  return floor_div(x.numerator(), x.denominator());
}

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

// Scale a rational exponent onto grid 1/d; throws OffGrid on failure.
inline std::int64_t to_scaled(const Rational& e, int d, const char* what = "exponent") {
  Rational s = e * d;
  if (!is_integer(s))
    throw OffGrid(std::string(what) + " " + std::to_string(e.numerator()) + "/" +
                  std::to_string(e.denominator()) + " not on grid 1/" + std::to_string(d));
  return s.numerator();
}

inline std::string rational_str(const Rational& x) {
  std::string s = std::to_string(x.numerator());
  if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
  return s;
}

}  // namespace qtheta
