#pragma once

#include <qtheta/defs.hpp>

namespace qtheta {

// Signed monomial c * a^j * q^e with integer c and rational q-exponent.
// These appear as parameters (b, c, z, ...) and as coefficients in linear
// combinations of series.
struct Monomial {
  long coeff = 1;
  int a_exp = 0;
  Rational q_exp{0};

  static Monomial one() { return {1, 0, Rational(0)}; }
  static Monomial a(int j = 1) { return {1, j, Rational(0)}; }
  static Monomial q(Rational e = Rational(1)) { return {1, 0, e}; }
  // c * a^j * q^e
  static Monomial make(long c, int j, Rational e) { return {c, j, e}; }

  bool is_zero() const { return coeff == 0; }

  Monomial operator*(const Monomial& o) const {
    return {coeff * o.coeff, a_exp + o.a_exp, q_exp + o.q_exp};
  }
  Monomial operator-() const { return {-coeff, a_exp, q_exp}; }

  // Multiplicative inverse; only defined for coeff = +/-1.
  Monomial inverse() const {
    if (coeff != 1 && coeff != -1) throw Error("monomial inverse needs unit coefficient");
    return {coeff, -a_exp, -q_exp};
  }

  Monomial pow(long long k) const {
    Monomial r = one();
    long c = 1;
    for (long long t = 0; t < (k < 0 ? -k : k); ++t) c *= coeff;
    r.coeff = c;
    r.a_exp = static_cast<int>(a_exp * k);
    r.q_exp = q_exp * Rational(k);
    return r;
  }

  bool operator==(const Monomial& o) const {
    return coeff == o.coeff && a_exp == o.a_exp && q_exp == o.q_exp;
  }
};

inline Monomial q_over(const Monomial& x, Rational num_q_exp = Rational(1)) {
  // q^num / x
  Monomial inv = x.inverse();
  inv.q_exp += num_q_exp;
  return inv;
}

inline std::string to_string(const Monomial& m) {
  if (m.coeff == 0) return "0";
  std::string s;
  long c = m.coeff;
  if (c < 0) { s += "-"; c = -c; }
  bool have = false;
  if (c != 1) { s += std::to_string(c); have = true; }
  auto piece = [&](const std::string& base, const std::string& e, bool trivial_exp) {
    if (have) s += "*";
    s += base;
    if (!trivial_exp) s += "^" + e;
    have = true;
  };
  if (m.a_exp != 0) piece("a", std::to_string(m.a_exp), m.a_exp == 1);
  if (m.q_exp != 0) {
    std::string e = rational_str(m.q_exp);
    if (m.q_exp.denominator() != 1 || m.q_exp < 0) e = "(" + e + ")";
    piece("q", e, m.q_exp == 1);
  }
  if (!have) s += "1";
  return s;
}

}  // namespace qtheta
