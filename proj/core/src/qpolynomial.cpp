#include <qtheta/qpolynomial.hpp>

#include <numeric>

namespace qtheta {

QPolynomial QPolynomial::term(const Int& c, const Rational& e, int scale) {
  QPolynomial p(scale);
  p.add_term(to_scaled(e, scale), c);
  return p;
}

bool QPolynomial::operator==(const QPolynomial& o) const {
  if (scale_ == o.scale_) return m_ == o.m_;
  int d = std::lcm(scale_, o.scale_);
  return qp_regrid(*this, d).terms() == qp_regrid(o, d).terms();
}

Series QPolynomial::to_series(std::int64_t bound_s) const {
  Series f(scale_, bound_s, is_zero() ? 0 : std::min<std::int64_t>(0, min_exp_s()));
  for (auto& [s, c] : m_) f.add_term(s, 0, c);
  return f;
}

namespace {

std::pair<QPolynomial, QPolynomial> align(const QPolynomial& f, const QPolynomial& g) {
  if (f.scale() == g.scale()) return {f, g};
  int d = std::lcm(f.scale(), g.scale());
  return {qp_regrid(f, d), qp_regrid(g, d)};
}

}  // namespace

QPolynomial qp_add(const QPolynomial& fa, const QPolynomial& ga) {
  auto [f, g] = align(fa, ga);
  QPolynomial r = f;
  for (auto& [s, c] : g.terms()) r.add_term(s, c);
  return r;
}

QPolynomial qp_sub(const QPolynomial& fa, const QPolynomial& ga) {
  auto [f, g] = align(fa, ga);
  QPolynomial r = f;
  for (auto& [s, c] : g.terms()) r.add_term(s, -c);
  return r;
}

QPolynomial qp_neg(const QPolynomial& f) {
  QPolynomial r(f.scale());
  for (auto& [s, c] : f.terms()) r.add_term(s, -c);
  return r;
}

QPolynomial qp_mul(const QPolynomial& fa, const QPolynomial& ga) {
  auto [f, g] = align(fa, ga);
  QPolynomial r(f.scale());
  for (auto& [s1, c1] : f.terms())
    for (auto& [s2, c2] : g.terms()) r.add_term(s1 + s2, c1 * c2);
  return r;
}

QPolynomial qp_scale(const QPolynomial& f, const Int& c, const Rational& e) {
  if (c == 0) return QPolynomial(f.scale());
  int d = f.scale();
  if (!is_integer(e * d)) {
    int d2 = std::lcm<std::int64_t>(d, e.denominator());
    if (d2 > max_grid_scale) throw OffGrid("polynomial scale step off grid");
    return qp_scale(qp_regrid(f, d2), c, e);
  }
  std::int64_t sh = to_scaled(e, d);
  QPolynomial r(d);
  for (auto& [s, cc] : f.terms()) r.add_term(s + sh, cc * c);
  return r;
}

QPolynomial qp_reverse(const QPolynomial& f) {
  QPolynomial r(f.scale());
  for (auto& [s, c] : f.terms()) r.add_term(-s, c);
  return r;
}

QPolynomial qp_regrid(const QPolynomial& f, int new_scale) {
  if (new_scale == f.scale()) return f;
  QPolynomial r(new_scale);
  for (auto& [s, c] : f.terms())
    r.add_term(to_scaled(Rational(s, f.scale()), new_scale, "regrid exponent"), c);
  return r;
}

QPolynomial qp_poch(const Rational& e, const Rational& step, long long n, int c) {
  if (c != 1 && c != -1) throw Error("qp_poch: factor coefficient must be +/-1");
  if (n < 0) throw Error("qp_poch: negative length");
  QPolynomial r = QPolynomial::one();
  for (long long j = 0; j < n; ++j) {
    QPolynomial factor = QPolynomial::one();
    Rational ex = e + step * Rational(j);
    int d = std::lcm<std::int64_t>(factor.scale(), ex.denominator());
    if (d > max_grid_scale) throw OffGrid("qp_poch: exponent off grid");
    factor = qp_regrid(factor, d);
    factor.add_term(to_scaled(ex, d), Int(-c));
    r = qp_mul(r, factor);
  }
  return r;
}

namespace {

// Dense coefficient vector c[0..deg] in q; in-place multiply by (1 - q^k) and
// exact division by (1 - q^k), both O(deg).
void dense_mul_one_minus(std::vector<Int>& c, long long k) {
  c.resize(c.size() + k, Int(0));
  for (std::int64_t i = static_cast<std::int64_t>(c.size()) - 1; i >= k; --i) c[i] -= c[i - k];
}

void dense_div_one_minus(std::vector<Int>& c, long long k) {
  for (std::size_t i = k; i < c.size(); ++i) c[i] += c[i - k];
  for (long long j = 0; j < k; ++j) {
    if (c[c.size() - 1 - j] != 0) throw Error("dense_div_one_minus: inexact division");
  }
  c.resize(c.size() - k);
}

QPolynomial from_dense(const std::vector<Int>& c) {
  QPolynomial p(1);
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term(static_cast<std::int64_t>(i), c[i]);
  return p;
}

}  // namespace

QPolynomial qbinomial(long long n, long long m) {
  if (m < 0) return QPolynomial::zero();
  if (m == 0) return QPolynomial::one();
  if (n < 0) {
    // (1 - q^{-k}) = -q^{-k}(1 - q^k) factor by factor:
    // [n, m] = (-1)^m q^{n m - m(m-1)/2} [m - n - 1, m]
    QPolynomial base = qbinomial(m - n - 1, m);
    Int sign = (m % 2 == 0) ? 1 : -1;
    return qp_scale(base, sign, Rational(n * m - m * (m - 1) / 2));
  }
  if (m > n) return QPolynomial::zero();
  if (2 * m > n) m = n - m;
  std::vector<Int> c{Int(1)};
  for (long long j = 1; j <= m; ++j) {
    dense_mul_one_minus(c, n - j + 1);
    dense_div_one_minus(c, j);
  }
  return from_dense(c);
}

std::vector<QPolynomial> qbinomial_row(long long n) {
  if (n < 0) throw Error("qbinomial_row: negative row");
  std::vector<QPolynomial> row(static_cast<std::size_t>(n) + 1);
  std::vector<Int> c{Int(1)};
  row[0] = QPolynomial::one();
  for (long long m = 1; 2 * m <= n; ++m) {
    dense_mul_one_minus(c, n - m + 1);
    dense_div_one_minus(c, m);
    row[static_cast<std::size_t>(m)] = from_dense(c);
  }
  for (long long m = n / 2 + 1; m <= n; ++m)
    row[static_cast<std::size_t>(m)] = row[static_cast<std::size_t>(n - m)];
  return row;
}

std::string to_string(const QPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto& [s, c] : f.terms()) {
    Int cc = c;
    if (out.empty()) {
      if (cc < 0) { out += "-"; cc = -cc; }
    } else {
      out += (cc < 0) ? " - " : " + ";
      if (cc < 0) cc = -cc;
    }
    Rational e(s, f.scale());
    if (e == 0) {
      out += cc.get_str();
    } else {
      if (cc != 1) out += cc.get_str() + "*";
      out += "q";
      if (e != 1) {
        std::string es = rational_str(e);
        if (e.denominator() != 1 || e < 0) es = "(" + es + ")";
        out += "^" + es;
      }
    }
  }
  return out;
}

}  // namespace qtheta
