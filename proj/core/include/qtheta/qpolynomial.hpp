#pragma once

#include <qtheta/monomial.hpp>
#include <qtheta/series.hpp>

#include <map>
#include <vector>

namespace qtheta {

// Exact (untruncated) Laurent polynomial in q alone, exponents on the grid
// (1/d)Z.  Used for Gaussian binomial identities and finite product lemmas,
// where both sides close up to honest polynomial equality.
class QPolynomial {
 public:
  using Map = std::map<std::int64_t, Int>;

  explicit QPolynomial(int scale = 1) : scale_(check(scale)) {}

  static QPolynomial zero(int scale = 1) { return QPolynomial(scale); }
  static QPolynomial one(int scale = 1) {
    QPolynomial p(scale);
    p.add_term(0, 1);
    return p;
  }
  // c * q^e
  static QPolynomial term(const Int& c, const Rational& e, int scale = 1);

  int scale() const { return scale_; }
  const Map& terms() const { return m_; }
  bool is_zero() const { return m_.empty(); }
  std::int64_t min_exp_s() const { return m_.begin()->first; }
  std::int64_t max_exp_s() const { return m_.rbegin()->first; }

  Int at_scaled(std::int64_t s) const {
    auto it = m_.find(s);
    return it == m_.end() ? Int(0) : it->second;
  }
  Int at(const Rational& e) const { return at_scaled(to_scaled(e, scale_)); }

  void add_term(std::int64_t s, const Int& c) {
    if (c == 0) return;
    auto it = m_.find(s);
    if (it == m_.end()) {
      m_.emplace(s, c);
    } else {
      it->second += c;
      if (it->second == 0) m_.erase(it);
    }
  }

  bool operator==(const QPolynomial& o) const;

  // Embed as a bivariate series (exact knowledge).
  Series to_series(std::int64_t bound_s = exact_bound) const;

 private:
  static int check(int d) {
    if (d < 1 || d > max_grid_scale) throw OffGrid("polynomial grid scale out of range");
    return d;
  }

  int scale_;
  Map m_;
};

QPolynomial qp_add(const QPolynomial& f, const QPolynomial& g);
QPolynomial qp_sub(const QPolynomial& f, const QPolynomial& g);
QPolynomial qp_neg(const QPolynomial& f);
QPolynomial qp_mul(const QPolynomial& f, const QPolynomial& g);
// c * q^e * f
QPolynomial qp_scale(const QPolynomial& f, const Int& c, const Rational& e);
// q -> 1/q
QPolynomial qp_reverse(const QPolynomial& f);
QPolynomial qp_regrid(const QPolynomial& f, int new_scale);

// Finite product prod_{j=0}^{n-1} (1 - c q^{e + j step}) for c = +/-1; n >= 0.
QPolynomial qp_poch(const Rational& e, const Rational& step, long long n, int c = 1);

// Gaussian binomial coefficient with top n and bottom m, extended to all
// integer arguments: zero for m < 0 and for 0 <= n < m; the usual polynomial
// for 0 <= m <= n; for n < 0 a signed Laurent monomial multiple of a
// nonnegative-argument value via (1 - q^{-k}) = -q^{-k}(1 - q^k).
QPolynomial qbinomial(long long n, long long m);

// All of [n, 0], ..., [n, n] in one sweep (amortizes the divisions; uses the
// m <-> n - m symmetry).  n >= 0.
std::vector<QPolynomial> qbinomial_row(long long n);

std::string to_string(const QPolynomial& f);

}  // namespace qtheta
