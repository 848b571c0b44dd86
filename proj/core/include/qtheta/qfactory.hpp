#pragma once

#include <qtheta/series.hpp>

#include <map>
#include <tuple>
#include <vector>

namespace qtheta {

// (x; q^step)_n = prod_{j=0}^{n-1} (1 - x q^{j step}) for n >= 0, with x a
// monomial in a and q.  Negative length via
//   (x; q)_{-n} = (-q/x)^n q^{n(n-1)/2} / (q/x; q)_n,
// which needs x invertible (unit coefficient).
Series poch(const Monomial& x, const Rational& step, long long n, int scale,
            std::int64_t bound_s);

// (x; q^step)_infinity.  Truncates because factor exponents grow; requires
// step > 0 (NonTruncating otherwise).  Finitely many factors may carry
// nonpositive q-exponents; they lower the floor of the result.
Series poch_inf(const Monomial& x, const Rational& step, int scale, std::int64_t bound_s);

// prod_i (x_i; q^step)_infinity
Series poch_inf_all(const std::vector<Monomial>& xs, const Rational& step, int scale,
                    std::int64_t bound_s);

// 1/(1 - m) = sum_{j>=0} m^j; requires m.q_exp > 0.
Series geometric(const Monomial& m, int scale, std::int64_t bound_s);

// (z; q^m)inf (q^m/z; q^m)inf (q^m; q^m)inf
Series triple_product(const Monomial& z, const Rational& m, int scale, std::int64_t bound_s);

// (q^m/z; q^m)inf (z; q^m)inf (q^m; q^m)inf (q^m z^2; q^{2m})inf (q^m/z^2; q^{2m})inf
// with the classical normalization (z q, 1/z, q; q)inf (z^2 q, q/z^2; q^2)inf
// at m = 1; the base-q^m version substitutes q -> q^m throughout.
Series quintuple_product(const Monomial& z, const Rational& m, int scale, std::int64_t bound_s);

// Q(n) = A n^2 + B n + C
struct QuadExp {
  Rational A{0}, B{0}, C{0};
  Rational operator()(long long n) const {
    return A * Rational(n) * Rational(n) + B * Rational(n) + C;
  }
};

// Single engine for (partial, false, full) theta sums:
//   sum_n sign(n) q^{Q(n)} a^{L1 n + L0} (1 - second * q^{R(n)})   [second optional]
// over n >= 0, n in Z, or n >= 1.
struct ThetaSpec {
  enum class Range { nonneg, all, positive };
  enum class Sign { plus, alternating, floor_sign };

  Range range = Range::nonneg;
  Sign sign = Sign::plus;
  // floor_sign: (-1)^{floor((s1 n + s0) / s2)}, s2 > 0
  long long s1 = 0, s0 = 0, s2 = 1;
  QuadExp q_exp;
  long long a_lin = 0, a_const = 0;
  bool has_second = false;
  Monomial second = Monomial::one();  // the summand factor is (1 - second * q^{R(n)})
  QuadExp second_q;                   // R(n)
};

Series theta_sum(const ThetaSpec& spec, int scale, std::int64_t bound_s);

// sum_{j in Z} (-1)^j q^{m j(j-1)/2 + x j}.  For 0 < x < m this equals the
// triple product (q^x, q^{m-x}, q^m; q^m)inf; the sum form extends it to all
// rational x on the grid (zero exactly when x is a multiple of m).
Series theta_pair(const Rational& x, const Rational& m, int scale, std::int64_t bound_s);

// Memoizing store for finite Pochhammer symbols and their reciprocals inside
// one truncation window.  Not thread safe; use one instance per job.
class PochCache {
 public:
  PochCache(int scale, std::int64_t bound_s) : scale_(scale), bound_(bound_s) {}

  int scale() const { return scale_; }
  std::int64_t bound() const { return bound_; }

  // (x; q^step)_n, n >= 0
  const Series& poch(const Monomial& x, const Rational& step, long long n);
  // 1/(x; q^step)_n, n >= 0
  const Series& inv(const Monomial& x, const Rational& step, long long n);

 private:
  using Key = std::tuple<long, int, std::int64_t, std::int64_t, std::int64_t,
                         std::int64_t, long long>;
  static Key key(const Monomial& x, const Rational& step, long long n) {
    return {x.coeff, x.a_exp, x.q_exp.numerator(), x.q_exp.denominator(),
            step.numerator(), step.denominator(), n};
  }

  int scale_;
  std::int64_t bound_;
  std::map<Key, Series> poch_, inv_;
};

}  // namespace qtheta
