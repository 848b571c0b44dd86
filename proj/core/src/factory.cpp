#include <qtheta/qfactory.hpp>

namespace qtheta {

namespace {

// 1 - x q^{e_extra}
Series one_minus(const Monomial& x, const Rational& e_extra, int scale, std::int64_t bound_s) {
  Monomial m = x;
  m.q_exp += e_extra;
  Series f = Series::one(scale, bound_s);
  std::int64_t s = to_scaled(m.q_exp, scale);
  if (s < 0) f.set_floor(s);
  f.add_term(s, m.a_exp, Int(-m.coeff));
  return f;
}

}  // namespace

Series poch(const Monomial& x, const Rational& step, long long n, int scale,
            std::int64_t bound_s) {
  if (n >= 0) {
    Series r = Series::one(scale, bound_s);
    for (long long j = 0; j < n; ++j) r = mul(r, one_minus(x, step * Rational(j), scale, bound_s));
    return r;
  }
  // (x; q)_{-n} = 1/(x q^{-n}; q)_n; unit-led exactly when the shifted
  // factors keep positive q-exponents (reciprocal enforces that).
  long long m = -n;
  Monomial shifted = x;
  shifted.q_exp -= step * Rational(m);
  return reciprocal(poch(shifted, step, m, scale, bound_s));
}

Series poch_inf(const Monomial& x, const Rational& step, int scale, std::int64_t bound_s) {
  if (step <= 0) throw NonTruncating("infinite product needs a positive base step");
  Series r = Series::one(scale, bound_s);
  Rational bq(bound_s, scale);
  for (long long j = 0;; ++j) {
    Rational e = x.q_exp + step * Rational(j);
    if (e > bq) break;
    r = mul(r, one_minus(x, step * Rational(j), scale, bound_s));
  }
  return r;
}

Series poch_inf_all(const std::vector<Monomial>& xs, const Rational& step, int scale,
                    std::int64_t bound_s) {
  Series r = Series::one(scale, bound_s);
  for (auto& x : xs) r = mul(r, poch_inf(x, step, scale, bound_s));
  return r;
}

Series geometric(const Monomial& m, int scale, std::int64_t bound_s) {
  if (m.q_exp <= 0) throw NonTruncating("geometric series needs a positive q-exponent");
  Series r(scale, bound_s);
  std::int64_t step = to_scaled(m.q_exp, scale);
  Int c = 1;
  for (long long j = 0; j * step <= bound_s; ++j, c *= m.coeff)
    r.add_term(j * step, static_cast<int>(j * m.a_exp), c);
  return r;
}

Series triple_product(const Monomial& z, const Rational& m, int scale, std::int64_t bound_s) {
  Monomial qm = Monomial::q(m);
  return poch_inf_all({z, q_over(z, m), qm}, m, scale, bound_s);
}

Series quintuple_product(const Monomial& z, const Rational& m, int scale, std::int64_t bound_s) {
  Monomial z2 = z * z;
  Series a = poch_inf_all({z, q_over(z, m), Monomial::q(m)}, m, scale, bound_s);
  Monomial z2q = z2;
  z2q.q_exp += m;
  Series b = poch_inf_all({z2q, q_over(z2, m)}, m * 2, scale, bound_s);
  return mul(a, b);
}

const Series& PochCache::poch(const Monomial& x, const Rational& step, long long n) {
  if (n < 0) throw Error("PochCache::poch: negative length not cached");
  auto k = key(x, step, n);
  auto it = poch_.find(k);
  if (it != poch_.end()) return it->second;
  Series v = (n == 0) ? Series::one(scale_, bound_)
                      : mul(poch(x, step, n - 1),
                            one_minus(x, step * Rational(n - 1), scale_, bound_));
  return poch_.emplace(k, std::move(v)).first->second;
}

const Series& PochCache::inv(const Monomial& x, const Rational& step, long long n) {
  if (n < 0) throw Error("PochCache::inv: negative length not cached");
  auto k = key(x, step, n);
  auto it = inv_.find(k);
  if (it != inv_.end()) return it->second;
  Series v = Series::one(scale_, bound_);
  if (n > 0) {
    Monomial last = x;
    last.q_exp += step * Rational(n - 1);
    const Series& prev = inv(x, step, n - 1);
    if (last.q_exp > 0) {
      v = mul(prev, geometric(last, scale_, bound_));
    } else {
      v = reciprocal(poch(x, step, n));
    }
  }
  return inv_.emplace(k, std::move(v)).first->second;
}

}  // namespace qtheta
