#include <qtheta/qfactory.hpp>

namespace qtheta {

namespace {

bool grows_up(const QuadExp& e) { return e.A > 0 || (e.A == 0 && e.B > 0); }
bool grows_down(const QuadExp& e) { return e.A > 0 || (e.A == 0 && e.B < 0); }

// Smallest n0 with e monotonically nondecreasing on [n0, inf) (for grows_up).
long long up_vertex(const QuadExp& e) {
  if (e.A == 0) return 0;
  return rational_floor(-e.B / (e.A * 2)) + 1;
}
long long down_vertex(const QuadExp& e) {
  if (e.A == 0) return 0;
  return -rational_floor(e.B / (e.A * 2)) - 1;
}

}  // namespace

Series theta_sum(const ThetaSpec& spec, int scale, std::int64_t bound_s) {
  QuadExp q2;  // exponent of the secondary branch
  if (spec.has_second) {
    q2.A = spec.q_exp.A + spec.second_q.A;
    q2.B = spec.q_exp.B + spec.second_q.B;
    q2.C = spec.q_exp.C + spec.second_q.C + spec.second.q_exp;
  }

  bool scan_down = spec.range == ThetaSpec::Range::all;
  if (!grows_up(spec.q_exp) || (spec.has_second && !grows_up(q2)))
    throw NonTruncating("theta sum does not leave the window as n grows");
  if (scan_down && (!grows_down(spec.q_exp) || (spec.has_second && !grows_down(q2))))
    throw NonTruncating("bilateral theta sum does not leave the window as n decreases");

  Rational bq(bound_s, scale);
  Series r(scale, bound_s);

  auto term_sign = [&](long long n) -> int {
    switch (spec.sign) {
      case ThetaSpec::Sign::plus:
        return 1;
      case ThetaSpec::Sign::alternating:
        return (n % 2 == 0) ? 1 : -1;
      case ThetaSpec::Sign::floor_sign: {
        std::int64_t fl = floor_div(spec.s1 * n + spec.s0, spec.s2);
        return (fl % 2 == 0) ? 1 : -1;
      }
    }
    return 1;
  };

  auto emit = [&](long long n) {
    // true if this n contributed anything inside the window
    Rational e1 = spec.q_exp(n);
    Rational e2 = spec.has_second ? q2(n) : e1;
    Rational emin = spec.has_second ? std::min(e1, e2) : e1;
    if (emin > bq) return false;
    int sg = term_sign(n);
    long long ae = spec.a_lin * n + spec.a_const;
    if (e1 <= bq) r.add_term(to_scaled(e1, scale), static_cast<int>(ae), Int(sg));
    if (spec.has_second && e2 <= bq)
      r.add_term(to_scaled(e2, scale), static_cast<int>(ae + spec.second.a_exp),
                 Int(-sg * spec.second.coeff));
    return true;
  };

  long long start = spec.range == ThetaSpec::Range::positive ? 1 : 0;
  long long up_safe = std::max(up_vertex(spec.q_exp), spec.has_second ? up_vertex(q2) : 0LL);
  for (long long n = start;; ++n) {
    bool in = emit(n);
    if (!in && n >= up_safe) break;
  }
  if (scan_down) {
    long long down_safe =
        std::min(down_vertex(spec.q_exp), spec.has_second ? down_vertex(q2) : 0LL);
    for (long long n = -1;; --n) {
      bool in = emit(n);
      if (!in && n <= down_safe) break;
    }
  }
  return r;
}

Series theta_pair(const Rational& x, const Rational& m, int scale, std::int64_t bound_s) {
  if (m <= 0) throw NonTruncating("theta pair needs a positive modulus");
  ThetaSpec spec;
  spec.range = ThetaSpec::Range::all;
  spec.sign = ThetaSpec::Sign::alternating;
  spec.q_exp = {m / 2, x - m / 2, Rational(0)};
  return theta_sum(spec, scale, bound_s);
}

}  // namespace qtheta
