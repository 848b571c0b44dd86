#include "registry_util.hpp"

#include <qtheta/gis.hpp>
#include <qtheta/multisum.hpp>
#include <qtheta/qpolynomial.hpp>

// Rogers-Ramanujan material: Schur polynomials, fermionic X polynomials,
// chained multisums with a -m N_1 shift, and the residual corollaries that
// tie them to the partial theta theorems.

namespace qtheta::reg {

namespace {

Series rev_series(const QPolynomial& p) { return qp_reverse(p).to_series(); }

Series x_rev(long p, long pp, long i, long ip, long m) {
  return rev_series(x_poly(p, pp, i, ip, m));
}

// (q^x, q^{k-x}, q^k; q^k)_inf
Series triple_wall(const Rational& x, const Rational& k, int scale, std::int64_t P) {
  return poch_inf_all({Q(x), Q(k - x), Q(k)}, k, scale, P);
}

Series rr_sum(long m, PochCache& cache) {
  std::int64_t P = cache.bound();
  TailSum ts(cache.scale(), P);
  for (long long r = 0; ts.more() && r <= P + m; ++r)
    ts.feed(scale_by(cache.inv(Q(1), 1, r), Q(Rational(r) * Rational(r + m))));
  return ts.value();
}

using Weight = std::function<Series(long long)>;

Weight w_plain(PochCache& c) {
  return [&c](long long t) { return c.inv(Q(1), 1, t); };
}
Weight w_even(PochCache& c) {
  return [&c](long long t) { return c.inv(Q(2), 2, t); };
}
Weight w_half(PochCache& c) {
  return [&c](long long t) {
    return mul(c.inv(Q(1), 1, t),
               c.inv(M(-1, 0, Rational(1, 2)), Rational(1, 2), 2 * t));
  };
}
Weight w_double(PochCache& c) {
  return [&c](long long t) { return c.inv(Q(1), 1, 2 * t); };
}

// exponent sum N_j^2 + N_{ip} + ... + N_{k1} - m N_1 over k1 chained indices
std::vector<SumLevel> shifted_levels(long k1, long ip, long m) {
  std::vector<SumLevel> v;
  for (long j = 1; j <= k1; ++j) {
    SumLevel l;
    l.quad = Rational(1);
    l.lin = Rational((j >= ip ? 1 : 0) - (j == 1 ? m : 0));
    v.push_back(l);
  }
  return v;
}

long long msum_pad(long m) { return m >= 1 ? ((m - 1) * (m - 1)) / 4 : 0; }

// lowest exponent of the forward-transform coefficient times its multisum
long long fwd_pad(long r) {
  Rational lo(0);
  long lstart = r < 0 ? r + 1 : 0;
  for (long l = lstart; 2 * l <= r; ++l) {
    QPolynomial c = gis_forward_coeff(r, l);
    if (c.is_zero()) continue;
    Rational e = Rational(c.min_exp_s()) - Rational(msum_pad(r - 2 * l));
    if (e < lo) lo = e;
  }
  return -rational_floor(lo);
}

// sum_l fwd_coeff(r,l) * msum(levels with -(r-2l) N_1), cleared by (q;q)_inf
Series fwd_lhs(long k, long r, const Weight& w, const SumLevel* inner_adjust,
               PochCache& cache) {
  std::int64_t P = cache.bound();
  int scale = cache.scale();
  Series acc = Series::zero(scale, P);
  long lstart = r < 0 ? r + 1 : 0;
  for (long l = lstart; 2 * l <= r; ++l) {
    QPolynomial c = gis_forward_coeff(r, l);
    if (c.is_zero()) continue;
    auto levels = shifted_levels(k - 1, 1, r - 2 * l);
    if (inner_adjust) {
      levels.back().quad += inner_adjust->quad;
      levels.back().lin += inner_adjust->lin;
    }
    acc = add(acc, mul(c.to_series(), free_multisum(levels, w, cache)));
  }
  return mul(acc, poch_inf(Q(1), 1, scale, P));
}

// sum_n (a^2 q^{n+1};q)_n q^n/(q;q)_n sum_{N<=n} (aq^{n-N+1};q)_inf q^{tq N^2+tl N} G(N),
// multiplied by (q,q;q)_inf; with the wall table this is the corollary left side
// cleared by (q,q,aq;q)_inf.
Series resid_lhs(PochCache& cache, const Rational& tq, const Rational& tl,
                 const std::function<const Series&(long long)>& G) {
  int scale = cache.scale();
  std::int64_t P = cache.bound();
  long long nmax = P / scale + 1;
  auto wa = poch_inf_table(A(1) * Q(1), 1, nmax, scale, P);
  Rational bq(P, scale);
  TailSum ts(scale, P);
  for (long long n = 0; ts.more() && n <= nmax; ++n) {
    Series inner = Series::zero(scale, P);
    for (long long N = 0; N <= n; ++N) {
      Rational e = tq * Rational(N) * Rational(N) + tl * Rational(N);
      if (e > bq) break;
      inner = add(inner, scale_by(mul(wa[static_cast<std::size_t>(n - N)], G(N)), Q(e)));
    }
    Series t = mul(cache.poch(A(2) * Q(1), 1, 2 * n), cache.inv(A(2) * Q(1), 1, n));
    t = scale_by(t, Q(Rational(n)));
    t = mul(t, cache.inv(Q(1), 1, n));
    ts.feed(mul(t, inner));
  }
  return mul(ts.value(), poch_inf_all({Q(1), Q(1)}, 1, scale, P));
}

// sum_i (-1)^{i+1} a^{i-1} q^{binom(i,2)} (q^i,q^{kappa-i},q^kappa;q^kappa)_inf theta_i
Series rhs_odd(long k, std::int64_t P) {
  long kappa = 2 * k + 1;
  Series rhs = Series::zero(1, P);
  for (long i = 1; i <= kappa - 1; ++i) {
    Series th(1, P);
    long sg = (i % 2 == 0) ? -1 : 1;
    for (long long n = 0;; ++n) {
      long long e = (i * (i - 1)) / 2 + k * n * (kappa * n + 2 * i);
      if (e > P) break;
      th.add_term(e, static_cast<int>(i - 1 + kappa * n), sg);
    }
    rhs = add(rhs, mul(triple_wall(Rational(i), Rational(kappa), 1, P), th));
  }
  return rhs;
}

Series rhs_even(long k, std::int64_t P) {
  long kappa = 2 * k;
  Series rhs = Series::zero(1, P);
  for (long i = 1; i <= kappa - 1; ++i) {
    Series th(1, P);
    long sg = (i % 2 == 0) ? -1 : 1;
    for (long long n = 0;; ++n) {
      long long e = (i * (i - 1)) / 2 + (kappa - 1) * (k * n + i) * n;
      if (e > P) break;
      th.add_term(e, static_cast<int>(i - 1 + kappa * n), (n % 2 == 0) ? sg : -sg);
    }
    rhs = add(rhs, mul(triple_wall(Rational(i), Rational(kappa), 1, P), th));
  }
  return rhs;
}

// half-odd modulus kappa = 2k - 1/2 on the doubled grid
Series rhs_half(long k, std::int64_t P) {
  const int sc = 2;
  Rational kappa(4 * k - 1, 2);
  Rational bq(P, sc);
  Series rhs = Series::zero(sc, P);
  for (long i = 1; i <= 2 * k - 1; ++i) {
    Series th(sc, P);
    long sg = (i % 2 == 0) ? -1 : 1;
    for (long long n = 0;; ++n) {
      Rational e0 = binom2(i) + (kappa - 1) * (kappa * Rational(n) + Rational(i)) * Rational(2 * n);
      if (e0 > bq) break;
      long nsg = (n % 2 == 0) ? sg : -sg;
      th.add_term(to_scaled(e0, sc, "residual theta"), static_cast<int>(i - 1 + (4 * k - 1) * n),
                  nsg);
      Rational e1 = e0 + (kappa - 1) * (kappa - Rational(i)) * Rational(2 * (2 * n + 1));
      if (e1 <= bq)
        th.add_term(to_scaled(e1, sc, "residual theta"),
                    static_cast<int>(i - 1 + (4 * k - 1) * n + 4 * k - 1 - 2 * i), nsg);
    }
    rhs = add(rhs, mul(triple_wall(Rational(i), kappa, sc, P), th));
  }
  return rhs;
}

Series rhs_third(long kappa, std::int64_t P) {
  long w = 2 * kappa - 3;
  Series rhs = Series::zero(1, P);
  for (long i = 1; i <= kappa - 1; ++i) {
    Series br(1, P);
    long sg = (i % 2 == 0) ? -1 : 1;
    long long b2 = (i * (i - 1)) / 2;
    if (b2 <= P) br.add_term(b2, static_cast<int>(i - 1), sg);
    for (long long n = 1;; ++n) {
      long long e = b2 + w * (kappa * n - i) * n;
      if (e > P) break;
      br.add_term(e, static_cast<int>(2 * kappa * n - i - 1), -sg);
      long long e2 = e + 2 * w * i * n;
      if (e2 <= P) br.add_term(e2, static_cast<int>(2 * kappa * n + i - 1), sg);
    }
    Series pi = mul(poch_inf_all({Q(i), Q(2 * kappa - i), Q(2 * kappa)}, 2 * kappa, 1, P),
                    poch_inf_all({Q(2 * kappa - 2 * i), Q(2 * kappa + 2 * i)}, 4 * kappa, 1, P));
    rhs = add(rhs, mul(pi, br));
  }
  return rhs;
}

IdentityCase make_case(std::vector<std::pair<std::string, std::string>> params, ParamSel key,
                       std::function<Sides(std::int64_t)> build, bool conjecture = false) {
  IdentityCase c;
  c.params = std::move(params);
  c.key = key;
  c.conjecture = conjecture;
  c.build = std::move(build);
  return c;
}

// ---- entry builders ----

IdentityCase rr_case(long which) {
  ParamSel key;
  key.i = which;
  return make_case({{"i", std::to_string(which)}}, key, [which](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    Series wall = which == 1 ? poch_inf_all({Q(1), Q(4), Q(5)}, 5, 1, B)
                             : poch_inf_all({Q(2), Q(3), Q(5)}, 5, 1, B);
    return {mul(rr_sum(which - 1, cache), wall), Series::one(1, B)};
  });
}

IdentityCase schur_case(bool dvar, const char* form) {
  std::string f = form;
  return make_case({{"variant", dvar ? "d" : "e"}, {"form", f}}, {},
                   [dvar, f](std::int64_t B) -> Sides {
                     const long nmax = 25;
                     auto table = dvar ? schur_d_table(nmax) : schur_e_table(nmax);
                     Series lhs = Series::zero(1, B), rhs = Series::zero(1, B);
                     for (long n = 0; n <= nmax; ++n) {
                       QPolynomial other;
                       if (f == "alternating")
                         other = dvar ? schur_d_closed(n) : schur_e_closed(n);
                       else if (f == "positive")
                         other = dvar ? schur_d_positive(n) : schur_e_positive(n);
                       else {
                         long s = dvar ? 1 : 2;
                         long b = 2 + static_cast<long>((n + s) % 2);
                         other = x_poly(2, 5, s, b, n);
                       }
                       Series tag = Series::monomial(Monomial::a(static_cast<int>(n)), 1, B);
                       lhs = add(lhs, mul(tag, table[static_cast<std::size_t>(n + 1)].to_series(B)));
                       rhs = add(rhs, mul(tag, other.to_series(B)));
                     }
                     return {lhs, rhs};
                   });
}

IdentityCase gis_case(long m) {
  ParamSel key;
  key.m = m;
  return make_case({{"m", std::to_string(m)}}, key, [m](std::int64_t B) -> Sides {
    std::int64_t c = (m * (m - 1)) / 2;
    std::int64_t P = B + c;
    PochCache cache(1, P);
    Series w1 = poch_inf_all({Q(1), Q(4), Q(5)}, 5, 1, P);
    Series w2 = poch_inf_all({Q(2), Q(3), Q(5)}, 5, 1, P);
    Series lhs = mul(rr_sum(m, cache), mul(w1, w2));
    Series rhs = sub(mul(schur_d(m - 1).to_series(), w2), mul(schur_e(m - 1).to_series(), w1));
    if (m % 2 == 1) rhs = negate(rhs);
    rhs = scale_by(rhs, Q(Rational(-c)));
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  });
}

IdentityCase gis2_case(long i) {
  ParamSel key;
  key.i = i;
  return make_case({{"i", std::to_string(i)}}, key, [i](std::int64_t B) -> Sides {
    std::int64_t pad = 0;
    for (long e = 3 - 2 * i; e < 0; e += 5) pad += -e;
    for (long j = 0; 2 * j <= i; ++j) {
      long long ce = 2 * j * (j - i) + (j * (j + 1)) / 2;
      if (-ce > pad) pad = -ce;
    }
    std::int64_t P = B + pad;
    PochCache cache(1, P);
    Series lhs = poch_inf_all({Q(Rational(3 - 2 * i)), Q(Rational(2 * i + 2)), Q(5)}, 5, 1, P);
    Series rhs = Series::zero(1, P);
    for (long j = 0; 2 * j <= i; ++j) {
      QPolynomial coeff = qp_scale(qbinomial(i - j, j), (j % 2 == 0) ? 1 : -1,
                                   Rational(2 * j * (j - i)) + binom2(j + 1));
      rhs = add(rhs, mul(coeff.to_series(), rr_sum(i - 2 * j, cache)));
    }
    rhs = mul(rhs, poch_inf(Q(1), 1, 1, P));
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  });
}

IdentityCase bp_negm_case(long m) {
  ParamSel key;
  key.m = m;
  return make_case({{"m", std::to_string(m)}}, key, [m](std::int64_t B) -> Sides {
    std::int64_t P = B + (m * m) / 4 + 2;
    PochCache cache(1, P);
    Series w1 = poch_inf_all({Q(1), Q(4), Q(5)}, 5, 1, P);
    Series w2 = poch_inf_all({Q(2), Q(3), Q(5)}, 5, 1, P);
    TailSum ts(1, P);
    for (long long r = 0; ts.more() && r <= P + m; ++r)
      ts.feed(scale_by(cache.inv(Q(1), 1, r), Q(Rational(r) * Rational(r - m))));
    Series lhs = mul(ts.value(), mul(w1, w2));
    Series rhs =
        add(mul(rev_series(schur_e(m)), w2), mul(rev_series(schur_d(m)), w1));
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  });
}

IdentityCase ag_case(long k, long i) {
  ParamSel key;
  key.k = k;
  key.i = i;
  return make_case({{"k", std::to_string(k)}, {"i", std::to_string(i)}}, key,
                   [k, i](std::int64_t B) -> Sides {
                     long kappa = 2 * k + 1;
                     PochCache cache(1, B);
                     Series lhs = poch_inf(Q(1), 1, 1, B);
                     if (k > 1)
                       lhs = mul(lhs, free_multisum(shifted_levels(k - 1, i, 0),
                                                    w_plain(cache), cache));
                     return {lhs, triple_wall(Rational(i), Rational(kappa), 1, B)};
                   });
}

IdentityCase xdual_case(long p, long pp, long s, long n) {
  return make_case({{"p", std::to_string(p)},
                    {"pp", std::to_string(pp)},
                    {"s", std::to_string(s)},
                    {"n", std::to_string(n)}},
                   {}, [p, pp, s, n](std::int64_t B) -> Sides {
                     Series lhs = x_poly(p, pp, s, 1, n).to_series(B);
                     Series rhs = x_poly_dual_form(p, pp, s, n).to_series(B);
                     return {lhs, rhs};
                   });
}

IdentityCase eqbp_case(long k, long ip, long m) {
  ParamSel key;
  key.k = k;
  key.ip = ip;
  key.m = m;
  return make_case(
      {{"k", std::to_string(k)}, {"ip", std::to_string(ip)}, {"m", std::to_string(m)}}, key,
      [k, ip, m](std::int64_t B) -> Sides {
        long kappa = 2 * k + 1;
        std::int64_t pad = msum_pad(m);
        for (long i = 1; i <= kappa - 1; ++i) {
          if ((i + ip + m) % 2 != 0) continue;
          QPolynomial x = x_poly(2, kappa, i, ip, m);
          if (!x.is_zero() && x.max_exp_s() > pad) pad = x.max_exp_s();
        }
        std::int64_t P = B + pad + 2;
        PochCache cache(1, P);
        Series lhs = poch_inf(Q(1), 1, 1, P);
        if (k > 1)
          lhs = mul(lhs, free_multisum(shifted_levels(k - 1, ip, m), w_plain(cache), cache));
        Series rhs = Series::zero(1, P);
        for (long i = 1; i <= kappa - 1; ++i) {
          if ((i + ip + m) % 2 != 0) continue;
          rhs = add(rhs, mul(triple_wall(Rational(i), Rational(kappa), 1, P),
                             x_rev(2, kappa, i, ip, m)));
        }
        lhs.restrict_bound(B);
        rhs.restrict_bound(B);
        return {lhs, rhs};
      });
}

IdentityCase eqcor2_case(long k) {
  ParamSel key;
  key.k = k;
  return make_case({{"k", std::to_string(k)}}, key, [k](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    ChainSum chain(std::vector<std::pair<Rational, Rational>>(
                       static_cast<std::size_t>(k - 2), {Rational(1), Rational(1)}),
                   w_plain(cache), cache);
    Series lhs = resid_lhs(cache, Rational(1), Rational(1),
                           [&chain](long long t) -> const Series& { return chain.at(t); });
    return {lhs, rhs_odd(k, B)};
  });
}

IdentityCase rplus_case(long k, long r, bool allr) {
  ParamSel key;
  key.k = k;
  key.r = r;
  return make_case({{"k", std::to_string(k)}, {"r", std::to_string(r)}}, key,
                   [k, r](std::int64_t B) -> Sides {
                     long kappa = 2 * k + 1;
                     std::int64_t pad = fwd_pad(r);
                     for (long e = kappa - r - 1; e < 0; e += kappa) pad += -e;
                     std::int64_t P = B + pad + 2;
                     PochCache cache(1, P);
                     Series lhs = fwd_lhs(k, r, w_plain(cache), nullptr, cache);
                     Series rhs = triple_wall(Rational(r + 1), Rational(kappa), 1, P);
                     lhs.restrict_bound(B);
                     rhs.restrict_bound(B);
                     return {lhs, rhs};
                   });
}

IdentityCase inv_case(long k, long m) {
  ParamSel key;
  key.k = k;
  key.m = m;
  return make_case({{"k", std::to_string(k)}, {"m", std::to_string(m)}, {"form", "sum"}}, key,
                   [k, m](std::int64_t B) -> Sides {
                     long kappa = 2 * k + 1;
                     std::int64_t P = B + 32;
                     PochCache cache(1, P);
                     Series lhs = poch_inf(Q(1), 1, 1, P);
                     if (k > 1)
                       lhs = mul(lhs,
                                 free_multisum(shifted_levels(k - 1, 1, m), w_plain(cache), cache));
                     Series rhs = Series::zero(1, P);
                     for (long j = 0; 2 * j <= m; ++j) {
                       Series c = mul(cache.poch(Q(1), 1, m), cache.inv(Q(1), 1, j));
                       c = mul(c, cache.inv(Q(1), 1, m - j + 1));
                       Series fac(1, P);
                       fac.add_term(0, 0, 1);
                       fac.add_term(m - 2 * j + 1, 0, -1);
                       c = mul(c, fac);
                       c = scale_by(c, Q(Rational(j * (j - m + 1))));
                       Series w = triple_wall(Rational(m - 2 * j + 1), Rational(kappa), 1, P);
                       rhs = add(rhs, mul(c, w));
                     }
                     lhs.restrict_bound(B);
                     rhs.restrict_bound(B);
                     return {lhs, rhs};
                   });
}

IdentityCase inv_folded_case(long k, long m) {
  ParamSel key;
  key.k = k;
  key.m = m;
  return make_case({{"k", std::to_string(k)}, {"m", std::to_string(m)}, {"form", "folded"}}, key,
                   [k, m](std::int64_t B) -> Sides {
                     long kappa = 2 * k + 1;
                     std::int64_t P = B + 32;
                     PochCache cache(1, P);
                     Series lhs = Series::zero(1, P);
                     for (long j = 0; 2 * j <= m; ++j) {
                       Series c = mul(cache.poch(Q(1), 1, m), cache.inv(Q(1), 1, j));
                       c = mul(c, cache.inv(Q(1), 1, m - j + 1));
                       Series fac(1, P);
                       fac.add_term(0, 0, 1);
                       fac.add_term(m - 2 * j + 1, 0, -1);
                       c = mul(c, fac);
                       c = scale_by(c, Q(Rational(j * (j - m + 1))));
                       lhs = add(lhs, mul(c, triple_wall(Rational(m - 2 * j + 1),
                                                         Rational(kappa), 1, P)));
                     }
                     Series rhs = Series::zero(1, P);
                     for (long j = 1; j <= m + 1; ++j) {
                       if ((m + j) % 2 == 0) continue;
                       Series c = mul(cache.poch(Q(1), 1, m), cache.inv(Q(1), 1, (m - j + 1) / 2));
                       c = mul(c, cache.inv(Q(1), 1, (m + j + 1) / 2));
                       Series fac(1, P);
                       fac.add_term(0, 0, 1);
                       fac.add_term(j, 0, -1);
                       c = mul(c, fac);
                       c = scale_by(c, Q(Rational((j - m - 1) * (j + m - 3), 4)));
                       rhs = add(rhs, mul(c, triple_wall(Rational(j), Rational(kappa), 1, P)));
                     }
                     lhs.restrict_bound(B);
                     rhs.restrict_bound(B);
                     return {lhs, rhs};
                   });
}

// --- even modulus family (kappa = 2k) ---

IdentityCase t2_cor_case(long k) {
  ParamSel key;
  key.k = k;
  return make_case({{"form", "residual"}, {"k", std::to_string(k)}}, key,
                   [k](std::int64_t B) -> Sides {
                     PochCache cache(1, B);
                     ChainSum chain(std::vector<std::pair<Rational, Rational>>(
                                        static_cast<std::size_t>(k - 2),
                                        {Rational(1), Rational(1)}),
                                    w_even(cache), cache);
                     Series lhs =
                         resid_lhs(cache, Rational(1), Rational(1),
                                   [&chain](long long t) -> const Series& { return chain.at(t); });
                     return {lhs, rhs_even(k, B)};
                   });
}

IdentityCase t2_r_case(long k, long r) {
  ParamSel key;
  key.k = k;
  key.r = r;
  return make_case({{"form", "coeff"}, {"k", std::to_string(k)}, {"r", std::to_string(r)}}, key,
                   [k, r](std::int64_t B) -> Sides {
                     long kappa = 2 * k;
                     std::int64_t pad = fwd_pad(r);
                     for (long e = kappa - r - 1; e < 0; e += kappa) pad += -e;
                     std::int64_t P = B + pad + 2;
                     PochCache cache(1, P);
                     Series lhs = fwd_lhs(k, r, w_even(cache), nullptr, cache);
                     Series rhs = triple_wall(Rational(r + 1), Rational(kappa), 1, P);
                     lhs.restrict_bound(B);
                     rhs.restrict_bound(B);
                     return {lhs, rhs};
                   });
}

IdentityCase t2_x_case(long k, long ip, long m) {
  ParamSel key;
  key.k = k;
  key.ip = ip;
  key.m = m;
  return make_case({{"form", "x"},
                    {"k", std::to_string(k)},
                    {"ip", std::to_string(ip)},
                    {"m", std::to_string(m)}},
                   key,
                   [k, ip, m](std::int64_t B) -> Sides {
                     long kappa = 2 * k;
                     std::int64_t pad = msum_pad(m);
                     for (long i = 1; i <= kappa - 1; ++i) {
                       if ((i + ip + m) % 2 != 0) continue;
                       QPolynomial x = x_poly(2, kappa, i, ip, m);
                       if (!x.is_zero() && x.max_exp_s() > pad) pad = x.max_exp_s();
                     }
                     std::int64_t P = B + pad + 2;
                     PochCache cache(1, P);
                     Series lhs =
                         mul(poch_inf(Q(1), 1, 1, P),
                             free_multisum(shifted_levels(k - 1, ip, m), w_even(cache), cache));
                     Series rhs = Series::zero(1, P);
                     for (long i = 1; i <= kappa - 1; ++i) {
                       if ((i + ip + m) % 2 != 0) continue;
                       rhs = add(rhs, mul(triple_wall(Rational(i), Rational(kappa), 1, P),
                                          x_rev(2, kappa, i, ip, m)));
                     }
                     lhs.restrict_bound(B);
                     rhs.restrict_bound(B);
                     return {lhs, rhs};
                   },
                   ip > 1);
}

// --- half-odd modulus family (kappa = 2k - 1/2, doubled grid) ---

IdentityCase cor4_case(long k) {
  ParamSel key;
  key.k = k;
  return make_case({{"k", std::to_string(k)}}, key, [k](std::int64_t B) -> Sides {
    PochCache cache(2, B);
    ChainSum chain(std::vector<std::pair<Rational, Rational>>(
                       static_cast<std::size_t>(k - 2), {Rational(1), Rational(1)}),
                   w_half(cache), cache);
    Series lhs = resid_lhs(cache, Rational(1), Rational(1),
                           [&chain](long long t) -> const Series& { return chain.at(t); });
    return {lhs, rhs_half(k, B)};
  });
}

IdentityCase t3_r_case(long k, long r) {
  ParamSel key;
  key.k = k;
  key.r = r;
  return make_case({{"form", "coeff"}, {"k", std::to_string(k)}, {"r", std::to_string(r)}}, key,
                   [k, r](std::int64_t B) -> Sides {
                     const int sc = 2;
                     Rational kappa(4 * k - 1, 2);
                     std::int64_t pad = sc * fwd_pad(r);
                     for (Rational e = kappa - Rational(r + 1); e < Rational(0); e += kappa)
                       pad += to_scaled(Rational(0) - e, sc, "pad");
                     std::int64_t P = B + pad + 2;
                     PochCache cache(sc, P);
                     Series lhs = fwd_lhs(k, r, w_half(cache), nullptr, cache);
                     Series rhs = triple_wall(Rational(r + 1), kappa, sc, P);
                     lhs.restrict_bound(B);
                     rhs.restrict_bound(B);
                     return {lhs, rhs};
                   });
}

IdentityCase t3_x_case(long k, long ip, long m) {
  ParamSel key;
  key.k = k;
  key.ip = ip;
  key.m = m;
  return make_case({{"form", "x"},
                    {"k", std::to_string(k)},
                    {"ip", std::to_string(ip)},
                    {"m", std::to_string(m)}},
                   key,
                   [k, ip, m](std::int64_t B) -> Sides {
                     const int sc = 2;
                     Rational kappa(4 * k - 1, 2);
                     long pp = 4 * k - 1;
                     std::int64_t pad = sc * msum_pad(m);
                     for (long i = 1; i <= 2 * pp / 2; ++i) {
                       if (i > pp - 1) break;
                       if ((i + ip + m) % 2 != 0) continue;
                       QPolynomial x = x_poly(4, pp, i, ip, m);
                       if (!x.is_zero() && sc * x.max_exp_s() > pad) pad = sc * x.max_exp_s();
                     }
                     for (long i = 1; i <= pp - 1; ++i) {
                       if ((i + ip + m) % 2 != 0) continue;
                       std::int64_t d = 0;
                       for (Rational e = kappa - Rational(i); e < Rational(0); e += kappa)
                         d += to_scaled(Rational(0) - e, sc, "pad");
                       if (d > 0) pad += d;
                     }
                     std::int64_t P = B + pad + 2;
                     PochCache cache(sc, P);
                     Series lhs =
                         mul(poch_inf(Q(1), 1, sc, P),
                             free_multisum(shifted_levels(k - 1, ip, m), w_half(cache), cache));
                     Series rhs = Series::zero(sc, P);
                     for (long i = 1; i <= pp - 1; ++i) {
                       if ((i + ip + m) % 2 != 0) continue;
                       Series xr = regrid(x_rev(4, pp, i, ip, m), sc);
                       rhs = add(rhs, mul(triple_wall(Rational(i), kappa, sc, P), xr));
                     }
                     lhs.restrict_bound(B);
                     rhs.restrict_bound(B);
                     return {lhs, rhs};
                   },
                   ip > 1);
}

IdentityCase rogers_false_case() {
  return make_case({}, {}, [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = scale_by(cache.inv(Q(1), 2, n + 1), Q(Rational(n * (n + 1))));
      if (n % 2 == 1) t = negate(t);
      ts.feed(t);
    }
    Series rhs = Series::one(1, B);
    for (long long n = 1; 3 * n * n - 2 * n <= B; ++n) {
      long sg = (n % 2 == 0) ? 1 : -1;
      if (3 * n * n + 2 * n <= B) rhs.add_term(3 * n * n + 2 * n, 0, sg);
      rhs.add_term(3 * n * n - 2 * n, 0, -sg);
    }
    return {ts.value(), rhs};
  });
}

// --- cubic-range family (kappa = 3k - sigma - 1) ---

IdentityCase c3_case(long sigma, long k) {
  ParamSel key;
  key.sigma = sigma;
  key.k = k;
  return make_case({{"sigma", std::to_string(sigma)}, {"k", std::to_string(k)}}, key,
                   [sigma, k](std::int64_t B) -> Sides {
                     long kappa = 3 * k - sigma - 1;
                     PochCache cache(1, B);
                     std::vector<std::pair<Rational, Rational>> levels;
                     Rational tq(1), tl(1);
                     if (k == 2) {
                       tq = Rational(1 + sigma);
                       tl = Rational(1 - sigma);
                     } else {
                       levels.assign(static_cast<std::size_t>(k - 3),
                                     {Rational(1), Rational(1)});
                       levels.insert(levels.begin(),
                                     {Rational(1 + sigma), Rational(1 - sigma)});
                     }
                     ChainSum chain(levels, w_double(cache), cache);
                     Series lhs =
                         resid_lhs(cache, tq, tl,
                                   [&chain](long long t) -> const Series& { return chain.at(t); });
                     return {lhs, rhs_third(kappa, B)};
                   });
}

IdentityCase t45_r_case(long sigma, long k, long r) {
  ParamSel key;
  key.sigma = sigma;
  key.k = k;
  key.r = r;
  return make_case({{"form", "coeff"},
                    {"sigma", std::to_string(sigma)},
                    {"k", std::to_string(k)},
                    {"r", std::to_string(r)}},
                   key, [sigma, k, r](std::int64_t B) -> Sides {
                     long kappa = 3 * k - sigma - 1;
                     std::int64_t pad = fwd_pad(r);
                     for (long e = 2 * kappa - r - 1; e < 0; e += 2 * kappa) pad += -e;
                     for (long e = 2 * kappa - 2 * r - 2; e < 0; e += 4 * kappa) pad += -e;
                     std::int64_t P = B + pad + 2;
                     PochCache cache(1, P);
                     SumLevel adj;
                     adj.quad = Rational(sigma);
                     adj.lin = Rational(-sigma);
                     Series lhs = fwd_lhs(k, r, w_double(cache), &adj, cache);
                     Series rhs =
                         mul(poch_inf_all({Q(Rational(r + 1)), Q(Rational(2 * kappa - r - 1)),
                                           Q(2 * kappa)},
                                          2 * kappa, 1, P),
                             poch_inf_all({Q(Rational(2 * kappa - 2 * r - 2)),
                                           Q(Rational(2 * kappa + 2 * r + 2))},
                                          4 * kappa, 1, P));
                     lhs.restrict_bound(B);
                     rhs.restrict_bound(B);
                     return {lhs, rhs};
                   });
}

IdentityCase t45_x_case(long sigma, long k, long ip, long m) {
  ParamSel key;
  key.sigma = sigma;
  key.k = k;
  key.ip = ip;
  key.m = m;
  return make_case({{"form", "x"},
                    {"sigma", std::to_string(sigma)},
                    {"k", std::to_string(k)},
                    {"ip", std::to_string(ip)},
                    {"m", std::to_string(m)}},
                   key,
                   [sigma, k, ip, m](std::int64_t B) -> Sides {
                     long kappa = 3 * k - sigma - 1;
                     std::int64_t pad = msum_pad(m);
                     for (long i = 1; i <= kappa - 1; ++i) {
                       if ((i + ip + m) % 2 != 0) continue;
                       QPolynomial x = x_poly(3, kappa, i, ip, m);
                       if (!x.is_zero() && x.max_exp_s() > pad) pad = x.max_exp_s();
                     }
                     std::int64_t P = B + pad + 2;
                     PochCache cache(1, P);
                     auto levels = shifted_levels(k - 1, ip, m);
                     levels.back().quad += Rational(sigma);
                     levels.back().lin += Rational(-sigma);
                     Series lhs = mul(poch_inf(Q(1), 1, 1, P),
                                      free_multisum(levels, w_double(cache), cache));
                     Series rhs = Series::zero(1, P);
                     for (long i = 1; i <= kappa - 1; ++i) {
                       if ((i + ip + m) % 2 != 0) continue;
                       Series w = mul(
                           poch_inf_all({Q(i), Q(2 * kappa - i), Q(2 * kappa)}, 2 * kappa, 1, P),
                           poch_inf_all({Q(2 * kappa - 2 * i), Q(2 * kappa + 2 * i)}, 4 * kappa,
                                        1, P));
                       rhs = add(rhs, mul(w, x_rev(3, kappa, i, ip, m)));
                     }
                     lhs.restrict_bound(B);
                     rhs.restrict_bound(B);
                     return {lhs, rhs};
                   },
                   ip > 1);
}

// --- simple residual specializations ---

IdentityCase res_nnb_case(bool at_one) {
  return make_case({{"a", at_one ? "1" : "a"}}, {}, [at_one](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    Series one_minus_q(1, B);
    one_minus_q.add_term(0, 0, 1);
    one_minus_q.add_term(1, 0, -1);
    if (at_one) {
      TailSum ts(1, B);
      for (long long n = 0; ts.more() && n <= B; ++n) {
        Series t = mul(cache.poch(Q(1), 1, 2 * n), cache.inv(Q(1), 1, n));
        t = scale_by(t, Q(Rational(n)));
        t = mul(t, pow(cache.inv(Q(1), 1, n), 2));
        t = mul(t, cache.inv(Q(2), 1, n));
        ts.feed(t);
      }
      Series lhs = mul(ts.value(), mul(one_minus_q,
                                       mul(pow(poch_inf(Q(1), 1, 1, B), 2),
                                           poch_inf(Q(2), 1, 1, B))));
      Series rhs = Series::one(1, B);
      for (long long n = 1; n * (n + 1) / 2 <= B; ++n)
        rhs.add_term(n * (n + 1) / 2, 0, (n % 2 == 0) ? 2 : -2);
      return {lhs, rhs};
    }
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(A(2) * Q(1), 1, 2 * n), cache.inv(A(2) * Q(1), 1, n));
      t = scale_by(t, Q(Rational(n)));
      t = mul(t, cache.inv(Q(1), 1, n));
      t = mul(t, cache.inv(A(1) * Q(1), 1, n));
      t = mul(t, cache.inv(A(1) * Q(2), 1, n));
      ts.feed(t);
    }
    Series walls = poch_inf_all({Q(1), A(1) * Q(1), A(1) * Q(2)}, 1, 1, B);
    Series lhs = mul(ts.value(), mul(one_minus_q, walls));
    Series rhs = Series::one(1, B);
    for (long long n = 1; n * (n + 1) / 2 <= B; ++n) {
      long sg = (n % 2 == 0) ? 1 : -1;
      rhs.add_term(n * (n + 1) / 2, static_cast<int>(n), sg);
      rhs.add_term(n * (n + 1) / 2, static_cast<int>(n - 1), sg);
    }
    return {lhs, rhs};
  });
}

IdentityCase res_k0_case() {
  return make_case({}, {}, [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto atab = poch_inf_table(A(1), 1, B + 1, 1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = cache.poch(A(2), 1, 2 * n);
      t = mul(t, atab[static_cast<std::size_t>(n)]);
      t = scale_by(t, Q(Rational(n)));
      t = mul(t, cache.inv(Q(1), 1, n));
      t = mul(t, cache.inv(A(1) * Q(1), 1, n));
      t = mul(t, cache.inv(A(2) * Q(1), 1, n));
      ts.feed(t);
    }
    Series lhs = mul(ts.value(), mul(poch_inf(Q(1), 1, 1, B),
                                     pow(poch_inf(A(1) * Q(1), 1, 1, B), 2)));
    Series th(1, B);
    for (long long n = 0; n * (n + 1) / 2 <= B; ++n)
      th.add_term(n * (n + 1) / 2, static_cast<int>(n), (n % 2 == 0) ? 1 : -1);
    return {lhs, mul(atab[0], th)};
  });
}

IdentityCase res_eqk0_case() {
  return make_case({}, {}, [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(A(2) * Q(1), 1, 2 * n), cache.inv(A(2) * Q(1), 1, n));
      t = scale_by(t, Q(Rational(n)));
      t = mul(t, cache.inv(Q(1), 1, n));
      t = mul(t, pow(cache.inv(A(1) * Q(1), 1, n), 2));
      ts.feed(t);
    }
    Series lhs = mul(ts.value(), mul(poch_inf(Q(1), 1, 1, B),
                                     pow(poch_inf(A(1) * Q(1), 1, 1, B), 2)));
    Series th(1, B);
    for (long long n = 0; n * (n + 1) / 2 <= B; ++n)
      th.add_term(n * (n + 1) / 2, static_cast<int>(n), (n % 2 == 0) ? 1 : -1);
    return {lhs, pow(th, 2)};
  });
}

IdentityCase phi32_squared_case() {
  return make_case({}, {}, [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    Series w = mul(poch_inf(Q(1), 1, 1, B), pow(poch_inf(A(1) * Q(1), 1, 1, B), 2));
    auto phi = [&](const Monomial& top) {
      TailSum ts(1, B);
      for (long long n = 0; ts.more() && n <= B; ++n) {
        Series t = mul(cache.poch(top, 1, n), cache.poch(A(2) * Q(1), 2, n));
        t = scale_by(t, Q(Rational(n)));
        t = mul(t, cache.inv(Q(1), 1, n));
        t = mul(t, cache.inv(A(1) * Q(1), 1, n));
        t = mul(t, cache.inv(A(2) * Q(1), 1, n));
        ts.feed(t);
      }
      return ts.value();
    };
    Series lhs = pow(mul(w, phi(M(-1, 1, 0))), 2);
    Series rhs = mul(w, phi(M(-1, 1, 1)));
    return {lhs, rhs};
  });
}

IdentityCase res_ft_case(bool transformed) {
  return make_case({{"form", transformed ? "alternating" : "direct"}}, {},
                   [transformed](std::int64_t B) -> Sides {
                     PochCache cache(1, B);
                     Series lhs = Series::zero(1, B);
                     if (transformed) {
                       TailSum ts(1, B);
                       for (long long n = 0; ts.more() && n <= B; ++n) {
                         Series t = cache.inv(M(-1, 1, 1), 1, n + 1);
                         t = scale_by(t, Monomial{(n % 2 == 0) ? 1 : -1,
                                                  static_cast<int>(2 * n),
                                                  Rational(n * (n + 1), 2)});
                         ts.feed(t);
                       }
                       lhs = ts.value();
                     } else {
                       TailSum ts(1, B);
                       for (long long n = 0; ts.more() && n <= B; ++n) {
                         Series t = cache.poch(M(-1, 1, 1), 1, n);
                         t = scale_by(t, Q(Rational(n)));
                         t = mul(t, cache.inv(Q(1), 1, n));
                         t = mul(t, cache.inv(A(2) * Q(1), 1, n));
                         ts.feed(t);
                       }
                       lhs = mul(ts.value(),
                                 mul(poch_inf(Q(1), 1, 1, B), poch_inf(A(2) * Q(1), 1, 1, B)));
                     }
                     Series br = Series::one(1, B);
                     for (long long n = 1; n * (3 * n - 1) / 2 <= B; ++n) {
                       std::int64_t e = n * (3 * n - 1) / 2;
                       br.add_term(e, static_cast<int>(3 * n - 2), -1);
                       br.add_term(e, static_cast<int>(3 * n - 1), -1);
                       if (e + n <= B) {
                         br.add_term(e + n, static_cast<int>(3 * n - 1), 1);
                         br.add_term(e + n, static_cast<int>(3 * n), 1);
                       }
                     }
                     Series rhs =
                         transformed ? br : mul(poch_inf(M(-1, 1, 1), 1, 1, B), br);
                     return {lhs, rhs};
                   });
}

Series false_theta6(std::int64_t B) {
  Series s = Series::one(1, B);
  for (long long n = 1; 3 * n * n - n <= B; ++n) {
    if (3 * n * n + n <= B) s.add_term(3 * n * n + n, 0, 1);
    s.add_term(3 * n * n - n, 0, -1);
  }
  return s;
}

Series fth_lhs(std::int64_t B, bool shifted, PochCache& cache) {
  // shifted: (-q^2;q^2)_{n+1} in the denominator, else (-q^2;q^2)_n
  TailSum ts(1, B);
  for (long long n = 0; ts.more() && n <= B; ++n) {
    Series t = cache.inv(M(-1, 0, 2), 2, shifted ? n + 1 : n);
    t = scale_by(t, Q(Rational(n * (n + 1))));
    if (n % 2 == 1) t = negate(t);
    ts.feed(t);
  }
  return ts.value();
}

IdentityCase fth_case() {
  return make_case({}, {}, [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    Series rhs = false_theta6(B);
    rhs = add(rhs, sub(false_theta6(B), Series::one(1, B)));
    return {fth_lhs(B, true, cache), rhs};
  });
}

IdentityCase f6_case(bool relation) {
  return make_case({{"check", relation ? "relation" : "value"}}, {},
                   [relation](std::int64_t B) -> Sides {
                     PochCache cache(1, B);
                     if (!relation) return {fth_lhs(B, false, cache), false_theta6(B)};
                     Series lhs = sub(fth_lhs(B, true, cache), fth_lhs(B, false, cache));
                     Series rhs = sub(fth_lhs(B, false, cache), Series::one(1, B));
                     return {lhs, rhs};
                   });
}

}  // namespace

void register_gis(std::vector<IdentityEntry>& out) {
  {
    IdentityEntry e;
    e.id = "rr";
    e.summary = "the two Rogers-Ramanujan sums against their modulus-five products";
    e.cleared_by = "(q,q^4;q^5)_inf resp. (q^2,q^3;q^5)_inf";
    e.truncation = "summand exponent r^2 resp. r(r+1)";
    e.cases = [](Profile) {
      return std::vector<IdentityCase>{rr_case(1), rr_case(2)};
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "schur-rep";
    e.summary = "four representations of the Schur polynomials agree through n=25";
    e.cleared_by = "";
    e.truncation = "finite polynomials, tagged by a^n";
    e.quick_order = 170;
    e.full_order = 170;
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (int dvar = 0; dvar <= 1; ++dvar)
        for (const char* f : {"alternating", "positive", "x"})
          v.push_back(schur_case(dvar == 1, f));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "gis";
    e.summary = "shifted Rogers-Ramanujan sum split over both moduli with Schur weights";
    e.cleared_by = "(q,q^4;q^5)_inf (q^2,q^3;q^5)_inf";
    e.truncation = "summand exponent r(r+m)";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (long m = 0; m <= 8; ++m) v.push_back(gis_case(m));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "gis2";
    e.summary = "inverse expansion of the modulus-five product in shifted sums";
    e.cleared_by = "(q;q)_inf";
    e.truncation = "summand exponent r(r+i-2j)";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (long i = 0; i <= 8; ++i) v.push_back(gis2_case(i));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "bp-negm";
    e.summary = "negatively shifted sum with reciprocal Schur polynomial weights";
    e.cleared_by = "(q,q^4;q^5)_inf (q^2,q^3;q^5)_inf";
    e.truncation = "summand exponent r(r-m)";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (long m = 0; m <= 8; ++m) v.push_back(bp_negm_case(m));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "andrews-gordon";
    e.summary = "chained multisum equals the odd-modulus triple product";
    e.cleared_by = "(q;q)_inf";
    e.truncation = "quadratic multisum exponent";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (long k = 1; k <= 3; ++k)
        for (long i = 1; i <= k; ++i) v.push_back(ag_case(k, i));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "xdual";
    e.summary = "configuration polynomial duality under q -> 1/q";
    e.cleared_by = "";
    e.truncation = "finite polynomials";
    e.quick_order = 170;
    e.full_order = 170;
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(xdual_case(1, 4, 1, 4));
      v.push_back(xdual_case(1, 4, 1, 8));
      v.push_back(xdual_case(2, 5, 1, 4));
      v.push_back(xdual_case(2, 5, 1, 8));
      v.push_back(xdual_case(2, 5, 2, 5));
      v.push_back(xdual_case(2, 5, 2, 9));
      v.push_back(xdual_case(2, 7, 3, 6));
      v.push_back(xdual_case(2, 7, 3, 10));
      v.push_back(xdual_case(3, 7, 2, 7));
      v.push_back(xdual_case(3, 8, 3, 8));
      v.push_back(xdual_case(4, 9, 2, 9));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "eqbp";
    e.summary = "shifted chained multisum as a configuration-polynomial combination";
    e.cleared_by = "(q;q)_inf";
    e.truncation = "quadratic multisum exponent minus m N_1";
    e.cases = [](Profile p) {
      std::vector<IdentityCase> v;
      std::vector<long> ms = p == Profile::quick ? std::vector<long>{0, 1, 2, 8}
                                                 : std::vector<long>{0, 1, 2, 3, 4, 5, 6, 7, 8};
      for (long k = 1; k <= 3; ++k)
        for (long ip = 1; ip <= k; ++ip)
          for (long m : ms) v.push_back(eqbp_case(k, ip, m));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "eqcor2";
    e.summary = "residual corollary of the odd-modulus theorem family";
    e.cleared_by = "(q,q,aq;q)_inf";
    e.truncation = "left terms carry q^n; right thetas quadratic";
    e.cases = [](Profile) {
      return std::vector<IdentityCase>{eqcor2_case(2), eqcor2_case(3)};
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "rplus";
    e.summary = "forward-transformed shifted multisums collapse to one triple product";
    e.cleared_by = "(q;q)_inf";
    e.truncation = "quadratic multisum exponent";
    e.cases = [](Profile p) {
      std::vector<IdentityCase> v;
      if (p == Profile::quick) {
        for (long r : {0, 1, 2, 3, 10}) v.push_back(rplus_case(2, r, false));
        for (long r : {0, 1, 2}) v.push_back(rplus_case(3, r, false));
      } else {
        for (long r = 0; r <= 10; ++r) v.push_back(rplus_case(2, r, false));
        for (long r = 0; r <= 6; ++r) v.push_back(rplus_case(3, r, false));
      }
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "rplus-allr";
    e.summary = "all-integer extension of the forward-transformed collapse";
    e.cleared_by = "(q;q)_inf";
    e.truncation = "quadratic multisum exponent";
    e.cases = [](Profile p) {
      std::vector<IdentityCase> v;
      std::vector<long> rs = p == Profile::quick ? std::vector<long>{-6, -3, -1, 0, 2, 10}
                                                 : std::vector<long>{-6, -5, -4, -3, -2, -1, 0, 1,
                                                                     2,  3,  4,  5,  6,  7, 8, 9,
                                                                     10};
      for (long r : rs) v.push_back(rplus_case(2, r, true));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "inv";
    e.summary = "backward transform of the collapse, in raw and folded forms";
    e.cleared_by = "(q;q)_inf";
    e.truncation = "quadratic multisum exponent minus m N_1";
    e.cases = [](Profile p) {
      std::vector<IdentityCase> v;
      long mmax = p == Profile::quick ? 4 : 6;
      for (long k = 2; k <= 3; ++k)
        for (long m = 0; m <= mmax; ++m) v.push_back(inv_case(k, m));
      for (long m = 0; m <= mmax; ++m) v.push_back(inv_folded_case(2, m));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "t2-gis";
    e.summary = "even-modulus residual corollary with its transform and dual expansion";
    e.cleared_by = "(q,q,aq;q)_inf resp. (q;q)_inf";
    e.truncation = "left terms carry q^n; multisums quadratic";
    e.cases = [](Profile p) {
      std::vector<IdentityCase> v;
      if (p == Profile::quick) {
        v.push_back(t2_cor_case(2));
        for (long r : {0, 1, 2, 4}) v.push_back(t2_r_case(2, r));
        for (long m : {0, 1, 2}) v.push_back(t2_x_case(2, 1, m));
        for (long m : {0, 1}) v.push_back(t2_x_case(2, 2, m));
      } else {
        v.push_back(t2_cor_case(2));
        v.push_back(t2_cor_case(3));
        for (long r = 0; r <= 8; ++r) v.push_back(t2_r_case(2, r));
        for (long k = 2; k <= 3; ++k)
          for (long ip = 1; ip <= k; ++ip)
            for (long m = 0; m <= 6; ++m) v.push_back(t2_x_case(k, ip, m));
      }
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "cor4";
    e.summary = "half-odd-modulus residual corollary on the doubled grid";
    e.cleared_by = "(q,q,aq;q)_inf";
    e.truncation = "left terms carry q^n; right thetas quadratic";
    e.scale = 2;
    e.full_order = 40;
    e.cases = [](Profile) {
      return std::vector<IdentityCase>{cor4_case(2), cor4_case(3)};
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "t3-gis";
    e.summary = "half-odd-modulus transform and dual expansion on the doubled grid";
    e.cleared_by = "(q;q)_inf";
    e.truncation = "quadratic multisum exponent";
    e.scale = 2;
    e.full_order = 40;
    e.cases = [](Profile p) {
      std::vector<IdentityCase> v;
      if (p == Profile::quick) {
        for (long r : {0, 1, 2, 4}) v.push_back(t3_r_case(2, r));
        for (long m : {0, 1, 2}) v.push_back(t3_x_case(2, 1, m));
        for (long m : {0, 1}) v.push_back(t3_x_case(2, 2, m));
      } else {
        for (long r = 0; r <= 8; ++r) v.push_back(t3_r_case(2, r));
        for (long ip = 1; ip <= 2; ++ip)
          for (long m = 0; m <= 6; ++m) v.push_back(t3_x_case(2, ip, m));
      }
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "rogers-false";
    e.summary = "alternating odd-base sum equals a false theta of modulus twelve";
    e.cleared_by = "";
    e.truncation = "summand exponent n(n+1)";
    e.cases = [](Profile) { return std::vector<IdentityCase>{rogers_false_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "c3";
    e.summary = "residual corollary of the cubic-range theorems, both offsets";
    e.cleared_by = "(q,q,aq;q)_inf";
    e.truncation = "left terms carry q^n; right thetas quadratic";
    e.full_order = 40;
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (long sigma = 0; sigma <= 1; ++sigma)
        for (long k = 2; k <= 3; ++k) v.push_back(c3_case(sigma, k));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "t45-gis";
    e.summary = "cubic-range transform and dual expansion, both offsets";
    e.cleared_by = "(q;q)_inf";
    e.truncation = "quadratic multisum exponent";
    e.full_order = 40;
    e.cases = [](Profile p) {
      std::vector<IdentityCase> v;
      for (long sigma = 0; sigma <= 1; ++sigma) {
        if (p == Profile::quick) {
          for (long r : {0, 1, 2}) v.push_back(t45_r_case(sigma, 2, r));
          for (long m : {0, 1}) v.push_back(t45_x_case(sigma, 2, 1, m));
          v.push_back(t45_x_case(sigma, 2, 2, 0));
        } else {
          for (long r = 0; r <= 8; ++r) v.push_back(t45_r_case(sigma, 2, r));
          for (long ip = 1; ip <= 2; ++ip)
            for (long m = 0; m <= 6; ++m) v.push_back(t45_x_case(sigma, 2, ip, m));
        }
      }
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "res-nnb";
    e.summary = "residual of the squared-wall sum, symbolic and at a=1";
    e.cleared_by = "(1-q)(q,aq,aq^2;q)_inf";
    e.truncation = "left terms carry q^n";
    e.cases = [](Profile) {
      return std::vector<IdentityCase>{res_nnb_case(false), res_nnb_case(true)};
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "res-k0";
    e.summary = "residual of the doubled-wall sum equals a single partial theta";
    e.cleared_by = "(q,aq,aq;q)_inf (a;q)_inf";
    e.truncation = "left terms carry q^n";
    e.cases = [](Profile) { return std::vector<IdentityCase>{res_k0_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "res-eqk0";
    e.summary = "residual with equal walls equals the square of a partial theta";
    e.cleared_by = "(q,aq,aq;q)_inf";
    e.truncation = "left terms carry q^n";
    e.cases = [](Profile) { return std::vector<IdentityCase>{res_eqk0_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "phi32-squared";
    e.summary = "square of one three-term series equals another over the same walls";
    e.cleared_by = "(q,aq,aq;q)_inf squared resp. once";
    e.truncation = "left terms carry q^n";
    e.cases = [](Profile) { return std::vector<IdentityCase>{phi32_squared_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "res-ft";
    e.summary = "residual of the signed-wall sum, direct and transformed";
    e.cleared_by = "(q,a^2 q;q)_inf resp. none";
    e.truncation = "left terms carry q^n resp. q^{n(n+1)/2}";
    e.cases = [](Profile) {
      return std::vector<IdentityCase>{res_ft_case(false), res_ft_case(true)};
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "fth";
    e.summary = "even-base alternating sum equals a doubled false theta";
    e.cleared_by = "";
    e.truncation = "summand exponent n(n+1)";
    e.cases = [](Profile) { return std::vector<IdentityCase>{fth_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "f6";
    e.summary = "companion even-base sum and its midpoint relation to the doubled one";
    e.cleared_by = "";
    e.truncation = "summand exponent n(n+1)";
    e.cases = [](Profile) {
      return std::vector<IdentityCase>{f6_case(false), f6_case(true)};
    };
    out.push_back(std::move(e));
  }
}

}  // namespace qtheta::reg
