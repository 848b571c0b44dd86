#include "registry_util.hpp"

// chain-built infinite families and their small-k collapses

namespace qtheta::reg {

namespace {

std::vector<std::pair<Rational, Rational>> ones(long k) {
  return std::vector<std::pair<Rational, Rational>>(
      static_cast<std::size_t>(k), {Rational(1), Rational(1)});
}

Series walls3(int scale, std::int64_t P) {
  return poch_inf_all({Q(1), A(1), A(-1) * Q(1)}, 1, scale, P);
}

// cleared left side shared by the chain theorems:
// (q;q)_inf sum_n (q;q)_{2n} q^n (aq^{n+1};q)_inf (q^{n+1}/a;q)_inf B(n)
Series chain_lhs(PochCache& cache, ChainSum& bk, int scale, std::int64_t P) {
  auto wa = poch_inf_table(A(1) * Q(1), 1, P, scale, P);
  auto wia = poch_inf_table(A(-1) * Q(1), 1, P, scale, P);
  TailSum ts(scale, P);
  for (long long n = 0; ts.more() && n <= P; ++n) {
    Series t = mul(cache.poch(Q(1), 1, 2 * n), bk.at(n));
    t = scale_by(t, Q(Rational(n)));
    t = mul(t, wa[static_cast<std::size_t>(n)]);
    t = mul(t, wia[static_cast<std::size_t>(n)]);
    ts.feed(t);
  }
  return mul(ts.value(), poch_inf(Q(1), 1, scale, P));
}

// {sum_{n>=0} - sum_{n<=-1}} (-1)^{r+1} a^r q^{c2 n^2 + c1 n + binom(r-n,2)}
Series bilateral_false(const Rational& c2, const Rational& c1, std::int64_t P) {
  Series out(1, P);
  Rational bq(P);
  long long nw = 2;
  while (binom2(nw) <= bq + 1) ++nw;
  for (long long r = 1;; ++r) {
    bool any = false;
    for (long long n = -nw; n <= r + nw; ++n) {
      Rational e = c2 * Rational(n) * Rational(n) + c1 * Rational(n) + binom2(r - n);
      if (e > bq) continue;
      any = true;
      long sg = (r % 2 == 1) ? 1 : -1;
      if (n < 0) sg = -sg;
      out.add_term(to_scaled(e, 1, "false theta"), static_cast<int>(r), sg);
    }
    if (!any && r >= 8) break;
  }
  return out;
}

IdentityCase thm1_case(long k) {
  IdentityCase c;
  c.params = {{"k", std::to_string(k)}};
  c.key.k = k;
  c.build = [k](std::int64_t B) -> Sides {
    long kappa = 2 * k + 1;
    PochCache cache(1, B);
    ChainSum bk(ones(k - 1), [&cache](long long t) { return cache.inv(Q(1), 1, t); },
                cache);
    Series lhs = chain_lhs(cache, bk, 1, B);
    Series ta(1, B);
    for (long long n = 0; k * n * (n + 1) <= B; ++n)
      ta.add_term(k * n * (n + 1), static_cast<int>(n), 1);
    Series rhs = mul(walls3(1, B), ta);
    for (long i = 1; i < kappa; ++i) {
      Series ti = poch_inf_all({Q(i), Q(kappa - i), Q(kappa)}, kappa, 1, B);
      Series th(1, B);
      long sg = (i % 2 == 1) ? 1 : -1;
      for (long long n = 0;; ++n) {
        Rational e = binom2(i) + Rational(k) * Rational(n) * Rational(kappa * n + 2 * i);
        if (e > Rational(B)) break;
        th.add_term(to_scaled(e, 1, "t"), static_cast<int>(i + kappa * n), sg);
      }
      rhs = add(rhs, mul(ti, th));
    }
    return {lhs, rhs};
  };
  return c;
}

IdentityCase thm2_case(long k) {
  IdentityCase c;
  c.params = {{"k", std::to_string(k)}};
  c.key.k = k;
  c.build = [k](std::int64_t B) -> Sides {
    long kappa = 2 * k;
    PochCache cache(1, B);
    ChainSum bk(ones(k - 1), [&cache](long long t) { return cache.inv(Q(2), 2, t); },
                cache);
    Series lhs = chain_lhs(cache, bk, 1, B);
    Series ta(1, B);
    for (long long n = 0; (kappa - 1) * binom2(n + 1) <= Rational(B); ++n)
      ta.add_term(to_scaled(Rational(kappa - 1) * binom2(n + 1), 1, "t"),
                  static_cast<int>(n), 1);
    Series rhs = mul(walls3(1, B), ta);
    for (long i = 1; i < kappa; ++i) {
      Series ti = poch_inf_all({Q(i), Q(kappa - i), Q(kappa)}, kappa, 1, B);
      Series th(1, B);
      long sg = (i % 2 == 1) ? 1 : -1;
      for (long long n = 0;; ++n) {
        Rational e = binom2(i) + Rational(kappa - 1) * Rational(k * n + i) * Rational(n);
        if (e > Rational(B)) break;
        th.add_term(to_scaled(e, 1, "t"), static_cast<int>(i + kappa * n),
                    (n % 2 == 0) ? sg : -sg);
      }
      rhs = add(rhs, mul(ti, th));
    }
    return {lhs, rhs};
  };
  return c;
}

IdentityCase thm3_case(long k) {
  IdentityCase c;
  c.params = {{"k", std::to_string(k)}};
  c.key.k = k;
  c.build = [k](std::int64_t B) -> Sides {
    const int sc = 2;
    Rational kappa(4 * k - 1, 2);
    Rational bq(B, sc);
    PochCache cache(sc, B);
    ChainSum bk(ones(k - 1),
                [&cache](long long t) {
                  return mul(cache.inv(Q(1), 1, t),
                             cache.inv(M(-1, 0, Rational(1, 2)), Rational(1, 2), 2 * t));
                },
                cache);
    Series lhs = chain_lhs(cache, bk, sc, B);
    Series ta(sc, B);
    for (long long n = 0; (kappa - 1) * binom2(n + 1) <= bq; ++n)
      ta.add_term(to_scaled((kappa - 1) * binom2(n + 1), sc, "t"), static_cast<int>(n), 1);
    Series rhs = mul(walls3(sc, B), ta);
    for (long i = 1; i <= 2 * k - 1; ++i) {
      Series ti = poch_inf_all({Q(i), Q(kappa - i), Q(kappa)}, kappa, sc, B);
      Series th(sc, B);
      long sg = (i % 2 == 1) ? 1 : -1;
      for (long long n = 0;; ++n) {
        Rational e0 =
            binom2(i) + 2 * (kappa - 1) * (kappa * Rational(n) + i) * Rational(n);
        if (e0 > bq) break;
        long s = (n % 2 == 0) ? sg : -sg;
        int a1 = static_cast<int>(i + (4 * k - 1) * n);
        th.add_term(to_scaled(e0, sc, "t"), a1, s);
        Rational e1 = e0 + 2 * (kappa - 1) * (kappa - i) * Rational(2 * n + 1);
        if (e1 <= bq)
          th.add_term(to_scaled(e1, sc, "t"), a1 + static_cast<int>(4 * k - 1 - 2 * i), s);
      }
      rhs = add(rhs, mul(ti, th));
    }
    return {lhs, rhs};
  };
  return c;
}

// shared right side of the two cubic-modulus chain theorems
Series thm45_rhs(long kappa, std::int64_t B) {
  long w = 2 * kappa - 3;
  Series first(1, B);
  for (long long n = 0;; ++n) {
    Rational e = Rational(w) * Rational(3 * n + 1) * Rational(n) / 2;
    if (e > Rational(B)) break;
    long sg = (n % 2 == 0) ? 1 : -1;
    first.add_term(to_scaled(e, 1, "t"), static_cast<int>(3 * n), sg);
    Rational e2 = e + Rational(w) * Rational(2 * n + 1);
    if (e2 <= Rational(B)) first.add_term(to_scaled(e2, 1, "t"), static_cast<int>(3 * n + 2), -sg);
  }
  Series rhs = mul(walls3(1, B), first);
  for (long i = 1; i < kappa; ++i) {
    Series pi = mul(poch_inf_all({Q(i), Q(2 * kappa - i), Q(2 * kappa)}, 2 * kappa, 1, B),
                    poch_inf_all({Q(2 * kappa - 2 * i), Q(2 * kappa + 2 * i)}, 4 * kappa, 1, B));
    long sg = (i % 2 == 1) ? 1 : -1;
    Series br(1, B);
    br.add_term(to_scaled(binom2(i), 1, "t"), static_cast<int>(i), sg);
    for (long long n = 1;; ++n) {
      Rational e = binom2(i) + Rational(w) * (Rational(kappa) * Rational(n) - i) * Rational(n);
      if (e > Rational(B)) break;
      br.add_term(to_scaled(e, 1, "t"), static_cast<int>(2 * kappa * n - i), -sg);
      Rational e2 = e + 2 * Rational(w) * Rational(i) * Rational(n);
      if (e2 <= Rational(B))
        br.add_term(to_scaled(e2, 1, "t"), static_cast<int>(i + 2 * kappa * n), sg);
    }
    rhs = add(rhs, mul(pi, br));
  }
  return rhs;
}

IdentityCase thm4_case(long k) {
  IdentityCase c;
  c.params = {{"k", std::to_string(k)}};
  c.key.k = k;
  c.build = [k](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    ChainSum bk(ones(k - 1), [&cache](long long t) { return cache.inv(Q(1), 1, 2 * t); },
                cache);
    Series lhs = chain_lhs(cache, bk, 1, B);
    return {lhs, thm45_rhs(3 * k - 1, B)};
  };
  return c;
}

IdentityCase thm5_case(long k) {
  IdentityCase c;
  c.params = {{"k", std::to_string(k)}};
  c.key.k = k;
  c.build = [k](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    std::vector<std::pair<Rational, Rational>> levels;
    levels.emplace_back(Rational(2), Rational(0));
    for (long j = 0; j < k - 2; ++j) levels.emplace_back(Rational(1), Rational(1));
    ChainSum bk(levels, [&cache](long long t) { return cache.inv(Q(1), 1, 2 * t); },
                cache);
    Series lhs = chain_lhs(cache, bk, 1, B);
    return {lhs, thm45_rhs(3 * k - 2, B)};
  };
  return c;
}

IdentityCase bcs_thm_case(long k) {
  IdentityCase c;
  c.params = {{"k", std::to_string(k)}};
  c.key.k = k;
  c.build = [k](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto tail = [&cache](long long t) {
      Series s = mul(cache.poch(M(-1, 0, 0), 1, t), cache.inv(Q(1), 1, t));
      return mul(s, cache.inv(Q(2), 2, t));
    };
    ChainSum bk(ones(k), tail, cache);
    Series base = chain_lhs(cache, bk, 1, B);
    if (k == 0) {
      // the plain right side degenerates; verify the cross-multiplied form
      Series opa = add(Series::one(1, B), smono(A(1), 1, B));
      Series lhs = mul(opa, base);
      Series th(1, B);
      for (long long n = 1; binom2(n) <= Rational(B); ++n)
        th.add_term(to_scaled(binom2(n), 1, "t"), static_cast<int>(n),
                    (n % 2 == 0) ? 2 : -2);
      Series rhs = sub(walls3(1, B), th);
      return {lhs, rhs};
    }
    Series ta(1, B);
    for (long long n = 0; k * n * (n + 1) <= B; ++n)
      ta.add_term(k * n * (n + 1), static_cast<int>(n), (n % 2 == 0) ? 1 : -1);
    Series rhs = add(mul(walls3(1, B), ta), bilateral_false(Rational(k), Rational(k), B));
    return {base, rhs};
  };
  return c;
}

IdentityCase k0_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto wq = poch_inf_table(Q(1), 1, B, 1, B);
    auto wa = poch_inf_table(A(1) * Q(1), 1, B, 1, B);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, B, 1, B);
    Series w = poch_inf_all({Q(1), A(1) * Q(1), A(-1) * Q(1)}, 1, 1, B);
    TailSum ts(1, B);
    for (long long n = 1; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(Q(1), 1, 2 * n - 1), cache.inv(Q(1), 1, n - 1));
      t = scale_by(t, Q(Rational(n)));
      t = mul(t, wq[static_cast<std::size_t>(n)]);
      t = mul(t, wa[static_cast<std::size_t>(n)]);
      t = mul(t, wia[static_cast<std::size_t>(n)]);
      ts.feed(t);
    }
    Series opa = add(Series::one(1, B), smono(A(1), 1, B));
    Series oma = sub(Series::one(1, B), smono(A(1), 1, B));
    Series lhs = mul(opa, add(w, add(ts.value(), ts.value())));
    Series th(1, B);
    for (long long n = 1; binom2(n) <= Rational(B); ++n)
      th.add_term(to_scaled(binom2(n), 1, "t"), static_cast<int>(n),
                  (n % 2 == 0) ? 2 : -2);
    Series rhs = sub(mul(oma, w), th);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase a1_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    TailSum ts(1, B);
    for (long long n = 1; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(Q(1), 1, 2 * n - 1), cache.inv(Q(1), 1, n - 1));
      t = mul(t, pow(cache.inv(Q(1), 1, n), 3));
      ts.feed(scale_by(t, Q(Rational(n))));
    }
    Series lhs = add(Series::one(1, B), add(ts.value(), ts.value()));
    lhs = mul(lhs, pow(poch_inf(Q(1), 1, 1, B), 3));
    Series rhs(1, B);
    for (long long n = 0; binom2(n + 1) <= Rational(B); ++n)
      rhs.add_term(to_scaled(binom2(n + 1), 1, "t"), 0, (n % 2 == 0) ? 1 : -1);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase thm6_case(long k) {
  IdentityCase c;
  c.params = {{"k", std::to_string(k)}};
  c.key.k = k;
  c.build = [k](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto tail = [&cache](long long t) {
      return mul(cache.inv(Q(1), 1, t), cache.inv(Q(1), 1, t));
    };
    ChainSum bk(ones(k), tail, cache);
    Series lhs = chain_lhs(cache, bk, 1, B);
    Series ta(1, B);
    for (long long n = 0; Rational(2 * k + 1) * binom2(n + 1) <= Rational(B); ++n)
      ta.add_term(to_scaled(Rational(2 * k + 1) * binom2(n + 1), 1, "t"),
                  static_cast<int>(n), (n % 2 == 0) ? 1 : -1);
    Series rhs = add(mul(walls3(1, B), ta),
                     bilateral_false(Rational(2 * k + 1, 2), Rational(2 * k + 1, 2), B));
    return {lhs, rhs};
  };
  return c;
}

IdentityCase eqk0_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto wq = poch_inf_table(Q(1), 1, B, 1, B);
    auto wa = poch_inf_table(A(1) * Q(1), 1, B, 1, B);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, B, 1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(Q(1), 1, 2 * n), cache.inv(Q(1), 1, n));
      t = scale_by(t, Q(Rational(n)));
      t = mul(t, wq[static_cast<std::size_t>(n)]);
      t = mul(t, wa[static_cast<std::size_t>(n)]);
      t = mul(t, wia[static_cast<std::size_t>(n)]);
      ts.feed(t);
    }
    Series lhs = ts.value();
    Series th(1, B);
    for (long long n = 0; binom2(n + 1) <= Rational(B); ++n)
      th.add_term(to_scaled(binom2(n + 1), 1, "t"), static_cast<int>(n),
                  (n % 2 == 0) ? 1 : -1);
    Series rhs = add(mul(walls3(1, B), th), mul(smono(A(1), 1, B), mul(th, th)));
    return {lhs, rhs};
  };
  return c;
}

IdentityCase c8_thm_case(long k) {
  IdentityCase c;
  c.params = {{"k", std::to_string(k)}};
  c.key.k = k;
  c.build = [k](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto tail = [&cache](long long t) {
      return mul(cache.inv(Q(1), 1, t), cache.inv(Q(1), 2, t));
    };
    ChainSum bk(ones(k - 1), tail, cache);
    Series lhs = chain_lhs(cache, bk, 1, B);
    Series first(1, B);
    for (long long n = 0;; ++n) {
      Rational e = Rational(n) * Rational(n) + 2 * Rational(k - 1) * Rational(2 * n + 1) * Rational(n);
      if (e > Rational(B)) break;
      long sg = (n % 2 == 0) ? 1 : -1;
      first.add_term(to_scaled(e, 1, "t"), static_cast<int>(2 * n), sg);
      Rational e2 = e + Rational(2 * k - 1) * Rational(2 * n + 1);
      if (e2 <= Rational(B))
        first.add_term(to_scaled(e2, 1, "t"), static_cast<int>(2 * n + 1), -sg);
    }
    Series rhs = mul(walls3(1, B), first);
    long Q8 = 8 * k - 2;
    auto dips = [&](long long e) {
      std::int64_t s = 0;
      for (long long x = e; x < 0; x += Q8) s += -x;
      return s;
    };
    for (int dir = 0; dir < 2; ++dir) {
      for (long long rr = 1; rr <= 4 * B + 8; ++rr) {
        long long r = (dir == 0) ? rr : -rr;
        long long e1 = 6 * k - 2 * r - 2, e2 = 2 * k + 2 * r;
        std::int64_t pad = dips(e1) + dips(e2);
        if (binom2(r) - Rational(pad) > Rational(B) && rr > 3 * k + 3) break;
        Series pr = poch_inf_all({Q(e1), Q(e2), Q(Q8)}, Q8, 1, B + pad);
        long sg = (rr % 2 == 1) ? 1 : -1;  // (-1)^{r+1} matches since |r| parity
        if (dir == 1) sg = -sg;
        Series term = scale_by(pr, Monomial{sg, static_cast<int>(rr), binom2(r)});
        term.restrict_bound(B);
        rhs = add(rhs, term);
      }
    }
    return {lhs, rhs};
  };
  return c;
}

IdentityCase ft_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto wa = poch_inf_table(A(1) * Q(1), 1, B, 1, B);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, B, 1, B);
    Series qodd = poch_inf(Q(1), 2, 1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = cache.poch(M(-1, 0, 1), 1, n);
      t = scale_by(t, Q(Rational(n)));
      t = mul(t, wa[static_cast<std::size_t>(n)]);
      t = mul(t, wia[static_cast<std::size_t>(n)]);
      ts.feed(t);
    }
    Series lhs = mul(ts.value(), qodd);
    Series opa = add(Series::one(1, B), smono(A(1), 1, B));
    Series th1(1, B);
    for (long long n = 1; n * n <= B; ++n)
      th1.add_term(n * n, static_cast<int>(2 * n - 1), (n % 2 == 0) ? 1 : -1);
    Series inner = add(Series::one(1, B), mul(opa, th1));
    Series wallsA = poch_inf_all({A(1), A(-1) * Q(1)}, 1, 1, B);
    Series th2(1, B);
    for (long long n = 1; Rational(n) * Rational(3 * n - 1) / 2 <= Rational(B); ++n) {
      Rational e = Rational(n) * Rational(3 * n - 1) / 2;
      th2.add_term(to_scaled(e, 1, "t"), static_cast<int>(3 * n - 1), 1);
      if (e + n <= Rational(B))
        th2.add_term(to_scaled(e + n, 1, "t"), static_cast<int>(3 * n), -1);
    }
    Series rhs = add(mul(mul(qodd, wallsA), inner),
                     sub(smono(A(1), 1, B), mul(opa, th2)));
    return {lhs, rhs};
  };
  return c;
}

IdentityCase ft_a1_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n)
      ts.feed(scale_by(cache.inv(M(-1, 0, 1), 1, n), Q(Rational(n))));
    Series two = add(Series::one(1, B), Series::one(1, B));
    Series rhs = sub(two, reciprocal(poch_inf(M(-1, 0, 1), 1, 1, B)));
    return {ts.value(), rhs};
  };
  return c;
}

IdentityCase a10_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    auto wa = poch_inf_table(A(1) * Q(1), 1, B, 1, B);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, B, 1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && 2 * n <= B; ++n)
      ts.feed(scale_by(mul(wa[static_cast<std::size_t>(n)], wia[static_cast<std::size_t>(n)]),
                       Q(Rational(2 * n))));
    Series lhs = ts.value();
    Series opa2 = add(Series::one(1, B), smono(A(2), 1, B));
    Series th1(1, B);
    for (long long n = 1; Rational(n) * Rational(3 * n - 1) / 2 <= Rational(B); ++n) {
      Rational e = Rational(n) * Rational(3 * n - 1) / 2;
      long sg = (n % 2 == 0) ? 1 : -1;
      th1.add_term(to_scaled(e, 1, "t"), static_cast<int>(3 * n - 2), sg);
      if (e + n <= Rational(B))
        th1.add_term(to_scaled(e + n, 1, "t"), static_cast<int>(3 * n - 1), sg);
    }
    Series head = add(Series::one(1, B), smono(A(1), 1, B));
    head = add(head, mul(opa2, th1));
    Series wallsA = poch_inf_all({A(1), A(-1) * Q(1)}, 1, 1, B);
    Series th2(1, B);
    for (long long n = 1; binom2(n + 1) <= Rational(B); ++n)
      th2.add_term(to_scaled(binom2(n + 1), 1, "t"), static_cast<int>(2 * n),
                   (n % 2 == 0) ? 1 : -1);
    Series rhs = add(mul(wallsA, head), add(smono(A(2), 1, B), mul(opa2, th2)));
    return {lhs, rhs};
  };
  return c;
}

IdentityCase pm4_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    Series nq2 = pow(poch_inf(M(-1, 0, 1), 1, 1, B), 2);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && 2 * n <= B; ++n) {
      Series t = cache.inv(M(-1, 0, 1), 1, n);
      ts.feed(scale_by(mul(t, t), Q(Rational(2 * n))));
    }
    Series head = Series::one(1, B);
    for (long long n = 1; binom2(n + 1) <= Rational(B); ++n)
      head.add_term(to_scaled(binom2(n + 1), 1, "t"), 0, (n % 2 == 0) ? 2 : -2);
    Series lhs = sub(mul(nq2, ts.value()), head);
    Series th(1, B);
    for (long long n = 1; Rational(n) * Rational(3 * n - 1) / 2 <= Rational(B); ++n) {
      Rational e = Rational(n) * Rational(3 * n - 1) / 2;
      th.add_term(to_scaled(e, 1, "t"), 0, 4);
      if (e + n <= Rational(B)) th.add_term(to_scaled(e + n, 1, "t"), 0, -4);
    }
    Series rhs = mul(nq2, th);
    return {lhs, rhs};
  };
  return c;
}

std::vector<IdentityCase> k_cases(long lo, long hi, IdentityCase (*mk)(long)) {
  std::vector<IdentityCase> v;
  for (long k = lo; k <= hi; ++k) v.push_back(mk(k));
  return v;
}

}  // namespace

void register_theorems(std::vector<IdentityEntry>& out) {
  {
    IdentityEntry e;
    e.id = "thm1";
    e.summary = "odd-modulus chain family: wall sum with nested Gaussian chain";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "chain weights quadratic; theta tails quadratic";
    e.cases = [](Profile) { return k_cases(1, 3, thm1_case); };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "thm2";
    e.summary = "even-modulus chain family with even-base innermost tail";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "chain weights quadratic; theta tails quadratic";
    e.cases = [](Profile) { return k_cases(1, 3, thm2_case); };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "thm3";
    e.summary = "half-odd-modulus chain family on the half-integer exponent grid";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "chain weights quadratic; theta tails quadratic";
    e.scale = 2;
    e.cases = [](Profile) { return k_cases(1, 3, thm3_case); };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "thm4";
    e.summary = "first cubic-modulus chain family with double-index tail";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "chain weights quadratic; bracket sums quadratic";
    e.cases = [](Profile) { return k_cases(1, 3, thm4_case); };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "thm5";
    e.summary = "companion cubic-modulus chain family with doubled innermost weight";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "chain weights quadratic; bracket sums quadratic";
    e.cases = [](Profile) { return k_cases(2, 3, thm5_case); };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "bcs-thm";
    e.summary = "chain family over the even-odd split tail; right side a false theta";
    e.cleared_by = "(q,a,q/a;q)_inf; k=0 additionally cross-multiplied by 1+a";
    e.truncation = "false theta diagonal grows quadratically";
    e.cases = [](Profile) { return k_cases(0, 2, bcs_thm_case); };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "k0";
    e.summary = "depth-zero collapse: doubled wall sum equals a signed theta ratio";
    e.cleared_by = "(1+a)(q,aq,q/a;q)_inf";
    e.truncation = "left terms carry q^n";
    e.cases = [](Profile) { return std::vector<IdentityCase>{k0_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "a1";
    e.summary = "a = 1 specialization with cube of the Euler product";
    e.cleared_by = "(q;q)_inf^3";
    e.truncation = "left terms carry q^n";
    e.cases = [](Profile) { return std::vector<IdentityCase>{a1_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "thm6";
    e.summary = "chain family over the squared Gaussian tail";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "false theta diagonal grows quadratically";
    e.cases = [](Profile) { return k_cases(0, 2, thm6_case); };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "eqk0";
    e.summary = "depth-zero squared-tail collapse: theta plus a times theta squared";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "left terms carry q^n; theta quadratic";
    e.cases = [](Profile) { return std::vector<IdentityCase>{eqk0_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "c8-thm";
    e.summary = "chain family from the split-parity pair; right side keeps its r-sum";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "negative-exponent products are padded and re-restricted";
    e.cases = [](Profile) { return k_cases(1, 2, c8_thm_case); };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "ft";
    e.summary = "depth-one collapse of the split-parity family";
    e.cleared_by = "(q;q^2)_inf (a,q/a;q)_inf";
    e.truncation = "left terms carry q^n; thetas quadratic";
    e.cases = [](Profile) { return std::vector<IdentityCase>{ft_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "ft-a-1";
    e.summary = "a = -1 specialization to a single product reciprocal";
    e.cleared_by = "1";
    e.truncation = "left terms carry q^n";
    e.cases = [](Profile) { return std::vector<IdentityCase>{ft_a1_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "a10-identity";
    e.summary = "plain wall sum of q^{2n} equals paired false and partial thetas";
    e.cleared_by = "(a,q/a;q)_inf";
    e.truncation = "left terms carry q^{2n}; thetas quadratic";
    e.cases = [](Profile) { return std::vector<IdentityCase>{a10_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "pm4";
    e.summary = "a = -1 curiosity: difference is four times a signed pentagonal series";
    e.cleared_by = "(-q;q)_inf^2";
    e.truncation = "left terms carry q^{2n}";
    e.cases = [](Profile) { return std::vector<IdentityCase>{pm4_case()}; };
    out.push_back(std::move(e));
  }
}

}  // namespace qtheta::reg
