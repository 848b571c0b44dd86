#include "registry_util.hpp"

#include <qtheta/qpolynomial.hpp>

// triple/quintuple product material, classical summations and transformations

namespace qtheta::reg {

namespace {

Series bilateral_theta(int scale, std::int64_t B) {
  // sum over all integers n of (-1)^n a^n q^{n(n-1)/2}
  Series s(scale, B);
  for (long long n = 0;; ++n) {
    Rational e = binom2(n);
    if (e * scale > Rational(B)) break;
    s.add_term(to_scaled(e, scale, "theta"), static_cast<int>(n), (n % 2 == 0) ? 1 : -1);
  }
  for (long long n = -1;; --n) {
    Rational e = binom2(n);
    if (e * scale > Rational(B)) break;
    s.add_term(to_scaled(e, scale, "theta"), static_cast<int>(n), (n % 2 == 0) ? 1 : -1);
  }
  return s;
}

IdentityCase jtpi_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    Series lhs = bilateral_theta(1, B);
    Series rhs = triple_product(A(1), 1, 1, B);
    return {lhs, rhs};
  };
  return c;
}

// 1 + sum_{n>=1} (-1)^n q^{binom(n,2)} (a^n + b^n)
Series partial_theta_pair(const Monomial& b, int scale, std::int64_t B) {
  Series s = Series::one(scale, B);
  for (long long n = 1;; ++n) {
    Rational e = binom2(n);
    if (e * scale > Rational(B)) break;
    long sg = (n % 2 == 0) ? 1 : -1;
    s.add_term(to_scaled(e, scale, "pt"), static_cast<int>(n), sg);
    s = add(s, smono(b.pow(n) * Monomial{sg, 0, e}, scale, B));
  }
  return s;
}

IdentityCase gtpi_case(const Monomial& b) {
  IdentityCase c;
  c.params = {{"b", to_string(b)}};
  c.build = [b](std::int64_t B) -> Sides {
    std::int64_t P = B + 2;  // (ab/q;q)_{2n} can dip by one power
    Monomial ab = A(1) * b;
    Series lhs = mul(partial_theta_pair(b, 1, P), poch_inf(ab, 1, 1, P));
    auto wq = poch_inf_table(Q(1), 1, P, 1, P);
    auto wa = poch_inf_table(A(1), 1, P, 1, P);
    auto wb = poch_inf_table(b, 1, P, 1, P);
    auto wab = poch_inf_table(ab, 1, P, 1, P);
    PochCache cache(1, P);
    TailSum ts(1, P);
    for (long long n = 0; ts.more() && n <= P; ++n) {
      Series t = cache.poch(ab * Q(-1), 1, 2 * n);
      t = scale_by(t, Q(Rational(n)));
      t = mul(t, wq[static_cast<std::size_t>(n)]);
      t = mul(t, wa[static_cast<std::size_t>(n)]);
      t = mul(t, wb[static_cast<std::size_t>(n)]);
      t = mul(t, wab[static_cast<std::size_t>(n)]);
      ts.feed(t);
    }
    Series rhs = ts.value();
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase gtpi_neg_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    Series lhs = Series::one(1, B);
    for (long long n = 1; 2 * n * n <= B; ++n) lhs.add_term(2 * n * n, static_cast<int>(n), 2);
    PochCache cache(1, B);
    Series pre = mul(poch_inf(Q(1), 1, 1, B), poch_inf(A(1) * Q(1), 2, 1, B));
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = cache.poch(M(-1, 1, 0), 1, 2 * n);
      t = scale_by(t, Q(Rational(n)));
      t = mul(t, cache.inv(Q(1), 1, n));
      t = mul(t, cache.inv(M(-1, 1, 1), 1, n));
      t = mul(t, cache.inv(M(1, 1, 1), 2, n));
      ts.feed(t);
    }
    return {lhs, mul(pre, ts.value())};
  };
  return c;
}

IdentityCase ijn_case(const Monomial& b) {
  IdentityCase c;
  c.params = {{"b", to_string(b)}};
  c.build = [b](std::int64_t B) -> Sides {
    // exponent binom(i,2)+binom(j,2)-ij = binom(i-j,2)-j, so sum over d=i-j
    Series dbl(1, B);
    Rational beta = b.q_exp;
    long long dlo = 0;
    while (binom2(dlo - 1) <= Rational(B) + 1) --dlo;
    for (long long d = dlo;; ++d) {
      Rational base = binom2(d);
      if (d > 0 && base > Rational(B) + 1) break;
      for (long long j = std::max<long long>(0, -d);; ++j) {
        Rational e = base + (beta - 1) * Rational(j);
        if (e > Rational(B)) break;
        long long i = d + j;
        long sg = ((i + j) % 2 == 0) ? 1 : -1;
        Monomial t = A(static_cast<int>(i)) * b.pow(j) * Monomial{sg, 0, base - Rational(j)};
        dbl = add(dbl, smono(t, 1, B));
      }
    }
    Series lhs = mul(sub(Series::one(1, B), smono(A(1) * b * Q(-1), 1, B)), dbl);
    Series rhs = partial_theta_pair(b, 1, B);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase qbt_case(long long n, const Monomial& z) {
  IdentityCase c;
  c.params = {{"n", std::to_string(n)}, {"z", to_string(z)}};
  c.key.m = n;
  c.build = [n, z](std::int64_t B) -> Sides {
    Series lhs = Series::zero(1, B);
    for (long long k = 0; k <= n; ++k) {
      Monomial zk = z.pow(k) * Monomial{(k % 2 == 0) ? 1 : -1, 0, binom2(k)};
      lhs = add(lhs, mul(smono(zk, 1, B), qbinomial(n, k).to_series(B)));
    }
    return {lhs, poch(z, 1, n, 1, B)};
  };
  return c;
}

IdentityCase qE_case(const Monomial& z) {
  IdentityCase c;
  c.params = {{"z", to_string(z)}};
  c.build = [z](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    TailSum ts(1, B);
    for (long long k = 0; ts.more(); ++k) {
      Monomial zk = z.pow(k) * Monomial{(k % 2 == 0) ? 1 : -1, 0, binom2(k)};
      ts.feed(mul(smono(zk, 1, B), cache.inv(Q(1), 1, k)));
    }
    return {ts.value(), poch_inf(z, 1, 1, B)};
  };
  return c;
}

IdentityCase qe_case(const Monomial& z) {
  IdentityCase c;
  c.params = {{"z", to_string(z)}};
  c.build = [z](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    TailSum ts(1, B);
    for (long long k = 0; ts.more(); ++k)
      ts.feed(mul(smono(z.pow(k), 1, B), cache.inv(Q(1), 1, k)));
    return {ts.value(), reciprocal(poch_inf(z, 1, 1, B))};
  };
  return c;
}

IdentityCase qcv_case(long long n, const Monomial& av, const Monomial& cv, const char* an,
                      const char* cn) {
  IdentityCase c;
  c.params = {{"n", std::to_string(n)}, {"a", an}, {"c", cn}};
  c.key.m = n;
  c.build = [n, av, cv](std::int64_t B) -> Sides {
    // both sides multiplied by (q,c;q)_n; (q^{-n};q)_k dips, so pad
    std::int64_t P = B + n * (n + 1) / 2 + 2;
    Series lhs = Series::zero(1, P);
    for (long long k = 0; k <= n; ++k) {
      Series t = poch(av, 1, k, 1, P);
      t = mul(t, poch(Q(Rational(-n)), 1, k, 1, P));
      t = scale_by(t, Q(Rational(k)));
      t = mul(t, poch(Q(Rational(k + 1)), 1, n - k, 1, P));
      t = mul(t, poch(cv * Q(Rational(k)), 1, n - k, 1, P));
      lhs = add(lhs, t);
    }
    Series rhs = poch(cv * av.inverse(), 1, n, 1, P);
    rhs = scale_by(rhs, av.pow(n));
    rhs = mul(rhs, poch(Q(1), 1, n, 1, P));
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase qdougall_case(long long n, const Monomial& av, const Monomial& bv, const Monomial& cv,
                           const char* an, const char* bn, const char* cn) {
  IdentityCase c;
  c.params = {{"n", std::to_string(n)}, {"a", an}, {"b", bn}, {"c", cn}};
  c.key.m = n;
  c.build = [n, av, bv, cv](std::int64_t B) -> Sides {
    // cleared by (q,aq/b,aq/c,aq^{n+1};q)_n; very-well-poised factor
    // (q sqrt a,-q sqrt a;q)_k/(sqrt a,-sqrt a;q)_k = (1-aq^{2k})/(1-a)
    std::int64_t P = B + n * (n + 1) / 2 + 2 * n + 2;
    Monomial aq_b = av * Q(1) * bv.inverse();
    Monomial aq_c = av * Q(1) * cv.inverse();
    Monomial zk = av * Q(Rational(n + 1)) * bv.inverse() * cv.inverse();
    Series lhs = Series::zero(1, P);
    for (long long k = 0; k <= n; ++k) {
      Series wp = (k == 0) ? Series::one(1, P)
                           : mul(poch(av * Q(1), 1, k - 1, 1, P),
                                 sub(Series::one(1, P), smono(av * Q(Rational(2 * k)), 1, P)));
      Series t = mul(wp, poch(bv, 1, k, 1, P));
      t = mul(t, poch(cv, 1, k, 1, P));
      t = mul(t, poch(Q(Rational(-n)), 1, k, 1, P));
      t = mul(t, smono(zk.pow(k), 1, P));
      t = mul(t, poch(Q(Rational(k + 1)), 1, n - k, 1, P));
      t = mul(t, poch(aq_b * Q(Rational(k)), 1, n - k, 1, P));
      t = mul(t, poch(aq_c * Q(Rational(k)), 1, n - k, 1, P));
      t = mul(t, poch(av * Q(Rational(n + k + 1)), 1, n - k, 1, P));
      lhs = add(lhs, t);
    }
    Series rhs = poch(av * Q(1), 1, n, 1, P);
    rhs = mul(rhs, poch(av * Q(1) * bv.inverse() * cv.inverse(), 1, n, 1, P));
    rhs = mul(rhs, poch(Q(1), 1, n, 1, P));
    rhs = mul(rhs, poch(av * Q(Rational(n + 1)), 1, n, 1, P));
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  };
  return c;
}

std::int64_t neg_dip(const Rational& e0, long long m) {
  // |sum of nonpositive exponents| among e0 + m j, j >= 0
  std::int64_t d = 0;
  for (long long j = 0;; ++j) {
    Rational e = e0 + Rational(m) * Rational(j);
    if (e > 0) break;
    d += to_scaled(-e, 1, "dip");
  }
  return d;
}

IdentityCase pred_case(long long i, long long m, long long n) {
  IdentityCase c;
  c.params = {{"i", std::to_string(i)}, {"m", std::to_string(m)}, {"n", std::to_string(n)}};
  c.key.i = i;
  c.key.m = m;
  c.key.r = n;
  c.build = [i, m, n](std::int64_t B) -> Sides {
    Rational sh = Rational(n) * Rational(i) + binom2(n) * Rational(m);
    std::int64_t P = B + neg_dip(Rational(i + m * n), m) + neg_dip(Rational(m - m * n - i), m) +
                     (sh > 0 ? to_scaled(sh, 1, "pad") : 0);
    Series lhs = mul(poch_inf(Q(Rational(i + m * n)), Rational(m), 1, P),
                     poch_inf(Q(Rational(m - m * n - i)), Rational(m), 1, P));
    Series rhs = mul(poch_inf(Q(Rational(i)), Rational(m), 1, P),
                     poch_inf(Q(Rational(m - i)), Rational(m), 1, P));
    rhs = scale_by(rhs, Monomial{(n % 2 == 0) ? 1 : -1, 0, -sh});
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase heine_case(const Monomial& av, const Monomial& bv, const Monomial& cv,
                        const Monomial& zv, const char* lbl) {
  IdentityCase c;
  c.params = {{"a", to_string(av)}, {"b", to_string(bv)}, {"c", to_string(cv)},
              {"z", to_string(zv)}, {"case", lbl}};
  c.build = [av, bv, cv, zv](std::int64_t B) -> Sides {
    std::int64_t P = B + 4;
    PochCache cache(1, P);
    auto wc = poch_inf_table(cv, 1, P, 1, P);
    Series lhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long n = 0; ts.more() && n <= P; ++n) {
        Series t = mul(cache.poch(av, 1, n), cache.poch(bv, 1, n));
        t = mul(t, smono(zv.pow(n), 1, P));
        t = mul(t, cache.inv(Q(1), 1, n));
        t = mul(t, wc[static_cast<std::size_t>(n)]);
        ts.feed(t);
      }
      lhs = mul(ts.value(), poch_inf(zv, 1, 1, P));
    }
    Series rhs = Series::zero(1, P);
    {
      Monomial az = av * zv;
      TailSum ts(1, P);
      for (long long n = 0; ts.more() && n <= P; ++n) {
        Series t = mul(cache.poch(cv * bv.inverse(), 1, n), cache.poch(zv, 1, n));
        t = mul(t, smono(bv.pow(n), 1, P));
        t = mul(t, cache.inv(Q(1), 1, n));
        t = mul(t, cache.inv(az, 1, n));
        ts.feed(t);
      }
      rhs = mul(mul(ts.value(), poch_inf(bv, 1, 1, P)), poch_inf(az, 1, 1, P));
    }
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase heine_quad_case(const Monomial& av, const Monomial& bv, const Monomial& cv,
                             const Monomial& zv, const char* lbl) {
  IdentityCase c;
  c.params = {{"a", to_string(av)}, {"b", to_string(bv)}, {"c", to_string(cv)},
              {"z", to_string(zv)}, {"case", lbl}};
  c.build = [av, bv, cv, zv](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto wc = poch_inf_table(cv, 1, 2 * B + 2, 1, B);
    Series lhs = Series::zero(1, B);
    {
      TailSum ts(1, B);
      for (long long n = 0; ts.more() && n <= B; ++n) {
        Series t = mul(cache.poch(av, 2, n), cache.poch(bv, 1, 2 * n));
        t = mul(t, smono(zv.pow(n), 1, B));
        t = mul(t, cache.inv(Q(2), 2, n));
        t = mul(t, wc[static_cast<std::size_t>(2 * n)]);
        ts.feed(t);
      }
      lhs = mul(ts.value(), poch_inf(zv, 2, 1, B));
    }
    Series rhs = Series::zero(1, B);
    {
      Monomial az = av * zv;
      TailSum ts(1, B);
      for (long long n = 0; ts.more() && n <= B; ++n) {
        Series t = mul(cache.poch(cv * bv.inverse(), 1, n), cache.poch(zv, 2, n));
        t = mul(t, smono(bv.pow(n), 1, B));
        t = mul(t, cache.inv(Q(1), 1, n));
        t = mul(t, cache.inv(az, 2, n));
        ts.feed(t);
      }
      rhs = mul(mul(ts.value(), poch_inf(bv, 1, 1, B)), poch_inf(az, 2, 1, B));
    }
    return {lhs, rhs};
  };
  return c;
}

IdentityCase bailey_daum_case(const Monomial& av, const Monomial& bv) {
  IdentityCase c;
  c.params = {{"a", to_string(av)}, {"b", to_string(bv)}};
  c.build = [av, bv](std::int64_t B) -> Sides {
    std::int64_t P = B + 4;  // (b;q)_n dips when b has negative q-order
    PochCache cache(1, P);
    Monomial z = Q(1) * bv.inverse() * M(-1, 0, 0);
    Monomial aq_b = av * Q(1) * bv.inverse();
    Series walls = mul(poch_inf(z, 1, 1, P), poch_inf(aq_b, 1, 1, P));
    walls = mul(walls, poch_inf(Q(1), 2, 1, P));
    TailSum ts(1, P);
    for (long long n = 0; ts.more() && n <= P; ++n) {
      Series t = mul(cache.poch(av, 1, n), cache.poch(bv, 1, n));
      t = mul(t, smono(z.pow(n), 1, P));
      t = mul(t, cache.inv(Q(1), 1, n));
      t = mul(t, cache.inv(aq_b, 1, n));
      ts.feed(t);
    }
    Series lhs = mul(ts.value(), walls);
    Series rhs =
        mul(poch_inf(av * Q(1), 2, 1, P), poch_inf(av * Q(2) * bv.inverse().pow(2), 2, 1, P));
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase andrews_lemma2_case(const Monomial& bv, const Monomial& cv) {
  IdentityCase c;
  c.params = {{"b", to_string(bv)}, {"c", to_string(cv)}};
  c.build = [bv, cv](std::int64_t B) -> Sides {
    std::int64_t P = B + 4;
    PochCache cache(1, P);
    Monomial q2_bc = Q(2) * bv.inverse() * cv.inverse();
    Series lhs = Series::zero(1, P);
    {
      Series pre = mul(poch_inf(Q(1), 1, 1, P), poch_inf(q2_bc, 1, 1, P));
      TailSum ts(1, P);
      for (long long n = 0; ts.more() && n <= P; ++n) {
        Series t = cache.poch(Q(1) * A(-1), 1, n + 1);
        t = mul(t, cache.poch(A(1), 1, n));
        t = mul(t, cache.poch(bv, 1, n));
        t = mul(t, cache.poch(cv, 1, n));
        t = mul(t, smono(q2_bc.pow(n), 1, P));
        t = mul(t, cache.inv(Q(1), 1, 2 * n + 1));
        ts.feed(t);
      }
      lhs = mul(pre, ts.value());
    }
    Series rhs = Series::zero(1, P);
    {
      Monomial q2_b = Q(2) * bv.inverse();
      Monomial q2_c = Q(2) * cv.inverse();
      Series pre = mul(poch_inf(q2_b, 1, 1, P), poch_inf(q2_c, 1, 1, P));
      TailSum ts(1, P);
      for (long long s = 0; ts.more() && s <= P; ++s) {
        Series f = mul(cache.poch(bv, 1, s), cache.poch(cv, 1, s));
        f = mul(f, cache.inv(q2_b, 1, s));
        f = mul(f, cache.inv(q2_c, 1, s));
        f = mul(f, smono(q2_bc.pow(s), 1, P));
        long sg = (s % 2 == 0) ? 1 : -1;
        Series both = scale_by(f, Monomial{sg, static_cast<int>(s), binom2(s)});
        both = add(both, scale_by(f, Monomial{-sg, static_cast<int>(-s - 1),
                                              Rational(s + 1) * Rational(s + 2) / 2}));
        ts.feed(both);
      }
      rhs = mul(pre, ts.value());
    }
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  };
  return c;
}

}  // namespace

void register_foundations(std::vector<IdentityEntry>& out) {
  {
    IdentityEntry e;
    e.id = "jtpi";
    e.summary = "bilateral alternating theta sum equals the Jacobi triple product";
    e.cleared_by = "1";
    e.truncation = "theta exponent n(n-1)/2 dominates";
    e.cases = [](Profile) { return std::vector<IdentityCase>{jtpi_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "gtpi";
    e.summary = "two-variable partial theta pair as a balanced Pochhammer sum";
    e.cleared_by = "(ab;q)_inf";
    e.truncation = "right side terms carry q^n; walls are unit-led";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(gtpi_case(A(-1) * Q(1)));
      v.push_back(gtpi_case(M(-1, 1, 0)));
      v.push_back(gtpi_case(Q(1)));
      v.push_back(gtpi_case(M(-1, 0, 1)));
      v.push_back(gtpi_case(Q(2)));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "gtpi-neg";
    e.summary = "even-square partial theta as a quadratic Pochhammer sum";
    e.cleared_by = "1";
    e.truncation = "right side terms carry q^n";
    e.cases = [](Profile) { return std::vector<IdentityCase>{gtpi_neg_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "ijn";
    e.summary = "double alternating sum collapses to a single partial theta pair";
    e.cleared_by = "1";
    e.truncation = "diagonal distance d gives binom(d,2); b needs q-order >= 2";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(ijn_case(Q(2)));
      v.push_back(ijn_case(M(-1, 0, 2)));
      v.push_back(ijn_case(Q(3)));
      v.push_back(ijn_case(M(1, 1, 2)));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "qbt";
    e.summary = "finite alternating binomial sum equals a Pochhammer product";
    e.cleared_by = "1";
    e.truncation = "finite sum";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (long long n : {0, 1, 2, 3, 5, 8})
        for (const Monomial& z : {A(1), M(-1, 1, 0), Q(1), M(-1, 0, 1), A(1) * Q(1)})
          v.push_back(qbt_case(n, z));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "qE";
    e.summary = "exponential-type alternating sum equals an infinite Pochhammer product";
    e.cleared_by = "1";
    e.truncation = "binom(k,2) dominates";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (const Monomial& z : {A(1), M(-1, 1, 0), Q(1), A(1) * Q(1), M(-1, 0, 1)})
        v.push_back(qE_case(z));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "qe";
    e.summary = "geometric-type sum equals a reciprocal Pochhammer product";
    e.cleared_by = "1";
    e.truncation = "z needs positive q-order";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (const Monomial& z : {Q(1), A(1) * Q(1), M(-1, 0, 1), A(1) * Q(2), Q(2)})
        v.push_back(qe_case(z));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "qcv";
    e.summary = "terminating 2phi1 at argument q, cleared to a polynomial identity";
    e.cleared_by = "(q,c;q)_n";
    e.truncation = "finite sum; dips padded";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      struct P {
        Monomial a, c;
        const char *an, *cn;
      };
      const P ps[] = {{A(1), A(1) * Q(2), "a", "aq^2"},
                      {Q(1), Q(3), "q", "q^3"},
                      {M(-1, 0, 1), M(-1, 0, 3), "-q", "-q^3"},
                      {Q(2), Q(3), "q^2", "q^3"},
                      {A(1) * Q(1), A(1) * Q(3), "aq", "aq^3"}};
      for (long long n : {0, 1, 2, 3, 5, 8})
        for (const auto& p : ps) v.push_back(qcv_case(n, p.a, p.c, p.an, p.cn));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "qdougall";
    e.summary = "terminating very-well-poised 6phi5 summation, cleared form";
    e.cleared_by = "(q,aq/b,aq/c,aq^{n+1};q)_n";
    e.truncation = "finite sum; dips padded";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      struct P {
        Monomial a, b, c;
        const char *an, *bn, *cn;
      };
      const P ps[] = {{Q(2), Q(1), Q(1), "q^2", "q", "q"},
                      {Q(3), Q(1), Q(2), "q^3", "q", "q^2"},
                      {M(-1, 0, 2), Q(1), M(-1, 0, 1), "-q^2", "q", "-q"},
                      {A(1), Q(1), Q(1), "a", "q", "q"}};
      for (long long n : {0, 1, 2, 4, 6})
        for (const auto& p : ps) v.push_back(qdougall_case(n, p.a, p.b, p.c, p.an, p.bn, p.cn));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "pred";
    e.summary = "shift law for a modular pair of infinite products";
    e.cleared_by = "1";
    e.truncation = "finite dips padded, then bound restored";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (long long m : {2, 3, 5, 6})
        for (long long i : {1, 2, 3})
          for (long long n : {0, 1, 2, 4})
            if (i < m) v.push_back(pred_case(i, m, n));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "heine";
    e.summary = "fundamental 2phi1 transformation with monomial parameters";
    e.cleared_by = "(c,z;q)_inf";
    e.truncation = "z and b need positive q-order";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(heine_case(A(1), Q(1), Q(2), Q(1), "1"));
      v.push_back(heine_case(Q(1), Q(1), Q(3), Q(1), "2"));
      v.push_back(heine_case(M(-1, 0, 1), Q(1), M(-1, 0, 2), Q(1), "3"));
      v.push_back(heine_case(A(1), Q(2), A(1) * Q(1), Q(1), "4"));
      v.push_back(heine_case(Q(2), Q(1), Q(1), Q(2), "5"));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "heine-quad";
    e.summary = "quadratic-base analogue of the fundamental transformation";
    e.cleared_by = "(c;q)_inf (z;q^2)_inf";
    e.truncation = "z and b need positive q-order";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(heine_quad_case(A(1) * Q(1), Q(1), M(-1, 1, 2), A(1) * Q(1), "1"));
      v.push_back(heine_quad_case(Q(1), Q(1), Q(3), Q(1), "2"));
      v.push_back(heine_quad_case(Q(2), M(-1, 0, 1), Q(2), Q(1), "3"));
      v.push_back(heine_quad_case(M(-1, 0, 1), Q(1), M(-1, 0, 2), Q(2), "4"));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "bailey-daum";
    e.summary = "q-analogue of Kummer's sum with quadratic-base products";
    e.cleared_by = "(-q/b,aq/b;q)_inf (q;q^2)_inf";
    e.truncation = "argument -q/b needs positive q-order";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(bailey_daum_case(Q(1), M(-1, 0, 0)));
      v.push_back(bailey_daum_case(Q(2), M(-1, 0, 0)));
      v.push_back(bailey_daum_case(M(-1, 0, 1), M(-1, 0, 0)));
      v.push_back(bailey_daum_case(A(1), M(-1, 0, 0)));
      v.push_back(bailey_daum_case(Q(1), M(-1, 0, -1)));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "andrews-lemma2";
    e.summary = "terminating-style sum equals a bilateral Pochhammer ratio sum";
    e.cleared_by = "(q,q^2/bc;q)_inf";
    e.truncation = "q-orders of b,c sum to at most 1";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(andrews_lemma2_case(Q(1), M(-1, 0, 0)));
      v.push_back(andrews_lemma2_case(M(-1, 0, 1), M(-1, 0, 0)));
      v.push_back(andrews_lemma2_case(M(-1, 0, 0), M(-1, 0, 0)));
      return v;
    };
    out.push_back(std::move(e));
  }
}

}  // namespace qtheta::reg
