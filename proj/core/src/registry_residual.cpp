#include "registry_util.hpp"

// identities obtained by extracting residues at poles of the wall sums

namespace qtheta::reg {

namespace {

// same three flavours as the two-parameter family upstream
IdentityCase bcres_case(int kind, const Monomial& bv, const Monomial& cv, const char* bl,
                        const char* cl) {
  IdentityCase c;
  c.params = {{"b", bl}, {"c", cl}};
  c.build = [kind, bv, cv](std::int64_t B) -> Sides {
    std::int64_t P = B + 4;
    PochCache cache(1, P);
    Monomial q2b = Q(2) * bv.inverse();
    Monomial q2c = Q(2) * cv.inverse();
    Monomial aq2b = A(1) * q2b;
    Monomial aq2c = A(1) * q2c;
    Monomial q2bc = q2b * cv.inverse();
    Monomial aq2bc = A(1) * q2bc;
    auto F = [&](long long s) -> Series {
      if (kind == 2) return smono(Q(Rational(s) * Rational(s + 1)), 1, P);
      Series f = cache.poch(bv, 1, s);
      f = mul(f, cache.inv(q2b, 1, s));
      if (kind == 1) {
        long sg = (s % 2 == 0) ? 1 : -1;
        return scale_by(f, (q2b.pow(s)) * Monomial{sg, 0, binom2(s)});
      }
      f = mul(f, cache.poch(cv, 1, s));
      f = mul(f, cache.inv(q2c, 1, s));
      return scale_by(f, q2bc.pow(s));
    };
    std::vector<Series> Fs;
    auto ensureF = [&](long long s) -> const Series& {
      while (static_cast<long long>(Fs.size()) <= s) Fs.push_back(F(Fs.size()));
      return Fs[static_cast<std::size_t>(s)];
    };
    Series lhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long n = 0; ts.more() && n <= P; ++n) {
        Series t = mul(cache.poch(A(2) * Q(1), 1, 2 * n), cache.inv(A(2) * Q(1), 1, n));
        if (kind == 0) t = mul(t, cache.poch(aq2bc, 1, n));
        t = scale_by(t, Q(Rational(n)));
        t = mul(t, cache.inv(Q(1), 1, n));
        t = mul(t, cache.inv(A(1) * Q(1), 1, n));
        if (kind <= 1) t = mul(t, cache.inv(aq2b, 1, n));
        if (kind == 0) t = mul(t, cache.inv(aq2c, 1, n));
        ts.feed(t);
      }
      Series pre = poch_inf_all({Q(1), Q(1), A(1) * Q(1)}, 1, 1, P);
      if (kind <= 1) pre = mul(pre, poch_inf(aq2b, 1, 1, P));
      if (kind == 0)
        pre = mul(pre, mul(poch_inf(aq2c, 1, 1, P), poch_inf(q2bc, 1, 1, P)));
      lhs = mul(ts.value(), pre);
    }
    Series rhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long n = 1; ts.more() && n <= 4 * P + 40; ++n) {
        Series piece(1, P);
        long nsg = (n % 2 == 0) ? 1 : -1;
        for (long long s = 0;; ++s) {
          const Series& f = ensureF(s);
          Rational me = min_exp(f);
          Rational e1 = binom2(n + 1) + binom2(s) + Rational(n + 1) * Rational(s) + me;
          Rational e2 = binom2(n - s) + me;
          if (e1 > Rational(P) && e2 > Rational(P) && s > n + 2) break;
          long sg = (s % 2 == 0) ? 1 : -1;
          if (e1 <= Rational(P))
            piece = add(piece,
                        scale_by(f, Monomial{nsg * sg, static_cast<int>(n - 1), e1 - me}));
          if (e2 <= Rational(P))
            piece = add(piece,
                        scale_by(f, Monomial{-nsg * sg, static_cast<int>(n - 1), e2 - me}));
        }
        ts.feed(piece);
      }
      Series walls = Series::one(1, P);
      if (kind <= 1) walls = poch_inf(q2b, 1, 1, P);
      if (kind == 0)
        walls = mul(walls, mul(poch_inf(q2c, 1, 1, P), poch_inf(aq2bc, 1, 1, P)));
      rhs = mul(walls, ts.value());
    }
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase ra_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto wq = poch_inf_table(Q(1), 1, B, 1, B);
    auto wa = poch_inf_table(A(1) * Q(1), 1, B, 1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(A(2) * Q(1), 1, 2 * n), cache.inv(A(2) * Q(1), 1, n));
      t = scale_by(t, Q(Rational(n)));
      t = mul(t, wq[static_cast<std::size_t>(n)]);
      t = mul(t, wa[static_cast<std::size_t>(n)]);
      ts.feed(t);
    }
    Series rhs(1, B);
    for (long long n = 0; n * (3 * n + 2) <= B; ++n) {
      rhs.add_term(n * (3 * n + 2), static_cast<int>(3 * n), 1);
      if (n * (3 * n + 2) + 2 * n + 1 <= B)
        rhs.add_term(n * (3 * n + 2) + 2 * n + 1, static_cast<int>(3 * n + 1), -1);
    }
    return {ts.value(), rhs};
  };
  return c;
}

IdentityCase rn_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto wq = poch_inf_table(Q(1), 1, B, 1, B);
    auto wa2 = poch_inf_table(A(1) * Q(2), 2, B, 1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(A(1) * Q(1), 1, 2 * n), cache.inv(A(1) * Q(1), 1, n));
      t = scale_by(t, Q(Rational(n)));
      t = mul(t, wq[static_cast<std::size_t>(n)]);
      t = mul(t, wa2[static_cast<std::size_t>(n)]);
      ts.feed(t);
    }
    Series rhs(1, B);
    for (long long n = 0; n * (n + 1) <= B; ++n)
      rhs.add_term(n * (n + 1), static_cast<int>(n), (n % 2 == 0) ? 1 : -1);
    return {ts.value(), rhs};
  };
  return c;
}

IdentityCase marvelous2_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n)
      ts.feed(scale_by(cache.inv(M(-1, 0, 1), 2, n + 1), Q(Rational(n))));
    Series rhs(1, B);
    for (long long n = 0; 2 * n * (3 * n + 2) <= B; ++n) {
      long sg = (n % 2 == 0) ? 1 : -1;
      rhs.add_term(2 * n * (3 * n + 2), 0, sg);
      if (2 * n * (3 * n + 2) + 4 * n + 2 <= B)
        rhs.add_term(2 * n * (3 * n + 2) + 4 * n + 2, 0, sg);
    }
    return {ts.value(), rhs};
  };
  return c;
}

IdentityCase ln_p13_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(Q(1), 2, n), cache.poch(A(1) * Q(1), 2, n));
      t = scale_by(t, (A(1) * Q(1)).pow(n));
      t = mul(t, cache.inv(M(-1, 1, 1), 1, 2 * n + 1));
      ts.feed(t);
    }
    Series rhs(1, B);
    for (long long n = 0; n * (n + 1) <= B; ++n)
      rhs.add_term(n * (n + 1), static_cast<int>(n), (n % 2 == 0) ? 1 : -1);
    return {ts.value(), rhs};
  };
  return c;
}

IdentityCase phi32_case(const Monomial& bv, const Monomial& cv, const char* bl,
                        const char* cl) {
  IdentityCase c;
  c.params = {{"b", bl}, {"c", cl}};
  c.build = [bv, cv](std::int64_t B) -> Sides {
    std::int64_t P = B + 2;
    PochCache cache(1, P);
    Monomial nb = M(-1, 0, 2) * bv.inverse();
    Monomial nc = M(-1, 0, 2) * cv.inverse();
    Monomial zm = nb * cv.inverse();
    Series lhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long n = 0; ts.more() && n <= P; ++n) {
        Series t = mul(cache.poch(Q(1), 2, n), cache.poch(zm, 1, n));
        t = scale_by(t, Q(Rational(n)));
        t = mul(t, cache.inv(Q(1), 1, n));
        t = mul(t, cache.inv(nb, 1, n));
        t = mul(t, cache.inv(nc, 1, n));
        ts.feed(t);
      }
      Series pre = mul(poch_inf_all({nb, nc}, 1, 1, P), poch_inf(Q(2), 2, 1, P));
      lhs = mul(ts.value(), pre);
    }
    Series rhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long r = 0; ts.more() && r <= 4 * P + 8; ++r) {
        Series t = mul(cache.poch(bv, 1, r), cache.poch(cv, 1, r));
        t = mul(t, cache.inv(Q(1), 2, r + 1));
        ts.feed(scale_by(t, zm.pow(r)));
      }
      rhs = mul(poch_inf(zm, 1, 1, P), ts.value());
    }
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  };
  return c;
}

}  // namespace

void register_residual(std::vector<IdentityEntry>& out) {
  {
    IdentityEntry e;
    e.id = "bcres";
    e.summary = "residual form of the two-parameter family at the shifted pole";
    e.cleared_by = "(q^2/b,q^2/c,aq^2/bc;q)_inf (q,q,aq;q)_inf";
    e.truncation = "reflected diagonal needs q-orders of b,c to sum to at most 0";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(bcres_case(0, M(-1, 0, 0), M(-1, 0, 0), "-1", "-1"));
      v.push_back(bcres_case(0, Q(1), M(-1, 0, -1), "q", "-q^-1"));
      v.push_back(bcres_case(0, M(1, 0, -1), Q(1), "q^-1", "q"));
      v.push_back(bcres_case(1, Q(1), Monomial::one(), "q", "->inf"));
      v.push_back(bcres_case(1, M(-1, 0, 1), Monomial::one(), "-q", "->inf"));
      v.push_back(bcres_case(1, M(-1, 0, 0), Monomial::one(), "-1", "->inf"));
      v.push_back(bcres_case(2, Monomial::one(), Monomial::one(), "->inf", "->inf"));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "ra";
    e.summary = "squared-parameter residual sum equals a signed cubic-exponent theta";
    e.cleared_by = "(q,aq;q)_inf";
    e.truncation = "left terms carry q^n; theta quadratic";
    e.cases = [](Profile) { return std::vector<IdentityCase>{ra_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "rn";
    e.summary = "residual sum with even-base wall equals an alternating theta";
    e.cleared_by = "(q;q)_inf (aq^2;q^2)_inf";
    e.truncation = "left terms carry q^n; theta quadratic";
    e.cases = [](Profile) { return std::vector<IdentityCase>{rn_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "marvelous2";
    e.summary = "odd-base reciprocal sum equals a modulus-twelve theta pair";
    e.cleared_by = "1";
    e.truncation = "left terms carry q^n";
    e.cases = [](Profile) { return std::vector<IdentityCase>{marvelous2_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "ln-p13";
    e.summary = "quadratic-base sum against a doubled wall equals an alternating theta";
    e.cleared_by = "1";
    e.truncation = "left terms carry (aq)^n";
    e.cases = [](Profile) { return std::vector<IdentityCase>{ln_p13_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "phi32";
    e.summary = "nonstandard transformation between two three-term series";
    e.cleared_by = "(-q^2/bc;q)_inf (q^2;q^2)_inf";
    e.truncation = "right terms need q-orders of b,c to sum to at most 1";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(phi32_case(Q(1), M(-1, 0, 0), "q", "-1"));
      v.push_back(phi32_case(M(-1, 0, 0), M(-1, 0, 0), "-1", "-1"));
      v.push_back(phi32_case(M(-1, 0, 1), M(-1, 0, 0), "-q", "-1"));
      v.push_back(phi32_case(Q(1), M(1, 0, -1), "q", "q^-1"));
      return v;
    };
    out.push_back(std::move(e));
  }
}

}  // namespace qtheta::reg
