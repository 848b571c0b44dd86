#include "registry_util.hpp"

// the Ramanujan quartet and its two-parameter, quadratic and cubic extensions

namespace qtheta::reg {

namespace {

IdentityCase r0_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    auto wa = poch_inf_table(A(1) * Q(1), 1, B, 1, B);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, B, 1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = mul(wa[static_cast<std::size_t>(n)], wia[static_cast<std::size_t>(n)]);
      ts.feed(scale_by(t, Q(Rational(n))));
    }
    Series lhs = ts.value();
    Series t1(1, B);
    for (long long n = 0; Rational(n) * Rational(3 * n + 1) / 2 <= Rational(B); ++n) {
      Rational e = Rational(n) * Rational(3 * n + 1) / 2;
      long sg = (n % 2 == 0) ? 1 : -1;
      t1.add_term(to_scaled(e, 1, "t"), static_cast<int>(3 * n), sg);
      t1.add_term(to_scaled(e + 2 * n + 1, 1, "t"), static_cast<int>(3 * n + 2), -sg);
    }
    Series t2(1, B);
    for (long long n = 0; Rational(n) * Rational(n + 1) / 2 <= Rational(B); ++n)
      t2.add_term(to_scaled(Rational(n) * Rational(n + 1) / 2, 1, "t"),
                  static_cast<int>(2 * n + 1), (n % 2 == 0) ? 1 : -1);
    Series rhs = add(mul(poch_inf_all({A(1), A(-1) * Q(1)}, 1, 1, B), t1), t2);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase r1_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto wa = poch_inf_table(A(1) * Q(1), 1, B, 1, B);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, B, 1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(Q(1), 1, 2 * n), cache.inv(Q(1), 1, n));
      t = mul(t, wa[static_cast<std::size_t>(n)]);
      t = mul(t, wia[static_cast<std::size_t>(n)]);
      ts.feed(scale_by(t, Q(Rational(n))));
    }
    Series lhs = ts.value();
    Series ta(1, B);
    for (long long n = 0; n * (n + 1) <= B; ++n)
      ta.add_term(n * (n + 1), static_cast<int>(n), 1);
    Series tb(1, B);
    for (long long n = 0; n * (3 * n + 2) <= B; ++n) {
      tb.add_term(n * (3 * n + 2), static_cast<int>(3 * n + 1), 1);
      tb.add_term(n * (3 * n + 2) + 2 * n + 1, static_cast<int>(3 * n + 2), -1);
    }
    Series walls = poch_inf_all({A(1), A(-1) * Q(1)}, 1, 1, B);
    Series rhs = add(mul(walls, ta), tb);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase r2_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto wa = poch_inf_table(A(1) * Q(1), 1, B, 1, B);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, B, 1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(Q(1), 2, n), wa[static_cast<std::size_t>(n)]);
      t = mul(t, wia[static_cast<std::size_t>(n)]);
      ts.feed(scale_by(t, Q(Rational(n))));
    }
    Series lhs = mul(ts.value(), poch_inf(M(-1, 0, 1), 1, 1, B));
    Series ta(1, B);
    for (long long n = 0; Rational(n) * Rational(n + 1) / 2 <= Rational(B); ++n)
      ta.add_term(to_scaled(Rational(n) * Rational(n + 1) / 2, 1, "t"), static_cast<int>(n), 1);
    Series tb(1, B);
    for (long long n = 0; n * (n + 1) <= B; ++n)
      tb.add_term(n * (n + 1), static_cast<int>(2 * n + 1), (n % 2 == 0) ? 1 : -1);
    Series walls = poch_inf_all({M(-1, 0, 1), A(1), A(-1) * Q(1)}, 1, 1, B);
    Series rhs = add(mul(walls, ta), tb);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase r3_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto wa = poch_inf_table(A(1) * Q(2), 2, B, 1, B);
    auto wia = poch_inf_table(A(-1) * Q(2), 2, B, 1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(Q(1), 2, n), wa[static_cast<std::size_t>(n)]);
      t = mul(t, wia[static_cast<std::size_t>(n)]);
      ts.feed(scale_by(t, Q(Rational(2 * n))));
    }
    Series nq = poch_inf(M(-1, 0, 1), 1, 1, B);
    Series lhs = mul(ts.value(), nq);
    Series ta(1, B);
    for (long long n = 0; Rational(n) * Rational(n + 1) / 2 <= Rational(B); ++n)
      ta.add_term(to_scaled(Rational(n) * Rational(n + 1) / 2, 1, "t"), static_cast<int>(n), 1);
    Series tb(1, B);
    for (long long n = 0; n * (3 * n + 2) <= B; ++n) {
      long sg = (n % 2 == 0) ? 1 : -1;
      tb.add_term(n * (3 * n + 2), static_cast<int>(3 * n + 1), sg);
      tb.add_term(n * (3 * n + 2) + 2 * n + 1, static_cast<int>(3 * n + 2), sg);
    }
    Series walls = mul(nq, mul(poch_inf(A(1), 2, 1, B), poch_inf(A(-1) * Q(2), 2, 1, B)));
    Series rhs = add(mul(walls, ta), tb);
    return {lhs, rhs};
  };
  return c;
}

// three flavours of the two-parameter family: finite monomials b and c,
// c sent to infinity, or both sent to infinity
IdentityCase bc_case(int kind, const Monomial& bv, const Monomial& cv, const char* bl,
                     const char* cl) {
  IdentityCase c;
  c.params = {{"b", bl}, {"c", cl}};
  c.build = [kind, bv, cv](std::int64_t B) -> Sides {
    std::int64_t P = B + 4;
    PochCache cache(1, P);
    Monomial q2b = Q(2) * bv.inverse();
    Monomial q2c = Q(2) * cv.inverse();
    Monomial q2bc = Q(2) * bv.inverse() * cv.inverse();
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
    auto wa = poch_inf_table(A(1) * Q(1), 1, P, 1, P);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, P, 1, P);
    Series lhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long n = 0; ts.more() && n <= P; ++n) {
        Series t = mul(cache.poch(Q(1), 1, 2 * n), cache.inv(Q(1), 1, n));
        if (kind == 0) t = mul(t, cache.poch(q2bc, 1, n));
        t = scale_by(t, Q(Rational(n)));
        t = mul(t, wa[static_cast<std::size_t>(n)]);
        t = mul(t, wia[static_cast<std::size_t>(n)]);
        if (kind <= 1) t = mul(t, cache.inv(q2b, 1, n));
        if (kind == 0) t = mul(t, cache.inv(q2c, 1, n));
        ts.feed(t);
      }
      lhs = mul(ts.value(), poch_inf(Q(1), 1, 1, P));
    }
    {
      TailSum ts(1, P);
      for (long long s = 0; ts.more(); ++s)
        ts.feed(scale_by(ensureF(s), A(static_cast<int>(s))));
      Series walls = poch_inf_all({Q(1), A(1), A(-1) * Q(1)}, 1, 1, P);
      lhs = sub(lhs, mul(walls, ts.value()));
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
            piece = add(piece, scale_by(f, Monomial{nsg * sg, static_cast<int>(n),
                                                    e1 - me}));
          if (e2 <= Rational(P))
            piece = add(piece, scale_by(f, Monomial{-nsg * sg, static_cast<int>(n),
                                                    e2 - me}));
        }
        ts.feed(piece);
      }
      rhs = ts.value();
    }
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase bc_quadratic_case(const Monomial& bv, const char* bl) {
  IdentityCase c;
  c.params = {{"b", bl}};
  c.build = [bv](std::int64_t B) -> Sides {
    std::int64_t P = B + 2;
    PochCache cache(1, P);
    Monomial q2b = Q(2) * bv.inverse();
    Monomial q3b = Q(3) * bv.inverse();
    auto G = [&](long long r) -> Series {
      Series g = mul(cache.poch(Q(1), 2, r), cache.poch(bv, 2, r));
      g = mul(g, cache.inv(Q(2), 2, r));
      g = mul(g, cache.inv(q3b, 2, r));
      return scale_by(g, q2b.pow(r));
    };
    std::vector<Series> Gs;
    auto ensureG = [&](long long r) -> const Series& {
      while (static_cast<long long>(Gs.size()) <= r) Gs.push_back(G(Gs.size()));
      return Gs[static_cast<std::size_t>(r)];
    };
    auto wa = poch_inf_table(A(1) * Q(1), 1, P, 1, P);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, P, 1, P);
    Series lhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long n = 0; ts.more() && n <= P; ++n) {
        Series t = mul(cache.poch(Q(1), 2, n), cache.poch(q2b, 2, n));
        t = mul(t, cache.inv(Q(1), 1, n));
        t = mul(t, cache.inv(q2b, 1, n));
        t = scale_by(t, Q(Rational(n)));
        t = mul(t, wa[static_cast<std::size_t>(n)]);
        t = mul(t, wia[static_cast<std::size_t>(n)]);
        ts.feed(t);
      }
      lhs = mul(ts.value(), poch_inf(Q(1), 1, 1, P));
    }
    {
      TailSum ts(1, P);
      for (long long r = 0; ts.more(); ++r)
        ts.feed(scale_by(ensureG(r), A(static_cast<int>(2 * r))));
      Series walls = poch_inf_all({Q(1), A(1), A(-1) * Q(1)}, 1, 1, P);
      lhs = sub(lhs, mul(walls, ts.value()));
    }
    Series rhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long n = 1; ts.more() && n <= 4 * P + 40; ++n) {
        Series piece(1, P);
        long nsg = (n % 2 == 0) ? -1 : 1;
        for (long long r = 0;; ++r) {
          const Series& g = ensureG(r);
          Rational me = min_exp(g);
          Rational e1 = binom2(n - 2 * r) + me;
          if (e1 > Rational(P) && 2 * r > n + 2) break;
          if (e1 <= Rational(P))
            piece = add(piece, scale_by(g, Monomial{nsg, static_cast<int>(n), e1 - me}));
          Rational e2 = e1 + Rational(4 * r + 1) * Rational(n);
          if (e2 <= Rational(P))
            piece = add(piece, scale_by(g, Monomial{-nsg, static_cast<int>(n), e2 - me}));
        }
        ts.feed(piece);
      }
      rhs = ts.value();
    }
    lhs.restrict_bound(B);
    rhs.restrict_bound(B);
    return {lhs, rhs};
  };
  return c;
}

IdentityCase bc_cubic_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto wa = poch_inf_table(A(1) * Q(1), 1, B, 1, B);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, B, 1, B);
    Series lhs = Series::zero(1, B);
    {
      TailSum ts(1, B);
      for (long long n = 0; ts.more() && n <= B; ++n) {
        Series t = mul(cache.poch(Q(1), 3, n), cache.inv(Q(1), 1, n));
        t = scale_by(t, Q(Rational(n)));
        t = mul(t, wa[static_cast<std::size_t>(n)]);
        t = mul(t, wia[static_cast<std::size_t>(n)]);
        ts.feed(t);
      }
      lhs = mul(ts.value(), poch_inf(Q(1), 1, 1, B));
    }
    {
      Series walls = poch_inf_all({Q(1), A(1), A(-1) * Q(1)}, 1, 1, B);
      Series ratio = mul(poch_inf(A(3) * Q(2), 3, 1, B),
                         reciprocal(poch_inf(A(3) * Q(1), 3, 1, B)));
      lhs = sub(lhs, mul(walls, ratio));
    }
    Series rhs = Series::zero(1, B);
    {
      TailSum ts(1, B);
      for (long long n = 1; ts.more() && n <= 4 * B + 40; ++n) {
        Series piece(1, B);
        for (long long r = 0;; ++r) {
          Rational e1 = binom2(n - 3 * r) + Rational(r);
          if (e1 > Rational(B) && 3 * r > n + 3) break;
          long sg = ((n + r) % 2 == 0) ? -1 : 1;
          Series g = mul(cache.poch(Q(1), 3, r), cache.inv(Q(3), 3, r));
          if (e1 <= Rational(B))
            piece = add(piece, scale_by(g, Monomial{sg, static_cast<int>(n), e1}));
          Rational e2 = e1 + Rational(6 * r + 1) * Rational(n);
          if (e2 <= Rational(B))
            piece = add(piece, scale_by(g, Monomial{-sg, static_cast<int>(n), e2}));
        }
        ts.feed(piece);
      }
      rhs = ts.value();
    }
    return {lhs, rhs};
  };
  return c;
}

IdentityCase nnb_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    auto wa = poch_inf_table(A(1) * Q(1), 1, B, 1, B);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, B, 1, B);
    Series lhs = Series::zero(1, B);
    {
      TailSum ts(1, B);
      for (long long n = 0; ts.more() && n <= B; ++n) {
        Series t = mul(cache.poch(Q(1), 1, 2 * n), cache.inv(Q(1), 1, n));
        t = mul(t, cache.inv(Q(2), 1, n));
        t = scale_by(t, Q(Rational(n)));
        t = mul(t, wa[static_cast<std::size_t>(n)]);
        t = mul(t, wia[static_cast<std::size_t>(n)]);
        ts.feed(t);
      }
      lhs = mul(ts.value(), poch_inf(Q(1), 1, 1, B));
    }
    Series walls = poch_inf_all({Q(1), A(1), A(-1) * Q(1)}, 1, 1, B);
    Series extra = smono(A(1), 1, B);
    Series theta(1, B);
    for (long long n = 1; binom2(n + 1) <= Rational(B); ++n)
      theta.add_term(to_scaled(binom2(n + 1), 1, "t"), static_cast<int>(n),
                     (n % 2 == 0) ? 1 : -1);
    Series rhs = add(walls, add(extra, mul(add(Series::one(1, B), smono(A(1), 1, B)), theta)));
    return {lhs, rhs};
  };
  return c;
}

IdentityCase nnb_a1_case() {
  IdentityCase c;
  c.build = [](std::int64_t B) -> Sides {
    PochCache cache(1, B);
    TailSum ts(1, B);
    for (long long n = 0; ts.more() && n <= B; ++n) {
      Series t = mul(cache.poch(Q(1), 2, n), cache.inv(M(-1, 0, 1), 1, n));
      t = mul(t, cache.inv(Q(2), 1, n));
      ts.feed(scale_by(t, Q(Rational(n))));
    }
    Series lhs = ts.value();
    Series two = add(Series::one(1, B), Series::one(1, B));
    Series rhs = sub(two, mul(poch_inf(Q(1), 2, 1, B), reciprocal(poch_inf(Q(2), 2, 1, B))));
    return {lhs, rhs};
  };
  return c;
}

}  // namespace

void register_families(std::vector<IdentityEntry>& out) {
  {
    IdentityEntry e;
    e.id = "r0";
    e.summary = "reciprocal-wall sum of q^n equals a false theta plus a weighted partial theta";
    e.cleared_by = "(a,q/a;q)_inf";
    e.truncation = "left terms carry q^n; thetas quadratic";
    e.cases = [](Profile) { return std::vector<IdentityCase>{r0_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "r1";
    e.summary = "reciprocal-wall sum with rising factor equals theta pair of modulus three";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "left terms carry q^n; thetas quadratic";
    e.cases = [](Profile) { return std::vector<IdentityCase>{r1_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "r2";
    e.summary = "reciprocal-wall sum with odd-base factor equals a split partial theta pair";
    e.cleared_by = "(-q,a,q/a;q)_inf";
    e.truncation = "left terms carry q^n; thetas quadratic";
    e.cases = [](Profile) { return std::vector<IdentityCase>{r2_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "r3";
    e.summary = "even-base reciprocal-wall sum equals a split theta pair with plus signs";
    e.cleared_by = "(-q;q)_inf (a,q^2/a;q^2)_inf";
    e.truncation = "left terms carry q^{2n}; thetas quadratic";
    e.cases = [](Profile) { return std::vector<IdentityCase>{r3_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "bc";
    e.summary = "two-parameter master family with bilateral reflected right side";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "reflected diagonal needs q-orders of b,c to sum to at most 0";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(bc_case(0, M(-1, 0, 0), M(-1, 0, 0), "-1", "-1"));
      v.push_back(bc_case(0, Q(1), M(-1, 0, -1), "q", "-q^-1"));
      v.push_back(bc_case(0, M(1, 0, -1), Q(1), "q^-1", "q"));
      v.push_back(bc_case(1, Q(1), Monomial::one(), "q", "->inf"));
      v.push_back(bc_case(1, M(-1, 0, 1), Monomial::one(), "-q", "->inf"));
      v.push_back(bc_case(1, M(-1, 0, 0), Monomial::one(), "-1", "->inf"));
      v.push_back(bc_case(2, Monomial::one(), Monomial::one(), "->inf", "->inf"));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "bc-quadratic";
    e.summary = "quadratic-base family member with even-indexed seed";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "diagonal n = 2r grows like r(2 - q-order of b)";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(bc_quadratic_case(Monomial::one(), "1"));
      v.push_back(bc_quadratic_case(Q(1), "q"));
      v.push_back(bc_quadratic_case(M(-1, 0, 1), "-q"));
      v.push_back(bc_quadratic_case(M(-1, 0, 0), "-1"));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "bc-cubic";
    e.summary = "cubic-base family member; seed sum collapses to a product ratio";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "diagonal n = 3r carries q^r";
    e.cases = [](Profile) { return std::vector<IdentityCase>{bc_cubic_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "nnb";
    e.summary = "quadratic family at b = 1: wall sum equals one plus weighted partial theta";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "left terms carry q^n; theta quadratic";
    e.cases = [](Profile) { return std::vector<IdentityCase>{nnb_case()}; };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "nnb-a-1";
    e.summary = "specialization at a = -1 to a closed even-odd product ratio";
    e.cleared_by = "1";
    e.truncation = "left terms carry q^n";
    e.cases = [](Profile) { return std::vector<IdentityCase>{nnb_a1_case()}; };
    out.push_back(std::move(e));
  }
}

}  // namespace qtheta::reg
