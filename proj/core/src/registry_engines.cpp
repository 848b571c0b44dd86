#include "registry_util.hpp"

// free-coefficient engines: a seed sequence r -> f_r enters a cleared double
// sum on the left and a partial-theta-weighted bilateral sum on the right

namespace qtheta::reg {

namespace {

// inner sum over r = 0..n of
//   (-1)^r q^{binom(r,2)} f_r (x q^{2r}; q)_{2(n-r)} / [(x q^{2r+1}; q)_{n-r} (q;q)_{n-r}]
// which is the cleared form of the x = ab ratio block
Series cleared_inner(PochCache& cache, const Monomial& x, const Seed& f, long long n,
                     std::int64_t P) {
  Series acc = Series::zero(1, P);
  for (long long r = 0; r <= n; ++r) {
    Monomial fr = f(r);
    if (fr.is_zero()) continue;
    if (binom2(r) + fr.q_exp > Rational(P) + 2) break;
    Series t = cache.poch(x * Q(Rational(2 * r)), 1, 2 * (n - r));
    t = mul(t, cache.inv(x * Q(Rational(2 * r + 1)), 1, n - r));
    t = mul(t, cache.inv(Q(1), 1, n - r));
    long sg = (r % 2 == 0) ? 1 : -1;
    t = scale_by(t, fr * Monomial{sg, 0, binom2(r)});
    acc = add(acc, t);
  }
  return acc;
}

IdentityCase ab_master_case(const std::string& fname, const Monomial& bv) {
  IdentityCase c;
  c.params = {{"f", fname}, {"b", to_string(bv)}};
  c.build = [fname, bv](std::int64_t B) -> Sides {
    std::int64_t P = B + 4;
    PochCache cache(1, P);
    Seed f = seed_sequence(fname);
    Monomial ab = A(1) * bv;
    Monomial qb = Q(1) * bv.inverse();
    Rational beta = bv.q_exp;
    auto wa = poch_inf_table(A(1) * Q(1), 1, P, 1, P);
    auto wb = poch_inf_table(bv, 1, P, 1, P);
    Series lhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long n = 0; ts.more() && n <= P; ++n) {
        Series t = cleared_inner(cache, ab, f, n, P);
        t = scale_by(t, Q(Rational(n)));
        t = mul(t, wa[static_cast<std::size_t>(n)]);
        t = mul(t, wb[static_cast<std::size_t>(n)]);
        ts.feed(t);
      }
      lhs = mul(ts.value(), poch_inf(Q(1), 1, 1, P));
    }
    {
      // subtracted piece (q/b,b,q;q)_inf sum_r (q/b)^r f_r
      TailSum ts(1, P);
      for (long long r = 0; ts.more(); ++r) {
        Monomial fr = f(r);
        if (fr.is_zero()) {
          ts.feed(Series::zero(1, P));
          continue;
        }
        ts.feed(smono(qb.pow(r) * fr, 1, P));
      }
      Series walls = mul(poch_inf(qb, 1, 1, P), poch_inf(bv, 1, 1, P));
      walls = mul(walls, poch_inf(Q(1), 1, 1, P));
      lhs = sub(lhs, mul(walls, ts.value()));
    }
    Series rhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long s = 0; ts.more(); ++s) {
        Monomial fs = f(s);
        if (fs.is_zero()) {
          ts.feed(Series::zero(1, P));
          continue;
        }
        Series piece(1, P);
        bool touched = false;
        for (long long n = 1;; ++n) {
          Rational e1 = binom2(n + s + 1) + fs.q_exp;
          Rational e2 = binom2(n - s) + (1 - beta) * Rational(n) + fs.q_exp;
          if (e1 > Rational(P) && e2 > Rational(P) && n > s + 2) break;
          long sg = ((n + s) % 2 == 0) ? 1 : -1;
          piece = add(piece, smono(fs * Monomial{sg, static_cast<int>(n), binom2(n + s + 1)}, 1, P));
          piece = add(piece, smono(fs * qb.pow(n) * Monomial{-sg, 0, binom2(n - s)}, 1, P));
          touched = true;
        }
        if (!touched) {
          ts.feed(Series::zero(1, P));
          continue;
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

IdentityCase prop1_case(const std::string& fname) {
  IdentityCase c;
  c.params = {{"f", fname}};
  c.build = [fname](std::int64_t B) -> Sides {
    std::int64_t P = B + 4;
    PochCache cache(1, P);
    Seed f = seed_sequence(fname);
    auto wa = poch_inf_table(A(1) * Q(1), 1, P, 1, P);
    auto wia = poch_inf_table(A(-1) * Q(1), 1, P, 1, P);
    Series lhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long n = 0; ts.more() && n <= P; ++n) {
        Series t = cleared_inner(cache, Q(1), f, n, P);
        t = scale_by(t, Q(Rational(n)));
        t = mul(t, wa[static_cast<std::size_t>(n)]);
        t = mul(t, wia[static_cast<std::size_t>(n)]);
        ts.feed(t);
      }
      lhs = mul(ts.value(), poch_inf(Q(1), 1, 1, P));
    }
    {
      // subtracted piece (q,a,q/a;q)_inf sum_r a^r f_r
      TailSum ts(1, P);
      for (long long r = 0; ts.more(); ++r) {
        Monomial fr = f(r);
        ts.feed(fr.is_zero() ? Series::zero(1, P)
                             : smono(fr * A(static_cast<int>(r)), 1, P));
      }
      Series walls = mul(poch_inf(A(1), 1, 1, P), poch_inf(A(-1) * Q(1), 1, 1, P));
      walls = mul(walls, poch_inf(Q(1), 1, 1, P));
      lhs = sub(lhs, mul(walls, ts.value()));
    }
    Series rhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long s = 0; ts.more(); ++s) {
        Monomial fs = f(s);
        if (fs.is_zero()) {
          ts.feed(Series::zero(1, P));
          continue;
        }
        Series piece(1, P);
        for (long long n = 1;; ++n) {
          Rational e1 = binom2(n + s + 1) + fs.q_exp;
          Rational e2 = binom2(n - s) + fs.q_exp;
          if (e1 > Rational(P) && e2 > Rational(P) && n > s + 2) break;
          long sg = ((n + s) % 2 == 0) ? 1 : -1;
          piece = add(piece, smono(fs * Monomial{sg, static_cast<int>(n), binom2(n + s + 1)}, 1, P));
          piece = add(piece, smono(fs * Monomial{-sg, static_cast<int>(n), binom2(n - s)}, 1, P));
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

IdentityCase r4_master_case(const std::string& fname) {
  IdentityCase c;
  c.params = {{"f", fname}};
  c.build = [fname](std::int64_t B) -> Sides {
    std::int64_t P = B + 6;
    PochCache cache(1, P);
    Seed f = seed_sequence(fname);
    auto wa = poch_inf_table(A(1) * Q(1), 1, P, 1, P);
    auto wia = poch_inf_table(A(-1) * Q(2), 1, P, 1, P);
    Series lhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long n = 0; ts.more() && n <= P; ++n) {
        Series t = cleared_inner(cache, Q(2), f, n, P);
        t = scale_by(t, Q(Rational(n)));
        t = mul(t, wa[static_cast<std::size_t>(n)]);
        t = mul(t, wia[static_cast<std::size_t>(n)]);
        ts.feed(t);
      }
      lhs = mul(ts.value(), poch_inf(Q(1), 1, 1, P));
    }
    {
      // added piece (q,a,q/a;q)_inf sum_r (a/q)^{r+1} f_r
      TailSum ts(1, P);
      for (long long r = 0; ts.more(); ++r) {
        Monomial fr = f(r);
        ts.feed(fr.is_zero()
                    ? Series::zero(1, P)
                    : smono(fr * Monomial{1, static_cast<int>(r + 1), Rational(-(r + 1))}, 1, P));
      }
      Series walls = mul(poch_inf(A(1), 1, 1, P), poch_inf(A(-1) * Q(1), 1, 1, P));
      walls = mul(walls, poch_inf(Q(1), 1, 1, P));
      lhs = add(lhs, mul(walls, ts.value()));
    }
    Series rhs = Series::zero(1, P);
    {
      TailSum ts(1, P);
      for (long long s = 0; ts.more(); ++s) {
        Monomial fs = f(s);
        if (fs.is_zero()) {
          ts.feed(Series::zero(1, P));
          continue;
        }
        Series piece(1, P);
        for (long long n = 1;; ++n) {
          Rational e1 = binom2(n + s + 1) + fs.q_exp;
          Rational e2 = binom2(n - s) - Rational(n) + fs.q_exp;
          if (e1 > Rational(P) && e2 > Rational(P) && n > s + 2) break;
          long sg = ((n + s) % 2 == 0) ? 1 : -1;
          piece = add(piece, smono(fs * Monomial{sg, static_cast<int>(n), binom2(n + s + 1)}, 1, P));
          piece = add(piece,
                      smono(fs * Monomial{-sg, static_cast<int>(n), binom2(n - s) - Rational(n)},
                            1, P));
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

}  // namespace

void register_engines(std::vector<IdentityEntry>& out) {
  {
    IdentityEntry e;
    e.id = "ab-master";
    e.summary = "two-parameter engine: cleared double sum against a bilateral partial theta";
    e.cleared_by = "(q,a,b;q)_inf";
    e.truncation = "seed exponents are quadratic; left terms carry q^n";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      v.push_back(ab_master_case("quadratic", Q(1)));
      v.push_back(ab_master_case("quadratic", M(-1, 0, 1)));
      v.push_back(ab_master_case("quadratic", M(-1, 0, 0)));
      v.push_back(ab_master_case("quadratic", Q(2)));
      v.push_back(ab_master_case("quadratic-half", Q(1)));
      v.push_back(ab_master_case("quadratic-half", M(-1, 0, 0)));
      v.push_back(ab_master_case("mod3", Q(1)));
      v.push_back(ab_master_case("mod3", M(-1, 0, 1)));
      v.push_back(ab_master_case("bpa11", Q(2)));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "prop1";
    e.summary = "reflection engine at b = q/a with a bare subtracted seed sum";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "seed exponents are quadratic; left terms carry q^n";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (const auto& s : seed_names()) v.push_back(prop1_case(s));
      return v;
    };
    out.push_back(std::move(e));
  }
  {
    IdentityEntry e;
    e.id = "r4-master";
    e.summary = "odd-wall engine with shifted Pochhammer block and q^{-n} reflection";
    e.cleared_by = "(q,a,q/a;q)_inf";
    e.truncation = "seed exponents are quadratic; reflected piece dips at most linearly";
    e.cases = [](Profile) {
      std::vector<IdentityCase> v;
      for (const auto& s : seed_names()) v.push_back(r4_master_case(s));
      return v;
    };
    out.push_back(std::move(e));
  }
}

}  // namespace qtheta::reg
