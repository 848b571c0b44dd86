#include <doctest.h>

#include <qtheta/multisum.hpp>
#include <qtheta/qfactory.hpp>

using namespace qtheta;

namespace {

const Rational one_r(1);

Series qq_inf(std::int64_t b) { return poch_inf(Monomial::q(1), one_r, 1, b); }

}  // namespace

TEST_CASE("pochhammer splitting identities") {
  const std::int64_t b = 60;
  for (long long n = 0; n <= 8; ++n) {
    // (x;q)_{2n} = (x;q)_n (x q^n;q)_n with x = a
    Monomial x = Monomial::a();
    Series lhs = poch(x, one_r, 2 * n, 1, b);
    Monomial xq = x;
    xq.q_exp += Rational(n);
    Series rhs = mul(poch(x, one_r, n, 1, b), poch(xq, one_r, n, 1, b));
    CHECK(equal_through(lhs, rhs, Rational(b)));
    // (q;q)_{2n} = (q;q)_n (q^{n+1};q)_n
    Series l2 = poch(Monomial::q(1), one_r, 2 * n, 1, b);
    Series r2 = mul(poch(Monomial::q(1), one_r, n, 1, b),
                    poch(Monomial::q(Rational(n + 1)), one_r, n, 1, b));
    CHECK(equal_through(l2, r2, Rational(b)));
  }
}

TEST_CASE("negative pochhammer length inverts the shifted product") {
  // (x;q)_{-n} = 1/(x q^{-n};q)_n
  const std::int64_t b = 40;
  for (long long n = 1; n <= 5; ++n) {
    Monomial x = Monomial::make(1, 1, Rational(n + 1));  // a q^{n+1}, keeps exponents positive
    Series lhs = poch(x, one_r, -n, 1, b);
    Monomial shifted = x;
    shifted.q_exp -= Rational(n);
    Series rhs = reciprocal(poch(shifted, one_r, n, 1, b));
    CHECK(equal_through(lhs, rhs, Rational(30)));
  }
}

TEST_CASE("infinite products telescope against finite ones") {
  const std::int64_t b = 50;
  // (q;q)_inf = (q;q)_n (q^{n+1};q)_inf
  for (long long n : {1LL, 4LL, 9LL}) {
    Series rhs = mul(poch(Monomial::q(1), one_r, n, 1, b),
                     poch_inf(Monomial::q(Rational(n + 1)), one_r, 1, b));
    CHECK(equal_through(qq_inf(b), rhs, Rational(b)));
  }
}

TEST_CASE("infinite product requires growth") {
  CHECK_THROWS_AS((void)poch_inf(Monomial::q(1), Rational(0), 1, 10), NonTruncating);
  CHECK_THROWS_AS((void)poch_inf(Monomial::q(1), Rational(-1), 1, 10), NonTruncating);
  CHECK_THROWS_AS((void)geometric(Monomial::a(), 1, 10), NonTruncating);
}

TEST_CASE("even-odd factorization") {
  const std::int64_t b = 60;
  // (-q;q)_inf (q;q^2)_inf = 1  (Euler)
  Series lhs = mul(poch_inf(Monomial::make(-1, 0, one_r), one_r, 1, b),
                   poch_inf(Monomial::q(1), Rational(2), 1, b));
  CHECK(equal_through(lhs, Series::one(1, b), Rational(b)));
  // (q;q)_inf = (q;q^2)_inf (q^2;q^2)_inf
  Series rhs = mul(poch_inf(Monomial::q(1), Rational(2), 1, b),
                   poch_inf(Monomial::q(2), Rational(2), 1, b));
  CHECK(equal_through(qq_inf(b), rhs, Rational(b)));
}

TEST_CASE("triple product identity") {
  const std::int64_t b = 50;
  // sum_{n in Z} (-1)^n q^{n(n-1)/2} a^n = (a, q/a, q; q)_inf
  ThetaSpec spec;
  spec.range = ThetaSpec::Range::all;
  spec.sign = ThetaSpec::Sign::alternating;
  spec.q_exp = {Rational(1, 2), Rational(-1, 2), Rational(0)};
  spec.a_lin = 1;
  Series sum = theta_sum(spec, 1, b);
  Series prod = triple_product(Monomial::a(), one_r, 1, b);
  CHECK(equal_through(sum, prod, Rational(b)));
}

TEST_CASE("quintuple product identity") {
  const std::int64_t b = 40;
  // (z, q/z, q; q)inf (q z^2, q/z^2; q^2)inf
  //   = sum_{n in Z} q^{n(3n+1)/2} (z^{-3n} - z^{3n+1})
  ThetaSpec part1;
  part1.range = ThetaSpec::Range::all;
  part1.q_exp = {Rational(3, 2), Rational(1, 2), Rational(0)};
  part1.a_lin = -3;
  ThetaSpec part2 = part1;
  part2.a_lin = 3;
  part2.a_const = 1;
  Series sum = sub(theta_sum(part1, 1, b), theta_sum(part2, 1, b));
  Series prod = quintuple_product(Monomial::a(), one_r, 1, b);
  CHECK(equal_through(sum, prod, Rational(b)));
}

TEST_CASE("theta pair matches the product inside the fundamental strip") {
  const std::int64_t b = 40;
  for (long long m = 2; m <= 5; ++m)
    for (long long x = 1; x < m; ++x) {
      Series sum = theta_pair(Rational(x), Rational(m), 1, b);
      Series prod = poch_inf_all({Monomial::q(Rational(x)), Monomial::q(Rational(m - x)),
                                  Monomial::q(Rational(m))},
                                 Rational(m), 1, b);
      CHECK(equal_through(sum, prod, Rational(b)));
    }
}

TEST_CASE("theta pair functional equation and zeros") {
  const std::int64_t b = 30;
  // f(x + m) = -q^{-x} f(x)
  for (long long m = 2; m <= 4; ++m)
    for (long long x = 1; x <= 2 * m; ++x) {
      Series lhs = theta_pair(Rational(x + m), Rational(m), 1, b);
      Series rhs = scale_by(theta_pair(Rational(x), Rational(m), 1, b),
                            Monomial{-1, 0, Rational(-x)});
      CHECK(equal_through(lhs, rhs, Rational(15)));
    }
  for (long long m = 2; m <= 4; ++m)
    for (long long x : {0LL, m, 2 * m, -m}) {
      Series z = theta_pair(Rational(x), Rational(m), 1, b);
      CHECK(equal_through(z, Series::zero(1, b), Rational(20)));
    }
}

TEST_CASE("theta pair on a fractional grid") {
  const std::int64_t b = 80;  // through q^20 on scale 4
  Series f = theta_pair(Rational(1, 2), Rational(3, 2), 4, b);
  Series prod = poch_inf_all({Monomial::q(Rational(1, 2)), Monomial::q(Rational(1)),
                              Monomial::q(Rational(3, 2))},
                             Rational(3, 2), 4, b);
  CHECK(equal_through(f, prod, Rational(20)));
}

TEST_CASE("partial theta sums stop on their own") {
  const std::int64_t b = 25;
  ThetaSpec spec;  // sum_{n>=0} (-1)^n q^{n(n+1)/2} a^n
  spec.sign = ThetaSpec::Sign::alternating;
  spec.q_exp = {Rational(1, 2), Rational(1, 2), Rational(0)};
  spec.a_lin = 1;
  Series f = theta_sum(spec, 1, b);
  CHECK(coefficient_at(f, Rational(1), 1) == -1);
  CHECK(coefficient_at(f, Rational(3), 2) == 1);
  CHECK(coefficient_at(f, Rational(6), 3) == -1);
  CHECK(coefficient_at(f, Rational(6), 0) == 0);

  ThetaSpec bad;
  bad.q_exp = {Rational(0), Rational(0), Rational(0)};
  CHECK_THROWS_AS((void)theta_sum(bad, 1, 10), NonTruncating);
  ThetaSpec shrink;
  shrink.range = ThetaSpec::Range::all;
  shrink.q_exp = {Rational(0), Rational(1), Rational(0)};
  CHECK_THROWS_AS((void)theta_sum(shrink, 1, 10), NonTruncating);
}

TEST_CASE("floor signs") {
  const std::int64_t b = 20;
  // sum_{n>=0} (-1)^{floor(n/2)} q^n: signs + + - - + + ...
  ThetaSpec spec;
  spec.sign = ThetaSpec::Sign::floor_sign;
  spec.s1 = 1;
  spec.s2 = 2;
  spec.q_exp = {Rational(0), Rational(1), Rational(0)};
  Series f = theta_sum(spec, 1, b);
  long sign[] = {1, 1, -1, -1};
  for (long long n = 0; n <= 20; ++n)
    CHECK(coefficient_at(f, Rational(n), 0) == Int(sign[n % 4]));
}

TEST_CASE("secondary factors split each term in two") {
  const std::int64_t b = 30;
  // sum_{n>=0} q^{n^2} a^n (1 - a q^{2n+1}) telescopes: consecutive terms
  // cancel and only the n = 0 primary survives
  ThetaSpec tele;
  tele.q_exp = {one_r, Rational(0), Rational(0)};
  tele.a_lin = 1;
  tele.has_second = true;
  tele.second = Monomial{1, 1, Rational(1)};
  tele.second_q = {Rational(0), Rational(2), Rational(0)};
  CHECK(equal_through(theta_sum(tele, 1, b), Series::one(1, b), Rational(b)));

  // sum_{n>=0} q^{n^2} a^n (1 - a q^{2n+2}) keeps both halves distinct
  ThetaSpec spec = tele;
  spec.second.q_exp = Rational(2);
  Series f = theta_sum(spec, 1, b);
  for (long long n = 0; n * n <= b; ++n) {
    CHECK(coefficient_at(f, Rational(n * n), static_cast<int>(n)) == 1);
    if (n * n + 2 * n + 2 <= b)
      CHECK(coefficient_at(f, Rational(n * n + 2 * n + 2), static_cast<int>(n + 1)) == -1);
  }
}

TEST_CASE("pochhammer cache is consistent") {
  PochCache cache(1, 40);
  for (long long n : {0LL, 1LL, 3LL, 7LL}) {
    const Series& p = cache.poch(Monomial::q(1), one_r, n);
    const Series& i = cache.inv(Monomial::q(1), one_r, n);
    CHECK(equal_through(mul(p, i), Series::one(1, 40), Rational(40)));
    CHECK(equal_through(p, poch(Monomial::q(1), one_r, n, 1, 40), Rational(40)));
  }
  // a-dependent symbol with unit leading term
  Monomial aq = Monomial::make(1, 1, one_r);
  const Series& i = cache.inv(aq, one_r, 4);
  CHECK(equal_through(mul(i, poch(aq, one_r, 4, 1, 40)), Series::one(1, 40), Rational(40)));
}

TEST_CASE("two-level multisum against direct summation") {
  const std::int64_t b = 50;
  PochCache cache(1, b);
  std::vector<SumLevel> levels(2);
  auto weight = [&](long long m) -> Series { return cache.inv(Monomial::q(1), one_r, m); };
  Series fast = free_multisum(levels, weight, cache);

  // brute force without pruning
  Series slow(1, b);
  for (long long n1 = 0; n1 * n1 + n1 <= b; ++n1)
    for (long long n2 = 0; n2 <= n1; ++n2) {
      Rational e(n1 * n1 + n1 + n2 * n2 + n2);
      if (e > Rational(b)) continue;
      Series t = scale_by(mul(reciprocal(poch(Monomial::q(1), one_r, n1 - n2, 1, b)),
                              reciprocal(poch(Monomial::q(1), one_r, n2, 1, b))),
                          Monomial::q(e));
      slow = add(slow, t);
    }
  CHECK(equal_through(fast, slow, Rational(b)));
}

TEST_CASE("multisum respects unequal level exponents") {
  const std::int64_t b = 40;
  PochCache cache(1, b);
  // single level, exponent 2 N^2, weight 1/(q^2;q^2)_N: one side of a classical
  // mod-8 sum; just check the first coefficients against direct expansion
  std::vector<SumLevel> levels{{Rational(2), Rational(0)}};
  auto weight = [&](long long m) -> Series { return cache.inv(Monomial::q(2), Rational(2), m); };
  Series f = free_multisum(levels, weight, cache);
  Series direct(1, b);
  for (long long n = 0; 2 * n * n <= b; ++n)
    direct = add(direct, scale_by(cache.inv(Monomial::q(2), Rational(2), n),
                                  Monomial::q(Rational(2 * n * n))));
  CHECK(equal_through(f, direct, Rational(b)));
}

TEST_CASE("multisum rejects divergent shapes") {
  PochCache cache(1, 20);
  std::vector<SumLevel> levels{{Rational(0), Rational(0)}};
  auto weight = [&](long long) { return Series::one(1, 20); };
  CHECK_THROWS_AS((void)free_multisum(levels, weight, cache), NonTruncating);
}
