#include <doctest.h>

#include <map>
#include <vector>

#include "qtheta/gis.hpp"
#include "qtheta/qfactory.hpp"

using namespace qtheta;

namespace {

// brute-force generating function for partitions with parts differing by at
// least 2, parts at least min_part, largest part at most max_part, tracked up
// to q^cap
std::map<long, long> gap2_counts(long min_part, long max_part, long cap) {
  std::map<long, long> counts;
  counts[0] = 1;
  // rec(largest_allowed, remaining): walk parts descending
  struct Walker {
    long min_part, cap;
    std::map<long, long>* counts;
    void rec(long largest, long total) {
      for (long part = largest; part >= min_part; --part) {
        if (total + part > cap) continue;
        (*counts)[total + part] += 1;
        rec(part - 2, total + part);
      }
    }
  } w{min_part, cap, &counts};
  if (max_part >= min_part) w.rec(max_part, 0);
  return counts;
}

QPolynomial from_counts(const std::map<long, long>& counts) {
  QPolynomial p;
  for (auto& [e, c] : counts) p.add_term(e, Int(c));
  return p;
}

QPolynomial truncate(const QPolynomial& p, long cap) {
  QPolynomial r(p.scale());
  for (auto& [s, c] : p.terms())
    if (s <= cap * p.scale()) r.add_term(s, c);
  return r;
}

}  // namespace

TEST_CASE("recurrence tables match the combinatorial definition") {
  const long cap = 30;
  auto e = schur_e_table(12);
  auto d = schur_d_table(12);
  for (long n = 1; n <= 12; ++n) {
    // e(n): parts >= 1, largest <= n-1; d(n): parts >= 2, largest <= n-1
    CHECK(truncate(e[n + 1], cap) == truncate(from_counts(gap2_counts(1, n - 1, cap)), cap));
    CHECK(truncate(d[n + 1], cap) == truncate(from_counts(gap2_counts(2, n - 1, cap)), cap));
  }
}

TEST_CASE("all four representations agree") {
  auto e = schur_e_table(20);
  auto d = schur_d_table(20);
  for (long n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(e[n + 1] == schur_e_closed(n));
    CHECK(e[n + 1] == schur_e_positive(n));
    CHECK(d[n + 1] == schur_d_closed(n));
    CHECK(d[n + 1] == schur_d_positive(n));
    // configuration-polynomial form, offset fixed by the parity constraint
    long se = (n % 2 == 0) ? 0 : 1;
    long sd = (n % 2 == 0) ? 1 : 0;
    CHECK(e[n + 1] == x_poly(2, 5, 2, 2 + se, n));
    CHECK(d[n + 1] == x_poly(2, 5, 1, 2 + sd, n));
  }
  CHECK(schur_e(-1).is_zero());
  CHECK(schur_d(0).is_zero());
  CHECK(schur_e(0) == QPolynomial::one());
  CHECK(schur_d(-1) == QPolynomial::one());
}

TEST_CASE("large-index limits recover the Rogers-Ramanujan products") {
  const std::int64_t bq = 40;
  Series lhs1 = schur_e(45).to_series(bq);
  Series rhs1 = reciprocal(
      mul(poch_inf(Monomial::q(), 5, 1, bq), poch_inf(Monomial::make(1, 0, 4), 5, 1, bq)));
  CHECK(!first_mismatch(lhs1, rhs1, bq).has_value());

  Series lhs2 = schur_d(45).to_series(bq);
  Series rhs2 = reciprocal(
      mul(poch_inf(Monomial::make(1, 0, 2), 5, 1, bq), poch_inf(Monomial::make(1, 0, 3), 5, 1, bq)));
  CHECK(!first_mismatch(lhs2, rhs2, bq).has_value());
}

TEST_CASE("configuration polynomial basics") {
  CHECK_THROWS_AS(x_poly(2, 5, 1, 1, 1), ParityViolation);
  CHECK_THROWS_AS(x_poly(3, 7, 2, 1, 2), ParityViolation);
  CHECK_THROWS_AS(x_poly(2, 0, 1, 1, 0), ParamsOutOfDomain);
  CHECK(x_poly(2, 5, 1, 1, -2).is_zero());
  // n = 0: single binomial [0,0] survives in the first branch when s = b
  CHECK(x_poly(2, 5, 1, 1, 0) == QPolynomial::one());
  CHECK(x_poly(2, 7, 3, 3, 0) == QPolynomial::one());
}

TEST_CASE("duality relation for b = 1") {
  for (long pp : {5L, 7L, 8L}) {
    for (long p = 2; p < pp; ++p) {
      for (long s = 1; s < pp; ++s) {
        for (long n = 0; n <= 12; ++n) {
          if ((n + s + 1) % 2 != 0) continue;
          CAPTURE(p);
          CAPTURE(pp);
          CAPTURE(s);
          CAPTURE(n);
          CHECK(x_poly(p, pp, s, 1, n) == x_poly_dual_form(p, pp, s, n));
        }
      }
    }
  }
}

TEST_CASE("triangular transform round trip") {
  // pseudo-random polynomial sequence, then forward o backward = id
  std::vector<QPolynomial> f;
  unsigned long state = 12345;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((state >> 33) % 7) - 3;
  };
  for (long m = 0; m <= 12; ++m) {
    QPolynomial p;
    for (long e = 0; e <= 5; ++e) p.add_term(e, Int(next()));
    f.push_back(p);
  }
  auto g = gis_forward(f);
  auto back = gis_backward(g);
  REQUIRE(back.size() == f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    CAPTURE(i);
    CHECK(back[i] == f[i]);
  }
  auto fwd = gis_forward(gis_backward(f));
  for (size_t i = 0; i < f.size(); ++i) CHECK(fwd[i] == f[i]);
}

TEST_CASE("transform coefficients at the boundary") {
  // l = 0 gives the identity coefficient
  CHECK(gis_forward_coeff(7, 0) == QPolynomial::one());
  CHECK(gis_backward_coeff(0, 0) == QPolynomial::one());
  // backward coefficient for m = 2, j = 1: q^0 ([2,1] - q [2,0]) = 1
  CHECK(gis_backward_coeff(2, 1) == QPolynomial::one());
}

TEST_CASE("forward coefficients extend to negative indices") {
  // for negative r the binomial with negative top keeps a single survivor
  // example r = -3: only l = -2 contributes and [-1, 1] = -q^{-1}
  QPolynomial c = gis_forward_coeff(-3, -2);
  QPolynomial expect = qp_scale(QPolynomial::one(), -1, Rational(-2 * (3 * (-2) - 2 * (-3) + 1)) / 2 + Rational(-1));
  CHECK(c == expect);
  // and l outside [min(0, r+1), floor(r/2)] gives zero
  CHECK(gis_forward_coeff(-3, -3).is_zero());
  CHECK(gis_forward_coeff(5, 3).is_zero());
}
