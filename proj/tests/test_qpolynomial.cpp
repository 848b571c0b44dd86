#include <doctest.h>

#include <qtheta/qpolynomial.hpp>

#include <map>
#include <vector>

using namespace qtheta;

namespace {

// Independent oracle: Pascal-style recurrence on plain coefficient maps,
// [n, m] = [n-1, m] + q^{n-m} [n-1, m-1].
using P = std::map<long long, long long>;

P padd(const P& a, const P& b, long long shift_b) {
  P r = a;
  for (auto& [e, c] : b) {
    r[e + shift_b] += c;
    if (r[e + shift_b] == 0) r.erase(e + shift_b);
  }
  return r;
}

std::vector<std::vector<P>> binomial_table(int n_max) {
  std::vector<std::vector<P>> t(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    t[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
      if (m == 0 || m == n) {
        t[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = P{{0, 1}};
      } else {
        auto& up = t[static_cast<std::size_t>(n - 1)];
        t[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] =
            padd(up[static_cast<std::size_t>(m)], up[static_cast<std::size_t>(m - 1)], n - m);
      }
    }
  }
  return t;
}

bool same(const QPolynomial& f, const P& want) {
  P got;
  for (auto& [s, c] : f.terms()) {
    if (f.scale() != 1) return false;
    got[s] = static_cast<long long>(c.get_si());
  }
  return got == want;
}

}  // namespace

TEST_CASE("Gaussian binomials match the Pascal recurrence") {
  auto table = binomial_table(25);
  for (int n = 0; n <= 25; ++n)
    for (int m = 0; m <= n; ++m)
      CHECK(same(qbinomial(n, m), table[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]));
}

TEST_CASE("both Pascal recurrences hold") {
  for (long long n = 1; n <= 25; ++n)
    for (long long m = 0; m <= n; ++m) {
      QPolynomial lhs = qbinomial(n, m);
      // [n,m] = [n-1,m] + q^{n-m} [n-1,m-1]
      QPolynomial r1 = qp_add(qbinomial(n - 1, m), qp_scale(qbinomial(n - 1, m - 1), 1, Rational(n - m)));
      CHECK(lhs == r1);
      // [n,m] = [n-1,m-1] + q^m [n-1,m]
      QPolynomial r2 = qp_add(qbinomial(n - 1, m - 1), qp_scale(qbinomial(n - 1, m), 1, Rational(m)));
      CHECK(lhs == r2);
    }
}

TEST_CASE("binomial edge cases") {
  CHECK(qbinomial(5, -1).is_zero());
  CHECK(qbinomial(3, 4).is_zero());
  CHECK(qbinomial(0, 0) == QPolynomial::one());
  // product formula definition for negative top: [n,m] = (q^{n-m+1};q)_m / (q;q)_m
  // [-1, m] = (-1)^m q^{-m(m+1)/2}
  for (long long m = 0; m <= 6; ++m) {
    QPolynomial v = qbinomial(-1, m);
    QPolynomial want =
        qp_scale(QPolynomial::one(), (m % 2 == 0) ? 1 : -1, Rational(-m * (m + 1) / 2));
    CHECK(v == want);
  }
  // negative top obeys the same Pascal recurrence
  for (long long n = -6; n < 0; ++n)
    for (long long m = 0; m <= 6; ++m) {
      QPolynomial lhs = qbinomial(n, m);
      QPolynomial r1 =
          qp_add(qbinomial(n - 1, m), qp_scale(qbinomial(n - 1, m - 1), 1, Rational(n - m)));
      CHECK(lhs == r1);
    }
}

TEST_CASE("binomial rows agree with individual values") {
  for (long long n : {0LL, 1LL, 7LL, 20LL, 41LL}) {
    auto row = qbinomial_row(n);
    REQUIRE(static_cast<long long>(row.size()) == n + 1);
    for (long long m = 0; m <= n; ++m) CHECK(row[static_cast<std::size_t>(m)] == qbinomial(n, m));
  }
}

TEST_CASE("binomial symmetry and degree") {
  for (long long n = 0; n <= 20; ++n)
    for (long long m = 0; m <= n; ++m) {
      QPolynomial f = qbinomial(n, m);
      CHECK(f == qbinomial(n, n - m));
      if (!f.is_zero()) {
        CHECK(f.min_exp_s() == 0);
        CHECK(f.max_exp_s() == m * (n - m));
        // self-reciprocal: q^{m(n-m)} [n,m](1/q) = [n,m](q)
        CHECK(qp_scale(qp_reverse(f), 1, Rational(m * (n - m))) == f);
      }
    }
}

TEST_CASE("finite products expand correctly") {
  // (q;q)_3 = (1-q)(1-q^2)(1-q^3)
  QPolynomial f = qp_poch(Rational(1), Rational(1), 3);
  P want{{0, 1}, {1, -1}, {2, -1}, {4, 1}, {5, 1}, {6, -1}};
  CHECK(same(f, want));
  // (-q;q)_2 = (1+q)(1+q^2)
  QPolynomial g = qp_poch(Rational(1), Rational(1), 2, -1);
  CHECK(same(g, P{{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
}

TEST_CASE("product of binomial with its complementary factors") {
  // (q;q)_n [n, m] = (q;q)_m (q^{m+1};q)_{n-m} [n, m] sanity via
  // [n,m] (q;q)_m (q;q)_{n-m} == (q;q)_n
  for (long long n = 0; n <= 12; ++n)
    for (long long m = 0; m <= n; ++m) {
      QPolynomial lhs = qp_mul(qbinomial(n, m), qp_mul(qp_poch(Rational(1), Rational(1), m),
                                                       qp_poch(Rational(1), Rational(1), n - m)));
      CHECK(lhs == qp_poch(Rational(1), Rational(1), n));
    }
}

TEST_CASE("polynomials embed into series") {
  QPolynomial f = qbinomial(6, 3);
  Series s = f.to_series();
  CHECK(s.bound() == exact_bound);
  for (auto& [e, c] : f.terms()) CHECK(coefficient_at(s, Rational(e), 0) == c);
}

TEST_CASE("fractional grids") {
  QPolynomial f = QPolynomial::term(1, Rational(1, 2), 2);
  QPolynomial g = qp_mul(f, f);
  CHECK(g.at(Rational(1)) == 1);
  QPolynomial h = qp_regrid(g, 1);
  CHECK(h.scale() == 1);
  CHECK_THROWS_AS((void)qp_regrid(f, 1), OffGrid);
}
