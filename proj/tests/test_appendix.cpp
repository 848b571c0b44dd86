#include <doctest.h>

#include <map>
#include <vector>

#include "qtheta/appendix_polys.hpp"

using namespace qtheta;

TEST_CASE("every catalog case holds over a wide index range") {
  for (const auto& id : polynomial_case_ids()) {
    for (long n = 0; n <= 30; ++n) {
      CAPTURE(id);
      CAPTURE(n);
      CHECK(polynomial_case_holds(id, n));
    }
  }
}

TEST_CASE("catalog covers the expected sixteen cases") {
  auto ids = polynomial_case_ids();
  CHECK(ids.size() == 16);
  for (const auto& id : ids) CHECK(polynomial_case_holds(id, 0));
}

TEST_CASE("Pascal transport between sum cases") {
  for (long n = 0; n <= 18; ++n) {
    CAPTURE(n);
    // odd-top sum reduces to the even-top ones
    QPolynomial a9 = polynomial_case_lhs("A9", n);
    QPolynomial a1 = polynomial_case_lhs("A1", n);
    QPolynomial a3 = polynomial_case_lhs("A3", n);
    CHECK(a9 == qp_sub(a1, qp_scale(a3, 1, Rational(n + 1))));

    QPolynomial g = polynomial_case_lhs("G", n);
    QPolynomial g1 = polynomial_case_lhs("G1", n);
    QPolynomial g3 = polynomial_case_lhs("G3", n);
    CHECK(g == qp_sub(g1, qp_scale(g3, 1, Rational(n + 1))));
  }
}

TEST_CASE("two-term split of the modulus-eight case") {
  // the part of the summand without the extra monomial factor evaluates to
  // (1 + q^{n+1}(1 - q^n)) (-q; q)_n
  for (long n = 0; n <= 18; ++n) {
    CAPTURE(n);
    QPolynomial c8 = polynomial_case_lhs("C8", n);
    QPolynomial c4 = polynomial_case_lhs("C4", n);
    QPolynomial s1 = qp_add(c8, qp_scale(c4, 1, Rational(1)));
    QPolynomial unit = QPolynomial::one();
    QPolynomial inner = qp_add(unit, qp_sub(qp_scale(unit, 1, Rational(n + 1)),
                                            qp_scale(unit, 1, Rational(2 * n + 1))));
    CHECK(s1 == qp_mul(inner, qp_poch(1, 1, n, -1)));
  }
}

TEST_CASE("distinct-part partition oracle for the negative sign product") {
  // (-q; q)_n generates partitions into distinct parts of size at most n
  const long cap = 20;
  for (long n = 0; n <= 12; ++n) {
    std::map<long, long> counts;
    counts[0] = 1;
    struct Walker {
      long cap;
      std::map<long, long>* counts;
      void rec(long largest, long total) {
        for (long part = largest; part >= 1; --part) {
          if (total + part > cap) continue;
          (*counts)[total + part] += 1;
          rec(part - 1, total + part);
        }
      }
    } w{cap, &counts};
    w.rec(n, 0);
    QPolynomial prod = qp_poch(1, 1, n, -1);
    for (long e = 0; e <= cap && e <= n * (n + 1) / 2; ++e) {
      CAPTURE(n);
      CAPTURE(e);
      CHECK(prod.at(Rational(e)) == Int(counts.count(e) ? counts[e] : 0));
    }
  }
}

TEST_CASE("bad inputs are rejected") {
  CHECK_THROWS_AS(polynomial_case_lhs("nope", 3), UnknownCase);
  CHECK_THROWS_AS(polynomial_case_rhs("rec1", 3), UnknownCase);
  CHECK_THROWS_AS(polynomial_case_lhs("rec2", 3), UnknownCase);
  CHECK_THROWS_AS(polynomial_case_holds("A1", -1), ParamsOutOfDomain);
  CHECK_THROWS_AS(polynomial_case_mismatch("nope", 1), UnknownCase);
}

TEST_CASE("half-integer grids appear exactly in the square root family") {
  CHECK(polynomial_case_lhs("G", 3).scale() == 2);
  QPolynomial a1 = polynomial_case_lhs("A1", 3);
  CHECK(a1.scale() == 1);
}
