#include <doctest.h>

#include <string>
#include <vector>

#include "qtheta/bailey.hpp"

using namespace qtheta;

namespace {

bool qp_equal(const QPolynomial& f, const QPolynomial& g) { return qp_sub(f, g).is_zero(); }

// q^e with unit coefficient
QPolynomial qpow(int c, const Rational& e) {
  QPolynomial p;
  p.add_term(0, Int(c));
  return qp_scale(p, Int(1), e);
}

}  // namespace

TEST_CASE("catalog lists twelve pairs and rejects unknown ids") {
  auto ids = bailey_pair_ids();
  CHECK(ids.size() == 12);
  for (const auto& id : ids) CHECK(bailey_pair(id).id == id);
  CHECK_THROWS_AS(bailey_pair("nope"), UnknownPair);
}

TEST_CASE("alpha spot values") {
  const auto& b3 = bailey_pair("b3");
  CHECK(qp_equal(alpha_at(b3, 0), qpow(1, 0)));  // (1-q)/(1-q)
  // alpha_1 = -q^2(1+q+q^2)
  QPolynomial a1 = qp_mul(qpow(-1, 2), qp_add(qp_add(qpow(1, 0), qpow(1, 1)), qpow(1, 2)));
  CHECK(qp_equal(alpha_at(b3, 1), a1));
  CHECK(qp_equal(alpha_reduced_at(b3, 0), qpow(1, 0)));
  CHECK(qp_equal(alpha_reduced_at(b3, 1), qpow(-1, 2)));

  const auto& c8 = bailey_pair("c8");
  CHECK(qp_equal(alpha_reduced_at(c8, 1), qpow(1, 1)));
  CHECK(qp_equal(alpha_reduced_at(c8, 2), qpow(-1, 2)));

  const auto& bpa9 = bailey_pair("bpa9");
  CHECK(alpha_at(bpa9, 1).is_zero());
  CHECK(alpha_at(bpa9, 4).is_zero());
  CHECK_FALSE(alpha_at(bpa9, 5).is_zero());

  const auto& a10 = bailey_pair("a10");
  // reduced alpha_{3t+1} keeps the short factor: t=1 gives -q^8 (1-q^3)
  CHECK(qp_equal(alpha_reduced_at(a10, 4), qp_mul(qpow(-1, 8), qp_poch(3, 1, 1))));
}

TEST_CASE("every catalog pair satisfies its defining relation") {
  for (const auto& id : bailey_pair_ids()) {
    CAPTURE(id);
    auto bad = verify_pair(bailey_pair(id), 10, 40);
    CHECK_FALSE(bad.has_value());
  }
}

TEST_CASE("iterated lattice steps preserve the defining relation") {
  for (const auto& id : {"b3", "e3", "gnew", "c8", "a10", "bpa11"}) {
    const auto& seed = bailey_pair(id);
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(id);
      CAPTURE(k);
      auto bad = verify_pair(iterate_chain(seed, k), 6, 30);
      CHECK_FALSE(bad.has_value());
    }
  }
}

TEST_CASE("lattice step multiplies alpha by q^{rho n + n^2}") {
  for (const auto& id : {"b3", "bpa9", "bpa11"}) {
    const auto& p = bailey_pair(id);
    auto up = chain_step(p);
    CHECK(up.chain_level == 1);
    long rho = rel_rho(p.rel);
    for (long long n = 0; n <= 7; ++n) {
      QPolynomial want = qp_scale(alpha_at(p, n), Int(1), Rational(rho * n + n * n));
      CHECK(qp_equal(alpha_at(up, n), want));
    }
  }
}

TEST_CASE("duality inverts the alpha exponents") {
  for (const auto& id : bailey_pair_ids()) {
    const auto& p = bailey_pair(id);
    auto d = dual_pair(p);
    long rho = rel_rho(p.rel);
    for (long long n = 0; n <= 8; ++n) {
      CAPTURE(id);
      CAPTURE(n);
      QPolynomial want =
          qp_scale(qp_reverse(alpha_at(p, n)), Int(1), Rational(rho * n + n * n));
      CHECK(qp_equal(alpha_at(d, n), want));
    }
  }
}

TEST_CASE("duality is an involution") {
  for (const auto& id : bailey_pair_ids()) {
    const auto& p = bailey_pair(id);
    auto dd = dual_pair(dual_pair(p));
    PochCache cache(p.scale, 40 * p.scale);
    for (long long n = 0; n <= 8; ++n) {
      CAPTURE(id);
      CHECK(qp_equal(alpha_at(dd, n), alpha_at(p, n)));
      if (n <= 6)
        CHECK(equal_through(beta_closed_at(dd.beta, n, cache),
                            beta_closed_at(p.beta, n, cache), 30));
    }
  }
}

TEST_CASE("documented dual relationships") {
  auto same = [](const BaileyPair& x, const BaileyPair& y) {
    REQUIRE(x.rel == y.rel);
    PochCache cache(x.scale, 40 * x.scale);
    for (long long n = 0; n <= 8; ++n) {
      CHECK(qp_equal(alpha_at(x, n), alpha_at(y, n)));
      if (n <= 6)
        CHECK(equal_through(beta_closed_at(x.beta, n, cache),
                            beta_closed_at(y.beta, n, cache), 30));
    }
  };
  same(dual_pair(bailey_pair("bpa9")), bailey_pair("bpa9-dual"));
  same(dual_pair(bailey_pair("gnew")), bailey_pair("gnew-dual"));
  same(dual_pair(bailey_pair("bcs2")), bailey_pair("bcs2-dual"));
  same(dual_pair(bailey_pair("bcs")), bailey_pair("bcs"));  // self-dual
}

TEST_CASE("duals of the remaining seeds are valid pairs") {
  for (const auto& id : {"c8", "a10", "e3", "b3", "bpa11"}) {
    CAPTURE(id);
    auto bad = verify_pair(dual_pair(bailey_pair(id)), 8, 30);
    CHECK_FALSE(bad.has_value());
  }
  CHECK_THROWS_AS(dual_pair(iterate_chain(bailey_pair("b3"), 1)), UnsupportedSymbolicForm);
}

TEST_CASE("monomial weights generate the unit-modulus alphas") {
  const Rational h{1, 2};
  const Rational qu{1, 4};
  struct Row {
    const char* id;
    int fc;
    QuadExp g;
  };
  for (const auto& row : {Row{"gnew", 1, {qu, qu, 0}},
                          Row{"bcs", -1, {0, 0, 0}},
                          Row{"bcs2", -1, {h, h, 0}},
                          Row{"b3", 1, {1, 1, 0}},
                          Row{"e3", 1, {h, h, 0}}}) {
    const auto& p = bailey_pair(row.id);
    BaileyPair built = p;
    built.alpha = alpha_from_f(row.fc, row.g);
    for (long long n = 0; n <= 8; ++n) {
      CAPTURE(row.id);
      CHECK(qp_equal(alpha_at(built, n), alpha_at(p, n)));
    }
  }
}

TEST_CASE("free-parameter identity balances for chained pairs") {
  for (const auto& id : {"b3", "e3"}) {
    for (int k = 1; k <= 2; ++k) {
      CAPTURE(id);
      CAPTURE(k);
      auto p = iterate_chain(bailey_pair(id), k);
      auto sides = corollary_identity(p, 1, 30);
      CHECK(equal_through(add(sides.beta_side, sides.alpha_side), sides.product_side, 30));
      CHECK_FALSE(sides.product_side.is_zero());
    }
  }
}

TEST_CASE("free-parameter identity balances for modulus-3 and q^2 pairs") {
  for (const auto& id : {"bpa9", "a10"}) {
    CAPTURE(id);
    auto p = iterate_chain(bailey_pair(id), 1);
    auto sides = corollary_identity(p, 1, 26);
    CHECK(equal_through(add(sides.beta_side, sides.alpha_side), sides.product_side, 26));
  }
  auto p2 = iterate_chain(bailey_pair("bpa11"), 1);
  auto sides = corollary_identity(p2, 1, 26);
  CHECK(equal_through(add(sides.beta_side, sides.alpha_side), sides.product_side, 26));
}

TEST_CASE("free-parameter identity balances for seeds with growing exponents") {
  auto sides = corollary_identity(bailey_pair("b3"), 1, 24);
  CHECK(equal_through(add(sides.beta_side, sides.alpha_side), sides.product_side, 24));
}

TEST_CASE("degenerate inputs are rejected rather than mis-summed") {
  CHECK_THROWS_AS(corollary_identity(bailey_pair("bcs"), 1, 20), NonTruncating);
  CHECK_THROWS_AS(corollary_identity(bailey_pair("bcs2-dual"), 1, 20), NonTruncating);
}
