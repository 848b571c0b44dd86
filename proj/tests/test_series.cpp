#include <doctest.h>

#include <qtheta/qfactory.hpp>
#include <qtheta/series.hpp>

#include <map>
#include <random>
#include <utility>
#include <vector>

using namespace qtheta;

namespace {

// Independent dense oracle: bivariate Laurent polynomials as plain maps,
// multiplied by the schoolbook rule.  Everything here is exact, so any
// disagreement with Series inside its knowledge window is a Series bug.
using Poly = std::map<std::pair<long long, int>, long>;  // (scaled q, a) -> coeff

Poly pmul(const Poly& f, const Poly& g) {
  Poly r;
  for (auto& [e1, c1] : f)
    for (auto& [e2, c2] : g) {
      auto key = std::make_pair(e1.first + e2.first, e1.second + e2.second);
      r[key] += c1 * c2;
      if (r[key] == 0) r.erase(key);
    }
  return r;
}

Poly padd(const Poly& f, const Poly& g) {
  Poly r = f;
  for (auto& [e, c] : g) {
    r[e] += c;
    if (r[e] == 0) r.erase(e);
  }
  return r;
}

Series lift(const Poly& f, int scale, std::int64_t bound) {
  Series r(scale, bound);
  for (auto& [e, c] : f) {
    if (e.first < r.floor()) r.set_floor(e.first);
    r.add_term(e.first, e.second, Int(c));
  }
  return r;
}

bool matches(const Series& f, const Poly& p, std::int64_t through) {
  // every oracle term inside the window must appear with the same coefficient,
  // and the series must not contain extras
  Series want = lift(p, f.scale(), f.bound());
  return !first_mismatch(f, want, Rational(through, f.scale()));
}

Poly random_poly(std::mt19937& rng, int terms, long long max_q, int max_a, bool laurent_a) {
  std::uniform_int_distribution<long long> qd(0, max_q);
  std::uniform_int_distribution<int> ad(laurent_a ? -max_a : 0, max_a);
  std::uniform_int_distribution<long> cd(-5, 5);
  Poly p;
  for (int i = 0; i < terms; ++i) {
    long c = cd(rng);
    if (c == 0) continue;
    auto key = std::make_pair(qd(rng), ad(rng));
    p[key] += c;
    if (p[key] == 0) p.erase(key);
  }
  return p;
}

// p(n) by the classic coin-counting recurrence, nothing shared with Series.
std::vector<long> partition_counts(int n_max) {
  std::vector<long> p(static_cast<std::size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n_max; ++part)
    for (int n = part; n <= n_max; ++n) p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - part)];
  return p;
}

}  // namespace

TEST_CASE("multiplication agrees with the dense oracle") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    Poly a = random_poly(rng, 12, 18, 3, trial % 2 == 0);
    Poly b = random_poly(rng, 12, 18, 3, trial % 2 == 0);
    std::int64_t bound = 40;
    Series fa = lift(a, 1, bound), fb = lift(b, 1, bound);
    CHECK(matches(mul(fa, fb), pmul(a, b), bound));
    CHECK(matches(add(fa, fb), padd(a, b), bound));
  }
}

TEST_CASE("ring identities on random truncated series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Series f = lift(random_poly(rng, 10, 25, 2, false), 1, 30);
    Series g = lift(random_poly(rng, 10, 25, 2, false), 1, 30);
    Series h = lift(random_poly(rng, 10, 25, 2, false), 1, 30);
    Rational t(25);
    CHECK(equal_through(mul(f, g), mul(g, f), t));
    CHECK(equal_through(mul(mul(f, g), h), mul(f, mul(g, h)), t));
    CHECK(equal_through(mul(f, add(g, h)), add(mul(f, g), mul(f, h)), t));
    CHECK(equal_through(sub(f, f), Series::zero(1, 30), Rational(30)));
  }
}

TEST_CASE("bound propagation through products") {
  Series f(1, 10);  // knowledge through q^10
  f.add_term(0, 0, 1);
  Series g(1, 25);
  g.add_term(3, 0, 1);
  // limited by f: unknown f-terms start at q^11 and meet g's floor q^0
  CHECK(mul(f, g).bound() == 10);
  // scaling by q^3 moves the window up, multiplying by (q^3 + ...) does not
  CHECK(scale_by(f, Monomial::q(3)).bound() == 13);
  Series neg(1, 25, -2);
  neg.add_term(-2, 0, 1);
  CHECK(mul(f, neg).bound() == 8);
}

TEST_CASE("pow matches repeated multiplication") {
  std::mt19937 rng(99);
  Series f = lift(random_poly(rng, 8, 10, 2, false), 1, 40);
  Series p = Series::one(1, 40);
  for (unsigned k = 0; k <= 5; ++k) {
    CHECK(equal_through(pow(f, k), p, Rational(40)));
    p = mul(p, f);
  }
}

TEST_CASE("reciprocal inverts unit-led series") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    Poly p = random_poly(rng, 10, 20, 2, false);
    p.erase({0, 0});
    for (auto it = p.begin(); it != p.end();) {
      it = (it->first.first == 0) ? p.erase(it) : std::next(it);
    }
    int lead_a = trial % 3 - 1;
    int lead_sign = (trial % 2 == 0) ? 1 : -1;
    p[{0, lead_a}] = lead_sign;
    Series f = lift(p, 1, 35);
    Series inv = reciprocal(f);
    Series prod = mul(f, inv);
    CHECK(equal_through(prod, Series::one(1, 35), Rational(35)));
  }
}

TEST_CASE("reciprocal rejects non-unit leading parts") {
  Series f(1, 10);
  f.add_term(1, 0, 1);  // q: no q^0 term
  CHECK_THROWS_AS((void)reciprocal(f), NonUnitLeading);

  Series g(1, 10);
  g.add_term(0, 0, 2);  // 2 is not invertible over the integers
  CHECK_THROWS_AS((void)reciprocal(g), NonUnitLeading);

  Series h(1, 10);
  h.add_term(0, 0, 1);
  h.add_term(0, 1, 1);  // 1 + a at q^0
  CHECK_THROWS_AS((void)reciprocal(h), NonUnitLeading);

  Series neg(1, 10);
  neg.set_floor(-2);
  neg.add_term(-2, 0, 1);
  CHECK_THROWS_AS((void)reciprocal(neg), NonUnitLeading);
}

TEST_CASE("partition generating function matches the counting recurrence") {
  const int n = 80;
  Series euler = poch_inf(Monomial::q(1), 1, 1, n);
  Series gen = reciprocal(euler);
  auto p = partition_counts(n);
  for (int j = 0; j <= n; ++j) CHECK(coefficient_at(gen, Rational(j), 0) == Int(p[static_cast<std::size_t>(j)]));
}

TEST_CASE("regrid is lossless and rejects off-grid coarsening") {
  std::mt19937 rng(5);
  Poly p = random_poly(rng, 10, 15, 2, true);
  Series f = lift(p, 2, 30);
  Series up = regrid(f, 6);
  CHECK(up.scale() == 6);
  Series back = regrid(up, 2);
  CHECK(equal_through(f, back, f.bound_q()));

  Series half = Series::monomial(Monomial::q(Rational(1, 2)), 2, 20);
  CHECK_THROWS_AS((void)regrid(half, 1), OffGrid);
}

TEST_CASE("rescale_q substitutes q -> q^m") {
  // q^{1/2} + q under q -> q^2 becomes q + q^2 on the integer grid
  Series f(2, 8);
  f.add_term(1, 0, 1);
  f.add_term(2, 0, 1);
  Series g = rescale_q(f, Rational(2));
  CHECK(g.scale() == 1);
  CHECK(coefficient_at(g, Rational(1), 0) == 1);
  CHECK(coefficient_at(g, Rational(2), 0) == 1);

  // q -> q^{1/2} sends q^2 to q
  Series h(1, 8);
  h.add_term(2, 0, 1);
  Series hh = rescale_q(h, Rational(1, 2));
  CHECK(coefficient_at(hh, Rational(1), 0) == 1);
}

TEST_CASE("shift_a moves a to a q^delta") {
  // f = a^2 q: under a -> a q^3 the term becomes a^2 q^7
  Series f(1, 30);
  f.add_term(1, 2, 1);
  Series g = shift_a(f, Rational(3));
  CHECK(coefficient_at(g, Rational(7), 2) == 1);
  CHECK(coefficient_at(g, Rational(1), 2) == 0);
  // round trip
  Series back = shift_a(g, Rational(-3));
  CHECK(equal_through(back, f, Rational(20)));
}

TEST_CASE("shift_a shrinks the window for negative a-exponents") {
  Series f(1, 30);
  f.set_floor(0);
  f.add_term(0, -2, 1);
  f.add_term(5, 3, 1);
  Series g = shift_a(f, Rational(2));
  // a^{-2} terms move down by 4, so knowledge ends at 30 - 4
  CHECK(g.bound() == 26);
}

TEST_CASE("specialize_a evaluates at signed q-powers") {
  // f = 1 + a q + a^2 q^3 at a = -q^2: 1 - q^3 + q^7
  Series f(1, 30);
  f.add_term(0, 0, 1);
  f.add_term(1, 1, 1);
  f.add_term(3, 2, 1);
  Series g = specialize_a(f, Monomial{-1, 0, Rational(2)});
  CHECK(coefficient_at(g, Rational(0), 0) == 1);
  CHECK(coefficient_at(g, Rational(3), 0) == -1);
  CHECK(coefficient_at(g, Rational(7), 0) == 1);
  CHECK(g.bound() == 30);  // nonnegative a-support, nonnegative step
}

TEST_CASE("coefficient_at error taxonomy") {
  Series f(2, 10);
  f.add_term(1, 0, 7);
  CHECK(coefficient_at(f, Rational(1, 2), 0) == 7);
  CHECK(coefficient_at(f, Rational(3), 0) == 0);
  CHECK_THROWS_AS((void)coefficient_at(f, Rational(11, 2), 0), OutOfKnowledge);
  CHECK_THROWS_AS((void)coefficient_at(f, Rational(1, 3), 0), OffGrid);
}

TEST_CASE("first_mismatch reports the earliest disagreement") {
  Series f(1, 20), g(1, 20);
  for (int j = 0; j <= 20; ++j) {
    f.add_term(j, 0, 1);
    g.add_term(j, 0, 1);
  }
  CHECK(!first_mismatch(f, g, Rational(20)));

  g.add_term(7, -1, 3);   // earlier a-exponent at the same q-power
  g.add_term(7, 2, -1);
  g.add_term(9, 0, 5);
  auto m = first_mismatch(f, g, Rational(20));
  REQUIRE(m.has_value());
  CHECK(m->q_exp == Rational(7));
  CHECK(m->a_exp == -1);
  CHECK(m->lhs == 0);
  CHECK(m->rhs == 3);

  CHECK_THROWS_AS((void)first_mismatch(f, g, Rational(21)), OutOfKnowledge);
}

TEST_CASE("first_mismatch works across different grids") {
  Series f(2, 20);  // knowledge through q^10
  f.add_term(3, 0, 1);
  Series g(1, 10);
  g.add_term(2, 0, 1);
  auto m = first_mismatch(f, g, Rational(5));
  REQUIRE(m.has_value());
  CHECK(m->q_exp == Rational(3, 2));
  CHECK(m->lhs == 1);
  CHECK(m->rhs == 0);
}

TEST_CASE("linear_combine and scale_by") {
  Series f = Series::one(1, 15);
  Series g = Series::monomial(Monomial::q(2), 1, 15);
  // 3q * 1 - 2 * q^2
  Series r = linear_combine(Monomial{3, 0, Rational(1)}, f, Monomial{-2, 0, Rational(0)}, g);
  CHECK(coefficient_at(r, Rational(1), 0) == 3);
  CHECK(coefficient_at(r, Rational(2), 0) == -2);

  Series s = scale_by(f, Monomial{1, -1, Rational(-2)});
  CHECK(s.floor() == -2);
  CHECK(coefficient_at(s, Rational(-2), -1) == 1);
}

TEST_CASE("grid scale limits are enforced") {
  CHECK_THROWS_AS(Series(9, 10), OffGrid);
  CHECK_THROWS_AS(Series(0, 10), OffGrid);
}
