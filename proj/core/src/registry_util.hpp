#pragma once

#include <qtheta/identity.hpp>
#include <qtheta/qfactory.hpp>

#include <functional>
#include <map>
#include <utility>
#include <vector>

// Shared builder helpers for the identity registry.  Everything here is
// internal to the library.

namespace qtheta::reg {

inline Monomial A(int j = 1) { return Monomial::a(j); }
inline Monomial Q(const Rational& e) { return Monomial::q(e); }
inline Monomial M(long c, int j, const Rational& e) { return Monomial::make(c, j, e); }

inline Rational binom2(long long n) { return Rational(n) * Rational(n - 1) / 2; }

inline Series smono(const Monomial& m, int scale, std::int64_t bound_s) {
  return Series::monomial(m, scale, bound_s);
}

// Smallest q-exponent actually present; past-the-bound sentinel when empty.
inline Rational min_exp(const Series& f) {
  if (f.is_zero()) return f.bound_q() + 1;
  return Rational(f.terms().begin()->first, f.scale());
}

// Accumulator realizing the minimal-exponent truncation rule: feeding stops
// being useful once `patience` consecutive terms lie entirely beyond the
// knowledge bound.  patience covers structural gaps (vanishing residue
// classes, bilateral reindexing), not convergence.
class TailSum {
 public:
  TailSum(int scale, std::int64_t bound_s, int patience = 6)
      : acc_(Series::zero(scale, bound_s)), patience_(patience) {}

  bool more() const { return quiet_ < patience_; }
  void feed(const Series& t) {
    if (min_exp(t) > acc_.bound_q()) {
      ++quiet_;
      return;
    }
    quiet_ = 0;
    acc_ = add(acc_, t);
  }
  const Series& value() const { return acc_; }

 private:
  Series acc_;
  int quiet_ = 0;
  int patience_;
};

// table[j] = (x q^{step j}; q^step)_inf for j = 0..n_max, built downward so
// each step multiplies by the single binomial factor (1 - x q^{step j}).
std::vector<Series> poch_inf_table(const Monomial& x, const Rational& step, long long n_max,
                                   int scale, std::int64_t bound_s);

// Nested Andrews-Gordon style chain
//   G_0(t) = tail(t),
//   G_d(m) = sum_{t=0}^m q^{quad_d t^2 + lin_d t} / (q;q)_{m-t} * G_{d-1}(t),
// levels listed innermost first.  at(m) returns G_D(m) for the full depth.
class ChainSum {
 public:
  ChainSum(std::vector<std::pair<Rational, Rational>> levels,
           std::function<Series(long long)> tail, PochCache& cache)
      : levels_(std::move(levels)), tail_(std::move(tail)), cache_(cache) {}

  const Series& at(long long m) { return level(static_cast<int>(levels_.size()), m); }

 private:
  const Series& level(int d, long long m);

  std::vector<std::pair<Rational, Rational>> levels_;
  std::function<Series(long long)> tail_;
  PochCache& cache_;
  std::map<std::pair<int, long long>, Series> memo_;
};

// Named q-monomial seed sequences r -> f_r for the free-coefficient engines.
// Each f_r has a quadratic q-exponent, so the partial theta sums they enter
// truncate by the minimal-exponent rule.
using Seed = std::function<Monomial(long long)>;
Seed seed_sequence(const std::string& name);  // quadratic | quadratic-half | mod3 | bpa11
std::vector<std::string> seed_names();

}  // namespace qtheta::reg
