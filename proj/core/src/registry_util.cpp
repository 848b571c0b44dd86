#include "registry_util.hpp"

namespace qtheta::reg {

std::vector<Series> poch_inf_table(const Monomial& x, const Rational& step, long long n_max,
                                   int scale, std::int64_t bound_s) {
  std::vector<Series> t(static_cast<std::size_t>(n_max) + 1, Series::zero(scale, bound_s));
  t[n_max] = poch_inf(x * Q(step * Rational(n_max)), step, scale, bound_s);
  // peel one factor per step so the whole table costs n_max binomial products
  for (long long j = n_max - 1; j >= 0; --j) {
    Series f = Series::one(scale, bound_s);
    f = sub(f, smono(x * Q(step * Rational(j)), scale, bound_s));
    t[j] = mul(f, t[j + 1]);
  }
  return t;
}

const Series& ChainSum::level(int d, long long m) {
  auto key = std::make_pair(d, m);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Series v = Series::zero(cache_.scale(), cache_.bound());
  if (d == 0) {
    v = tail_(m);
  } else {
    const Rational quad = levels_[d - 1].first;
    const Rational lin = levels_[d - 1].second;
    for (long long t = 0; t <= m; ++t) {
      Rational e = quad * Rational(t) * Rational(t) + lin * Rational(t);
      if (e > Rational(cache_.bound(), cache_.scale())) continue;
      Series term = scale_by(mul(cache_.inv(Q(1), 1, m - t), level(d - 1, t)), Q(e));
      v = add(v, term);
    }
  }
  return memo_.emplace(key, std::move(v)).first->second;
}

Seed seed_sequence(const std::string& name) {
  if (name == "quadratic")
    return [](long long r) { return Q(Rational(r) * Rational(r + 1)); };
  if (name == "quadratic-half")
    return [](long long r) { return Q(Rational(r) * Rational(r + 1) / 2); };
  if (name == "mod3")
    // supported on r = 3n and r = 3n + 2 with pentagonal-type exponents
    return [](long long r) -> Monomial {
      long long n = r / 3;
      long s = (n % 2 == 0) ? 1 : -1;
      switch (r % 3) {
        case 0:
          return M(s, 0, Rational(n) * Rational(3 * n + 1) / 2);
        case 2:
          return M(-s, 0, Rational(n + 1) * Rational(3 * n + 2) / 2);
        default:
          return M(0, 0, Rational(0));
      }
    };
  if (name == "bpa11")
    // supported on r = 3n and r = 3n + 1, exponents n(n+5)/6 along the support
    return [](long long r) -> Monomial {
      long long n = r / 3;
      long s = (n % 2 == 0) ? 1 : -1;
      switch (r % 3) {
        case 0:
          return M(s, 0, Rational(n) * Rational(3 * n + 5) / 2);
        case 1:
          return M(s, 0, Rational(3 * n + 1) * Rational(n + 2) / 2);
        default:
          return M(0, 0, Rational(0));
      }
    };
  throw ParamsOutOfDomain("unknown seed sequence: " + name);
}

std::vector<std::string> seed_names() {
  return {"quadratic", "quadratic-half", "mod3", "bpa11"};
}

}  // namespace qtheta::reg
