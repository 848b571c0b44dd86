#include <qtheta/multisum.hpp>

#include <map>

namespace qtheta {

namespace {

Rational level_exp(const SumLevel& l, long long n) {
  return l.quad * Rational(n) * Rational(n) + l.lin * Rational(n);
}

// min over integer 0 <= n <= cap (cap < 0 means unbounded above)
Rational level_min(const SumLevel& l, long long cap) {
  if (l.quad == 0) {
    if (l.lin >= 0) return Rational(0);
    if (cap < 0) throw NonTruncating("summand exponent unbounded below");
    return level_exp(l, cap);
  }
  if (l.quad < 0) throw NonTruncating("summand exponent unbounded below");
  Rational v = -l.lin / (l.quad * 2);
  long long c1 = rational_floor(v), c2 = c1 + 1;
  if (c1 < 0) c1 = 0;
  if (c2 < 0) c2 = 0;
  if (cap >= 0) {
    if (c1 > cap) c1 = cap;
    if (c2 > cap) c2 = cap;
  }
  return std::min(level_exp(l, c1), level_exp(l, c2));
}

}  // namespace

Series free_multisum(const std::vector<SumLevel>& levels,
                     const std::function<Series(long long)>& weight, PochCache& cache,
                     const Rational& link_base) {
  const int k = static_cast<int>(levels.size());
  if (k == 0) throw Error("free_multisum: no summation indices");
  const int scale = cache.scale();
  const std::int64_t bound = cache.bound();
  const Rational bq(bound, scale);
  const Monomial qb = Monomial::q(link_base);

  // suffix_min[i] = min possible contribution of levels i..k-1 (cap-free)
  std::vector<Rational> suffix_min(static_cast<std::size_t>(k) + 1, Rational(0));
  for (int i = k - 1; i >= 0; --i)
    suffix_min[i] = suffix_min[i + 1] + level_min(levels[static_cast<std::size_t>(i)], -1);

  std::map<long long, Series> weight_memo;
  auto weight_at = [&](long long m) -> const Series& {
    auto it = weight_memo.find(m);
    if (it != weight_memo.end()) return it->second;
    Series w = weight(m);
    if (w.floor() < 0) throw Error("free_multisum: weight has negative exponents");
    return weight_memo.emplace(m, std::move(w)).first->second;
  };

  if (levels[0].quad == 0 && levels[0].lin <= 0)
    throw NonTruncating("outer summation index never leaves the window");

  Series total(scale, bound);
  std::vector<long long> n(static_cast<std::size_t>(k), 0);

  // depth-first over N_1 >= ... >= N_k >= 0 with exact exponent pruning
  std::function<void(int, long long, const Rational&)> descend = [&](int depth, long long cap,
                                                                     const Rational& exp_so_far) {
    auto& lvl = levels[static_cast<std::size_t>(depth)];
    const Rational floor_rest = suffix_min[static_cast<std::size_t>(depth) + 1];
    const Rational vertex = lvl.quad > 0 ? -lvl.lin / (lvl.quad * 2) : Rational(0);
    for (long long v = 0; cap < 0 || v <= cap; ++v) {
      Rational e = exp_so_far + level_exp(lvl, v);
      if (Rational(v) >= vertex && e + floor_rest > bq) break;
      // exact lower bound on the remaining levels, which are capped by v
      Rational rest(0);
      for (int j = depth + 1; j < k; ++j)
        rest += level_min(levels[static_cast<std::size_t>(j)], v);
      if (e + rest > bq) continue;
      n[static_cast<std::size_t>(depth)] = v;
      if (depth == k - 1) {
        Series term = scale_by(weight_at(v), Monomial::q(e));
        for (int j = 0; j + 1 < k; ++j) {
          long long d = n[static_cast<std::size_t>(j)] - n[static_cast<std::size_t>(j) + 1];
          term = mul(term, cache.inv(qb, link_base, d));
        }
        total = add(total, term);
      } else {
        descend(depth + 1, v, e);
      }
    }
  };

  descend(0, -1, Rational(0));
  return total;
}

}  // namespace qtheta
