#include <qtheta/bailey.hpp>

#include <algorithm>
#include <map>
#include <utility>

namespace qtheta {
namespace {

LinExp le(long u, long v) { return LinExp{Rational(u), Rational(v)}; }

AlphaBranch branch(int sign, bool alternate, Rational A, Rational B, Rational C,
                   std::vector<LinExp> numer, Rational den) {
  AlphaBranch b;
  b.sign = sign;
  b.alternate = alternate;
  b.exponent = QuadExp{A, B, C};
  b.numer = std::move(numer);
  b.den = den;
  return b;
}

AlphaBranch gone() {
  AlphaBranch b;
  b.vanishes = true;
  return b;
}

BetaFactor bf(Monomial x, Rational step, long len_lin, long len_const, int power) {
  BetaFactor f;
  f.x = x;
  f.step = step;
  f.len_lin = len_lin;
  f.len_const = len_const;
  f.power = power;
  return f;
}

SymbolicBeta beta(QuadExp e, std::vector<BetaFactor> fs, int sign = 1, bool alternate = false) {
  SymbolicBeta b;
  b.sign = sign;
  b.alternate = alternate;
  b.exponent = e;
  b.factors = std::move(fs);
  return b;
}

const Rational half{1, 2};
const Rational quarter{1, 4};

std::map<std::string, BaileyPair> build_registry() {
  std::map<std::string, BaileyPair> reg;
  auto put = [&reg](BaileyPair p) { reg.emplace(p.id, std::move(p)); };

  const Monomial mq = Monomial::q();
  const Monomial mq2 = Monomial::q(Rational(2));
  const Monomial m_one = Monomial::make(-1, 0, Rational(0));
  const Monomial m_qh = Monomial::make(-1, 0, half);

  // alpha_n = (-1)^n q^{n(3n+1)/2} (1-q^{2n+1})/(1-q),  beta_n = 1/(q;q)_n
  put({"b3", RelParam::q, 1,
       {1, {branch(1, true, Rational(3) * half, half, 0, {le(2, 1)}, 1)}},
       beta(QuadExp{}, {bf(mq, 1, 1, 0, -1)})});

  // alpha_n = (-1)^n q^{n^2} (1-q^{2n+1})/(1-q),  beta_n = 1/(q^2;q^2)_n
  put({"e3", RelParam::q, 1,
       {1, {branch(1, true, 1, 0, 0, {le(2, 1)}, 1)}},
       beta(QuadExp{}, {bf(mq2, 2, 1, 0, -1)})});

  // alpha_n = (-1)^n q^{n(3n-1)/4} (1-q^{2n+1})/(1-q)
  // beta_n  = 1/((q^2;q^2)_n (-q^{1/2};q)_n)
  put({"gnew", RelParam::q, 2,
       {1, {branch(1, true, Rational(3) * quarter, -quarter, 0, {le(2, 1)}, 1)}},
       beta(QuadExp{}, {bf(mq2, 2, 1, 0, -1), bf(m_qh, 1, 1, 0, -1)})});

  // dual of gnew: alpha_n = (-1)^n q^{n(n-3)/4} (1-q^{2n+1})/(1-q)
  // beta_n = (-1)^n q^{n(n-2)/2}/((q^2;q^2)_n (-q^{1/2};q)_n)
  put({"gnew-dual", RelParam::q, 2,
       {1, {branch(1, true, quarter, Rational(-3) * quarter, 0, {le(2, 1)}, 1)}},
       beta(QuadExp{half, -1, 0}, {bf(mq2, 2, 1, 0, -1), bf(m_qh, 1, 1, 0, -1)},
            1, true)});

  // alpha_n = q^{n(n-1)/2} (1-q^{2n+1})/(1-q)
  // beta_n  = (-1;q)_n/((q;q)_n (q^2;q^2)_n)
  put({"bcs", RelParam::q, 1,
       {1, {branch(1, false, half, -half, 0, {le(2, 1)}, 1)}},
       beta(QuadExp{}, {bf(m_one, 1, 1, 0, 1), bf(mq, 1, 1, 0, -1), bf(mq2, 2, 1, 0, -1)})});

  // alpha_n = q^{n^2} (1-q^{2n+1})/(1-q),  beta_n = 1/(q;q)_n^2
  put({"bcs2", RelParam::q, 1,
       {1, {branch(1, false, 1, 0, 0, {le(2, 1)}, 1)}},
       beta(QuadExp{}, {bf(mq, 1, 1, 0, -1), bf(mq, 1, 1, 0, -1)})});

  // dual of bcs2: alpha_n = q^{-n} (1-q^{2n+1})/(1-q),  beta_n = q^{-n}/(q;q)_n^2
  put({"bcs2-dual", RelParam::q, 1,
       {1, {branch(1, false, 0, -1, 0, {le(2, 1)}, 1)}},
       beta(QuadExp{0, -1, 0}, {bf(mq, 1, 1, 0, -1), bf(mq, 1, 1, 0, -1)})});

  // alpha_{2t} = (-1)^t q^{t(3t-1)} (1-q^{4t+1})/(1-q)
  // alpha_{2t+1} = (-1)^t q^{3t(t+1)+1} (1-q^{4t+3})/(1-q)
  // beta_n = 1/((q;q)_n (q;q^2)_n)
  put({"c8", RelParam::q, 1,
       {2,
        {branch(1, true, 3, -1, 0, {le(4, 1)}, 1),
         branch(1, true, 3, 3, 1, {le(4, 3)}, 1)}},
       beta(QuadExp{}, {bf(mq, 1, 1, 0, -1), bf(mq, 2, 1, 0, -1)})});

  // alpha_{3t} = q^{2t(3t-1)} (1-q^{6t+1})/(1-q)
  // alpha_{3t+1} = -q^{2t(3t+1)} (1-q^{2t+1})(1-q^{6t+3})/(1-q)
  // alpha_{3t+2} = -q^{2t(3t+4)+3} (1-q^{6t+5})/(1-q)
  // beta_n = q^n/(q;q)_{2n}
  put({"a10", RelParam::q, 1,
       {3,
        {branch(1, false, 6, -2, 0, {le(6, 1)}, 1),
         branch(-1, false, 6, 2, 0, {le(2, 1), le(6, 3)}, 1),
         branch(-1, false, 6, 8, 3, {le(6, 5)}, 1)}},
       beta(QuadExp{0, 1, 0}, {bf(mq, 1, 2, 0, -1)})});

  // alpha_{3t} = q^{t(6t-1)} (1-q^{6t+1})/(1-q), alpha_{3t+1} = 0,
  // alpha_{3t+2} = -q^{t(6t+7)+2} (1-q^{6t+5})/(1-q)
  // beta_n = 1/(q;q)_{2n}
  put({"bpa9", RelParam::q, 1,
       {3,
        {branch(1, false, 6, -1, 0, {le(6, 1)}, 1),
         gone(),
         branch(-1, false, 6, 7, 2, {le(6, 5)}, 1)}},
       beta(QuadExp{}, {bf(mq, 1, 2, 0, -1)})});

  // dual of bpa9: alpha_{3t} = q^{t(3t-2)} (1-q^{6t+1})/(1-q), alpha_{3t+1}=0,
  // alpha_{3t+2} = -q^{t(3t+2)} (1-q^{6t+5})/(1-q); beta_n = q^{n(n-1)}/(q;q)_{2n}
  put({"bpa9-dual", RelParam::q, 1,
       {3,
        {branch(1, false, 3, -2, 0, {le(6, 1)}, 1),
         gone(),
         branch(-1, false, 3, 2, 0, {le(6, 5)}, 1)}},
       beta(QuadExp{1, -1, 0}, {bf(mq, 1, 2, 0, -1)})});

  // Relative to a = q^2.
  // alpha_{3t} = q^{t(6t+1)} (1-q^{6t+2})/(1-q^2)
  // alpha_{3t+1} = -q^{t(6t+5)+1} (1-q^{6t+4})/(1-q^2), alpha_{3t+2} = 0
  // beta_n = 1/(q^2;q)_{2n}
  put({"bpa11", RelParam::q2, 1,
       {3,
        {branch(1, false, 6, 1, 0, {le(6, 2)}, 2),
         branch(-1, false, 6, 5, 1, {le(6, 4)}, 2),
         gone()}},
       beta(QuadExp{}, {bf(mq2, 1, 2, 0, -1)})});

  return reg;
}

const std::map<std::string, BaileyPair>& registry() {
  static const std::map<std::string, BaileyPair> reg = build_registry();
  return reg;
}

// q^e as an exact polynomial, with c = +/-1 and an extra sign flip when
// alternate holds at odd t.
QPolynomial signed_power(int sign, bool alternate, long long t, const Rational& e) {
  long c = sign * ((alternate && (t % 2 != 0)) ? -1 : 1);
  QPolynomial p;
  p.add_term(0, Int(c));
  return qp_scale(p, Int(1), e);
}

std::pair<long long, long long> split_index(const BaileyPair& p, long long n) {
  long long m = p.alpha.modulus;
  long long t = floor_div(n, m);
  long long s = n - m * t;
  return {t, s};
}

// Smallest value of Q over integers t >= lo.  Throws NonTruncating when the
// quadratic is unbounded below on that range.
Rational quad_min_from(const QuadExp& q, long long lo) {
  if (q.A == Rational(0)) {
    if (q.B < Rational(0)) throw NonTruncating("linear exponent decreases without bound");
    return q(lo);
  }
  if (q.A < Rational(0)) throw NonTruncating("quadratic exponent opens downward");
  Rational vertex = -q.B / (q.A * Rational(2));
  long long tv = rational_floor(vertex);
  Rational best = q(lo);
  for (long long t : {tv, tv + 1}) {
    if (t < lo) continue;
    Rational v = q(t);
    if (v < best) best = v;
  }
  return best;
}

// Exponent of alpha-hat_{Mt+s} as a quadratic in t, with the partial-theta
// weight folded in: extra(n) = lin*n + nc + quad_half*n(n-1)/2 over n = Mt+s.
QuadExp composed_exponent(const BaileyPair& p, long s, const Rational& quad_half,
                          const Rational& lin, const Rational& nc) {
  const AlphaBranch& b = p.alpha.branches[static_cast<std::size_t>(s)];
  long long m = p.alpha.modulus;
  Rational M{m};
  Rational S{s};
  QuadExp e = b.exponent;
  // quad_half * (Mt+s)(Mt+s-1)/2
  e.A = e.A + quad_half * M * M * half;
  e.B = e.B + quad_half * M * (S * 2 - 1) * half + lin * M;
  e.C = e.C + quad_half * S * (S - 1) * half + lin * S + nc;
  return e;
}

void require_truncating(const QuadExp& e, const char* what) {
  if (e.A < Rational(0) || (e.A == Rational(0) && e.B < Rational(0)) ||
      (e.A == Rational(0) && e.B == Rational(0)))
    throw NonTruncating(what);
}

}  // namespace

std::vector<std::string> bailey_pair_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, p] : registry()) ids.push_back(id);
  return ids;
}

const BaileyPair& bailey_pair(const std::string& id) {
  const auto& reg = registry();
  auto it = reg.find(id);
  if (it == reg.end()) throw UnknownPair("no pair named '" + id + "'");
  return it->second;
}

QPolynomial alpha_at(const BaileyPair& p, long long n) {
  if (n < 0) throw ParamsOutOfDomain("alpha index must be nonnegative");
  auto [t, s] = split_index(p, n);
  const AlphaBranch& b = p.alpha.branches[static_cast<std::size_t>(s)];
  if (b.vanishes) return QPolynomial{};

  QPolynomial r = signed_power(b.sign, b.alternate, t, b.exponent(t));
  if (b.den == Rational(0)) {
    for (const auto& f : b.numer) r = qp_mul(r, qp_poch(f(t), 1, 1));
    return r;
  }

  // Divide (1-q^{den}) into one numerator factor whose length is a
  // nonnegative integer multiple of den; the quotient is a geometric sum.
  std::size_t pick = b.numer.size();
  long long ratio = 0;
  for (std::size_t i = 0; i < b.numer.size(); ++i) {
    Rational m = b.numer[i](t) / b.den;
    if (is_integer(m) && m.numerator() >= 0) {
      pick = i;
      ratio = m.numerator();
      break;
    }
  }
  if (pick == b.numer.size())
    throw UnsupportedSymbolicForm("no numerator factor divisible by the denominator");

  QPolynomial geo;
  for (long long j = 0; j < ratio; ++j) {
    QPolynomial term;
    term.add_term(0, Int(1));
    geo = qp_add(geo, qp_scale(term, Int(1), b.den * Rational(j)));
  }
  r = qp_mul(r, geo);
  for (std::size_t i = 0; i < b.numer.size(); ++i) {
    if (i == pick) continue;
    r = qp_mul(r, qp_poch(b.numer[i](t), 1, 1));
  }
  return r;
}

QPolynomial alpha_reduced_at(const BaileyPair& p, long long n) {
  if (n < 0) throw ParamsOutOfDomain("alpha index must be nonnegative");
  long rho = rel_rho(p.rel);
  auto [t, s] = split_index(p, n);
  const AlphaBranch& b = p.alpha.branches[static_cast<std::size_t>(s)];
  if (b.vanishes) return QPolynomial{};
  if (b.den != Rational(rho))
    throw UnsupportedSymbolicForm("alpha is not normalized by 1-q^rho");

  Rational want{2 * n + rho};
  std::size_t pick = b.numer.size();
  for (std::size_t i = 0; i < b.numer.size(); ++i) {
    if (b.numer[i](t) == want) {
      pick = i;
      break;
    }
  }
  if (pick == b.numer.size())
    throw UnsupportedSymbolicForm("alpha lacks the 1-q^{2n+rho} factor");

  QPolynomial r = signed_power(b.sign, b.alternate, t, b.exponent(t));
  for (std::size_t i = 0; i < b.numer.size(); ++i) {
    if (i == pick) continue;
    r = qp_mul(r, qp_poch(b.numer[i](t), 1, 1));
  }
  return r;
}

Series beta_closed_at(const SymbolicBeta& b, long long n, PochCache& cache) {
  long c = b.sign * ((b.alternate && (n % 2 != 0)) ? -1 : 1);
  Series r = Series::monomial(Monomial::make(c, 0, b.exponent(n)), cache.scale(), cache.bound());
  for (const auto& f : b.factors) {
    long long len = f.len_lin * n + f.len_const;
    if (len < 0) throw UnsupportedSymbolicForm("negative product length in closed beta");
    const Series& s = f.power > 0 ? cache.poch(f.x, f.step, len) : cache.inv(f.x, f.step, len);
    r = mul(r, s);
  }
  return r;
}

BetaEvaluator::BetaEvaluator(const BaileyPair& p, PochCache& cache)
    : pair_(p), cache_(cache), memo_(static_cast<std::size_t>(p.chain_level) + 1) {}

const Series& BetaEvaluator::level_at(int level, long long n) {
  auto& slot = memo_[static_cast<std::size_t>(level)];
  auto it = slot.find(n);
  if (it != slot.end()) return it->second;

  Series value = Series::zero(cache_.scale(), cache_.bound());
  if (level == 0) {
    value = beta_closed_at(pair_.beta, n, cache_);
  } else {
    long rho = rel_rho(pair_.rel);
    const Monomial mq = Monomial::q();
    for (long long r = 0; r <= n; ++r) {
      Series t = scale_by(level_at(level - 1, r), Monomial::q(Rational(r * r + rho * r)));
      value = add(value, mul(t, cache_.inv(mq, 1, n - r)));
    }
  }
  return slot.emplace(n, std::move(value)).first->second;
}

const Series& BetaEvaluator::at(long long n) {
  if (n < 0) throw ParamsOutOfDomain("beta index must be nonnegative");
  return level_at(pair_.chain_level, n);
}

std::optional<long long> verify_pair(const BaileyPair& p, long long n_max, const Rational& through) {
  long rho = rel_rho(p.rel);

  // Negative Laurent floors on either sequence eat into the knowledge bound,
  // so widen the working bound by the worst dip actually present.
  Rational dip{0};
  for (long long n = 0; n <= n_max; ++n) {
    QPolynomial al = alpha_at(p, n);
    if (!al.is_zero()) {
      Rational lo{al.min_exp_s(), al.scale()};
      if (lo < dip) dip = lo;
    }
    Rational be = p.beta.exponent(n);
    if (be < dip) dip = be;
  }
  std::int64_t slack = static_cast<std::int64_t>(p.scale) * (2 * n_max + 4) -
                       rational_floor(dip * Rational(p.scale));
  std::int64_t bs = to_scaled(through, p.scale, "verification bound") + slack;
  PochCache cache(p.scale, bs);
  BetaEvaluator beval(p, cache);

  const Monomial mq = Monomial::q();
  const Monomial mqr = Monomial::q(Rational(rho + 1));
  for (long long n = 0; n <= n_max; ++n) {
    Series rhs = Series::zero(p.scale, bs);
    for (long long r = 0; r <= n; ++r) {
      QPolynomial al = alpha_at(p, r);
      if (al.is_zero()) continue;
      Series t = mul(al.to_series(), cache.inv(mq, 1, n - r));
      rhs = add(rhs, mul(t, cache.inv(mqr, 1, n + r)));
    }
    if (!equal_through(beval.at(n), rhs, through)) return n;
  }
  return std::nullopt;
}

BaileyPair chain_step(const BaileyPair& p) {
  BaileyPair r = p;
  long rho = rel_rho(p.rel);
  long long m = p.alpha.modulus;
  for (long long s = 0; s < m; ++s) {
    AlphaBranch& b = r.alpha.branches[static_cast<std::size_t>(s)];
    if (b.vanishes) continue;
    b.exponent.A = b.exponent.A + Rational(m * m);
    b.exponent.B = b.exponent.B + Rational(2 * m * s + rho * m);
    b.exponent.C = b.exponent.C + Rational(s * s + rho * s);
  }
  r.chain_level += 1;
  return r;
}

BaileyPair iterate_chain(const BaileyPair& p, int steps) {
  if (steps < 0) throw ParamsOutOfDomain("chain steps must be nonnegative");
  BaileyPair r = p;
  for (int i = 0; i < steps; ++i) r = chain_step(r);
  return r;
}

BaileyPair dual_pair(const BaileyPair& p) {
  if (p.chain_level != 0)
    throw UnsupportedSymbolicForm("duality applies to seed pairs only");
  BaileyPair r = p;
  r.id = p.id + ".dual";
  long rho = rel_rho(p.rel);
  long long m = p.alpha.modulus;

  for (long long s = 0; s < m; ++s) {
    AlphaBranch& b = r.alpha.branches[static_cast<std::size_t>(s)];
    if (b.vanishes) continue;
    Rational su{0}, sv{0};
    for (const auto& f : b.numer) {
      su = su + f.u;
      sv = sv + f.v;
    }
    QuadExp e = b.exponent;
    b.exponent.A = -e.A + Rational(m * m);
    b.exponent.B = -e.B - su + Rational(2 * m * s + rho * m);
    b.exponent.C = -e.C - sv + b.den + Rational(s * s + rho * s);
    int flips = static_cast<int>(b.numer.size()) + (b.den != Rational(0) ? 1 : 0);
    if (flips % 2 != 0) b.sign = -b.sign;
  }

  SymbolicBeta& nb = r.beta;
  QuadExp e = p.beta.exponent;
  nb.exponent.A = -e.A - 1;
  nb.exponent.B = -e.B - Rational(rho) - 1;
  nb.exponent.C = -e.C;
  for (auto& f : nb.factors) {
    Rational L_lin{f.len_lin};
    Rational L_const{f.len_const};
    // (x; q^s)_L at q -> 1/q contributes (-c)^L q^{-L e - s L(L-1)/2}.
    Rational p2 = Rational(f.power);
    nb.exponent.A = nb.exponent.A - p2 * f.step * L_lin * L_lin * half;
    nb.exponent.B = nb.exponent.B -
                    p2 * (L_lin * f.x.q_exp + f.step * L_lin * (L_const * 2 - 1) * half);
    nb.exponent.C = nb.exponent.C -
                    p2 * (L_const * f.x.q_exp + f.step * L_const * (L_const - 1) * half);
    if (f.x.coeff == 1) {
      if (f.len_lin % 2 != 0) nb.alternate = !nb.alternate;
      if (f.len_const % 2 != 0) nb.sign = -nb.sign;
    } else if (f.x.coeff != -1) {
      throw UnsupportedSymbolicForm("beta factor needs a unit coefficient");
    }
  }
  return r;
}

SymbolicAlpha alpha_from_f(int fc, const QuadExp& g) {
  if (fc != 1 && fc != -1)
    throw UnsupportedSymbolicForm("monomial weight needs coefficient +/-1");
  SymbolicAlpha a;
  a.modulus = 1;
  AlphaBranch b;
  b.sign = 1;
  b.alternate = (fc == 1);
  b.exponent = QuadExp{g.A + half, g.B - half, g.C};
  b.numer = {le(2, 1)};
  b.den = 1;
  a.branches = {b};
  return a;
}

CorollarySides corollary_identity(const BaileyPair& p, int scale, std::int64_t bound_s) {
  long rho = rel_rho(p.rel);
  long long m = p.alpha.modulus;
  const Rational bound_q{bound_s, scale};
  const long long patience = 2 * m + 4;

  // Reject inputs whose partial-theta exponents stop growing; the loops
  // below would then never clear the bound.
  for (long long s = 0; s < m; ++s) {
    const AlphaBranch& b = p.alpha.branches[static_cast<std::size_t>(s)];
    if (b.vanishes) continue;
    Rational lin = rho == 1 ? Rational(0) : Rational(-1);
    Rational nc = rho == 1 ? Rational(0) : Rational(-1);
    require_truncating(composed_exponent(p, s, Rational(-1), lin, nc),
                       "free-parameter theta side does not truncate");
    if (b.exponent.A == Rational(0) && b.exponent.B <= Rational(0))
      throw NonTruncating("inner alpha sums do not truncate");
  }

  std::int64_t slack = static_cast<std::int64_t>(scale) * 4;
  PochCache cache(scale, bound_s + slack);
  BetaEvaluator beval(p, cache);

  // Sum over n of beta_n (q^rho;q)_{2n} q^n (a q^{n+1};q)_inf (q^{n+rho}/a;q)_inf.
  // Chained betas have nonnegative floors, so the term floor is at least n;
  // for closed betas require that n + exponent(n) grows.
  if (p.chain_level == 0) {
    QuadExp g = p.beta.exponent;
    g.B = g.B + 1;
    require_truncating(g, "beta side does not truncate");
  }
  Series beta_side = Series::zero(scale, bound_s);
  {
    Series acc = Series::zero(scale, bound_s + slack);
    const Monomial base = Monomial::q(Rational(rho));
    long long quiet = 0;
    for (long long n = 0;; ++n) {
      const Series& bn = beval.at(n);
      Rational term_floor = Rational(n) + Rational(bn.floor(), scale);
      if (term_floor > bound_q) {
        if (++quiet >= patience) break;
        continue;
      }
      quiet = 0;
      Series term = mul(bn, cache.poch(base, 1, 2 * n));
      term = scale_by(term, Monomial::q(Rational(n)));
      term = mul(term, poch_inf(Monomial::make(1, 1, Rational(n + 1)), 1, scale, bound_s + slack));
      term = mul(term, poch_inf(Monomial::make(1, -1, Rational(n + rho)), 1, scale, bound_s + slack));
      acc = add(acc, term);
    }
    acc.restrict_bound(bound_s);
    beta_side = acc;
  }

  // Partial-theta side: for rho = 1 the weight is -(-1)^n a^n q^{-C(n,2)},
  // for rho = 2 it is (-1)^n (a/q)^{n+1} q^{-C(n,2)}; both against alpha-hat.
  Series alpha_side = Series::zero(scale, bound_s);
  {
    Series acc = Series::zero(scale, exact_bound);
    long long quiet = 0;
    for (long long n = 0;; ++n) {
      Rational cn2{n * (n - 1) / 2};
      QPolynomial ah = alpha_reduced_at(p, n);
      Rational e_est = [&] {
        auto [t, s] = split_index(p, n);
        const AlphaBranch& b = p.alpha.branches[static_cast<std::size_t>(s)];
        if (b.vanishes) return bound_q + 1;
        Rational e = b.exponent(t) - cn2;
        if (rho == 2) e = e - Rational(n + 1);
        return e;
      }();
      if (e_est > bound_q) {
        if (++quiet >= patience) break;
      } else {
        quiet = 0;
      }
      if (ah.is_zero()) continue;
      Monomial w = rho == 1 ? Monomial::make(n % 2 != 0 ? 1 : -1, static_cast<int>(n), -cn2)
                            : Monomial::make(n % 2 != 0 ? -1 : 1, static_cast<int>(n + 1),
                                             -cn2 - Rational(n + 1));
      acc = add(acc, scale_by(ah.to_series(), w));
    }
    acc.restrict_bound(bound_s);
    std::int64_t lift = std::max<std::int64_t>(0, -acc.floor());
    Series walls = poch_inf_all({Monomial::a(), q_over(Monomial::a())}, 1, scale, bound_s + lift);
    alpha_side = mul(acc, walls);
    alpha_side.restrict_bound(bound_s);
  }

  // Product side: 1/(q;q)_inf times a double sum over r >= 1 and n >= 0.
  Series product_side = Series::zero(scale, bound_s);
  {
    Series acc = Series::zero(scale, exact_bound);
    long long quiet_r = 0;
    for (long long r = 1;; ++r) {
      Rational cr2{r * (r - 1) / 2};
      Rational head = rho == 1 ? cr2 : cr2 - Rational(r);

      Rational r_min = bound_q + 1;
      for (long long s = 0; s < m; ++s) {
        const AlphaBranch& b = p.alpha.branches[static_cast<std::size_t>(s)];
        if (b.vanishes) continue;
        QuadExp e = composed_exponent(p, s, 0, Rational(1 - r), 0);
        Rational v = head + quad_min_from(e, 0);
        if (v < r_min) r_min = v;
      }
      if (r_min > bound_q) {
        if (++quiet_r >= 3) break;
        continue;
      }
      quiet_r = 0;

      Series inner = Series::zero(scale, exact_bound);
      long long quiet_n = 0;
      for (long long n = 0;; ++n) {
        auto [t, s] = split_index(p, n);
        const AlphaBranch& b = p.alpha.branches[static_cast<std::size_t>(s)];
        bool over = b.vanishes || head + b.exponent(t) + Rational((1 - r) * n) > bound_q;
        if (over) {
          if (++quiet_n >= patience) break;
        } else {
          quiet_n = 0;
        }
        QPolynomial ah = alpha_reduced_at(p, n);
        if (ah.is_zero()) continue;
        Series sa = ah.to_series();
        Series one_part = scale_by(sa, Monomial::q(Rational((1 - r) * n)));
        Series two_part = scale_by(sa, Monomial::q(Rational((1 - r) * n + r * (2 * n + rho))));
        inner = add(inner, sub(one_part, two_part));
      }
      Monomial w = Monomial::make(r % 2 != 0 ? 1 : -1, static_cast<int>(r), head);
      acc = add(acc, scale_by(inner, w));
    }
    acc.restrict_bound(bound_s);
    std::int64_t lift = std::max<std::int64_t>(0, -acc.floor());
    Series euler = reciprocal(poch_inf(Monomial::q(), 1, scale, bound_s + lift));
    product_side = mul(acc, euler);
    product_side.restrict_bound(bound_s);
  }

  return CorollarySides{std::move(beta_side), std::move(alpha_side), std::move(product_side)};
}

}  // namespace qtheta
