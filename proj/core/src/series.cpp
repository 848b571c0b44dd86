#include <qtheta/series.hpp>

#include <algorithm>
#include <numeric>

namespace qtheta {

std::optional<std::pair<int, int>> Series::a_support() const {
  std::optional<std::pair<int, int>> hull;
  for (auto& [s, l] : terms_) {
    if (l.is_zero()) continue;
    int lo = l.min_exp(), hi = l.max_exp();
    if (!hull) hull = {lo, hi};
    else hull = {std::min(hull->first, lo), std::max(hull->second, hi)};
  }
  return hull;
}

void Series::add_term(std::int64_t s, int a_exp, const Int& c) {
  if (c == 0 || s > bound_) return;
  if (s < floor_) floor_ = s;
  auto it = terms_.find(s);
  if (it == terms_.end()) it = terms_.emplace(s, Laurent()).first;
  it->second.add(a_exp, c);
  if (it->second.is_zero()) terms_.erase(it);
}

void Series::add_laurent(std::int64_t s, const Laurent& l) {
  if (l.is_zero() || s > bound_) return;
  if (s < floor_) floor_ = s;
  auto it = terms_.find(s);
  if (it == terms_.end()) it = terms_.emplace(s, Laurent()).first;
  it->second.add(l);
  if (it->second.is_zero()) terms_.erase(it);
}

void Series::drop_beyond_bound() {
  terms_.erase(terms_.upper_bound(bound_), terms_.end());
}

namespace {

// Common grid for a binary operation; returns regridded copies when needed.
std::pair<Series, Series> align(const Series& f, const Series& g) {
  if (f.scale() == g.scale()) return {f, g};
  int d = std::lcm(f.scale(), g.scale());
  return {regrid(f, d), regrid(g, d)};
}

}  // namespace

Series add(const Series& fa, const Series& ga) {
  auto [f, g] = align(fa, ga);
  Series r(f.scale(), std::min(f.bound(), g.bound()), std::min(f.floor(), g.floor()));
  for (auto& [s, l] : f.terms()) r.add_laurent(s, l);
  for (auto& [s, l] : g.terms()) r.add_laurent(s, l);
  return r;
}

Series sub(const Series& f, const Series& g) { return add(f, negate(g)); }

Series negate(const Series& f) {
  Series r(f.scale(), f.bound(), f.floor());
  for (auto& [s, l] : f.terms()) {
    Laurent n = l;
    n.negate();
    r.add_laurent(s, n);
  }
  return r;
}

Series scale_by(const Series& f, const Monomial& c) {
  if (c.is_zero()) return Series::zero(f.scale(), f.bound());
  std::int64_t sh = to_scaled(c.q_exp, f.scale());
  Series r(f.scale(), sat_add(f.bound(), sh), f.floor() + sh);
  for (auto& [s, l] : f.terms())
    for (auto& [ae, cc] : l.terms()) r.add_term(s + sh, ae + c.a_exp, cc * c.coeff);
  return r;
}

Series linear_combine(const Monomial& c1, const Series& f, const Monomial& c2, const Series& g) {
  return add(scale_by(f, c1), scale_by(g, c2));
}

Series mul(const Series& fa, const Series& ga) {
  auto [f, g] = align(fa, ga);
  // Exactness window: terms of f above bound are unknown; they influence
  // products from exponent bound_f + floor_g onwards.
  std::int64_t b = std::min(sat_add(f.bound(), g.floor()), sat_add(g.bound(), f.floor()));
  Series r(f.scale(), b, f.floor() + g.floor());
  for (auto& [s1, l1] : f.terms()) {
    if (s1 + g.floor() > b) break;
    for (auto& [s2, l2] : g.terms()) {
      if (s1 + s2 > b) break;
      auto it = r.terms_.find(s1 + s2);
      if (it == r.terms_.end()) it = r.terms_.emplace(s1 + s2, Laurent()).first;
      it->second.add_product(l1, l2);
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
  return r;
}

Series pow(const Series& f, unsigned k) {
  Series r = Series::one(f.scale(), f.bound());
  Series base = f;
  while (k) {
    if (k & 1) r = mul(r, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return r;
}

Series reciprocal(const Series& f) {
  if (f.is_zero()) throw NonUnitLeading("reciprocal: series has no q^0 term");
  auto first = f.terms().begin();
  if (first->first < 0)
    throw NonUnitLeading("reciprocal: series has terms below q^0");
  int sign = 0, a0 = 0;
  if (first->first != 0 || !first->second.is_unit(sign, a0))
    throw NonUnitLeading("reciprocal: q^0 part is not a signed power of a");
  // f = sign a^{a0} (1 + h), min q-exponent of h positive; invert the unit and
  // run the convolution recurrence g_s = -sum_{0 < t <= s} h_t g_{s-t}.
  Series h = scale_by(f, Monomial{sign, -a0, Rational(0)});
  std::int64_t b = f.bound();
  Series g(f.scale(), b);
  g.add_term(0, 0, 1);
  for (std::int64_t s = 1; s <= b; ++s) {
    Laurent acc;
    for (auto& [t, ht] : h.terms()) {
      if (t <= 0) continue;
      if (t > s) break;
      auto it = g.terms().find(s - t);
      if (it == g.terms().end()) continue;
      acc.add_product(ht, it->second);
    }
    acc.negate();
    if (!acc.is_zero()) g.add_laurent(s, acc);
  }
  return scale_by(g, Monomial{sign, -a0, Rational(0)});
}

Series regrid(const Series& f, int new_scale) {
  if (new_scale == f.scale()) return f;
  auto map_exp = [&](std::int64_t s) {
    Rational e(s, f.scale());
    return to_scaled(e, new_scale, "regrid exponent");
  };
  std::int64_t b = f.bound() >= exact_bound
                       ? exact_bound
                       : rational_floor(Rational(f.bound(), f.scale()) * new_scale);
  std::int64_t fl = f.floor() >= 0
                        ? std::min<std::int64_t>(f.floor(), 0)
                        : rational_floor(Rational(f.floor(), f.scale()) * new_scale);
  Series r(new_scale, b, fl);
  for (auto& [s, l] : f.terms()) r.add_laurent(map_exp(s), l);
  return r;
}

Series rescale_q(const Series& f, const Rational& m) {
  if (m <= 0) throw Error("rescale_q: factor must be positive");
  // Work on grid d * den(m), then reduce if every exponent and the bound allow.
  int d2 = f.scale() * static_cast<int>(m.denominator());
  if (d2 > max_grid_scale) {
    // try to find any admissible scale
    int found = 0;
    for (int d = 1; d <= max_grid_scale; ++d) {
      bool ok = true;
      for (auto& [s, l] : f.terms()) {
        (void)l;
        if (!is_integer(Rational(s, f.scale()) * m * d)) { ok = false; break; }
      }
      if (ok) { found = d; break; }
    }
    if (!found) throw OffGrid("rescale_q: exponents leave the supported grid");
    d2 = found;
  }
  std::int64_t b = f.bound() >= exact_bound
                       ? exact_bound
                       : rational_floor(Rational(f.bound(), f.scale()) * m * d2);
  Series r(d2, b);
  for (auto& [s, l] : f.terms())
    r.add_laurent(to_scaled(Rational(s, f.scale()) * m, d2), l);
  // reduce the grid when possible
  std::int64_t g = d2;
  for (auto& [s, l] : r.terms()) { (void)l; g = std::gcd(g, s < 0 ? -s : s); if (g == 1) break; }
  if (g > 1) {
    Series rr(static_cast<int>(d2 / g),
              r.bound() >= exact_bound ? exact_bound : floor_div(r.bound(), g));
    for (auto& [s, l] : r.terms()) rr.add_laurent(s / g, l);
    return rr;
  }
  return r;
}

namespace {

// After a -> a q^delta style substitutions the q-exponent of a term moves by
// step * a_exp.  Unknown terms (beyond the bound) can move downwards when
// step * a_exp is negative there, so the bound shrinks by the worst shift seen
// on the visible a-support hull.  This is exact whenever the hull bounds the
// support globally (polynomial a-support, or nonnegative a-exponents with a
// nonnegative step, which covers every use in this project).
std::int64_t shifted_bound(const Series& f, std::int64_t step) {
  if (f.bound() >= exact_bound) return exact_bound;
  auto hull = f.a_support();
  if (!hull) return f.bound();
  std::int64_t w = std::min<std::int64_t>({0, step * hull->first, step * hull->second});
  return f.bound() + w;
}

}  // namespace

Series shift_a(const Series& f, const Rational& delta) {
  int d = f.scale();
  // ensure a_exp * delta lands on a grid; widen if needed
  if (!is_integer(delta * d)) {
    int d2 = std::lcm<std::int64_t>(d, delta.denominator());
    if (d2 > max_grid_scale) throw OffGrid("shift_a: step not representable");
    return shift_a(regrid(f, d2), delta);
  }
  std::int64_t step = to_scaled(delta, d);
  Series r(d, shifted_bound(f, step), f.floor());
  for (auto& [s, l] : f.terms())
    for (auto& [ae, c] : l.terms()) r.add_term(s + step * ae, ae, c);
  return r;
}

Series specialize_a(const Series& f, const Monomial& v) {
  if (v.a_exp != 0 || (v.coeff != 1 && v.coeff != -1))
    throw Error("specialize_a: value must be +/- a pure q-power");
  int d = f.scale();
  if (!is_integer(v.q_exp * d)) {
    int d2 = std::lcm<std::int64_t>(d, v.q_exp.denominator());
    if (d2 > max_grid_scale) throw OffGrid("specialize_a: value off grid");
    return specialize_a(regrid(f, d2), v);
  }
  std::int64_t step = to_scaled(v.q_exp, d);
  Series r(d, shifted_bound(f, step), f.floor());
  for (auto& [s, l] : f.terms())
    for (auto& [ae, c] : l.terms()) {
      Int cc = c;
      if (v.coeff == -1 && (ae % 2 != 0)) cc = -cc;
      r.add_term(s + step * ae, 0, cc);
    }
  return r;
}

Int coefficient_at(const Series& f, const Rational& q_exp, int a_exp) {
  Rational s = q_exp * f.scale();
  if (!is_integer(s)) throw OffGrid("coefficient_at: exponent off grid");
  std::int64_t ss = s.numerator();
  if (ss > f.bound()) throw OutOfKnowledge("coefficient_at: beyond truncation order");
  auto it = f.terms().find(ss);
  if (it == f.terms().end()) return 0;
  return it->second.at(a_exp);
}

std::optional<Mismatch> first_mismatch(const Series& fa, const Series& ga, const Rational& through) {
  auto [f, g] = align(fa, ga);
  std::int64_t t = rational_floor(through * f.scale());
  if (t > f.bound() || t > g.bound())
    throw OutOfKnowledge("first_mismatch: comparison beyond knowledge bound");
  auto itf = f.terms().begin(), itg = g.terms().begin();
  auto mk = [&](std::int64_t s, int ae, Int l, Int r) {
    return Mismatch{Rational(s, f.scale()), ae, std::move(l), std::move(r)};
  };
  while (true) {
    std::int64_t sf = itf != f.terms().end() ? itf->first : t + 1;
    std::int64_t sg = itg != g.terms().end() ? itg->first : t + 1;
    std::int64_t s = std::min(sf, sg);
    if (s > t) return std::nullopt;
    if (sf < sg) {
      return mk(sf, itf->second.terms().begin()->first,
                itf->second.terms().begin()->second, 0);
    }
    if (sg < sf) {
      return mk(sg, itg->second.terms().begin()->first, 0,
                itg->second.terms().begin()->second);
    }
    if (!(itf->second == itg->second)) {
      auto& lm = itf->second.terms();
      auto& rm = itg->second.terms();
      auto il = lm.begin(), ir = rm.begin();
      while (true) {
        int el = il != lm.end() ? il->first : INT32_MAX;
        int er = ir != rm.end() ? ir->first : INT32_MAX;
        int e = std::min(el, er);
        Int cl = (el == e) ? il->second : Int(0);
        Int cr = (er == e) ? ir->second : Int(0);
        if (cl != cr) return mk(s, e, cl, cr);
        if (el == e) ++il;
        if (er == e) ++ir;
      }
    }
    ++itf;
    ++itg;
  }
}

bool equal_through(const Series& f, const Series& g, const Rational& through) {
  return !first_mismatch(f, g, through).has_value();
}

}  // namespace qtheta
