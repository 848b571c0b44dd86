#pragma once

#include <qtheta/laurent.hpp>
#include <qtheta/monomial.hpp>

#include <map>
#include <optional>
#include <vector>

namespace qtheta {

// Truncated bivariate series: Laurent in a, q-exponents on the grid (1/d)Z,
// coefficients exact integers.  Exponents are stored scaled by d.
//
// bound(): knowledge bound B (scaled, inclusive); every coefficient of q^{s/d}
// with s <= B is stored exactly.  floor(): declared lower bound on occurring
// q-exponents (usually 0; negative for embedded Laurent polynomials and for
// intermediate values that are later multiplied back to a power series).
class Series {
 public:
  using TermMap = std::map<std::int64_t, Laurent>;

  Series(int scale, std::int64_t bound_s, std::int64_t floor_s = 0)
      : scale_(check_scale(scale)), bound_(bound_s), floor_(floor_s) {}

  static Series zero(int scale, std::int64_t bound_s) { return Series(scale, bound_s); }
  static Series one(int scale, std::int64_t bound_s) {
    Series f(scale, bound_s);
    f.add_term(0, 0, 1);
    return f;
  }
  static Series monomial(const Monomial& m, int scale, std::int64_t bound_s) {
    Series f(scale, bound_s);
    std::int64_t s = to_scaled(m.q_exp, scale);
    if (s < 0) f.floor_ = s;
    f.add_term(s, m.a_exp, m.coeff);
    return f;
  }

  int scale() const { return scale_; }
  std::int64_t bound() const { return bound_; }
  std::int64_t floor() const { return floor_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational bound_q() const { return Rational(bound_, scale_); }

  // Declared support interval in a (honest hull of stored terms).
  std::optional<std::pair<int, int>> a_support() const;

  // Builder access; terms beyond the knowledge bound are dropped silently,
  // terms below the floor lower it.
  void add_term(std::int64_t s, int a_exp, const Int& c);
  void add_laurent(std::int64_t s, const Laurent& l);
  void set_floor(std::int64_t f) { if (f < floor_) floor_ = f; }
  void restrict_bound(std::int64_t b) { if (b < bound_) { bound_ = b; drop_beyond_bound(); } }

 private:
  static int check_scale(int d) {
    if (d < 1 || d > max_grid_scale) throw OffGrid("grid scale out of range");
    return d;
  }
  void drop_beyond_bound();

  int scale_;
  std::int64_t bound_;
  std::int64_t floor_;
  TermMap terms_;

  friend Series add(const Series&, const Series&);
  friend Series mul(const Series&, const Series&);
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series negate(const Series& f);
Series scale_by(const Series& f, const Monomial& c);
// c1 * f + c2 * g with monomial coefficients.
Series linear_combine(const Monomial& c1, const Series& f, const Monomial& c2, const Series& g);
Series mul(const Series& f, const Series& g);
Series pow(const Series& f, unsigned k);

// Multiplicative inverse.  Requires floor >= 0 and the q^0 coefficient equal
// to +/- a^k (throws NonUnitLeading otherwise); the result is again integral.
Series reciprocal(const Series& f);

// Lossless change of grid; d must divide new_scale, or all exponents must be
// representable on the coarser grid (throws OffGrid otherwise).
Series regrid(const Series& f, int new_scale);
// q -> q^m for rational m > 0.
Series rescale_q(const Series& f, const Rational& m);
// a -> a * q^delta.
Series shift_a(const Series& f, const Rational& delta);
// a -> v, a pure q-power with coefficient +/-1 (v.a_exp == 0).
Series specialize_a(const Series& f, const Monomial& v);

// Exact coefficient of a^{a_exp} q^{q_exp}; OutOfKnowledge beyond the bound,
// OffGrid if q_exp is not on the grid.
Int coefficient_at(const Series& f, const Rational& q_exp, int a_exp);

struct Mismatch {
  Rational q_exp;
  int a_exp = 0;
  Int lhs, rhs;
};

// Compares coefficients for all q-exponents <= through (inclusive), reporting
// the mismatch with smallest q-exponent, ties broken by smallest a-exponent.
// Both series must know at least through (throws OutOfKnowledge) and are
// regridded to a common scale automatically.
std::optional<Mismatch> first_mismatch(const Series& f, const Series& g, const Rational& through);
bool equal_through(const Series& f, const Series& g, const Rational& through);

}  // namespace qtheta
