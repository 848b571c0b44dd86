#include "qtheta/gis.hpp"

#include <cstdlib>
#include <utility>

namespace qtheta {

namespace {

// shared recurrence x(n+1) = x(n) + q^n x(n-1); table[i] holds x(i-1)
std::vector<QPolynomial> recurrence_table(QPolynomial xm1, QPolynomial x0, long n_max) {
  if (n_max < 0) throw ParamsOutOfDomain("schur table: index below 0");
  std::vector<QPolynomial> t;
  t.reserve(static_cast<size_t>(n_max + 2));
  t.push_back(std::move(xm1));
  t.push_back(std::move(x0));
  for (long n = 0; n + 1 <= n_max; ++n) {
    QPolynomial shifted = qp_scale(t[n], 1, Rational(n));
    t.push_back(qp_add(t[n + 1], shifted));
  }
  return t;
}

QPolynomial constant_poly(long c) {
  QPolynomial p;
  if (c != 0) p.add_term(0, Int(c));
  return p;
}

}  // namespace

std::vector<QPolynomial> schur_e_table(long n_max) {
  return recurrence_table(constant_poly(0), constant_poly(1), n_max);
}

std::vector<QPolynomial> schur_d_table(long n_max) {
  return recurrence_table(constant_poly(1), constant_poly(0), n_max);
}

QPolynomial schur_e(long n) {
  if (n < -1) throw ParamsOutOfDomain("schur_e: index below -1");
  if (n == -1) return constant_poly(0);
  return schur_e_table(n).back();
}

QPolynomial schur_d(long n) {
  if (n < -1) throw ParamsOutOfDomain("schur_d: index below -1");
  if (n == -1) return constant_poly(1);
  return schur_d_table(n).back();
}

QPolynomial schur_e_closed(long n) {
  QPolynomial r;
  if (n < 0) return r;
  // binom(n, floor((n-5j+1)/2)) vanishes unless 0 <= bottom <= n
  for (long j = -(n + 2) / 5 - 1; 5 * j <= n + 1; ++j) {
    long bottom = floor_div(n - 5 * j + 1, 2);
    if (bottom < 0 || bottom > n) continue;
    QPolynomial term = qbinomial(n, bottom);
    term = qp_scale(term, (j % 2 == 0) ? 1 : -1, Rational(j * (5 * j - 1), 2));
    r = qp_add(r, term);
  }
  return r;
}

QPolynomial schur_d_closed(long n) {
  QPolynomial r;
  if (n < 0) return r;
  for (long j = -(n + 2) / 5 - 1; 5 * j <= n + 2; ++j) {
    long bottom = floor_div(n - 5 * j + 2, 2);
    if (bottom < 0 || bottom > n) continue;
    QPolynomial term = qbinomial(n, bottom);
    term = qp_scale(term, (j % 2 == 0) ? 1 : -1, Rational(j * (5 * j - 3), 2));
    r = qp_add(r, term);
  }
  return r;
}

QPolynomial schur_e_positive(long n) {
  QPolynomial r;
  for (long k = 0; 2 * k <= n; ++k) {
    QPolynomial term = qbinomial(n - k, k);
    term = qp_scale(term, 1, Rational(k * k));
    r = qp_add(r, term);
  }
  return r;
}

QPolynomial schur_d_positive(long n) {
  QPolynomial r;
  for (long k = 0; 2 * k <= n - 1; ++k) {
    QPolynomial term = qbinomial(n - k - 1, k);
    term = qp_scale(term, 1, Rational(k * (k + 1)));
    r = qp_add(r, term);
  }
  return r;
}

QPolynomial x_poly(long p, long pp, long s, long b, long n) {
  if (pp <= 0) throw ParamsOutOfDomain("x_poly: modulus parameter must be positive");
  if ((n + s + b) % 2 != 0)
    throw ParityViolation("x_poly: n+s+b must be even");
  QPolynomial r;
  if (n < 0) return r;
  // both binomial bottoms move by pp per step in j; keep every j for which
  // either bottom can land in [0, n]
  long reach = (n + std::abs(s) + std::abs(b)) / (2 * pp) + 2;
  for (long j = -reach; j <= reach; ++j) {
    long bottom1 = (n + s - b) / 2 - pp * j;
    if (bottom1 >= 0 && bottom1 <= n) {
      QPolynomial term = qbinomial(n, bottom1);
      term = qp_scale(term, 1, Rational(j * (p * pp * j + pp - p * s)));
      r = qp_add(r, term);
    }
    long bottom2 = (n - s - b) / 2 - pp * j;
    if (bottom2 >= 0 && bottom2 <= n) {
      QPolynomial term = qbinomial(n, bottom2);
      term = qp_scale(term, -1, Rational((p * j + 1) * (pp * j + s)));
      r = qp_add(r, term);
    }
  }
  return r;
}

QPolynomial x_poly_dual_form(long p, long pp, long s, long n) {
  QPolynomial inner = x_poly(pp - p, pp, s, 1, n);
  QPolynomial mirrored = qp_reverse(inner);
  return qp_scale(mirrored, 1, Rational((n - s + 1) * (n + s - 3), 4));
}

QPolynomial gis_forward_coeff(long r, long l) {
  QPolynomial c = qbinomial(r - l, r - 2 * l);
  return qp_scale(c, (l % 2 == 0) ? 1 : -1, Rational(l * (3 * l - 2 * r + 1), 2));
}

QPolynomial gis_backward_coeff(long m, long j) {
  QPolynomial c = qbinomial(m, j);
  QPolynomial lower = qp_scale(qbinomial(m, j - 1), 1, Rational(m - 2 * j + 1));
  c = qp_sub(c, lower);
  return qp_scale(c, 1, Rational(j * (j - m + 1)));
}

std::vector<QPolynomial> gis_forward(const std::vector<QPolynomial>& f) {
  std::vector<QPolynomial> g(f.size());
  for (long r = 0; r < static_cast<long>(f.size()); ++r) {
    QPolynomial acc;
    for (long l = 0; 2 * l <= r; ++l)
      acc = qp_add(acc, qp_mul(gis_forward_coeff(r, l), f[r - 2 * l]));
    g[r] = std::move(acc);
  }
  return g;
}

std::vector<QPolynomial> gis_backward(const std::vector<QPolynomial>& g) {
  std::vector<QPolynomial> f(g.size());
  for (long m = 0; m < static_cast<long>(g.size()); ++m) {
    QPolynomial acc;
    for (long j = 0; 2 * j <= m; ++j)
      acc = qp_add(acc, qp_mul(gis_backward_coeff(m, j), g[m - 2 * j]));
    f[m] = std::move(acc);
  }
  return f;
}

}  // namespace qtheta
