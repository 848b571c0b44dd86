#pragma once

#include <vector>

#include "qtheta/qpolynomial.hpp"

namespace qtheta {

// Schur's Rogers-Ramanujan polynomials. schur_e(n) generates partitions with
// parts differing by at least 2 and largest part < n; schur_d(n) additionally
// forbids part 1. Both satisfy x(n+1) = x(n) + q^n x(n-1) with
// e(-1) = d(0) = 0 and e(0) = d(-1) = 1.
QPolynomial schur_e(long n);
QPolynomial schur_d(long n);

// Tables [x(-1), x(0), ..., x(n_max)] built from the recurrence.
std::vector<QPolynomial> schur_e_table(long n_max);
std::vector<QPolynomial> schur_d_table(long n_max);

// Schur's alternating closed forms:
//   e(n) = sum_j (-1)^j q^{j(5j-1)/2} binom(n, floor((n-5j+1)/2))
//   d(n) = sum_j (-1)^j q^{j(5j-3)/2} binom(n, floor((n-5j+2)/2))
QPolynomial schur_e_closed(long n);
QPolynomial schur_d_closed(long n);

// MacMahon's positive forms:
//   e(n) = sum_r q^{r^2} binom(n-r, r)
//   d(n) = sum_r q^{r(r+1)} binom(n-r-1, r)
QPolynomial schur_e_positive(long n);
QPolynomial schur_d_positive(long n);

// Fermionic configuration polynomial
//   X^{(p,pp)}_{s,b}(n) = sum_j [ q^{j(p*pp*j+pp-p*s)} binom(n, (n+s-b)/2 - pp*j)
//                               - q^{(p*j+1)(pp*j+s)} binom(n, (n-s-b)/2 - pp*j) ].
// Throws ParityViolation unless n+s+b is even.
QPolynomial x_poly(long p, long pp, long s, long b, long n);

// Right side of the duality relation
//   X_{s,1}^{(p,pp)}(n; q) = q^{(n-s+1)(n+s-3)/4} X_{s,1}^{(pp-p,pp)}(n; 1/q),
// i.e. the dual evaluated and mirrored back so it can be compared with
// x_poly(p, pp, s, 1, n) directly.
QPolynomial x_poly_dual_form(long p, long pp, long s, long n);

// Triangular transform pair connecting a sequence f to g:
//   g(r) = sum_l (-1)^l q^{l(3l-2r+1)/2} binom(r-l, l) f(r-2l)
//   f(m) = sum_j q^{j(j-m+1)} [ binom(m, j) - q^{m-2j+1} binom(m, j-1) ] g(m-2j).
// The coefficient helpers expose the multipliers so series-level users can
// apply the same transform.
QPolynomial gis_forward_coeff(long r, long l);
QPolynomial gis_backward_coeff(long m, long j);

std::vector<QPolynomial> gis_forward(const std::vector<QPolynomial>& f);
std::vector<QPolynomial> gis_backward(const std::vector<QPolynomial>& g);

}  // namespace qtheta
