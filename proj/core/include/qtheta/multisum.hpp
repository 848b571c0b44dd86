#pragma once

#include <qtheta/qfactory.hpp>

#include <functional>

namespace qtheta {

// One summation index N_j contributes q^{quad N_j^2 + lin N_j}.
struct SumLevel {
  Rational quad{1};
  Rational lin{1};
};

// sum over N_1 >= N_2 >= ... >= N_k >= 0 of
//   q^{sum_j (quad_j N_j^2 + lin_j N_j)} * prod_{j=1}^{k-1} 1/(q^b;q^b)_{N_j - N_{j+1}}
//   * weight(N_k)
// with link base b = link_base (1 for the usual 1/(q;q) chain).  The innermost
// weight carries the tail factors, for example 1/(q;q)_{N_k} or
// (-1;q)_{N_k}/((q;q)_{N_k}(q^2;q^2)_{N_k}); it must not contain negative
// q-exponents.  Truncation prunes on the exponent polynomial, which must be
// bounded below and eventually increasing in every index (quad > 0, or
// quad == 0 with lin >= 0).
Series free_multisum(const std::vector<SumLevel>& levels,
                     const std::function<Series(long long)>& weight, PochCache& cache,
                     const Rational& link_base = Rational(1));

}  // namespace qtheta
