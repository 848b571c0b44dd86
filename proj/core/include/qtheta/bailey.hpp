#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtheta/qfactory.hpp"
#include "qtheta/qpolynomial.hpp"

namespace qtheta {

// The pairs in this module are relative to a = q^rho with rho = 1 or 2.
enum class RelParam { q, q2 };

inline long rel_rho(RelParam r) { return r == RelParam::q ? 1 : 2; }

// u t + v
struct LinExp {
  Rational u{0}, v{0};
  Rational operator()(long long t) const { return u * Rational(t) + v; }
};

// One residue class of the alpha sequence.  For index n = modulus*t + r:
//   alpha_n = sign * (-1)^{t if alternate} * q^{exponent(t)}
//             * prod_i (1 - q^{numer_i(t)}) / (1 - q^{den})
struct AlphaBranch {
  bool vanishes = false;
  int sign = 1;
  bool alternate = false;
  QuadExp exponent;
  std::vector<LinExp> numer;
  Rational den{0};  // no division when zero
};

struct SymbolicAlpha {
  long modulus = 1;
  std::vector<AlphaBranch> branches;
};

// (x; q^step)_{len_lin * n + len_const} raised to power +1 or -1; x carries no a
struct BetaFactor {
  Monomial x;
  Rational step{1};
  long len_lin = 1;
  long len_const = 0;
  int power = -1;
};

// beta_n = sign * (-1)^{n if alternate} * q^{exponent(n)} * prod factors
struct SymbolicBeta {
  int sign = 1;
  bool alternate = false;
  QuadExp exponent;
  std::vector<BetaFactor> factors;
};

struct BaileyPair {
  std::string id;
  RelParam rel = RelParam::q;
  int scale = 1;  // q-grid needed to evaluate the pair
  SymbolicAlpha alpha;
  SymbolicBeta beta;
  int chain_level = 0;  // lemma steps applied on top of the stored closed forms
};

std::vector<std::string> bailey_pair_ids();
const BaileyPair& bailey_pair(const std::string& id);  // throws UnknownPair

// alpha_n as an exact Laurent polynomial in q
QPolynomial alpha_at(const BaileyPair& p, long long n);

// alpha_n with the universal factor (1 - q^{2n+rho})/(1 - q^rho) removed;
// throws UnsupportedSymbolicForm when that factor is not structurally present
QPolynomial alpha_reduced_at(const BaileyPair& p, long long n);

// closed-form beta evaluation (ignores chain_level)
Series beta_closed_at(const SymbolicBeta& b, long long n, PochCache& cache);

// beta of the full pair; multisum recursion when chain_level > 0
class BetaEvaluator {
 public:
  BetaEvaluator(const BaileyPair& p, PochCache& cache);
  const Series& at(long long n);

 private:
  const Series& level_at(int level, long long n);

  const BaileyPair& pair_;
  PochCache& cache_;
  std::vector<std::map<long long, Series>> memo_;  // [level][n]
};

// Checks the defining relation
//   beta_n = sum_{r=0}^n alpha_r / ((q;q)_{n-r} (q^{rho+1};q)_{n+r})
// through the given q-order; returns the first failing n, or nullopt.
std::optional<long long> verify_pair(const BaileyPair& p, long long n_max, const Rational& through);

// One step of the Bailey lemma at a = q^rho:
//   alpha'_n = a^n q^{n^2} alpha_n,
//   beta'_n  = sum_r a^r q^{r^2} beta_r / (q;q)_{n-r}.
BaileyPair chain_step(const BaileyPair& p);
BaileyPair iterate_chain(const BaileyPair& p, int steps);

// Dual pair  alpha'_n = a^n q^{n^2} alpha_n(1/q),
//            beta'_n  = a^{-n} q^{-n(n+1)} beta_n(1/q),
// computed symbolically; requires chain_level == 0.
BaileyPair dual_pair(const BaileyPair& p);

// alpha_n = (-1)^n q^{binom(n,2)} f_n (1 - q^{2n+1})/(1 - q) for a monomial
// sequence f_n = fc^n q^{g(n)} with fc = +/-1
SymbolicAlpha alpha_from_f(int fc, const QuadExp& g);

// Both sides of the discrete partial theta decomposition attached to a pair,
// cleared of the a-singular products, i.e. multiplied by (a, q/a; q)_inf.
// With rho = 1:
//   beta_side  = sum_n beta_n (q;q)_{2n} q^n (a q^{n+1};q)_inf (q^{n+1}/a;q)_inf
//   alpha_side = -sum_n ar_n (-1)^n a^n q^{-binom(n,2)} (a, q/a; q)_inf
//   product_side = 1/(q;q)_inf sum_{r>=1} (-1)^{r+1} a^r q^{binom(r,2)}
//                  sum_n ar_n q^{(1-r)n} (1 - q^{r(2n+1)})
// where ar is the reduced alpha; the identity is
//   beta_side + alpha_side = product_side.
// With rho = 2 the analogous forms hold with (q^2;q)_{2n}, both telescoped
// denominators at n+1, a/q instead of a, and 2n+2 in place of 2n+1.
struct CorollarySides {
  Series beta_side;
  Series alpha_side;  // sign included
  Series product_side;
};

CorollarySides corollary_identity(const BaileyPair& p, int scale, std::int64_t bound_s);

}  // namespace qtheta
