#include "qtheta/appendix_polys.hpp"

#include <functional>

namespace qtheta {

namespace {

using Row = std::vector<QPolynomial>;

// acc += sgn * q^e * [top, b], skipping binomials outside the support
void add_bin(QPolynomial& acc, const Row& row, long long top, long long b, long sgn,
             const Rational& e) {
  if (b < 0 || b > top) return;
  acc = qp_add(acc, qp_scale(row[static_cast<size_t>(b)], Int(sgn), e));
}

long sign_of(long j) { return (j % 2 == 0) ? 1 : -1; }

QPolynomial sum_lhs(const std::string& id, long n) {
  long long top;
  if (id == "G1" || id == "G3" || id == "A1" || id == "A3" || id == "C1" || id == "C2")
    top = 2 * n;
  else if (id == "A11")
    top = 2 * n + 2;
  else
    top = 2 * n + 1;
  Row row = qbinomial_row(top);
  QPolynomial acc;
  long reach = n + 2;
  for (long j = -reach; j <= reach; ++j) {
    if (id == "G" || id == "G1") {
      add_bin(acc, row, top, n - j, sign_of(j), Rational(j * (3 * j - 1), 4));
    } else if (id == "G3") {
      add_bin(acc, row, top, n - j, sign_of(j), Rational(3 * j * (j - 1), 4));
    } else if (id == "A1" || id == "A2") {
      add_bin(acc, row, top, n - 3 * j, 1, Rational(j * (6 * j + (id == "A1" ? -1 : 1))));
      add_bin(acc, row, top, n - 3 * j - 1, -1, Rational((2 * j + 1) * (3 * j + 1)));
    } else if (id == "A3" || id == "A4") {
      Rational e(j * (6 * j + (id == "A3" ? 2 : 4)));
      add_bin(acc, row, top, n - 3 * j, 1, e);
      add_bin(acc, row, top, n - 3 * j - 1, -1, e);
    } else if (id == "A9") {
      add_bin(acc, row, top, n - 3 * j, 1, Rational(j * (6 * j - 1)));
      add_bin(acc, row, top, n - 3 * j, -1, Rational((2 * j + 1) * (3 * j + 1)));
    } else if (id == "A10") {
      Rational e1(2 * j * (3 * j - 1));
      add_bin(acc, row, top, n - 3 * j, 1, e1);
      add_bin(acc, row, top, n - 3 * j + 2, -1, e1);
      Rational e2 = Rational(2 * j * (3 * j + 2)) + 1;
      add_bin(acc, row, top, n - 3 * j, -1, e2);
      add_bin(acc, row, top, n - 3 * j - 1, 1, e2);
    } else if (id == "A11") {
      add_bin(acc, row, top, n - 3 * j, 1, Rational(j * (6 * j + 1)));
      add_bin(acc, row, top, n - 3 * j - 1, -1, Rational((2 * j + 1) * (3 * j + 1)));
    } else if (id == "C1") {
      add_bin(acc, row, top, n - 2 * j, sign_of(j), Rational(j * (3 * j - 1)));
    } else if (id == "C2") {
      Rational e(j * (3 * j + 1));
      add_bin(acc, row, top, n - 2 * j, sign_of(j), e);
      add_bin(acc, row, top, n - 2 * j - 1, -sign_of(j), e);
    } else if (id == "C4") {
      add_bin(acc, row, top, n - 2 * j, sign_of(j), Rational(3 * j * (j + 1)));
    } else if (id == "C8") {
      add_bin(acc, row, top, n - 2 * j, sign_of(j), Rational(j * (3 * j - 1)));
      add_bin(acc, row, top, n - 2 * j, -sign_of(j), Rational(j * (3 * j - 1) + 4 * j + 1));
    } else {
      throw UnknownCase("polynomial case: " + id);
    }
  }
  return acc;
}

QPolynomial sum_rhs(const std::string& id, long n) {
  if (id == "G")
    return qp_mul(qp_poch(Rational(2 * n + 1), 1, 1), qp_poch(Rational(1, 2), 1, n));
  if (id == "G1") return qp_poch(Rational(1, 2), 1, n);
  if (id == "G3") return qp_scale(qp_poch(Rational(1, 2), 1, n), 1, Rational(n));
  if (id == "A1" || id == "A2") return QPolynomial::one();
  if (id == "A3" || id == "A4") return qp_scale(QPolynomial::one(), 1, Rational(n));
  if (id == "A9") return qp_poch(Rational(2 * n + 1), 1, 1);
  if (id == "A10") return qp_scale(qp_poch(Rational(2 * n + 1), 1, 1), 1, Rational(n));
  if (id == "A11") return qp_poch(Rational(2 * n + 2), 1, 1);
  if (id == "C1") return qp_poch(1, 1, n, -1);
  if (id == "C2" || id == "C4") return qp_scale(qp_poch(1, 1, n, -1), 1, Rational(n));
  if (id == "C8") return qp_mul(qp_poch(Rational(2 * n + 1), 1, 1), qp_poch(1, 1, n, -1));
  throw UnknownCase("polynomial case: " + id);
}

bool is_recurrence(const std::string& id) { return id == "rec1" || id == "rec2"; }

// difference of the two Pascal forms at (top, m) given the rows for top and
// top - 1; zero when the recurrence holds
QPolynomial recurrence_defect(const std::string& id, const Row& row, const Row& prev, long top,
                              long m) {
  auto prev_at = [&](long k) {
    return (k < 0 || k >= static_cast<long>(prev.size())) ? QPolynomial() : prev[k];
  };
  QPolynomial rhs;
  if (id == "rec1") {
    rhs = qp_add(prev_at(m), qp_scale(prev_at(m - 1), 1, Rational(top - m)));
  } else {
    rhs = qp_add(prev_at(m - 1), qp_scale(prev_at(m), 1, Rational(m)));
  }
  return qp_sub(row[m], rhs);
}

}  // namespace

std::vector<std::string> polynomial_case_ids() {
  return {"G",  "G1", "G3", "A1", "A2", "A3",   "A4",   "A9",
          "A10", "A11", "C1", "C2", "C4", "C8", "rec1", "rec2"};
}

QPolynomial polynomial_case_lhs(const std::string& id, long n) {
  if (n < 0) throw ParamsOutOfDomain("polynomial case: negative index");
  if (is_recurrence(id))
    throw UnknownCase("polynomial case " + id + " has no single-polynomial sides");
  return sum_lhs(id, n);
}

QPolynomial polynomial_case_rhs(const std::string& id, long n) {
  if (n < 0) throw ParamsOutOfDomain("polynomial case: negative index");
  if (is_recurrence(id))
    throw UnknownCase("polynomial case " + id + " has no single-polynomial sides");
  return sum_rhs(id, n);
}

bool polynomial_case_holds(const std::string& id, long n) {
  return !polynomial_case_mismatch(id, n).has_value();
}

std::optional<Rational> polynomial_case_mismatch(const std::string& id, long n) {
  if (n < 0) throw ParamsOutOfDomain("polynomial case: negative index");
  if (is_recurrence(id)) {
    Row row = qbinomial_row(n);
    Row prev = (n >= 1) ? qbinomial_row(n - 1) : Row{qbinomial(-1, 0)};
    for (long m = 0; m <= n; ++m) {
      QPolynomial defect = recurrence_defect(id, row, prev, n, m);
      if (!defect.is_zero()) return Rational(defect.min_exp_s(), defect.scale());
    }
    return std::nullopt;
  }
  QPolynomial defect = qp_sub(sum_lhs(id, n), sum_rhs(id, n));
  if (!defect.is_zero()) return Rational(defect.min_exp_s(), defect.scale());
  return std::nullopt;
}

}  // namespace qtheta
