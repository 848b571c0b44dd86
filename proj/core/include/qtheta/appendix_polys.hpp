#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtheta/qpolynomial.hpp"

namespace qtheta {

// Catalog of finite alternating q-binomial sum evaluations (Slater-style
// seed identities) plus the two Pascal recurrences used to move between
// them.  Every case is an exact polynomial identity indexed by n >= 0.
std::vector<std::string> polynomial_case_ids();

// Left and right side of a catalog case.  Throws UnknownCase for a bad id
// and ParamsOutOfDomain for n < 0.  Not available for the recurrence cases
// (which quantify over all splits of n); use polynomial_case_holds there.
QPolynomial polynomial_case_lhs(const std::string& id, long n);
QPolynomial polynomial_case_rhs(const std::string& id, long n);

// True when the case holds at index n.  For "rec1"/"rec2" this checks the
// recurrence for every bottom argument 0..n with top argument n.
bool polynomial_case_holds(const std::string& id, long n);

// Lowest q-exponent where the two sides differ, or nullopt when they agree.
std::optional<Rational> polynomial_case_mismatch(const std::string& id, long n);

}  // namespace qtheta
