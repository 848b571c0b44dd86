#pragma once

#include <qtheta/series.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtheta {

// Outcome of checking one identity case.  params lists the case selectors in
// display order; integer values are serialized as numbers, symbolic values
// (monomial parameters, limit tags) as strings.
struct VerificationReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  int grid = 1;
  Rational q_order{0};
  std::string status;  // pass | fail | conjecture-pass | error
  std::optional<Mismatch> mismatch;
  std::string message;  // diagnostic when status == "error"; not serialized
  long elapsed_ms = 0;
};

// One JSON object per line, fields in fixed order: id, params, grid, q_order,
// status, first_mismatch (only when present), elapsed_ms.  Coefficients are
// decimal strings, exponents numbers when integral and "num/den" strings
// otherwise.
std::string report_json_line(const VerificationReport& r);

// Human-oriented one-line rendering; not schema-stable.
std::string report_text_line(const VerificationReport& r);

}  // namespace qtheta
