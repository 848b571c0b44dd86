#pragma once

#include <qtheta/report.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qtheta {

enum class Profile { quick, full };

// Integer selectors accepted by the driver; an unset field means "no filter".
struct ParamSel {
  std::optional<long> k, m, i, ip, sigma, r;
  bool any() const { return k || m || i || ip || sigma || r; }
};

struct Sides {
  Series lhs, rhs;
};

// One concrete parameter choice of an entry.  build receives the inclusive
// scaled knowledge bound (q_order * entry scale) and returns both cleared
// sides on the entry's grid with at least that much knowledge.
struct IdentityCase {
  std::vector<std::pair<std::string, std::string>> params;
  ParamSel key;
  bool conjecture = false;
  std::function<Sides(std::int64_t bound_s)> build;
};

struct IdentityEntry {
  std::string id;
  std::string summary;     // what equality is checked, in words
  std::string cleared_by;  // multiplier applied to both sides ("" when none)
  std::string truncation;  // which exponent growth closes the infinite sums
  int scale = 1;           // grid denominator
  bool conjecture = false;
  long quick_order = 30;
  long full_order = 50;
  std::function<std::vector<IdentityCase>(Profile)> cases;
};

// All entries, in fixed catalog order.
const std::vector<IdentityEntry>& identity_catalog();
const IdentityEntry* find_identity(const std::string& id);  // null when unknown

struct VerifyOptions {
  std::optional<long> q_order;  // overrides the profile default
  std::optional<int> grid;      // regrid both sides (multiple of entry grid)
  Profile profile = Profile::full;
  ParamSel filter;
  std::optional<Monomial> perturb_lhs;  // fault injection: added to the LHS
};

VerificationReport verify_case(const IdentityEntry& e, const IdentityCase& c,
                               const VerifyOptions& opt);

// Runs every case of the entry matching the filter.  Throws UnknownIdentity
// for a bad id, ParamsOutOfDomain when a filter selects nothing.
std::vector<VerificationReport> verify_identity(const std::string& id,
                                                const VerifyOptions& opt = {});

// Runs the whole catalog; sink receives reports in deterministic catalog
// order regardless of the worker count.
std::vector<VerificationReport> run_all(
    Profile profile, int jobs,
    const std::function<void(const VerificationReport&)>& sink = {});

}  // namespace qtheta
