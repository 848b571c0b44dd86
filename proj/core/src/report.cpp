#include <qtheta/report.hpp>

#include <json.hpp>

#include <cctype>

namespace qtheta {

namespace {

using json = nlohmann::ordered_json;

json exp_json(const Rational& e) {
  if (is_integer(e)) return json(e.numerator());
  return json(rational_str(e));
}

bool looks_integral(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

json params_json(const VerificationReport& r) {
  json p = json::object();
  for (const auto& [k, v] : r.params) {
    if (looks_integral(v))
      p[k] = std::stoll(v);
    else
      p[k] = v;
  }
  return p;
}

}  // namespace

std::string report_json_line(const VerificationReport& r) {
  json o;
  o["id"] = r.id;
  o["params"] = params_json(r);
  o["grid"] = r.grid;
  o["q_order"] = exp_json(r.q_order);
  o["status"] = r.status;
  if (r.mismatch) {
    json m;
    m["q_exp"] = exp_json(r.mismatch->q_exp);
    m["a_exp"] = r.mismatch->a_exp;
    m["lhs"] = r.mismatch->lhs.get_str();
    m["rhs"] = r.mismatch->rhs.get_str();
    o["first_mismatch"] = m;
  }
  o["elapsed_ms"] = r.elapsed_ms;
  return o.dump();
}

std::string report_text_line(const VerificationReport& r) {
  std::string s = r.id;
  for (const auto& [k, v] : r.params) s += " " + k + "=" + v;
  s += "  [grid 1/" + std::to_string(r.grid) + ", order " + rational_str(r.q_order) + "]  ";
  s += r.status;
  if (r.mismatch) {
    s += "  first mismatch at q^" + rational_str(r.mismatch->q_exp) + " a^" +
         std::to_string(r.mismatch->a_exp) + ": lhs " + r.mismatch->lhs.get_str() + " vs rhs " +
         r.mismatch->rhs.get_str();
  }
  if (!r.message.empty()) s += "  (" + r.message + ")";
  s += "  " + std::to_string(r.elapsed_ms) + " ms";
  return s;
}

}  // namespace qtheta
