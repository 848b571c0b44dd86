#pragma once

#include <qtheta/defs.hpp>

#include <map>

namespace qtheta {

// Laurent polynomial in a with Int coefficients; the coefficient of one
// q-power inside a bivariate series.  Zero coefficients are never stored.
class Laurent {
 public:
  using Map = std::map<int, Int>;

  Laurent() = default;
  explicit Laurent(Int c, int a_exp = 0) {
    if (c != 0) m_[a_exp] = std::move(c);
  }

  bool is_zero() const { return m_.empty(); }
  const Map& terms() const { return m_; }

  Int at(int a_exp) const {
    auto it = m_.find(a_exp);
    return it == m_.end() ? Int(0) : it->second;
  }

  void add(int a_exp, const Int& c) {
    if (c == 0) return;
    auto it = m_.find(a_exp);
    if (it == m_.end()) {
      m_.emplace(a_exp, c);
    } else {
      it->second += c;
      if (it->second == 0) m_.erase(it);
    }
  }

  void add(const Laurent& o) {
    for (auto& [e, c] : o.m_) add(e, c);
  }
  void sub(const Laurent& o) {
    for (auto& [e, c] : o.m_) add(e, -c);
  }
  // this += x * o for monomial coefficient x (x.q_exp must be 0 here).
  void add_scaled(const Laurent& o, long c, int a_shift) {
    if (c == 0) return;
    for (auto& [e, v] : o.m_) add(e + a_shift, v * c);
  }
  // this += u * v
  void add_product(const Laurent& u, const Laurent& v) {
    for (auto& [e1, c1] : u.m_)
      for (auto& [e2, c2] : v.m_) add(e1 + e2, c1 * c2);
  }

  void negate() {
    for (auto& [e, c] : m_) c = -c;
  }

  int min_exp() const { return m_.begin()->first; }
  int max_exp() const { return m_.rbegin()->first; }

  // True if this equals c * a^k with c = +/-1; reports (c, k).
  bool is_unit(int& sign, int& a_exp) const {
    if (m_.size() != 1) return false;
    auto& [e, c] = *m_.begin();
    if (c != 1 && c != -1) return false;
    sign = (c == 1) ? 1 : -1;
    a_exp = e;
    return true;
  }

  bool operator==(const Laurent& o) const { return m_ == o.m_; }

 private:
  Map m_;
};

}  // namespace qtheta
