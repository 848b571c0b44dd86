#include "registry_util.hpp"

namespace qtheta {

namespace reg {

void register_foundations(std::vector<IdentityEntry>&);
void register_engines(std::vector<IdentityEntry>&);
void register_families(std::vector<IdentityEntry>&);
void register_theorems(std::vector<IdentityEntry>&);
void register_residual(std::vector<IdentityEntry>&);
void register_gis(std::vector<IdentityEntry>&);
void register_final(std::vector<IdentityEntry>&);

}  // namespace reg

const std::vector<IdentityEntry>& identity_catalog() {
  static const std::vector<IdentityEntry> cat = [] {
    std::vector<IdentityEntry> v;
    reg::register_foundations(v);
    reg::register_engines(v);
    reg::register_families(v);
    reg::register_theorems(v);
    reg::register_residual(v);
    reg::register_gis(v);
    reg::register_final(v);
    return v;
  }();
  return cat;
}

const IdentityEntry* find_identity(const std::string& id) {
  for (const auto& e : identity_catalog())
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace qtheta
