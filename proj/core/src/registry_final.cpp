#include "registry_util.hpp"

namespace qtheta::reg {

void register_final(std::vector<IdentityEntry>&) {}

}  // namespace qtheta::reg
