#include "arr/varring.hpp"

#include <set>

#include "arr/error.hpp"

namespace arr {

VarRing::VarRing(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("ring needs at least one variable");
  if (count() > Monomial::kMaxVars)
    throw Error("ring exceeds the supported variable cap of " +
                std::to_string(Monomial::kMaxVars));
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable name: " + n);
  }
  int x0 = index_of("x0");
  for (int i = 0; i < count(); ++i)
    if (i != x0) canon_perm_.push_back(i);
  if (x0 >= 0) canon_perm_.push_back(x0);
}

int VarRing::index_of(const std::string& name) const {
  for (int i = 0; i < count(); ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const VarRing>(std::move(names));
}

Ring ring_x(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(names));
}

Ring ring_x0(int n) {
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(names));
}

}  // namespace arr
