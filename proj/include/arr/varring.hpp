#pragma once

#include <memory>
#include <string>
#include <vector>

#include "arr/monomial.hpp"

namespace arr {

// Ordered list of variable names. Immutable once constructed; polynomials
// hold a shared handle. The canonical storage/printing order of monomials is
// grevlex over canon_perm, which lists the variables in ring order with a
// variable literally named "x0" demoted to least significant. This makes the
// default order on rings containing x0 satisfy "x0 least" out of the box.
class VarRing {
 public:
  explicit VarRing(std::vector<std::string> names);

  int count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  // -1 when absent
  int index_of(const std::string& name) const;

  // Precedence list for the canonical grevlex order, most significant first.
  const std::vector<int>& canon_perm() const { return canon_perm_; }

  bool operator==(const VarRing& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<int> canon_perm_;
};

using Ring = std::shared_ptr<const VarRing>;

Ring make_ring(std::vector<std::string> names);
// x1..xn
Ring ring_x(int n);
// x0..xn
Ring ring_x0(int n);

inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

// Canonical grevlex comparison along a precedence list (most significant
// first): higher total degree wins, ties broken by the reverse scan where the
// smaller exponent at the last differing position wins.
inline int grevlex_cmp(const std::vector<int>& perm, const Monomial& u, const Monomial& v) {
  if (u.deg != v.deg) return u.deg > v.deg ? 1 : -1;
  for (std::size_t k = perm.size(); k-- > 0;) {
    std::uint16_t a = u[perm[k]], b = v[perm[k]];
    if (a != b) return a < b ? 1 : -1;
  }
  return 0;
}

}  // namespace arr
