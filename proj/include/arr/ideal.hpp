#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "arr/order.hpp"
#include "arr/parallel.hpp"
#include "arr/polynomial.hpp"

namespace arr {

// Generator list plus a per-order cache of reduced Groebner bases. The cache
// is compute-once: concurrent requests for the same order observe a single
// canonical basis (the first insert wins; reduced bases are unique anyway).
// Copies of an Ideal share the cache.
class Ideal {
 public:
  Ideal(Ring r, std::vector<Polynomial> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  // Reduced Groebner basis under the given order (monic, tails reduced,
  // sorted by ascending leading monomial), computed on first use.
  const std::vector<Polynomial>& basis(const MonomialOrder& order,
                                       ExecMode mode = exec_mode(),
                                       StepBudget* budget = nullptr) const;

  // Installs a basis known to be the reduced GB for the order (used when a
  // computation produces one as a byproduct, e.g. elimination).
  void prime_cache(const MonomialOrder& order, std::vector<Polynomial> basis) const;

  bool has_cached(const MonomialOrder& order) const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;

  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace arr
