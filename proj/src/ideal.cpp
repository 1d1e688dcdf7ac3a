#include "arr/ideal.hpp"

#include "arr/error.hpp"
#include "arr/groebner.hpp"

namespace arr {

Ideal::Ideal(Ring r, std::vector<Polynomial> gens)
    : ring_(std::move(r)), cache_(std::make_shared<Cache>()) {
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) throw Error("generator ring mismatch");
    gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& order, ExecMode mode,
                                            StepBudget* budget) const {
  const std::string key = order.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto computed =
      std::make_shared<const std::vector<Polynomial>>(buchberger(gens_, order, mode, budget));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->bases.emplace(key, computed);
  (void)inserted;  // first insert wins; the basis is canonical either way
  return *it->second;
}

void Ideal::prime_cache(const MonomialOrder& order, std::vector<Polynomial> basis) const {
  auto stored = std::make_shared<const std::vector<Polynomial>>(std::move(basis));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->bases.emplace(order.key(), std::move(stored));
}

bool Ideal::has_cached(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->bases.count(order.key()) > 0;
}

}  // namespace arr
