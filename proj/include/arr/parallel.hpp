#pragma once

#include <atomic>
#include <cstdint>

namespace arr {

// Execution mode for the data-parallel kernels (S-pair batch reduction,
// exact rank elimination, cover enumeration, Betti blocks). Serial runs the
// identical loops without OpenMP and is kept as the reference path for
// testing; both modes produce bit-identical results.
enum class ExecMode { Serial, Parallel };

ExecMode exec_mode();
void set_exec_mode(ExecMode m);
int worker_count();

// Shared step budget for long Groebner computations. A negative limit means
// unlimited. charge() is called once per reduction step.
struct StepBudget {
  long long limit = -1;
  std::atomic<long long> used{0};

  StepBudget() = default;
  explicit StepBudget(long long lim) : limit(lim) {}

  bool charge(long long n = 1) {
    long long u = used.fetch_add(n, std::memory_order_relaxed) + n;
    return limit < 0 || u <= limit;
  }
  bool exceeded() const {
    return limit >= 0 && used.load(std::memory_order_relaxed) > limit;
  }
};

}  // namespace arr
