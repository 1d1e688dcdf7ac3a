#include "arr/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <cstring>

namespace arr {

namespace {

ExecMode g_mode = [] {
  const char* env = std::getenv("ARR_MODE");
  if (env && std::strcmp(env, "serial") == 0) return ExecMode::Serial;
  return ExecMode::Parallel;
}();

}  // namespace

ExecMode exec_mode() { return g_mode; }

void set_exec_mode(ExecMode m) { g_mode = m; }

int worker_count() { return omp_get_max_threads(); }

}  // namespace arr
