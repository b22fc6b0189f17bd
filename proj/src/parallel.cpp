#include "ratapprox/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include <omp.h>

namespace ratapprox {
namespace {

int env_threads() {
  const char* env = std::getenv("RATAPPROX_THREADS");
  if (env == nullptr) return 0;
  try {
    const int n = std::stoi(env);
    return n > 0 ? n : 0;
  } catch (...) {
    return 0;
  }
}

std::atomic<int> override_threads{0};

}  // namespace

int max_threads() {
  if (const int o = override_threads.load(); o > 0) return o;
  static const int from_env = env_threads();
  return from_env > 0 ? from_env : omp_get_max_threads();
}

void set_max_threads(int n) { override_threads.store(n > 0 ? n : 0); }

}  // namespace ratapprox
