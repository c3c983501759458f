#include "gqd/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace gqd::parallel {
namespace {

std::atomic<int> g_override{-1};

int from_environment() {
  const char* raw = std::getenv("GQD_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    const int value = std::stoi(raw);
    return value > 0 ? value : 0;
  } catch (...) {
    return 0;
  }
}

}  // namespace

int max_threads() {
  int cap = g_override.load();
  if (cap < 0) cap = from_environment();
  return cap > 0 ? cap : omp_get_max_threads();
}

void set_max_threads(int threads) { g_override.store(threads > 0 ? threads : -1); }

}  // namespace gqd::parallel
