#include "varifrac/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>

namespace varifrac::par {

namespace {

int read_thread_cap() {
  const char* env = std::getenv("VARIFRAC_THREADS");
  if (!env || !*env) return 0;
  try {
    const int v = std::stoi(env);
    return v < 0 ? 0 : v;
  } catch (...) {
    return 0;
  }
}

std::atomic<int> g_default_mode{-1};  // -1 unset, else static_cast<int>(Mode)

}  // namespace

int thread_cap() {
  static const int cap = read_thread_cap();
  return cap;
}

Mode default_mode() {
  const int m = g_default_mode.load(std::memory_order_relaxed);
  if (m >= 0) return static_cast<Mode>(m);
#ifdef _OPENMP
  return thread_cap() == 1 ? Mode::Serial : Mode::Parallel;
#else
  return Mode::Serial;
#endif
}

void set_default_mode(Mode mode) {
  g_default_mode.store(static_cast<int>(mode), std::memory_order_relaxed);
}

void reset_default_mode() {
  g_default_mode.store(-1, std::memory_order_relaxed);
}

}  // namespace varifrac::par
