#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Parallel execution layer. Every kernel in the library runs either serially
// or through OpenMP; both paths produce bit-identical results because all
// floating-point reductions are blocked: fixed-size blocks are summed with
// Neumaier compensation and the per-block partials are combined in block
// order. The serial path is the reference implementation used by the tests
// and the benchmark target.
namespace varifrac::par {

enum class Mode { Serial, Parallel };

// Thread cap from VARIFRAC_THREADS (0 or unset = let OpenMP decide).
int thread_cap();

// Library-wide default: Parallel when OpenMP is available and the cap is not
// 1, Serial otherwise. Can be overridden for tests.
Mode default_mode();
void set_default_mode(Mode mode);
void reset_default_mode();

inline constexpr std::size_t kSumBlock = 512;

template <class F>
void for_each_index(std::size_t n, F&& f, Mode mode) {
#ifdef _OPENMP
  if (mode == Mode::Parallel && n > 1) {
    const int cap = thread_cap();
    if (cap > 0) {
#pragma omp parallel for schedule(static) num_threads(cap)
      for (long long i = 0; i < static_cast<long long>(n); ++i)
        f(static_cast<std::size_t>(i));
    } else {
#pragma omp parallel for schedule(static)
      for (long long i = 0; i < static_cast<long long>(n); ++i)
        f(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  (void)mode;
  for (std::size_t i = 0; i < n; ++i) f(i);
}

namespace detail {

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace detail

// Deterministic compensated sum of term(0..n-1). Identical bits in Serial and
// Parallel mode and for any thread count.
template <class F>
double block_sum(std::size_t n, F&& term, Mode mode) {
  if (n == 0) return 0.0;
  const std::size_t nblocks = (n + kSumBlock - 1) / kSumBlock;
  std::vector<double> partial(nblocks);
  for_each_index(
      nblocks,
      [&](std::size_t b) {
        const std::size_t lo = b * kSumBlock;
        const std::size_t hi = std::min(n, lo + kSumBlock);
        detail::Neumaier acc;
        for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
        partial[b] = acc.value();
      },
      mode);
  detail::Neumaier acc;
  for (double p : partial) acc.add(p);
  return acc.value();
}

// Same scheme for fixed-size arrays of accumulators (e.g. per-component
// residuals).
template <std::size_t N, class F>
std::array<double, N> block_sum_array(std::size_t n, F&& term, Mode mode) {
  std::array<double, N> out{};
  if (n == 0) return out;
  const std::size_t nblocks = (n + kSumBlock - 1) / kSumBlock;
  std::vector<std::array<double, N>> partial(nblocks);
  for_each_index(
      nblocks,
      [&](std::size_t b) {
        const std::size_t lo = b * kSumBlock;
        const std::size_t hi = std::min(n, lo + kSumBlock);
        std::array<detail::Neumaier, N> acc{};
        for (std::size_t i = lo; i < hi; ++i) {
          const std::array<double, N> v = term(i);
          for (std::size_t c = 0; c < N; ++c) acc[c].add(v[c]);
        }
        for (std::size_t c = 0; c < N; ++c) partial[b][c] = acc[c].value();
      },
      mode);
  std::array<detail::Neumaier, N> acc{};
  for (const auto& p : partial)
    for (std::size_t c = 0; c < N; ++c) acc[c].add(p[c]);
  for (std::size_t c = 0; c < N; ++c) out[c] = acc[c].value();
  return out;
}

// Deterministic max (order-independent).
template <class F>
double block_max(std::size_t n, F&& term, Mode mode) {
  if (n == 0) return 0.0;
  const std::size_t nblocks = (n + kSumBlock - 1) / kSumBlock;
  std::vector<double> partial(nblocks);
  for_each_index(
      nblocks,
      [&](std::size_t b) {
        const std::size_t lo = b * kSumBlock;
        const std::size_t hi = std::min(n, lo + kSumBlock);
        double m = -std::numeric_limits<double>::infinity();
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, term(i));
        partial[b] = m;
      },
      mode);
  double m = partial[0];
  for (double p : partial) m = std::max(m, p);
  return m;
}

}  // namespace varifrac::par
