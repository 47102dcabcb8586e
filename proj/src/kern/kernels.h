// kernels.h
// Dense numeric inner loops. Every kernel exists twice: a plain serial
// reference (serial::*) and an OpenMP version (par::*). The parallel versions
// split work over independent output elements only, and full reductions use a
// fixed block decomposition, so results are bit-identical to the reference for
// any thread count. The unprefixed entry points dispatch on problem size.

#pragma once

#include <cstddef>
#include <cstdint>

namespace mcasr::kern {

// Global toggle (tests and the benchmark force one side or the other).
bool parallel_enabled();
void set_parallel(bool on);

// Work below this many scalar ops is not worth a parallel region.
inline constexpr std::ptrdiff_t kParGrain = 1 << 15;
// Fixed block length for order-stable summation.
inline constexpr std::ptrdiff_t kSumBlock = 4096;

namespace serial {
// c[m x n] = a[m x k] * b[k x n]; accumulate adds into c instead of overwriting.
void gemm(const double* a, const double* b, double* c,
          std::ptrdiff_t m, std::ptrdiff_t k, std::ptrdiff_t n, bool accumulate);
// out[i] = sum_j h[j] * x[i - j], full convolution, i in [0, nx+nh-1).
void conv1d(const double* x, std::ptrdiff_t nx, const double* h, std::ptrdiff_t nh,
            double* out);
// Block-wise left-to-right sum (blocks of kSumBlock, combined in order).
double sum(const double* x, std::ptrdiff_t n);
void axpy(double alpha, const double* x, double* y, std::ptrdiff_t n);
}  // namespace serial

namespace par {
void gemm(const double* a, const double* b, double* c,
          std::ptrdiff_t m, std::ptrdiff_t k, std::ptrdiff_t n, bool accumulate);
void conv1d(const double* x, std::ptrdiff_t nx, const double* h, std::ptrdiff_t nh,
            double* out);
double sum(const double* x, std::ptrdiff_t n);
void axpy(double alpha, const double* x, double* y, std::ptrdiff_t n);
}  // namespace par

void gemm(const double* a, const double* b, double* c,
          std::ptrdiff_t m, std::ptrdiff_t k, std::ptrdiff_t n, bool accumulate = false);
void conv1d(const double* x, std::ptrdiff_t nx, const double* h, std::ptrdiff_t nh,
            double* out);
double sum(const double* x, std::ptrdiff_t n);
void axpy(double alpha, const double* x, double* y, std::ptrdiff_t n);

// Elementwise maps. The functor is applied per output element; parallel and
// serial orders agree trivially.
namespace detail {
bool use_parallel(std::ptrdiff_t work);
}

template <class F>
void map_serial(std::ptrdiff_t n, F f) {
  for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
}

template <class F>
void map_parallel(std::ptrdiff_t n, F f) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
}

template <class F>
void map(std::ptrdiff_t n, F f, std::ptrdiff_t work_per_item = 1) {
  if (detail::use_parallel(n * work_per_item)) {
    map_parallel(n, f);
  } else {
    map_serial(n, f);
  }
}

}  // namespace mcasr::kern
