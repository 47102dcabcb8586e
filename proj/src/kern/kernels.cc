#include "kern/kernels.h"

#include <algorithm>
#include <atomic>
#include <vector>

namespace mcasr::kern {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

namespace detail {
bool use_parallel(std::ptrdiff_t work) {
  return parallel_enabled() && work >= kParGrain;
}
}  // namespace detail

namespace serial {

void gemm(const double* a, const double* b, double* c,
          std::ptrdiff_t m, std::ptrdiff_t k, std::ptrdiff_t n, bool accumulate) {
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    if (!accumulate) std::fill(ci, ci + n, 0.0);
    const double* ai = a + i * k;
    for (std::ptrdiff_t p = 0; p < k; ++p) {
      const double av = ai[p];
      if (av == 0.0) continue;
      const double* bp = b + p * n;
      for (std::ptrdiff_t j = 0; j < n; ++j) ci[j] += av * bp[j];
    }
  }
}

void conv1d(const double* x, std::ptrdiff_t nx, const double* h, std::ptrdiff_t nh,
            double* out) {
  const std::ptrdiff_t no = nx + nh - 1;
  for (std::ptrdiff_t i = 0; i < no; ++i) {
    const std::ptrdiff_t jlo = std::max<std::ptrdiff_t>(0, i - nx + 1);
    const std::ptrdiff_t jhi = std::min(nh - 1, i);
    double acc = 0.0;
    for (std::ptrdiff_t j = jlo; j <= jhi; ++j) acc += h[j] * x[i - j];
    out[i] = acc;
  }
}

double sum(const double* x, std::ptrdiff_t n) {
  const std::ptrdiff_t nblk = (n + kSumBlock - 1) / kSumBlock;
  double total = 0.0;
  for (std::ptrdiff_t b = 0; b < nblk; ++b) {
    const std::ptrdiff_t lo = b * kSumBlock;
    const std::ptrdiff_t hi = std::min(n, lo + kSumBlock);
    double acc = 0.0;
    for (std::ptrdiff_t i = lo; i < hi; ++i) acc += x[i];
    total += acc;
  }
  return total;
}

void axpy(double alpha, const double* x, double* y, std::ptrdiff_t n) {
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace serial

namespace par {

void gemm(const double* a, const double* b, double* c,
          std::ptrdiff_t m, std::ptrdiff_t k, std::ptrdiff_t n, bool accumulate) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    if (!accumulate) std::fill(ci, ci + n, 0.0);
    const double* ai = a + i * k;
    for (std::ptrdiff_t p = 0; p < k; ++p) {
      const double av = ai[p];
      if (av == 0.0) continue;
      const double* bp = b + p * n;
      for (std::ptrdiff_t j = 0; j < n; ++j) ci[j] += av * bp[j];
    }
  }
}

void conv1d(const double* x, std::ptrdiff_t nx, const double* h, std::ptrdiff_t nh,
            double* out) {
  const std::ptrdiff_t no = nx + nh - 1;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < no; ++i) {
    const std::ptrdiff_t jlo = std::max<std::ptrdiff_t>(0, i - nx + 1);
    const std::ptrdiff_t jhi = std::min(nh - 1, i);
    double acc = 0.0;
    for (std::ptrdiff_t j = jlo; j <= jhi; ++j) acc += h[j] * x[i - j];
    out[i] = acc;
  }
}

double sum(const double* x, std::ptrdiff_t n) {
  const std::ptrdiff_t nblk = (n + kSumBlock - 1) / kSumBlock;
  std::vector<double> partial(static_cast<size_t>(nblk));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nblk; ++b) {
    const std::ptrdiff_t lo = b * kSumBlock;
    const std::ptrdiff_t hi = std::min(n, lo + kSumBlock);
    double acc = 0.0;
    for (std::ptrdiff_t i = lo; i < hi; ++i) acc += x[i];
    partial[static_cast<size_t>(b)] = acc;
  }
  double total = 0.0;
  for (std::ptrdiff_t b = 0; b < nblk; ++b) total += partial[static_cast<size_t>(b)];
  return total;
}

void axpy(double alpha, const double* x, double* y, std::ptrdiff_t n) {
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace par

void gemm(const double* a, const double* b, double* c,
          std::ptrdiff_t m, std::ptrdiff_t k, std::ptrdiff_t n, bool accumulate) {
  if (detail::use_parallel(m * k * n)) {
    par::gemm(a, b, c, m, k, n, accumulate);
  } else {
    serial::gemm(a, b, c, m, k, n, accumulate);
  }
}

void conv1d(const double* x, std::ptrdiff_t nx, const double* h, std::ptrdiff_t nh,
            double* out) {
  if (detail::use_parallel((nx + nh) * std::min(nx, nh))) {
    par::conv1d(x, nx, h, nh, out);
  } else {
    serial::conv1d(x, nx, h, nh, out);
  }
}

double sum(const double* x, std::ptrdiff_t n) {
  if (detail::use_parallel(n)) return par::sum(x, n);
  return serial::sum(x, n);
}

void axpy(double alpha, const double* x, double* y, std::ptrdiff_t n) {
  if (detail::use_parallel(n)) {
    par::axpy(alpha, x, y, n);
  } else {
    serial::axpy(alpha, x, y, n);
  }
}

}  // namespace mcasr::kern
