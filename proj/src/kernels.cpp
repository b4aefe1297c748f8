#include "rofpd/kernels.hpp"

#include <atomic>
#include <cmath>

namespace rofpd::kernels {

namespace ref {

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void xpby(std::span<const double> x, double b, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + b * y[i];
}

void scal(double a, std::span<double> x) {
  for (double& v : x) v *= a;
}

void csr_spmv(int n, const int* rowptr, const int* col, const double* val,
              const double* x, double* y) {
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = rowptr[i]; j < rowptr[i + 1]; ++j) s += val[j] * x[col[j]];
    y[i] = s;
  }
}

}  // namespace ref

namespace {

std::atomic<bool> g_force_scalar{false};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool use_avx2() {
  static const bool available = avx2::avx2_compiled() && cpu_has_avx2();
  return available && !g_force_scalar.load(std::memory_order_relaxed);
}

}  // namespace

Isa active_isa() { return use_avx2() ? Isa::avx2 : Isa::scalar; }

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

double dot(std::span<const double> x, std::span<const double> y) {
  return use_avx2() ? avx2::dot(x, y) : ref::dot(x, y);
}

double nrm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

void axpy(double a, std::span<const double> x, std::span<double> y) {
  use_avx2() ? avx2::axpy(a, x, y) : ref::axpy(a, x, y);
}

void xpby(std::span<const double> x, double b, std::span<double> y) {
  use_avx2() ? avx2::xpby(x, b, y) : ref::xpby(x, b, y);
}

void scal(double a, std::span<double> x) {
  use_avx2() ? avx2::scal(a, x) : ref::scal(a, x);
}

void csr_spmv(int n, const int* rowptr, const int* col, const double* val,
              const double* x, double* y) {
  use_avx2() ? avx2::csr_spmv(n, rowptr, col, val, x, y)
             : ref::csr_spmv(n, rowptr, col, val, x, y);
}

}  // namespace rofpd::kernels
