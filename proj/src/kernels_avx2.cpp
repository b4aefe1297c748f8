#include "rofpd/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace rofpd::kernels::avx2 {

#if defined(__AVX2__)

bool avx2_compiled() { return true; }

namespace {

// Fixed-order lane reduction: ((l0+l1)+(l2+l3)), deterministic per machine.
inline double hsum(__m256d v) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, v);
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  const double* px = x.data();
  const double* py = y.data();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(px + i),
                                             _mm256_loadu_pd(py + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(px + i + 4),
                                             _mm256_loadu_pd(py + i + 4)));
  }
  if (i + 4 <= n) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(px + i),
                                             _mm256_loadu_pd(py + i)));
    i += 4;
  }
  double s = hsum(acc0) + hsum(acc1);
  for (; i < n; ++i) s += px[i] * py[i];
  return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const double* px = x.data();
  double* py = y.data();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_add_pd(_mm256_loadu_pd(py + i),
                              _mm256_mul_pd(va, _mm256_loadu_pd(px + i)));
    _mm256_storeu_pd(py + i, r);
  }
  for (; i < n; ++i) py[i] += a * px[i];
}

void xpby(std::span<const double> x, double b, std::span<double> y) {
  const std::size_t n = x.size();
  const double* px = x.data();
  double* py = y.data();
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_add_pd(_mm256_loadu_pd(px + i),
                              _mm256_mul_pd(vb, _mm256_loadu_pd(py + i)));
    _mm256_storeu_pd(py + i, r);
  }
  for (; i < n; ++i) py[i] = px[i] + b * py[i];
}

void scal(double a, std::span<double> x) {
  const std::size_t n = x.size();
  double* px = x.data();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(px + i, _mm256_mul_pd(va, _mm256_loadu_pd(px + i)));
  for (; i < n; ++i) px[i] *= a;
}

void csr_spmv(int n, const int* rowptr, const int* col, const double* val,
              const double* x, double* y) {
  for (int i = 0; i < n; ++i) {
    const int begin = rowptr[i];
    const int end = rowptr[i + 1];
    int j = begin;
    __m256d acc = _mm256_setzero_pd();
    for (; j + 4 <= end; j += 4) {
      __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(col + j));
      __m256d xv = _mm256_i32gather_pd(x, idx, 8);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(val + j), xv));
    }
    double s = hsum(acc);
    for (; j < end; ++j) s += val[j] * x[col[j]];
    y[i] = s;
  }
}

#else  // !__AVX2__: keep the symbols, report unavailability.

bool avx2_compiled() { return false; }

double dot(std::span<const double> x, std::span<const double> y) {
  return ref::dot(x, y);
}
void axpy(double a, std::span<const double> x, std::span<double> y) {
  ref::axpy(a, x, y);
}
void xpby(std::span<const double> x, double b, std::span<double> y) {
  ref::xpby(x, b, y);
}
void scal(double a, std::span<double> x) { ref::scal(a, x); }
void csr_spmv(int n, const int* rowptr, const int* col, const double* val,
              const double* x, double* y) {
  ref::csr_spmv(n, rowptr, col, val, x, y);
}

#endif

}  // namespace rofpd::kernels::avx2
