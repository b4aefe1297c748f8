#pragma once

#include <cstddef>
#include <span>

// Data-parallel arithmetic kernels shared by the Krylov solvers, the
// multigrid smoothers and the assembly paths. Each kernel has a scalar
// reference implementation and an AVX2 variant; the dispatched entry
// points pick the widest lane width the executing CPU supports. The two
// paths are equivalence-tested against each other (dot/spmv reduce in a
// fixed lane order, so results are deterministic per machine but may
// differ from the scalar path in the last ulps).

namespace rofpd::kernels {

enum class Isa { scalar, avx2 };

// Instruction set the dispatched kernels currently use.
Isa active_isa();

// Pin the dispatched kernels to the scalar reference path.
void force_scalar(bool on);

double dot(std::span<const double> x, std::span<const double> y);
double nrm2(std::span<const double> x);

// y += a*x
void axpy(double a, std::span<const double> x, std::span<double> y);
// y = x + b*y
void xpby(std::span<const double> x, double b, std::span<double> y);
void scal(double a, std::span<double> x);

// y = A*x for a square CSR matrix with n rows.
void csr_spmv(int n, const int* rowptr, const int* col, const double* val,
              const double* x, double* y);

// Scalar reference kernels; the oracles the SIMD variants are tested against.
namespace ref {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void xpby(std::span<const double> x, double b, std::span<double> y);
void scal(double a, std::span<double> x);
void csr_spmv(int n, const int* rowptr, const int* col, const double* val,
              const double* x, double* y);
}  // namespace ref

// AVX2 variants. Compiled in a translation unit built with -mavx2; when the
// toolchain or target lacks AVX2 they forward to the reference kernels and
// avx2_compiled() reports false.
namespace avx2 {
bool avx2_compiled();
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void xpby(std::span<const double> x, double b, std::span<double> y);
void scal(double a, std::span<double> x);
void csr_spmv(int n, const int* rowptr, const int* col, const double* val,
              const double* x, double* y);
}  // namespace avx2

}  // namespace rofpd::kernels
