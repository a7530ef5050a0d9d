#pragma once

#include <cstddef>
#include <string>

// Data-parallel kernels for the dense arithmetic inner loops.  Complex
// Hermitian matrices are stored as interleaved (re,im) doubles, so every
// elementwise update, Frobenius inner product, and norm reduces to a flat
// operation on a double array of length 2*n*n.
//
// Each kernel has a scalar reference implementation plus SIMD variants
// (AVX2+FMA on x86-64, NEON on aarch64).  The active variant is selected
// once at startup from CPU capabilities; set ENTDETECT_KERNELS=scalar to
// force the reference path.  SIMD and scalar variants are equivalence-tested
// against each other in tests/test_kernels.cpp.

namespace entdetect::kernels {

// sum_i x[i]*y[i]
double dot(const double* x, const double* y, std::size_t n);

// y[i] += a*x[i]
void axpy(double a, const double* x, double* y, std::size_t n);

// x[i] *= a
void scale(double a, double* x, std::size_t n);

// out[i] = a*x[i] + b*y[i]   (out may alias x or y)
void lincomb(double a, const double* x, double b, const double* y,
             double* out, std::size_t n);

// Name of the selected variant: "scalar", "avx2", or "neon".
const std::string& active_backend();

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
void lincomb(double a, const double* x, double b, const double* y,
             double* out, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define ENTDETECT_HAVE_AVX2_VARIANT 1
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
void lincomb(double a, const double* x, double b, const double* y,
             double* out, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define ENTDETECT_HAVE_NEON_VARIANT 1
namespace neon {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
void lincomb(double a, const double* x, double b, const double* y,
             double* out, std::size_t n);
}  // namespace neon
#endif

}  // namespace entdetect::kernels
