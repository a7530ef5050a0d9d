#include "entdetect/kernels.hpp"

#include <cstdlib>

namespace entdetect::kernels {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
  // Four accumulators; matches the lane structure of the SIMD variants
  // closely enough that results agree to rounding.
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += x[i] * y[i];
    s1 += x[i + 1] * y[i + 1];
    s2 += x[i + 2] * y[i + 2];
    s3 += x[i + 3] * y[i + 3];
  }
  for (; i < n; ++i) s0 += x[i] * y[i];
  return (s0 + s1) + (s2 + s3);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void lincomb(double a, const double* x, double b, const double* y,
             double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

}  // namespace scalar

namespace {

struct Dispatch {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double, double*, std::size_t);
  void (*lincomb)(double, const double*, double, const double*, double*,
                  std::size_t);
  std::string name;
};

Dispatch select_backend() {
  const char* force = std::getenv("ENTDETECT_KERNELS");
  const std::string want = force ? force : "";
  if (want != "scalar") {
#if defined(ENTDETECT_HAVE_AVX2_VARIANT)
    if (want == "avx2" ||
        (want.empty() && __builtin_cpu_supports("avx2") &&
         __builtin_cpu_supports("fma"))) {
      return {avx2::dot, avx2::axpy, avx2::scale, avx2::lincomb, "avx2"};
    }
#endif
#if defined(ENTDETECT_HAVE_NEON_VARIANT)
    if (want == "neon" || want.empty()) {
      return {neon::dot, neon::axpy, neon::scale, neon::lincomb, "neon"};
    }
#endif
  }
  return {scalar::dot, scalar::axpy, scalar::scale, scalar::lincomb,
          "scalar"};
}

const Dispatch& backend() {
  static const Dispatch d = select_backend();
  return d;
}

}  // namespace

double dot(const double* x, const double* y, std::size_t n) {
  return backend().dot(x, y, n);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  backend().axpy(a, x, y, n);
}

void scale(double a, double* x, std::size_t n) { backend().scale(a, x, n); }

void lincomb(double a, const double* x, double b, const double* y, double* out,
             std::size_t n) {
  backend().lincomb(a, x, b, y, out, n);
}

const std::string& active_backend() { return backend().name; }

}  // namespace entdetect::kernels
