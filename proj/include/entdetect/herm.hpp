#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "entdetect/kernels.hpp"

#include <nlohmann/json_fwd.hpp>

// Dense complex Hermitian linear algebra: trace inner products, norms,
// eigendecomposition, spectraplex projection, the linear-minimization
// oracle, partial transpose on the H_a (x) H factorization, and the partial
// trace over the a factor.  Eigendecomposition and dense products are backed
// by LAPACK (zheevd) / BLAS (zgemm); elementwise arithmetic goes through the
// dispatched kernels.

namespace entdetect {

using cplx = std::complex<double>;

// Square complex matrix, column-major.  Instances used as Hermitian carriers
// are kept within the drift bound max|A - A^dag| <= 1e-12*(1+max|A|) by
// re-hermitization after arithmetic-heavy updates.
class HermMat {
 public:
  HermMat() = default;
  explicit HermMat(int n) : n_(n), a_(std::size_t(n) * n) {}

  static HermMat identity(int n);

  int n() const { return n_; }
  std::size_t count() const { return a_.size(); }

  cplx& operator()(int r, int c) { return a_[std::size_t(c) * n_ + r]; }
  const cplx& operator()(int r, int c) const {
    return a_[std::size_t(c) * n_ + r];
  }

  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

  // Interleaved (re,im) view for the flat kernels; length 2*n*n.
  double* flat() { return reinterpret_cast<double*>(a_.data()); }
  const double* flat() const {
    return reinterpret_cast<const double*>(a_.data());
  }
  std::size_t flat_count() const { return 2 * a_.size(); }

  void set_zero();

 private:
  int n_ = 0;
  std::vector<cplx> a_;
};

// Bipartite density-operator carrier: trace 1 within 1e-10 and
// lambda_min >= -1e-10.
struct DensityMat {
  HermMat mat;
  int da = 0;
  int db = 0;
};

struct EigDecomp {
  std::vector<double> w;  // ascending
  HermMat v;              // orthonormal columns
};

// ---- elementwise arithmetic (kernel-backed) ----

// Re Tr(A B) for Hermitian A, B of equal size.
double inner(const HermMat& a, const HermMat& b);
// Frobenius norm and its square.
double norm2(const HermMat& a);
double fnorm(const HermMat& a);

double trace_re(const HermMat& a);
cplx trace(const HermMat& a);

void scale_inplace(HermMat& a, double s);
// y += s*x
void axpy_inplace(double s, const HermMat& x, HermMat& y);
// out = s*x + t*y
HermMat lincomb(double s, const HermMat& x, double t, const HermMat& y);
HermMat add(const HermMat& a, const HermMat& b);
HermMat sub(const HermMat& a, const HermMat& b);
// a += s*I
void add_identity(HermMat& a, double s);

// a = (a + a^dag)/2
void hermitize(HermMat& a);
// max |a - a^dag| entrywise
double herm_drift(const HermMat& a);

// ---- dense products / eigendecomposition (BLAS/LAPACK-backed) ----

// c = a*b (general complex square product)
HermMat mat_mul(const HermMat& a, const HermMat& b);
// c = a*b^dag
HermMat mat_mul_nh(const HermMat& a, const HermMat& b);

// Full Hermitian eigendecomposition, eigenvalues ascending.  Throws
// std::runtime_error on LAPACK failure.
EigDecomp eig_herm(const HermMat& a);

// V diag(w) V^dag
HermMat from_eig(const EigDecomp& e, const std::vector<double>& w);
// Spectral function: V diag(f(w)) V^dag
template <class F>
HermMat spectral_fn(const EigDecomp& e, F&& f) {
  std::vector<double> w(e.w.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = f(e.w[i]);
  return from_eig(e, w);
}

// ---- spec'd operations ----

// Euclidean projection of v onto the unit simplex (sort-and-threshold).
std::vector<double> project_simplex(const std::vector<double>& v);

// Nearest PSD trace-one matrix in Frobenius norm.
HermMat project_spectraplex(const HermMat& x);

// argmin_{S in spectraplex} G.S = vv^dag for v a unit eigenvector of
// lambda_min(G).
HermMat lmo_spectraplex(const HermMat& g);
HermMat lmo_spectraplex(const EigDecomp& eg);

// Blockwise transpose of the (d_a x d_a) grid of n_h x n_h blocks; the
// partial transpose with respect to the second tensor factor.
HermMat partial_transpose(const HermMat& x, int da, int nh);

// Sum of the diagonal a-blocks: Tr_a, result on H_b.
HermMat partial_trace_a(const HermMat& x, int da, int db);

HermMat kron(const HermMat& a, const HermMat& b);

// ---- serialization (witness export schema) ----

// {"n": int, "re": [[...]], "im": [[...]]}
nlohmann::json herm_to_json(const HermMat& a);
// Verifies Hermiticity on load (throws std::invalid_argument otherwise).
HermMat herm_from_json(const nlohmann::json& j);

// ---- validation helpers ----

bool is_density(const DensityMat& rho, double trace_tol = 1e-10,
                double psd_tol = 1e-10);

}  // namespace entdetect
