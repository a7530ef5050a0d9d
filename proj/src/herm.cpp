#include "entdetect/herm.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <cblas.h>
#include <lapacke.h>

namespace entdetect {

HermMat HermMat::identity(int n) {
  HermMat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

void HermMat::set_zero() { std::fill(a_.begin(), a_.end(), cplx(0.0)); }

double inner(const HermMat& a, const HermMat& b) {
  if (a.n() != b.n()) throw std::invalid_argument("inner: size mismatch");
  // For Hermitian pairs Tr(AB) = sum conj(a_ij) b_ij, whose real part is the
  // flat dot product of the interleaved (re,im) arrays.
  return kernels::dot(a.flat(), b.flat(), a.flat_count());
}

double norm2(const HermMat& a) {
  return kernels::dot(a.flat(), a.flat(), a.flat_count());
}

double fnorm(const HermMat& a) { return std::sqrt(norm2(a)); }

double trace_re(const HermMat& a) {
  double s = 0.0;
  for (int i = 0; i < a.n(); ++i) s += a(i, i).real();
  return s;
}

cplx trace(const HermMat& a) {
  cplx s = 0.0;
  for (int i = 0; i < a.n(); ++i) s += a(i, i);
  return s;
}

void scale_inplace(HermMat& a, double s) {
  kernels::scale(s, a.flat(), a.flat_count());
}

void axpy_inplace(double s, const HermMat& x, HermMat& y) {
  if (x.n() != y.n()) throw std::invalid_argument("axpy: size mismatch");
  kernels::axpy(s, x.flat(), y.flat(), y.flat_count());
}

HermMat lincomb(double s, const HermMat& x, double t, const HermMat& y) {
  if (x.n() != y.n()) throw std::invalid_argument("lincomb: size mismatch");
  HermMat out(x.n());
  kernels::lincomb(s, x.flat(), t, y.flat(), out.flat(), out.flat_count());
  return out;
}

HermMat add(const HermMat& a, const HermMat& b) { return lincomb(1.0, a, 1.0, b); }
HermMat sub(const HermMat& a, const HermMat& b) { return lincomb(1.0, a, -1.0, b); }

void add_identity(HermMat& a, double s) {
  for (int i = 0; i < a.n(); ++i) a(i, i) += s;
}

void hermitize(HermMat& a) {
  const int n = a.n();
  for (int c = 0; c < n; ++c) {
    a(c, c) = cplx(a(c, c).real(), 0.0);
    for (int r = c + 1; r < n; ++r) {
      const cplx m = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = m;
      a(c, r) = std::conj(m);
    }
  }
}

double herm_drift(const HermMat& a) {
  const int n = a.n();
  double worst = 0.0;
  for (int c = 0; c < n; ++c) {
    worst = std::max(worst, std::abs(a(c, c).imag()));
    for (int r = c + 1; r < n; ++r) {
      worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
    }
  }
  return worst;
}

HermMat mat_mul(const HermMat& a, const HermMat& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mat_mul: size mismatch");
  const int n = a.n();
  HermMat c(n);
  const cplx one(1.0), zero(0.0);
  cblas_zgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, n, n, n, &one,
              a.data(), n, b.data(), n, &zero, c.data(), n);
  return c;
}

HermMat mat_mul_nh(const HermMat& a, const HermMat& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mat_mul_nh: size mismatch");
  const int n = a.n();
  HermMat c(n);
  const cplx one(1.0), zero(0.0);
  cblas_zgemm(CblasColMajor, CblasNoTrans, CblasConjTrans, n, n, n, &one,
              a.data(), n, b.data(), n, &zero, c.data(), n);
  return c;
}

EigDecomp eig_herm(const HermMat& a) {
  EigDecomp e;
  e.v = a;
  hermitize(e.v);
  e.w.assign(a.n(), 0.0);
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', a.n(), e.v.data(), a.n(),
                     e.w.data());
  if (info != 0) {
    throw std::runtime_error("zheevd failed with info=" + std::to_string(info));
  }
  return e;
}

HermMat from_eig(const EigDecomp& e, const std::vector<double>& w) {
  const int n = e.v.n();
  // V diag(w) V^dag, skipping zero weights.
  HermMat vw(n);
  for (int c = 0; c < n; ++c) {
    if (w[c] == 0.0) continue;
    for (int r = 0; r < n; ++r) vw(r, c) = e.v(r, c) * w[c];
  }
  HermMat out = mat_mul_nh(vw, e.v);
  hermitize(out);
  return out;
}

std::vector<double> project_simplex(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<double> u(v);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    cum += u[j];
    const double cand = (1.0 - cum) / double(j + 1);
    if (u[j] + cand > 0.0) theta = cand;
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::max(v[i] + theta, 0.0);
  return out;
}

HermMat project_spectraplex(const HermMat& x) {
  const EigDecomp e = eig_herm(x);
  const std::vector<double> w = project_simplex(e.w);
  return from_eig(e, w);
}

HermMat lmo_spectraplex(const EigDecomp& eg) {
  const int n = eg.v.n();
  HermMat s(n);
  // Rank-one projector onto the smallest-eigenvalue eigenvector (column 0,
  // eigenvalues are ascending).
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      s(r, c) = eg.v(r, 0) * std::conj(eg.v(c, 0));
    }
  }
  return s;
}

HermMat lmo_spectraplex(const HermMat& g) { return lmo_spectraplex(eig_herm(g)); }

HermMat partial_transpose(const HermMat& x, int da, int nh) {
  if (x.n() != da * nh) {
    throw std::invalid_argument("partial_transpose: size not divisible");
  }
  HermMat out(x.n());
  for (int alpha = 0; alpha < da; ++alpha) {
    for (int beta = 0; beta < da; ++beta) {
      const int ro = alpha * nh;
      const int co = beta * nh;
      for (int c = 0; c < nh; ++c) {
        for (int r = 0; r < nh; ++r) {
          out(ro + r, co + c) = x(ro + c, co + r);
        }
      }
    }
  }
  return out;
}

HermMat partial_trace_a(const HermMat& x, int da, int db) {
  if (x.n() != da * db) {
    throw std::invalid_argument("partial_trace_a: dimension mismatch");
  }
  HermMat out(db);
  for (int alpha = 0; alpha < da; ++alpha) {
    const int o = alpha * db;
    for (int c = 0; c < db; ++c) {
      for (int r = 0; r < db; ++r) {
        out(r, c) += x(o + r, o + c);
      }
    }
  }
  return out;
}

HermMat kron(const HermMat& a, const HermMat& b) {
  const int na = a.n();
  const int nb = b.n();
  HermMat out(na * nb);
  for (int ca = 0; ca < na; ++ca) {
    for (int ra = 0; ra < na; ++ra) {
      const cplx v = a(ra, ca);
      if (v == cplx(0.0)) continue;
      for (int cb = 0; cb < nb; ++cb) {
        for (int rb = 0; rb < nb; ++rb) {
          out(ra * nb + rb, ca * nb + cb) = v * b(rb, cb);
        }
      }
    }
  }
  return out;
}

nlohmann::json herm_to_json(const HermMat& a) {
  const int n = a.n();
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int r = 0; r < n; ++r) {
    nlohmann::json rr = nlohmann::json::array();
    nlohmann::json ri = nlohmann::json::array();
    for (int c = 0; c < n; ++c) {
      rr.push_back(a(r, c).real());
      ri.push_back(a(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return nlohmann::json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

HermMat herm_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  if (n <= 0) throw std::invalid_argument("matrix json: bad size");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (int(re.size()) != n || int(im.size()) != n) {
    throw std::invalid_argument("matrix json: row count mismatch");
  }
  HermMat a(n);
  for (int r = 0; r < n; ++r) {
    const auto& rr = re[r];
    const auto& ri = im[r];
    if (int(rr.size()) != n || int(ri.size()) != n) {
      throw std::invalid_argument("matrix json: column count mismatch");
    }
    for (int c = 0; c < n; ++c) {
      a(r, c) = cplx(rr[c].get<double>(), ri[c].get<double>());
    }
  }
  double scale = 0.0;
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) scale = std::max(scale, std::abs(a(r, c)));
  }
  if (herm_drift(a) > 1e-12 * (1.0 + scale)) {
    throw std::invalid_argument("matrix json: not Hermitian");
  }
  return a;
}

bool is_density(const DensityMat& rho, double trace_tol, double psd_tol) {
  if (rho.mat.n() != rho.da * rho.db) return false;
  if (std::abs(trace_re(rho.mat) - 1.0) > trace_tol) return false;
  const EigDecomp e = eig_herm(rho.mat);
  return e.w.front() >= -psd_tol;
}

}  // namespace entdetect
