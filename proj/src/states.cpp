#include "entdetect/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace entdetect {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

HermMat outer(const std::vector<cplx>& v) {
  const int n = int(v.size());
  HermMat m(n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) m(r, c) = v[r] * std::conj(v[c]);
  }
  return m;
}

void normalize(std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& x : v) s += std::norm(x);
  s = std::sqrt(s);
  for (cplx& x : v) x /= s;
}

}  // namespace

DensityMat isotropic(int d, double lambda) {
  require(d >= 2, "isotropic: d >= 2");
  require(lambda >= 0.0 && lambda <= 1.0, "isotropic: lambda in [0,1]");
  std::vector<cplx> psi(std::size_t(d) * d, 0.0);
  for (int i = 0; i < d; ++i) psi[std::size_t(i) * d + i] = 1.0 / std::sqrt(double(d));
  HermMat proj = outer(psi);
  const double rest = (1.0 - lambda) / (d * d - 1.0);
  HermMat rho = HermMat::identity(d * d);
  scale_inplace(rho, rest);
  axpy_inplace(lambda - rest, proj, rho);
  return {std::move(rho), d, d};
}

HermMat swap_operator(int d) {
  HermMat w(d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      w(i * d + j, j * d + i) = 1.0;
    }
  }
  return w;
}

DensityMat werner(int d, double lambda) {
  require(d >= 2, "werner: d >= 2");
  require(lambda >= 0.0 && lambda <= 1.0, "werner: lambda in [0,1]");
  const HermMat sw = swap_operator(d);
  const HermMat id = HermMat::identity(d * d);
  const double cp = lambda / (d * (d + 1.0));
  const double cm = (1.0 - lambda) / (d * (d - 1.0));
  HermMat rho = lincomb(cp + cm, id, cp - cm, sw);
  return {std::move(rho), d, d};
}

DensityMat horodecki_3x3(double y) {
  require(y >= 0.0 && y <= 1.0, "horodecki_3x3: y in [0,1]");
  HermMat rho(9);
  auto blk = [&rho](int a, int b) {
    return std::pair<int, int>{3 * a, 3 * b};
  };
  // Diagonal blocks A = diag(y,y,y) at (0,0) and (1,1).
  for (int abl : {0, 1}) {
    auto [ro, co] = blk(abl, abl);
    for (int i = 0; i < 3; ++i) rho(ro + i, co + i) = y;
  }
  // B at (0,1): single y in its (0,1) slot; C at (0,2): y at (0,2);
  // D at (1,2): y at (1,2).
  rho(0, 3 + 1) = y;
  rho(0, 6 + 2) = y;
  rho(3 + 1, 6 + 2) = y;
  // E at (2,2).
  const double rt = std::sqrt(1.0 - y * y);
  rho(6 + 0, 6 + 0) = (1.0 + y) / 2.0;
  rho(6 + 1, 6 + 1) = y;
  rho(6 + 2, 6 + 2) = (1.0 + y) / 2.0;
  rho(6 + 0, 6 + 2) = rt / 2.0;
  // Mirror the upper triangle.
  for (int c = 0; c < 9; ++c) {
    for (int r = 0; r < c; ++r) rho(c, r) = std::conj(rho(r, c));
  }
  scale_inplace(rho, 1.0 / (8.0 * y + 1.0));
  return {std::move(rho), 3, 3};
}

DensityMat horodecki_2x4(double x) {
  require(x >= 0.0 && x <= 1.0, "horodecki_2x4: x in [0,1]");
  HermMat rho(8);
  for (int i : {0, 1, 2, 3, 5, 6}) rho(i, i) = x;
  rho(4, 4) = (1.0 + x) / 2.0;
  rho(7, 7) = (1.0 + x) / 2.0;
  rho(0, 5) = x;
  rho(1, 6) = x;
  rho(2, 7) = x;
  rho(4, 7) = std::sqrt(1.0 - x * x) / 2.0;
  for (int c = 0; c < 8; ++c) {
    for (int r = 0; r < c; ++r) rho(c, r) = std::conj(rho(r, c));
  }
  scale_inplace(rho, 1.0 / (7.0 * x + 1.0));
  return {std::move(rho), 2, 4};
}

DensityMat qutrit_family(double alpha) {
  require(alpha >= 0.0 && alpha <= 2.5, "qutrit_family: alpha in [0, 5/2]");
  std::vector<cplx> psi(9, 0.0);
  for (int i = 0; i < 3; ++i) psi[std::size_t(i) * 3 + i] = 1.0 / std::sqrt(3.0);
  HermMat rho = outer(psi);
  scale_inplace(rho, 2.0 / 7.0);
  // sigma+ as the uniform mixture of |01>,|12>,|20> projectors; the swapped
  // copy S sigma+ S mixes |10>,|21>,|02>.
  const int sp[3] = {0 * 3 + 1, 1 * 3 + 2, 2 * 3 + 0};
  const int sm[3] = {1 * 3 + 0, 2 * 3 + 1, 0 * 3 + 2};
  for (int t = 0; t < 3; ++t) {
    rho(sp[t], sp[t]) += alpha / 21.0;
    rho(sm[t], sm[t]) += (5.0 - alpha) / 21.0;
  }
  return {std::move(rho), 3, 3};
}

DensityMat upb_tiles() {
  auto ket = [](int i, int j) {
    std::vector<cplx> v(9, 0.0);
    v[std::size_t(i) * 3 + j] = 1.0;
    return v;
  };
  auto axpy_vec = [](std::vector<cplx>& y, cplx a, const std::vector<cplx>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  };
  std::vector<std::vector<cplx>> chi(5, std::vector<cplx>(9, 0.0));
  // |0>(|0>-|1>), (|0>-|1>)|2>, |2>(|1>-|2>), (|1>-|2>)|0>,
  // (|0>+|1>+|2>)(|0>+|1>+|2>) -- each normalized.
  axpy_vec(chi[0], 1.0, ket(0, 0));
  axpy_vec(chi[0], -1.0, ket(0, 1));
  axpy_vec(chi[1], 1.0, ket(0, 2));
  axpy_vec(chi[1], -1.0, ket(1, 2));
  axpy_vec(chi[2], 1.0, ket(2, 1));
  axpy_vec(chi[2], -1.0, ket(2, 2));
  axpy_vec(chi[3], 1.0, ket(1, 0));
  axpy_vec(chi[3], -1.0, ket(2, 0));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) axpy_vec(chi[4], 1.0, ket(i, j));
  }
  HermMat rho = HermMat::identity(9);
  for (auto& v : chi) {
    normalize(v);
    axpy_inplace(-1.0, outer(v), rho);
  }
  scale_inplace(rho, 0.25);
  return {std::move(rho), 3, 3};
}

CheckerboardParams sample_checkerboard(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> mag(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    CheckerboardParams p;
    p.a = unit(rng);
    p.b = unit(rng);
    p.c = unit(rng);
    p.d = unit(rng);
    p.m = unit(rng);
    p.n = unit(rng);
    const double ms = mag(rng), ps = phase(rng);
    const double mt = mag(rng), pt = phase(rng);
    p.s = std::polar(ms, ps);
    p.t = std::polar(mt, pt);
    if (std::abs(p.c) < 1e-6 || std::abs(p.d) < 1e-6 || std::abs(p.s) < 1e-6 ||
        std::abs(p.t) < 1e-6) {
      continue;
    }
    // Entanglement margins: the range criterion fails only when mc = bs or
    // nd = tb.
    if (std::abs(p.m * p.c - p.b * p.s) > 0.05 &&
        std::abs(p.n * p.d - p.t * p.b) > 0.05) {
      return p;
    }
  }
  throw std::runtime_error("sample_checkerboard: rejection sampling failed");
}

DensityMat checkerboard(const CheckerboardParams& p) {
  auto at = [](std::vector<cplx>& v, int i, int j, cplx x) {
    v[std::size_t(i) * 3 + j] = x;
  };
  std::vector<std::vector<cplx>> vs(4, std::vector<cplx>(9, 0.0));
  at(vs[0], 0, 0, p.m);
  at(vs[0], 1, 1, p.n);
  at(vs[0], 2, 0, p.s);
  at(vs[1], 0, 1, p.b);
  at(vs[1], 1, 0, p.a);
  at(vs[1], 2, 1, p.c);
  at(vs[2], 0, 0, p.n);
  at(vs[2], 1, 1, -p.m);
  at(vs[2], 0, 2, p.t);
  at(vs[3], 0, 1, -p.a);
  at(vs[3], 1, 0, p.b);
  at(vs[3], 1, 2, p.d);
  double nsum = 0.0;
  for (const auto& v : vs) {
    for (const cplx& x : v) nsum += std::norm(x);
  }
  if (nsum <= 0.0) throw std::invalid_argument("checkerboard: all vectors zero");
  HermMat rho(9);
  for (const auto& v : vs) axpy_inplace(1.0, outer(v), rho);
  scale_inplace(rho, 1.0 / nsum);
  return {std::move(rho), 3, 3};
}

DensityMat checkerboard_seeded(std::uint64_t seed) {
  return checkerboard(sample_checkerboard(seed));
}

DensityMat precondition(const DensityMat& rho) {
  const int da = rho.da;
  const int db = rho.db;
  const HermMat rb = partial_trace_a(rho.mat, da, db);
  const EigDecomp e = eig_herm(rb);
  if (e.w.front() <= 1e-12) {
    throw std::domain_error(
        "precondition: Tr_a(rho) is singular; restrict to its range "
        "(rank reduction) before preconditioning");
  }
  const HermMat rbinvsqrt =
      spectral_fn(e, [](double w) { return 1.0 / std::sqrt(w); });
  HermMat f = kron(HermMat::identity(da), rbinvsqrt);
  HermMat out = mat_mul(mat_mul(f, rho.mat), f);
  scale_inplace(out, 1.0 / db);
  hermitize(out);
  return {std::move(out), da, db};
}

DensityMat lopsided(const DensityMat& rho, double gamma) {
  require(gamma > 0.0, "lopsided: gamma > 0");
  const int da = rho.da;
  const int db = rho.db;
  HermMat out = rho.mat;
  auto dval = [&](int bi) { return bi == 0 ? 1.0 : gamma; };
  for (int c = 0; c < out.n(); ++c) {
    for (int r = 0; r < out.n(); ++r) {
      out(r, c) *= dval(r % db) * dval(c % db);
    }
  }
  scale_inplace(out, 1.0 / trace_re(out));
  return {std::move(out), da, db};
}

StateSpec state_spec_from_json(const nlohmann::json& j) {
  StateSpec s;
  s.family = j.at("family").get<std::string>();
  if (j.contains("params")) {
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it) {
      s.params[it.key()] = it.value().get<double>();
    }
  }
  if (j.contains("seed") && !j.at("seed").is_null()) {
    s.seed = j.at("seed").get<std::uint64_t>();
  }
  return s;
}

nlohmann::json state_spec_to_json(const StateSpec& s) {
  nlohmann::json j;
  j["family"] = s.family;
  j["params"] = nlohmann::json::object();
  for (const auto& [k, v] : s.params) j["params"][k] = v;
  if (s.seed) j["seed"] = *s.seed;
  return j;
}

DensityMat make_state(const StateSpec& s) {
  auto param = [&s](const char* name, std::optional<double> fallback =
                                          std::nullopt) {
    auto it = s.params.find(name);
    if (it != s.params.end()) return it->second;
    if (fallback) return *fallback;
    throw std::invalid_argument(std::string("state parameter missing: ") +
                                name);
  };
  if (s.family == "isotropic") {
    return isotropic(int(param("d", 3.0)), param("lambda"));
  }
  if (s.family == "werner") {
    return werner(int(param("d", 3.0)), param("lambda"));
  }
  if (s.family == "horodecki3x3") return horodecki_3x3(param("y"));
  if (s.family == "horodecki2x4") return horodecki_2x4(param("x"));
  if (s.family == "qutrit") return qutrit_family(param("alpha"));
  if (s.family == "upb") return upb_tiles();
  if (s.family == "checkerboard") {
    if (!s.seed) {
      throw std::invalid_argument("checkerboard state requires a seed");
    }
    return checkerboard_seeded(*s.seed);
  }
  throw std::invalid_argument("unknown state family: " + s.family);
}

}  // namespace entdetect
