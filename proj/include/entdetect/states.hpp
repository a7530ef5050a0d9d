#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "entdetect/herm.hpp"

#include <nlohmann/json_fwd.hpp>

// Benchmark bipartite state families, the lopsided transform rho_gamma, and
// the reduced-state preconditioning antidote.

namespace entdetect {

// lambda |psi><psi| + (1-lambda)/(d^2-1) (I - |psi><psi|), psi maximally
// entangled.  lambda in [0,1], d >= 2.
DensityMat isotropic(int d, double lambda);

// lambda/(d(d+1)) (I + SWAP) + (1-lambda)/(d(d-1)) (I - SWAP).
DensityMat werner(int d, double lambda);

HermMat swap_operator(int d);

// 3x3 PPT-entangled family, y in [0,1]; normalization 1/(8y+1).
DensityMat horodecki_3x3(double y);

// 2x4 PPT-entangled family, x in [0,1]; normalization 1/(7x+1); dims (2,4).
DensityMat horodecki_2x4(double x);

// (2/7)|psi+><psi+| + (alpha/7) sigma+ + ((5-alpha)/7) S sigma+ S with
// sigma+ the uniform mixture of |01>,|12>,|20| projectors.  alpha in [0,5/2].
DensityMat qutrit_family(double alpha);

// Tiles unextendible product basis state: (1/4)(I9 - sum |chi_i><chi_i|).
DensityMat upb_tiles();

struct CheckerboardParams {
  double a, b, c, d, m, n;
  cplx s, t;
};

// Rejection-sample parameters until |mc - bs| > 0.05 and |nd - tb| > 0.05.
CheckerboardParams sample_checkerboard(std::uint64_t seed);

DensityMat checkerboard(const CheckerboardParams& p);
DensityMat checkerboard_seeded(std::uint64_t seed);

// rho_bar = (1/d_b)(I (x) rho_b^{-1/2}) rho (I (x) rho_b^{-1/2}) with
// rho_b = Tr_a(rho).  Throws std::domain_error when rho_b is singular
// (lambda_min <= 1e-12), with a hint to reduce the rank first.
DensityMat precondition(const DensityMat& rho);

// rho_gamma = c (I (x) D_gamma) rho (I (x) D_gamma), D_gamma =
// diag(1, gamma, ..., gamma), c normalizing the trace.
DensityMat lopsided(const DensityMat& rho, double gamma);

// CLI/JSON state description: {"family": "...", "params": {...}, "seed": n?}
struct StateSpec {
  std::string family;
  std::map<std::string, double> params;
  std::optional<std::uint64_t> seed;
};

StateSpec state_spec_from_json(const nlohmann::json& j);
nlohmann::json state_spec_to_json(const StateSpec& s);

// Instantiates the family; throws std::invalid_argument on unknown family
// or out-of-domain parameters.
DensityMat make_state(const StateSpec& s);

}  // namespace entdetect
