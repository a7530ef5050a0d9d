#pragma once

#include <optional>
#include <vector>

#include "entdetect/herm.hpp"
#include "entdetect/partition.hpp"

// First-order solvers (Frank-Wolfe, projected gradient, fast projected
// gradient) for the least-squares membership problems
//   min_{X in Delta} 1/2 ||A(X) - rho||^2                      (EXT)
//   min_{X,Y in Delta} 1/2 ||A(X) - rho||^2 + 1/2 ||T(X)-Y||^2 (PST)
// with duality-gap tracking, early witness extraction, and proximity
// certificates.

namespace entdetect {

enum class FomMethod { FwOpenLoop, FwLineSearch, Pg, Fpg };
enum class StepsizeMode { FixedSafe, Backtracking };

struct FomConfig {
  FomMethod method = FomMethod::Fpg;
  int max_iters = 1000;
  double gap_tol = 1e-7;
  // Detect when the dual expression is < -detect_tol; 0 is the strict sign
  // test, +infinity disables detection (used by the rate-envelope tests).
  double detect_tol = 0.0;
  StepsizeMode stepsize_mode = StepsizeMode::FixedSafe;
};

enum class SolveStatus { Witness, Proximity, IterationCap };

struct FomOutcome {
  SolveStatus status = SolveStatus::IterationCap;
  // Witness outcomes: W normalized so -I.W = 1 unless witness_normalized is
  // false (the raw witness could not be normalized).
  HermMat w;
  std::optional<HermMat> z;  // PST companion dual, PSD
  bool witness_normalized = true;
  double margin = 0.0;     // rho.W
  double proximity = 0.0;  // ||A(X)-rho|| (EXT) / combined residual (PST)
  int iterations = 0;
  double wall_seconds = 0.0;
  std::vector<double> gap_history;  // recorded every iteration
  double final_gap = 0.0;
  // IPM extras (unused by the FOMs).
  double final_mu = 0.0;
  double max_primal_resid = 0.0;
  double max_dual_resid = 0.0;
};

// Duality gap of the EXT least-squares pair at (X, u).
double gap_ext(const PartitionOp& op, const HermMat& x, const HermMat& u,
               const HermMat& rho);

// Duality gap of the PST constrained least-squares pair at (X, Y, u, z).
double gap_pst(const PartitionOp& op, const HermMat& x, const HermMat& y,
               const HermMat& u, const HermMat& z, const HermMat& rho);

// Frank-Wolfe stepsize: open-loop 2/(t+2) or exact line search for the
// quadratic objective, clamped to [0,1].
double fw_stepsize_openloop(int t);
double fw_stepsize_linesearch(const HermMat& residual,
                              const HermMat& a_dir_image);

// Safe fixed stepsize tau = 1/L for the projected gradient iterations:
// L = d_k/d_b for EXT, (d_k + 2 d_b)/d_b for PST.
double pg_stepsize_fixed(const PartitionOp& op, bool pst);

FomOutcome solve_ext_fom(const DensityMat& rho, int k, const FomConfig& cfg);
FomOutcome solve_pst_fom(const DensityMat& rho, int k, const FomConfig& cfg);

}  // namespace entdetect
