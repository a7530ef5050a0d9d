#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "entdetect/herm.hpp"
#include "entdetect/symidx.hpp"

// Compact hierarchy operators: the sparse coefficient matrices M_ij, the
// maps A and A^dag acting blockwise through M, the Gram spectrum (b_k, c_k)
// of M^dag M, and the closed-form inverse of A A^dag.  A dense P-based
// oracle is provided for small instances (tests only).

namespace entdetect {

struct MijTriple {
  std::uint32_t row;
  std::uint32_t col;
  double w;  // sqrt((l_i+1)(l_j+1))/k
};

class PartitionOp {
 public:
  PartitionOp(int da, int db, int k);

  int da() const { return da_; }
  int db() const { return db_; }
  int k() const { return k_; }
  // dim Sym = C(db+k-1, k)
  std::size_t dk() const { return dk_; }
  std::size_t dkm1() const { return dkm1_; }
  // side of Herm(H_ab)
  int nab() const { return da_ * db_; }
  // side of Herm(H_a (x) H)
  int nak() const { return da_ * int(dk_); }

  const SeqTable& table() const { return table_k_; }
  const SeqTable& table_km1() const { return table_km1_; }

  const std::vector<MijTriple>& mij(int i, int j) const {
    return mij_[std::size_t(i) * db_ + j];
  }

  double ak() const { return ak_; }
  double bk() const { return bk_; }
  double ck() const { return ck_; }
  // Multiplier lambda with A(I_a (x) I_H) = lambda * I_ab; computed
  // numerically at construction (equals dk/db).
  double lambda_identity() const { return lambda_identity_; }

  // M(U) = sum_ij M_ij U_ij; U is db x db (any complex), result dk x dk.
  HermMat apply_m(const HermMat& u) const;
  // Adjoint: V dk x dk -> db x db with entries M_ij . V.
  HermMat apply_m_adjoint(const HermMat& v) const;

  // A^dag(W) = (I_a (x) M)(W): blockwise M on the db x db blocks of W.
  HermMat apply_a_adjoint(const HermMat& w) const;
  // A(X) = Tr_{b_{2:k}}((I (x) P) X (I (x) P^dag)): blockwise M^dag.
  HermMat apply_a(const HermMat& x) const;

  // (A A^dag)^{-1} R via the rank-one-update closed form
  // M^dag M = b_k I + c_k |v><v|, v = vec(I_db).
  HermMat solve_gram(const HermMat& r) const;

 private:
  int da_, db_, k_;
  std::size_t dk_, dkm1_;
  SeqTable table_k_;
  SeqTable table_km1_;
  std::vector<std::vector<MijTriple>> mij_;  // db*db lists of dkm1 triples
  double ak_ = 0, bk_ = 0, ck_ = 0;
  double lambda_identity_ = 0;
};

// Exact integer sums k^2*a_k, k^2*b_k, k^2*c_k from the defining
// summations over [d]^{(k-1)^} and [d]^{(k-2)^} (test support for the
// a_k = b_k + c_k identity).
struct GramSumsExact {
  u128 k2_ak, k2_bk, k2_ck;
};
GramSumsExact gram_sums_exact(int d, int k);

// Dense unscaled/scaled partition mappings P~ and P for tiny (d,k);
// materializes d^k x d_k matrices.  Gated to d^k <= 4096.
class DenseOracle {
 public:
  DenseOracle(int da, int db, int k);

  // Dense M(U) = Diag(p~)^{-1/2} P~^dag (U (x) I) P~ Diag(p~)^{-1/2}.
  HermMat apply_m(const HermMat& u) const;
  // Dense A^dag(W) = (I_a (x) P^dag)(W (x) I_{b_{2:k}})(I_a (x) P).
  HermMat apply_a_adjoint(const HermMat& w) const;
  // Dense A(X) = Tr_{b_{2:k}}((I_a (x) P) X (I_a (x) P^dag)).
  HermMat apply_a(const HermMat& x) const;
  // Dense solve of (A A^dag) Y = R (via the dense Gram matrix).
  HermMat solve_gram(const HermMat& r) const;

  // max |P^dag P - I|
  double isometry_defect() const;

 private:
  int da_, db_, k_;
  std::size_t dk_, dbk_;  // d_k and d^k
  std::vector<double> ptilde_;  // d^k x d_k, 0/1, column-major
  std::vector<double> p_;       // scaled columns
};

}  // namespace entdetect
