#include "entdetect/partition.hpp"

#include <cmath>
#include <stdexcept>

namespace entdetect {

PartitionOp::PartitionOp(int da, int db, int k)
    : da_(da),
      db_(db),
      k_(k),
      dk_(dim_sym(db, k)),
      dkm1_(dim_sym(db, k - 1)),
      table_k_(db, k),
      table_km1_(db, k - 1) {
  if (da < 1 || db < 1 || k < 1) {
    throw std::invalid_argument("PartitionOp: need da,db >= 1 and k >= 1");
  }

  // One triple per l in [d]^{(k-1)^} and (i,j): row = rank(l+i),
  // col = rank(l+j), weight sqrt((l_i+1)(l_j+1))/k.
  mij_.assign(std::size_t(db) * db, {});
  for (auto& v : mij_) v.reserve(dkm1_);
  std::vector<std::vector<std::size_t>> rank_plus(
      dkm1_, std::vector<std::size_t>(db));
  for (std::size_t r = 0; r < dkm1_; ++r) {
    for (int s = 0; s < db; ++s) {
      rank_plus[r][s] = rank_with_insert(table_km1_, r, s);
    }
  }
  for (int i = 0; i < db; ++i) {
    for (int j = 0; j < db; ++j) {
      auto& list = mij_[std::size_t(i) * db + j];
      for (std::size_t r = 0; r < dkm1_; ++r) {
        const auto& l = table_km1_.counts(r);
        const double w = std::sqrt(double(l[i] + 1) * double(l[j] + 1)) / k;
        list.push_back({std::uint32_t(rank_plus[r][i]),
                        std::uint32_t(rank_plus[r][j]), w});
      }
    }
  }

  // Gram spectrum by direct summation of the defining sums.
  const double k2 = double(k) * k;
  if (db >= 2) {
    double a = 0, b = 0;
    for (std::size_t r = 0; r < dkm1_; ++r) {
      const auto& l = table_km1_.counts(r);
      a += double(l[0] + 1) * (l[0] + 1);
      b += double(l[0] + 1) * (l[1] + 1);
    }
    ak_ = a / k2;
    bk_ = b / k2;
    if (k >= 2) {
      double c = 0;
      const SeqTable t2(db, k - 2);
      for (std::size_t r = 0; r < t2.size(); ++r) {
        const auto& l = t2.counts(r);
        c += double(l[0] + 1) * (l[1] + 1);
      }
      ck_ = c / k2;
    } else {
      ck_ = 0.0;
    }
  } else {
    // db == 1: M^dag M is the 1x1 identity; split (b,c) = (1,0).
    ak_ = bk_ = 1.0;
    ck_ = 0.0;
  }

  // Multiplier of the identity direction, computed rather than assumed:
  // A(I) = lambda I_ab with lambda = dk/db.
  {
    const HermMat big_id = HermMat::identity(nak());
    const HermMat img = apply_a(big_id);
    const double lam = trace_re(img) / nab();
    double offdiag = 0.0;
    for (int c = 0; c < img.n(); ++c) {
      for (int r = 0; r < img.n(); ++r) {
        if (r == c) continue;
        offdiag = std::max(offdiag, std::abs(img(r, c)));
      }
    }
    double diagdev = 0.0;
    for (int i = 0; i < img.n(); ++i) {
      diagdev = std::max(diagdev, std::abs(img(i, i) - lam));
    }
    if (offdiag > 1e-10 * (1.0 + lam) || diagdev > 1e-10 * (1.0 + lam)) {
      throw std::runtime_error("PartitionOp: A(I) is not a multiple of I");
    }
    lambda_identity_ = lam;
  }
}

HermMat PartitionOp::apply_m(const HermMat& u) const {
  if (u.n() != db_) throw std::invalid_argument("apply_m: size mismatch");
  HermMat out(int(dk_));
  for (int i = 0; i < db_; ++i) {
    for (int j = 0; j < db_; ++j) {
      const cplx uij = u(i, j);
      if (uij == cplx(0.0)) continue;
      for (const MijTriple& t : mij(i, j)) {
        out(int(t.row), int(t.col)) += t.w * uij;
      }
    }
  }
  return out;
}

HermMat PartitionOp::apply_m_adjoint(const HermMat& v) const {
  if (v.n() != int(dk_)) {
    throw std::invalid_argument("apply_m_adjoint: size mismatch");
  }
  HermMat out(db_);
  for (int i = 0; i < db_; ++i) {
    for (int j = 0; j < db_; ++j) {
      cplx s = 0.0;
      for (const MijTriple& t : mij(i, j)) {
        s += t.w * v(int(t.row), int(t.col));
      }
      out(i, j) = s;
    }
  }
  return out;
}

HermMat PartitionOp::apply_a_adjoint(const HermMat& w) const {
  if (w.n() != nab()) {
    throw std::invalid_argument("apply_a_adjoint: size mismatch");
  }
  const int ndk = int(dk_);
  HermMat out(nak());
  for (int alpha = 0; alpha < da_; ++alpha) {
    for (int beta = 0; beta < da_; ++beta) {
      const int wro = alpha * db_;
      const int wco = beta * db_;
      const int oro = alpha * ndk;
      const int oco = beta * ndk;
      for (int i = 0; i < db_; ++i) {
        for (int j = 0; j < db_; ++j) {
          const cplx uij = w(wro + i, wco + j);
          if (uij == cplx(0.0)) continue;
          for (const MijTriple& t : mij(i, j)) {
            out(oro + int(t.row), oco + int(t.col)) += t.w * uij;
          }
        }
      }
    }
  }
  return out;
}

HermMat PartitionOp::apply_a(const HermMat& x) const {
  if (x.n() != nak()) throw std::invalid_argument("apply_a: size mismatch");
  const int ndk = int(dk_);
  HermMat out(nab());
  for (int alpha = 0; alpha < da_; ++alpha) {
    for (int beta = 0; beta < da_; ++beta) {
      const int xro = alpha * ndk;
      const int xco = beta * ndk;
      const int oro = alpha * db_;
      const int oco = beta * db_;
      for (int i = 0; i < db_; ++i) {
        for (int j = 0; j < db_; ++j) {
          cplx s = 0.0;
          for (const MijTriple& t : mij(i, j)) {
            s += t.w * x(xro + int(t.row), xco + int(t.col));
          }
          out(oro + i, oco + j) = s;
        }
      }
    }
  }
  return out;
}

HermMat PartitionOp::solve_gram(const HermMat& r) const {
  if (r.n() != nab()) throw std::invalid_argument("solve_gram: size mismatch");
  // Blockwise Sherman-Morrison: (b I + c vv^T)^{-1} applied to each db x db
  // block U gives U/b - c/(b(b+d c)) Tr(U) I.
  const double b = bk_;
  const double c = ck_;
  const double corr = c / (b * (b + db_ * c));
  HermMat out(nab());
  for (int alpha = 0; alpha < da_; ++alpha) {
    for (int beta = 0; beta < da_; ++beta) {
      const int ro = alpha * db_;
      const int co = beta * db_;
      cplx tr = 0.0;
      for (int i = 0; i < db_; ++i) tr += r(ro + i, co + i);
      for (int j = 0; j < db_; ++j) {
        for (int i = 0; i < db_; ++i) {
          out(ro + i, co + j) = r(ro + i, co + j) / b;
        }
      }
      for (int i = 0; i < db_; ++i) out(ro + i, co + i) -= corr * tr;
    }
  }
  return out;
}

GramSumsExact gram_sums_exact(int d, int k) {
  if (d < 2 || k < 1) {
    throw std::invalid_argument("gram_sums_exact: need d >= 2, k >= 1");
  }
  GramSumsExact g{0, 0, 0};
  const SeqTable t1(d, k - 1);
  for (std::size_t r = 0; r < t1.size(); ++r) {
    const auto& l = t1.counts(r);
    g.k2_ak += u128(l[0] + 1) * u128(l[0] + 1);
    g.k2_bk += u128(l[0] + 1) * u128(l[1] + 1);
  }
  if (k >= 2) {
    const SeqTable t2(d, k - 2);
    for (std::size_t r = 0; r < t2.size(); ++r) {
      const auto& l = t2.counts(r);
      g.k2_ck += u128(l[0] + 1) * u128(l[1] + 1);
    }
  }
  return g;
}

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

DenseOracle::DenseOracle(int da, int db, int k)
    : da_(da), db_(db), k_(k), dk_(dim_sym(db, k)), dbk_(ipow(db, k)) {
  if (dbk_ > 4096) {
    throw std::invalid_argument("DenseOracle: gated to d^k <= 4096");
  }
  const SeqTable table(db, k);
  ptilde_.assign(dbk_ * dk_, 0.0);
  p_.assign(dbk_ * dk_, 0.0);
  // Column r of P~ is the indicator of the permutation orbit of sequence r.
  std::vector<int> digits(k);
  for (std::size_t row = 0; row < dbk_; ++row) {
    std::size_t x = row;
    for (int t = k - 1; t >= 0; --t) {
      digits[t] = int(x % db);
      x /= db;
    }
    std::vector<int> cnt(db, 0);
    for (int t = 0; t < k; ++t) cnt[digits[t]]++;
    const std::size_t col = table.rank(cnt);
    ptilde_[col * dbk_ + row] = 1.0;
    p_[col * dbk_ + row] = 1.0 / std::sqrt(table.perm_d(col));
  }
}

double DenseOracle::isometry_defect() const {
  double worst = 0.0;
  for (std::size_t c1 = 0; c1 < dk_; ++c1) {
    for (std::size_t c2 = 0; c2 < dk_; ++c2) {
      double s = 0.0;
      for (std::size_t r = 0; r < dbk_; ++r) {
        s += p_[c1 * dbk_ + r] * p_[c2 * dbk_ + r];
      }
      const double want = (c1 == c2) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(s - want));
    }
  }
  return worst;
}

HermMat DenseOracle::apply_m(const HermMat& u) const {
  if (u.n() != db_) throw std::invalid_argument("DenseOracle::apply_m: size");
  // (U (x) I_{d^{k-1}}) has entries indexed by the leading digit.
  const std::size_t rest = dbk_ / db_;
  HermMat out(int(dk_));
  for (std::size_t c1 = 0; c1 < dk_; ++c1) {
    for (std::size_t c2 = 0; c2 < dk_; ++c2) {
      cplx s = 0.0;
      for (std::size_t r1 = 0; r1 < dbk_; ++r1) {
        const double pv1 = p_[c1 * dbk_ + r1];
        if (pv1 == 0.0) continue;
        const int i = int(r1 / rest);
        const std::size_t tail = r1 % rest;
        for (int j = 0; j < db_; ++j) {
          const std::size_t r2 = std::size_t(j) * rest + tail;
          const double pv2 = p_[c2 * dbk_ + r2];
          if (pv2 == 0.0) continue;
          s += pv1 * u(i, j) * pv2;
        }
      }
      out(int(c1), int(c2)) = s;
    }
  }
  return out;
}

HermMat DenseOracle::apply_a_adjoint(const HermMat& w) const {
  if (w.n() != da_ * db_) {
    throw std::invalid_argument("DenseOracle::apply_a_adjoint: size");
  }
  const std::size_t rest = dbk_ / db_;
  HermMat out(da_ * int(dk_));
  for (int a1 = 0; a1 < da_; ++a1) {
    for (int a2 = 0; a2 < da_; ++a2) {
      for (std::size_t c1 = 0; c1 < dk_; ++c1) {
        for (std::size_t c2 = 0; c2 < dk_; ++c2) {
          cplx s = 0.0;
          for (std::size_t r1 = 0; r1 < dbk_; ++r1) {
            const double pv1 = p_[c1 * dbk_ + r1];
            if (pv1 == 0.0) continue;
            const int i = int(r1 / rest);
            const std::size_t tail = r1 % rest;
            for (int j = 0; j < db_; ++j) {
              const double pv2 = p_[c2 * dbk_ + std::size_t(j) * rest + tail];
              if (pv2 == 0.0) continue;
              s += pv1 * w(a1 * db_ + i, a2 * db_ + j) * pv2;
            }
          }
          out(a1 * int(dk_) + int(c1), a2 * int(dk_) + int(c2)) = s;
        }
      }
    }
  }
  return out;
}

HermMat DenseOracle::apply_a(const HermMat& x) const {
  if (x.n() != da_ * int(dk_)) {
    throw std::invalid_argument("DenseOracle::apply_a: size");
  }
  // big = (I_a (x) P) X (I_a (x) P^dag), then trace out the last k-1
  // factors: out[(a1,i),(a2,j)] = sum_tail big[(a1,i,tail),(a2,j,tail)].
  const std::size_t rest = dbk_ / db_;
  HermMat out(da_ * db_);
  for (int a1 = 0; a1 < da_; ++a1) {
    for (int a2 = 0; a2 < da_; ++a2) {
      for (int i = 0; i < db_; ++i) {
        for (int j = 0; j < db_; ++j) {
          cplx s = 0.0;
          for (std::size_t tail = 0; tail < rest; ++tail) {
            const std::size_t r1 = std::size_t(i) * rest + tail;
            const std::size_t r2 = std::size_t(j) * rest + tail;
            for (std::size_t c1 = 0; c1 < dk_; ++c1) {
              const double pv1 = p_[c1 * dbk_ + r1];
              if (pv1 == 0.0) continue;
              for (std::size_t c2 = 0; c2 < dk_; ++c2) {
                const double pv2 = p_[c2 * dbk_ + r2];
                if (pv2 == 0.0) continue;
                s += pv1 *
                     x(a1 * int(dk_) + int(c1), a2 * int(dk_) + int(c2)) *
                     pv2;
              }
            }
          }
          out(a1 * db_ + i, a2 * db_ + j) = s;
        }
      }
    }
  }
  return out;
}

HermMat DenseOracle::solve_gram(const HermMat& r) const {
  // Dense Gram inverse by solving on the (small) vectorized space with a
  // Gauss-Jordan elimination; oracle quality over speed.
  const int m = da_ * db_;
  const std::size_t dim = std::size_t(m) * m;
  // Build the dense matrix of A A^dag acting on vectorized Herm(H_ab)
  // entries (complex, treated as a general linear map on C^{m^2}).
  std::vector<cplx> g(dim * dim, cplx(0.0));
  for (int c2 = 0; c2 < m; ++c2) {
    for (int r2 = 0; r2 < m; ++r2) {
      HermMat basis(m);
      basis(r2, c2) = 1.0;
      const HermMat img = apply_a(apply_a_adjoint(basis));
      const std::size_t col = std::size_t(c2) * m + r2;
      for (int c1 = 0; c1 < m; ++c1) {
        for (int r1 = 0; r1 < m; ++r1) {
          g[(std::size_t(c1) * m + r1) + dim * col] = img(r1, c1);
        }
      }
    }
  }
  std::vector<cplx> rhs(dim);
  for (int c = 0; c < m; ++c) {
    for (int rr = 0; rr < m; ++rr) rhs[std::size_t(c) * m + rr] = r(rr, c);
  }
  // Gauss-Jordan with partial pivoting.
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    for (std::size_t rr = col + 1; rr < dim; ++rr) {
      if (std::abs(g[rr + dim * col]) > std::abs(g[piv + dim * col])) piv = rr;
    }
    if (std::abs(g[piv + dim * col]) < 1e-14) {
      throw std::runtime_error("DenseOracle::solve_gram: singular Gram");
    }
    if (piv != col) {
      for (std::size_t cc = 0; cc < dim; ++cc) {
        std::swap(g[col + dim * cc], g[piv + dim * cc]);
      }
      std::swap(rhs[col], rhs[piv]);
    }
    const cplx d = g[col + dim * col];
    for (std::size_t cc = 0; cc < dim; ++cc) g[col + dim * cc] /= d;
    rhs[col] /= d;
    for (std::size_t rr = 0; rr < dim; ++rr) {
      if (rr == col) continue;
      const cplx f = g[rr + dim * col];
      if (f == cplx(0.0)) continue;
      for (std::size_t cc = 0; cc < dim; ++cc) {
        g[rr + dim * cc] -= f * g[col + dim * cc];
      }
      rhs[rr] -= f * rhs[col];
    }
  }
  HermMat out(m);
  for (int c = 0; c < m; ++c) {
    for (int rr = 0; rr < m; ++rr) out(rr, c) = rhs[std::size_t(c) * m + rr];
  }
  return out;
}

}  // namespace entdetect
