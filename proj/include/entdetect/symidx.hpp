#pragma once

#include <cstdint>
#include <vector>

// Combinatorial indexing of the symmetric subspace: nondecreasing sequences
// of length k over {0..d-1}, their lexicographic ranks, multinomial
// permutation counts, and the dimension dim_sym(d,k) = C(d+k-1, k).

namespace entdetect {

using u128 = unsigned __int128;

// C(n, r) in 128-bit arithmetic; throws std::overflow_error if the value
// does not fit (never silently wraps).
u128 binom_u128(int n, int r);

// C(d+k-1, k).  k = 0 is allowed (one empty sequence).  Throws
// std::overflow_error if the count exceeds 64 bits.
std::uint64_t dim_sym(int d, int k);

// Ranked table of the nondecreasing length-k sequences over {0..d-1}.
// Sequences are stored as occurrence-count tuples (l_0,...,l_{d-1}) with
// sum l_i = k; the table order is the lexicographic order of the
// corresponding symbol lists.  Immutable after construction.
class SeqTable {
 public:
  SeqTable(int d, int k);

  int d() const { return d_; }
  int k() const { return k_; }
  std::size_t size() const { return counts_.size(); }

  const std::vector<int>& counts(std::size_t r) const { return counts_[r]; }
  // Raw symbol list, nondecreasing, derived from the counts.
  std::vector<int> symbols(std::size_t r) const;

  // Multinomial count k!/prod(l_i!); exact in 128 bits.
  u128 perm(std::size_t r) const { return perm_[r]; }
  double perm_d(std::size_t r) const { return perm_dbl_[r]; }

  // Closed-form lexicographic rank (combinatorial number system), O(d+k).
  std::size_t rank(const std::vector<int>& counts) const;

 private:
  int d_;
  int k_;
  std::vector<std::vector<int>> counts_;
  std::vector<u128> perm_;
  std::vector<double> perm_dbl_;
};

// Rank, in the (d, k) table, of the nondecreasing merge of table_km1's
// sequence r (length k-1) with one extra symbol sym in {0..d-1}.
std::size_t rank_with_insert(const SeqTable& table_km1, std::size_t r,
                             int sym);

}  // namespace entdetect
