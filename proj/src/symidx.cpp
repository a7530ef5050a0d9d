#include "entdetect/symidx.hpp"

#include <limits>
#include <stdexcept>

namespace entdetect {

namespace {

constexpr u128 kU128Max = ~u128(0);

u128 mul_checked(u128 a, std::uint64_t b) {
  if (b != 0 && a > kU128Max / b) {
    throw std::overflow_error("binomial coefficient overflows 128 bits");
  }
  return a * b;
}

}  // namespace

u128 binom_u128(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  u128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = mul_checked(acc, std::uint64_t(n - r + i));
    acc /= std::uint64_t(i);  // exact: acc holds C(n-r+i, i) after division
  }
  return acc;
}

std::uint64_t dim_sym(int d, int k) {
  if (d < 1 || k < 0) throw std::invalid_argument("dim_sym: need d>=1, k>=0");
  const u128 v = binom_u128(d + k - 1, k);
  if (v > u128(std::numeric_limits<std::uint64_t>::max())) {
    throw std::overflow_error("dim_sym does not fit in 64 bits");
  }
  return std::uint64_t(v);
}

SeqTable::SeqTable(int d, int k) : d_(d), k_(k) {
  if (d < 1 || k < 0) throw std::invalid_argument("SeqTable: need d>=1, k>=0");
  const std::uint64_t count = dim_sym(d, k);
  counts_.reserve(count);
  perm_.reserve(count);
  perm_dbl_.reserve(count);

  u128 kfact = 1;
  for (int i = 2; i <= k; ++i) kfact = mul_checked(kfact, std::uint64_t(i));

  // Enumerate occurrence tuples in the lexicographic order of the symbol
  // lists: recurse over symbols, largest count of the smallest symbol first.
  std::vector<int> tuple(d, 0);
  auto emit = [&]() {
    u128 p = kfact;
    for (int i = 0; i < d; ++i) {
      u128 f = 1;
      for (int j = 2; j <= tuple[i]; ++j) f = mul_checked(f, std::uint64_t(j));
      p /= f;
    }
    counts_.push_back(tuple);
    perm_.push_back(p);
    perm_dbl_.push_back(double(p));
  };
  // Symbol lists in lex order correspond to tuples ordered by decreasing
  // l_0, then decreasing l_1, etc.
  auto rec = [&](auto&& self, int sym, int remaining) -> void {
    if (sym == d - 1) {
      tuple[sym] = remaining;
      emit();
      tuple[sym] = 0;
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      tuple[sym] = c;
      self(self, sym + 1, remaining - c);
    }
    tuple[sym] = 0;
  };
  rec(rec, 0, k);
}

std::vector<int> SeqTable::symbols(std::size_t r) const {
  std::vector<int> out;
  out.reserve(k_);
  const auto& t = counts_[r];
  for (int s = 0; s < d_; ++s) out.insert(out.end(), t[s], s);
  return out;
}

std::size_t SeqTable::rank(const std::vector<int>& counts) const {
  if (int(counts.size()) != d_) {
    throw std::invalid_argument("SeqTable::rank: tuple has wrong length");
  }
  int total = 0;
  for (int s = 0; s < d_; ++s) {
    if (counts[s] < 0) throw std::invalid_argument("SeqTable::rank: negative count");
    total += counts[s];
  }
  if (total != k_) throw std::invalid_argument("SeqTable::rank: counts sum != k");

  // Position-wise lex rank: at position t with symbol c_t, every smaller
  // admissible symbol c contributes dim_sym(d-c, k-t) completions.
  std::size_t rank = 0;
  int pos = 0;  // 1-based position is pos+1
  int lo = 0;
  for (int s = 0; s < d_; ++s) {
    for (int rep = 0; rep < counts[s]; ++rep) {
      for (int c = lo; c < s; ++c) {
        rank += std::size_t(dim_sym(d_ - c, k_ - pos - 1));
      }
      lo = s;
      ++pos;
    }
  }
  return rank;
}

std::size_t rank_with_insert(const SeqTable& table_km1, std::size_t r,
                             int sym) {
  const int d = table_km1.d();
  if (sym < 0 || sym >= d) {
    throw std::out_of_range("rank_with_insert: symbol out of range");
  }
  std::vector<int> t = table_km1.counts(r);
  t[sym] += 1;
  // Closed-form rank in the (d, k) order; the (d,k) table itself is not
  // needed, only binomial counts.
  const int k = table_km1.k() + 1;
  std::size_t rank = 0;
  int pos = 0;
  int lo = 0;
  for (int s = 0; s < d; ++s) {
    for (int rep = 0; rep < t[s]; ++rep) {
      for (int c = lo; c < s; ++c) {
        rank += std::size_t(dim_sym(d - c, k - pos - 1));
      }
      lo = s;
      ++pos;
    }
  }
  return rank;
}

}  // namespace entdetect
