#ifndef UNIONFAM_COMBINATORICS_HPP
#define UNIONFAM_COMBINATORICS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace unionfam {

// Sets over a ground set [1, n] with n <= 64 are packed into one word:
// element e occupies bit e-1.

using Mask = std::uint64_t;

inline Mask elem_bit(int e) { return Mask{1} << (e - 1); }

inline int mask_size(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= elem_bit(e);
  return m;
}

// All k-subsets of [n] in ascending mask order (Gosper's hack).
inline std::vector<Mask> all_k_subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  Mask limit = full_mask(n);
  Mask v = (Mask{1} << k) - 1;
  while (v <= limit) {
    out.push_back(v);
    Mask c = v & -v;
    Mask r = v + c;
    if (r > limit || r < v) break;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

// k-subsets of an arbitrary pool mask, ascending mask order.
inline std::vector<Mask> k_subsets_of(Mask pool, int k) {
  std::vector<int> elems = mask_elements(pool);
  int n = static_cast<int>(elems.size());
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= elem_bit(elems[i]);
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact small binomial in 64-bit; callers keep n + k modest. Out-of-range
// arguments give 0, matching the convention used throughout the bound
// formulas.
inline std::uint64_t binom_u64(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace unionfam

#endif
