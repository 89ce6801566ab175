#ifndef UNIONFAM_BITS_HPP
#define UNIONFAM_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace unionfam {

// Fixed-size dynamic bitset used for adjacency rows and vertex subsets.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n, bool fill = false)
      : n_(n), w_((n + 63) / 64, fill ? ~0ull : 0ull) {
    trim();
  }

  std::size_t size() const { return n_; }

  void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ull; }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& and_not(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
  }

  // First set bit at index >= from, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t next(std::size_t from = 0) const {
    if (from >= n_) return npos;
    std::size_t word = from >> 6;
    std::uint64_t w = w_[word] & (~0ull << (from & 63));
    while (true) {
      if (w) return (word << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++word >= w_.size()) return npos;
      w = w_[word];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = next(); i != npos; i = next(i + 1)) f(i);
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  bool operator==(const Bits&) const = default;

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
  }
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace unionfam

#endif
