#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ccx {

// Fixed-universe bitset. All binary operations require operands built over
// the same universe size.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bitset full(std::size_t n) {
    Bitset b(n);
    for (auto& w : b.w_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }
  void clear() { for (auto& w : w_) w = 0; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : w_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  // this \ o
  Bitset and_not(const Bitset& o) const {
    Bitset r(*this);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }

  Bitset complemented() const {
    Bitset r(*this);
    for (auto& w : r.w_) w = ~w;
    r.trim();
    return r;
  }

  std::size_t count_and(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
  }

  std::size_t count_xor(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(w_[i] ^ o.w_[i]));
    return c;
  }

  // true when this lies between a and b: (this^a) & (this^b) == 0.
  bool is_between(const Bitset& a, const Bitset& b) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if ((w_[i] ^ a.w_[i]) & (w_[i] ^ b.w_[i])) return false;
    return true;
  }

  static Bitset majority(const Bitset& a, const Bitset& b, const Bitset& c) {
    Bitset r(a.n_);
    for (std::size_t i = 0; i < r.w_.size(); ++i)
      r.w_[i] = (a.w_[i] & b.w_[i]) | ((a.w_[i] | b.w_[i]) & c.w_[i]);
    return r;
  }

  int find_first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  int find_next(int prev) const {
    std::size_t i = static_cast<std::size_t>(prev) + 1;
    if (i >= n_) return -1;
    std::size_t wi = i >> 6;
    std::uint64_t w = w_[wi] >> (i & 63);
    if (w) return static_cast<int>(i + std::countr_zero(w));
    for (++wi; wi < w_.size(); ++wi)
      if (w_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(w_[wi]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        f(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ n_);
  }

private:
  void trim() {
    if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    if (n_ == 0 && !w_.empty()) w_.back() = 0;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ccx
