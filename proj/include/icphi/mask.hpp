#pragma once

// Fixed-capacity bitset over element ranks of a group.  Capacity covers
// kOrderBudget, so one mask represents any element subset of any group this
// project accepts.  Used pervasively as the subgroup representation.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

#include "icphi/common.hpp"

namespace icphi {

struct ElemMask {
  static constexpr int kWords = (kOrderBudget + 63) / 64;
  std::array<uint64_t, kWords> w{};

  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
  }

  bool none() const {
    for (uint64_t x : w)
      if (x) return false;
    return true;
  }

  bool subset_of(const ElemMask& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }

  bool intersects(const ElemMask& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w[k] & o.w[k]) return true;
    return false;
  }

  ElemMask operator&(const ElemMask& o) const {
    ElemMask r;
    for (int k = 0; k < kWords; ++k) r.w[k] = w[k] & o.w[k];
    return r;
  }

  ElemMask operator|(const ElemMask& o) const {
    ElemMask r;
    for (int k = 0; k < kWords; ++k) r.w[k] = w[k] | o.w[k];
    return r;
  }

  ElemMask& operator&=(const ElemMask& o) {
    for (int k = 0; k < kWords; ++k) w[k] &= o.w[k];
    return *this;
  }

  ElemMask& operator|=(const ElemMask& o) {
    for (int k = 0; k < kWords; ++k) w[k] |= o.w[k];
    return *this;
  }

  bool operator==(const ElemMask&) const = default;

  // Any fixed total order works for canonical sorting; word-wise compare.
  bool operator<(const ElemMask& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w[k] != o.w[k]) return w[k] < o.w[k];
    return false;
  }

  // First set bit, or -1.
  int first() const {
    for (int k = 0; k < kWords; ++k)
      if (w[k]) return k * 64 + std::countr_zero(w[k]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int k = 0; k < kWords; ++k) {
      uint64_t x = w[k];
      while (x) {
        int b = std::countr_zero(x);
        f(k * 64 + b);
        x &= x - 1;
      }
    }
  }

  static ElemMask single(int i) {
    ElemMask m;
    m.set(i);
    return m;
  }
};

struct MaskHash {
  size_t operator()(const ElemMask& m) const {
    size_t h = 1469598103934665603ull;
    for (uint64_t x : m.w) {
      h ^= x;
      h *= 1099511628211ull;
      h ^= h >> 32;
    }
    return h;
  }
};

}  // namespace icphi
