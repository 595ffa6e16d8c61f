#pragma once

// Deterministic 64-bit generator (splitmix64). Seeded runs must reproduce
// bit-identically across platforms and thread counts, so we do not touch
// <random> distributions.

#include "gausslat/intops.hpp"

namespace gausslat {

struct SplitMix64 {
  u64 state;

  explicit SplitMix64(u64 seed = 0) : state(seed) {}

  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Modulo bias is irrelevant at our sample sizes
  // but cheap to remove, so remove it.
  u64 below(u64 n) {
    check(n > 0, "SplitMix64: empty range");
    u64 lim = ~u64(0) - (~u64(0) % n);
    u64 v;
    do {
      v = next();
    } while (v >= lim);
    return v % n;
  }

  i64 in_range(i64 lo, i64 hi) {  // inclusive
    return lo + static_cast<i64>(below(static_cast<u64>(hi - lo + 1)));
  }
};

// FNV-1a, used for content hashes of caches, reports and witness files.
struct Fnv1a {
  u64 h = 0xcbf29ce484222325ull;
  void update(const void* data, size_t n) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (size_t j = 0; j < n; ++j) {
      h ^= p[j];
      h *= 0x100000001b3ull;
    }
  }
  void update_str(const char* s) {
    while (*s) {
      h ^= static_cast<unsigned char>(*s++);
      h *= 0x100000001b3ull;
    }
  }
  u64 digest() const { return h; }
};

}  // namespace gausslat
