#pragma once

// Checked machine-integer arithmetic. Everything the verification logic
// computes with is proved small by compactness bounds, so rather than drag in
// a bignum dependency we do all arithmetic in 64/128-bit registers and abort
// loudly if a bound is ever wrong.

#include <cstdint>
#include <cstdio>
#include <cstdlib>

namespace gausslat {

using i64 = std::int64_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i128 = __int128;

[[noreturn]] inline void die(const char* what) {
  std::fprintf(stderr, "gausslat: fatal: %s\n", what);
  std::abort();
}

inline void check(bool ok, const char* what) {
  if (!ok) die(what);
}

template <typename T>
inline T cadd(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) die("integer overflow (add)");
  return r;
}

template <typename T>
inline T csub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) die("integer overflow (sub)");
  return r;
}

template <typename T>
inline T cmul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) die("integer overflow (mul)");
  return r;
}

template <typename T>
inline T cneg(T a) {
  return csub<T>(T(0), a);
}

template <typename T>
inline T iabs(T a) {
  return a < 0 ? cneg(a) : a;
}

template <typename T>
inline T igcd(T a, T b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    T t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Narrowing with a proof obligation: the value was computed wide but is known
// to fit.
inline i64 narrow(i128 v) {
  i64 r = static_cast<i64>(v);
  if (static_cast<i128>(r) != v) die("integer overflow (narrow)");
  return r;
}

}  // namespace gausslat
