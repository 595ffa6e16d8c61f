#pragma once

// Exact arithmetic in Q(zeta8), zeta8 = e^{i pi/4}, and in its real subfield
// Q(sqrt2). Everything the geometry needs about the exceptional symmetry
// (eighth roots of unity, distances measured against them) lives here; no
// floating point enters any comparison.

#include <array>
#include <cmath>

#include "gausslat/gauss.hpp"

namespace gausslat {

// c0 + c1 z + c2 z^2 + c3 z^3 with z^4 = -1. z^2 = i embeds the Gaussians.
struct Cyclo8 {
  std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};

  Cyclo8() = default;
  explicit Cyclo8(Rat c0) { c[0] = c0; }
  Cyclo8(Rat c0, Rat c1, Rat c2, Rat c3) : c{c0, c1, c2, c3} {}

  static Cyclo8 zeta(int k) {
    k = ((k % 8) + 8) % 8;
    Cyclo8 r;
    int s = k < 4 ? 1 : -1;
    r.c[k % 4] = Rat(s);
    return r;
  }
  static Cyclo8 from(GaussRat g) {
    Cyclo8 r;
    r.c[0] = g.real();
    r.c[2] = g.imag();
    return r;
  }

  friend Cyclo8 operator+(const Cyclo8& a, const Cyclo8& b) {
    Cyclo8 r;
    for (int j = 0; j < 4; ++j) r.c[j] = a.c[j] + b.c[j];
    return r;
  }
  friend Cyclo8 operator-(const Cyclo8& a, const Cyclo8& b) {
    Cyclo8 r;
    for (int j = 0; j < 4; ++j) r.c[j] = a.c[j] - b.c[j];
    return r;
  }
  friend Cyclo8 operator-(const Cyclo8& a) {
    Cyclo8 r;
    for (int j = 0; j < 4; ++j) r.c[j] = -a.c[j];
    return r;
  }
  friend Cyclo8 operator*(const Cyclo8& a, const Cyclo8& b) {
    std::array<Rat, 7> t{};
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) t[j + k] += a.c[j] * b.c[k];
    Cyclo8 r;
    for (int j = 0; j < 4; ++j) r.c[j] = t[j];
    for (int j = 4; j < 7; ++j) r.c[j - 4] -= t[j];  // z^4 = -1
    return r;
  }
  Cyclo8& operator+=(const Cyclo8& b) { return *this = *this + b; }
  Cyclo8& operator-=(const Cyclo8& b) { return *this = *this - b; }
  Cyclo8& operator*=(const Cyclo8& b) { return *this = *this * b; }

  friend bool operator==(const Cyclo8& a, const Cyclo8& b) { return a.c == b.c; }
  friend bool operator!=(const Cyclo8& a, const Cyclo8& b) { return !(a == b); }

  bool is_zero() const {
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
  }
  bool is_gaussian() const { return c[1].is_zero() && c[3].is_zero(); }
  GaussRat to_gaussrat() const {
    check(is_gaussian(), "Cyclo8: not in Q(i)");
    return GaussRat(c[0], c[2]);
  }

  // Galois twist z -> z^k for odd k.
  Cyclo8 galois(int k) const {
    Cyclo8 r;
    for (int j = 0; j < 4; ++j) {
      int e = (j * k) % 8;
      int s = e < 4 ? 1 : -1;
      r.c[e % 4] += Rat(s) * c[j];
    }
    return r;
  }
  // Complex conjugation: z -> z^-1 = z^7.
  Cyclo8 conj() const { return galois(7); }

  Cyclo8 inverse() const {
    check(!is_zero(), "Cyclo8: inverse of zero");
    Cyclo8 y = galois(3) * galois(5) * galois(7);
    Cyclo8 n = *this * y;
    check(n.c[1].is_zero() && n.c[2].is_zero() && n.c[3].is_zero(),
          "Cyclo8: field norm not rational");
    Cyclo8 r;
    for (int j = 0; j < 4; ++j) r.c[j] = y.c[j] / n.c[0];
    return r;
  }
  friend Cyclo8 operator/(const Cyclo8& a, const Cyclo8& b) { return a * b.inverse(); }

  double to_double_re() const {
    const double s = std::sqrt(0.5);
    return c[0].to_double() + (c[1].to_double() - c[3].to_double()) * s;
  }
  double to_double_im() const {
    const double s = std::sqrt(0.5);
    return c[2].to_double() + (c[1].to_double() + c[3].to_double()) * s;
  }
};

// a + b sqrt(2), exact sign decisions by squaring.
struct RealQuad {
  Rat a;
  Rat b;

  RealQuad() = default;
  RealQuad(Rat a_, Rat b_ = Rat(0)) : a(a_), b(b_) {}
  RealQuad(i64 a_) : a(Rat(a_)) {}

  friend RealQuad operator+(RealQuad x, RealQuad y) { return {x.a + y.a, x.b + y.b}; }
  friend RealQuad operator-(RealQuad x, RealQuad y) { return {x.a - y.a, x.b - y.b}; }
  friend RealQuad operator-(RealQuad x) { return {-x.a, -x.b}; }
  friend RealQuad operator*(RealQuad x, RealQuad y) {
    return {x.a * y.a + Rat(2) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  RealQuad& operator+=(RealQuad y) { return *this = *this + y; }
  RealQuad& operator-=(RealQuad y) { return *this = *this - y; }
  RealQuad& operator*=(RealQuad y) { return *this = *this * y; }

  friend bool operator==(RealQuad x, RealQuad y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(RealQuad x, RealQuad y) { return !(x == y); }

  RealQuad galois() const { return {a, -b}; }  // sqrt2 -> -sqrt2
  RealQuad inverse() const {
    Rat n = a * a - Rat(2) * b * b;
    check(!n.is_zero(), "RealQuad: inverse of zero");
    return {a / n, -b / n};
  }
  friend RealQuad operator/(RealQuad x, RealQuad y) { return x * y.inverse(); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  double to_double() const { return a.to_double() + b.to_double() * std::sqrt(2.0); }
};

// Sign of a + b sqrt2; sqrt2 is irrational so zero only at a = b = 0.
inline int rq_sign(RealQuad x) {
  int sa = x.a.sign(), sb = x.b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 2 b^2
  Rat a2 = x.a * x.a, b2 = Rat(2) * x.b * x.b;
  if (a2 == b2) die("rq_sign: sqrt2 turned rational");
  return (a2 > b2) ? sa : sb;
}

inline bool operator<(RealQuad x, RealQuad y) { return rq_sign(x - y) < 0; }
inline bool operator<=(RealQuad x, RealQuad y) { return rq_sign(x - y) <= 0; }
inline bool operator>(RealQuad x, RealQuad y) { return rq_sign(x - y) > 0; }
inline bool operator>=(RealQuad x, RealQuad y) { return rq_sign(x - y) >= 0; }

// |x|^2 for x in Q(zeta8): always lands in the real subfield.
// Example: |1 + zeta8|^2 = 2 + sqrt2.
inline RealQuad cy_abs2(const Cyclo8& x) {
  Cyclo8 n = x * x.conj();
  check(n.c[2].is_zero(), "cy_abs2: imaginary part survived");
  check(n.c[1] == -n.c[3], "cy_abs2: not in Q(sqrt2)");
  return {n.c[0], n.c[1]};  // z - z^3 = sqrt2
}

// Exact test  x <= (c + sqrt(c^2 - 1)) * e  for c >= 1, e >= 0 in Q(sqrt2).
// Used for the horoball cutoffs, whose exact values live one square root
// outside Q(sqrt2).
inline bool le_cosh_plus_sinh_times(RealQuad x, RealQuad c, RealQuad e) {
  check(rq_sign(c - RealQuad(1)) >= 0 && rq_sign(e) >= 0, "cutoff test: bad arguments");
  RealQuad d = x - c * e;
  if (rq_sign(d) <= 0) return true;
  RealQuad rhs = (c * c - RealQuad(1)) * e * e;
  return rq_sign(d * d - rhs) <= 0;
}

}  // namespace gausslat
