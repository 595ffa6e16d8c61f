#pragma once

// Gaussian integers a + bi and exact rational Gaussian numbers. The ramified
// prime p = 1 + i plays the role 2 plays over Z: a Gaussian integer is
// divisible by p exactly when its norm is even.

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "gausslat/intops.hpp"

namespace gausslat {

template <typename T>
struct TGauss {
  T re = 0;
  T im = 0;

  constexpr TGauss() = default;
  constexpr TGauss(T r, T i) : re(r), im(i) {}

  friend TGauss operator+(TGauss a, TGauss b) { return {cadd(a.re, b.re), cadd(a.im, b.im)}; }
  friend TGauss operator-(TGauss a, TGauss b) { return {csub(a.re, b.re), csub(a.im, b.im)}; }
  friend TGauss operator-(TGauss a) { return {cneg(a.re), cneg(a.im)}; }
  friend TGauss operator*(TGauss a, TGauss b) {
    return {csub(cmul(a.re, b.re), cmul(a.im, b.im)),
            cadd(cmul(a.re, b.im), cmul(a.im, b.re))};
  }
  TGauss& operator+=(TGauss b) { return *this = *this + b; }
  TGauss& operator-=(TGauss b) { return *this = *this - b; }
  TGauss& operator*=(TGauss b) { return *this = *this * b; }

  friend bool operator==(TGauss a, TGauss b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(TGauss a, TGauss b) { return !(a == b); }
  // Order used only for canonical tie-breaking, not for any metric claim.
  friend std::strong_ordering operator<=>(TGauss a, TGauss b) {
    if (auto c = a.re <=> b.re; c != 0) return c;
    return a.im <=> b.im;
  }

  TGauss conj() const { return {re, cneg(im)}; }
  bool is_zero() const { return re == 0 && im == 0; }
  TGauss times_i() const { return {cneg(im), re}; }
};

using GaussInt = TGauss<i64>;
using Gauss128 = TGauss<i128>;

inline constexpr GaussInt G_ZERO{0, 0};
inline constexpr GaussInt G_ONE{1, 0};
inline constexpr GaussInt G_I{0, 1};
// The ramified prime.
inline constexpr GaussInt G_P{1, 1};
inline constexpr GaussInt G_PBAR{1, -1};

template <typename T>
inline T gnorm(TGauss<T> a) {
  return cadd(cmul(a.re, a.re), cmul(a.im, a.im));
}

inline Gauss128 widen(GaussInt a) { return {a.re, a.im}; }
inline GaussInt narrow(Gauss128 a) { return {narrow(a.re), narrow(a.im)}; }

template <typename T>
inline bool p_divides(TGauss<T> a) {
  return ((a.re + a.im) & 1) == 0;
}

// Exact quotient by p = 1+i; caller guarantees divisibility.
template <typename T>
inline TGauss<T> div_p(TGauss<T> a) {
  check(p_divides(a), "div_p: not divisible by 1+i");
  return {(a.re + a.im) / 2, (a.im - a.re) / 2};
}

template <typename T>
inline TGauss<T> mul_p(TGauss<T> a) {
  return a * TGauss<T>{1, 1};
}

// Exact quotient a/b in Z[i]; aborts if b does not divide a.
template <typename T>
inline TGauss<T> div_exact(TGauss<T> a, TGauss<T> b) {
  check(!b.is_zero(), "div_exact: zero divisor");
  TGauss<T> num = a * b.conj();
  T n = gnorm(b);
  check(num.re % n == 0 && num.im % n == 0, "div_exact: not divisible");
  return {num.re / n, num.im / n};
}

template <typename T>
inline bool divides(TGauss<T> b, TGauss<T> a) {
  if (b.is_zero()) return a.is_zero();
  TGauss<T> num = a * b.conj();
  T n = gnorm(b);
  return num.re % n == 0 && num.im % n == 0;
}

// Nearest-integer quotient, |a - q b|^2 <= |b|^2 / 2. Basis of the Euclidean
// algorithm below and of the Hermite reduction in linalg.hpp.
template <typename T>
inline TGauss<T> div_round(TGauss<T> a, TGauss<T> b) {
  check(!b.is_zero(), "div_round: zero divisor");
  TGauss<T> num = a * b.conj();
  T n = gnorm(b);
  auto rnd = [&](T x) {
    // round(x/n) with n > 0, exact in integers
    T q = x / n, r = x % n;
    if (2 * iabs(r) > n) q += (r > 0 ? 1 : -1);
    return q;
  };
  return {rnd(num.re), rnd(num.im)};
}

template <typename T>
inline TGauss<T> ggcd(TGauss<T> a, TGauss<T> b) {
  while (!b.is_zero()) {
    TGauss<T> q = div_round(a, b);
    TGauss<T> r = a - q * b;
    a = b;
    b = r;
  }
  return a;
}

template <typename T>
inline bool is_unit(TGauss<T> a) {
  return gnorm(a) == 1;
}

// The canonical associate with re > 0, im >= 0 (0 for zero input), together
// with the power of i that achieves it.
template <typename T>
inline TGauss<T> canon_unit(TGauss<T> a, int* power_of_i = nullptr) {
  int k = 0;
  while (!(a.is_zero() || (a.re > 0 && a.im >= 0))) {
    a = a.times_i();
    ++k;
    check(k < 4, "canon_unit: no canonical rotation");
  }
  if (power_of_i) *power_of_i = k;
  return a;
}

inline GaussInt pow_i(int k) {
  static constexpr GaussInt tab[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return tab[((k % 4) + 4) % 4];
}

// All Gaussian integers of norm <= m, sorted by (norm, re, im).
inline std::vector<GaussInt> gauss_ball(i64 m) {
  check(m >= 0, "gauss_ball: negative bound");
  i64 r = 0;
  while ((r + 1) * (r + 1) <= m) ++r;
  std::vector<GaussInt> out;
  for (i64 a = -r; a <= r; ++a)
    for (i64 b = -r; b <= r; ++b)
      if (a * a + b * b <= m) out.push_back({a, b});
  std::sort(out.begin(), out.end(), [](GaussInt x, GaussInt y) {
    if (gnorm(x) != gnorm(y)) return gnorm(x) < gnorm(y);
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  });
  return out;
}

inline std::string to_string(GaussInt a) {
  std::string s = std::to_string(a.re);
  s += (a.im < 0 ? "-" : "+") + std::to_string(iabs(a.im)) + "i";
  return s;
}

struct GaussHash {
  size_t operator()(GaussInt a) const {
    u64 h = static_cast<u64>(a.re) * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<u64>(a.im) + 0x517cc1b727220a95ull + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

// ---- rationals ------------------------------------------------------------

// Reduced fraction with positive denominator; intermediates widened to 128
// bits, results checked back into 64.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) { assign(n, d); }

  void assign(i128 n, i128 d) {
    check(d != 0, "Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = igcd<i128>(n, d);
    if (g == 0) g = 1;
    num = narrow(n / g);
    den = narrow(d / g);
  }

  static Rat make(i128 n, i128 d) {
    Rat r;
    r.assign(n, d);
    return r;
  }

  friend Rat operator+(Rat a, Rat b) {
    return make(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
  }
  friend Rat operator-(Rat a, Rat b) {
    return make(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
  }
  friend Rat operator*(Rat a, Rat b) { return make(i128(a.num) * b.num, i128(a.den) * b.den); }
  friend Rat operator/(Rat a, Rat b) {
    check(b.num != 0, "Rat: division by zero");
    return make(i128(a.num) * b.den, i128(a.den) * b.num);
  }
  friend Rat operator-(Rat a) { return make(-i128(a.num), a.den); }
  Rat& operator+=(Rat b) { return *this = *this + b; }
  Rat& operator-=(Rat b) { return *this = *this - b; }
  Rat& operator*=(Rat b) { return *this = *this * b; }
  Rat& operator/=(Rat b) { return *this = *this / b; }

  friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(Rat a, Rat b) { return !(a == b); }
  friend std::strong_ordering operator<=>(Rat a, Rat b) {
    i128 l = i128(a.num) * b.den, r = i128(b.num) * a.den;
    return l < r ? std::strong_ordering::less
         : l > r ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  double to_double() const { return double(num) / double(den); }
};

inline Rat rabs(Rat a) { return a.num < 0 ? -a : a; }

// Gaussian rational: Gaussian-integer numerator over a positive integer
// denominator, kept reduced (no rational prime divides all three).
struct GaussRat {
  GaussInt num{0, 0};
  i64 den = 1;

  GaussRat() = default;
  GaussRat(GaussInt n) : num(n), den(1) {}
  GaussRat(i64 n) : num{n, 0}, den(1) {}
  GaussRat(GaussInt n, i64 d) { assign(widen(n), d); }
  GaussRat(Rat re, Rat im) {
    i128 d = i128(re.den) * im.den;
    assign({i128(re.num) * im.den, i128(im.num) * re.den}, d);
  }

  void assign(Gauss128 n, i128 d) {
    check(d != 0, "GaussRat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = igcd<i128>(igcd<i128>(n.re, n.im), d);
    if (g == 0) g = 1;
    num = {gausslat::narrow(n.re / g), gausslat::narrow(n.im / g)};
    den = gausslat::narrow(d / g);
  }

  static GaussRat make(Gauss128 n, i128 d) {
    GaussRat r;
    r.assign(n, d);
    return r;
  }

  friend GaussRat operator+(GaussRat a, GaussRat b) {
    return make(widen(a.num) * Gauss128{b.den, 0} + widen(b.num) * Gauss128{a.den, 0},
                i128(a.den) * b.den);
  }
  friend GaussRat operator-(GaussRat a, GaussRat b) {
    return make(widen(a.num) * Gauss128{b.den, 0} - widen(b.num) * Gauss128{a.den, 0},
                i128(a.den) * b.den);
  }
  friend GaussRat operator*(GaussRat a, GaussRat b) {
    return make(widen(a.num) * widen(b.num), i128(a.den) * b.den);
  }
  friend GaussRat operator/(GaussRat a, GaussRat b) {
    check(!b.num.is_zero(), "GaussRat: division by zero");
    return make(widen(a.num) * widen(b.num).conj() * Gauss128{b.den, 0},
                i128(a.den) * gnorm(widen(b.num)));
  }
  friend GaussRat operator-(GaussRat a) { return make(-widen(a.num), a.den); }
  GaussRat& operator+=(GaussRat b) { return *this = *this + b; }
  GaussRat& operator-=(GaussRat b) { return *this = *this - b; }
  GaussRat& operator*=(GaussRat b) { return *this = *this * b; }
  GaussRat& operator/=(GaussRat b) { return *this = *this / b; }

  friend bool operator==(GaussRat a, GaussRat b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(GaussRat a, GaussRat b) { return !(a == b); }

  GaussRat conj() const { return {num.conj(), den}; }
  bool is_zero() const { return num.is_zero(); }
  bool is_integral() const { return den == 1; }
  GaussInt to_gauss() const {
    check(den == 1, "GaussRat: not integral");
    return num;
  }
  Rat real() const { return Rat(num.re, den); }
  Rat imag() const { return Rat(num.im, den); }
};

inline GaussRat grconj(GaussRat a) { return a.conj(); }
inline Rat grnorm(GaussRat a) { return Rat::make(gnorm(widen(a.num)), i128(a.den) * a.den); }

}  // namespace gausslat
