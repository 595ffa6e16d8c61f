#pragma once

// Small dense exact linear algebra: row reduction over the fields we use
// (Gaussian rationals, Q(zeta8)), Hermite normal form over the Gaussian
// integers for module comparisons, and exact LLL + Fincke-Pohst over Z for
// short-vector work. Dimensions never exceed a few dozen, so clarity beats
// asymptotics throughout.

#include <functional>
#include <optional>
#include <vector>

#include "gausslat/cyclo.hpp"
#include "gausslat/gauss.hpp"

namespace gausslat {

template <class F>
struct Mat {
  int nr = 0, nc = 0;
  std::vector<F> a;

  Mat() = default;
  Mat(int r, int c) : nr(r), nc(c), a(static_cast<size_t>(r) * c) {}

  F& at(int r, int c) { return a[static_cast<size_t>(r) * nc + c]; }
  const F& at(int r, int c) const { return a[static_cast<size_t>(r) * nc + c]; }

  static Mat identity(int n, F one) {
    Mat m(n, n);
    for (int j = 0; j < n; ++j) m.at(j, j) = one;
    return m;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.nr == y.nr && x.nc == y.nc && x.a == y.a;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

using GMat = Mat<GaussInt>;
using QMat = Mat<GaussRat>;
using CyMat = Mat<Cyclo8>;
using IMat = Mat<i64>;

// ---- field traits ----------------------------------------------------------

template <class F>
struct FieldOps;

template <>
struct FieldOps<GaussRat> {
  static GaussRat zero() { return GaussRat(); }
  static GaussRat one() { return GaussRat(GaussInt{1, 0}); }
  static bool is_zero(const GaussRat& x) { return x.is_zero(); }
  static GaussRat conj(const GaussRat& x) { return x.conj(); }
};

template <>
struct FieldOps<Cyclo8> {
  static Cyclo8 zero() { return Cyclo8(); }
  static Cyclo8 one() { return Cyclo8(Rat(1)); }
  static bool is_zero(const Cyclo8& x) { return x.is_zero(); }
  static Cyclo8 conj(const Cyclo8& x) { return x.conj(); }
};

template <class F>
Mat<F> mat_mul(const Mat<F>& x, const Mat<F>& y) {
  check(x.nc == y.nr, "mat_mul: shape mismatch");
  Mat<F> r(x.nr, y.nc);
  for (int i = 0; i < x.nr; ++i)
    for (int k = 0; k < x.nc; ++k) {
      if (FieldOps<F>::is_zero(x.at(i, k))) continue;
      for (int j = 0; j < y.nc; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

inline GMat gmat_mul(const GMat& x, const GMat& y) {
  check(x.nc == y.nr, "gmat_mul: shape mismatch");
  GMat r(x.nr, y.nc);
  for (int i = 0; i < x.nr; ++i)
    for (int k = 0; k < x.nc; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < y.nc; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

template <class F>
Mat<F> conj_transpose(const Mat<F>& x) {
  Mat<F> r(x.nc, x.nr);
  for (int i = 0; i < x.nr; ++i)
    for (int j = 0; j < x.nc; ++j) r.at(j, i) = FieldOps<F>::conj(x.at(i, j));
  return r;
}

inline GMat gmat_transpose(const GMat& x) {
  GMat r(x.nc, x.nr);
  for (int i = 0; i < x.nr; ++i)
    for (int j = 0; j < x.nc; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

inline GMat gmat_conj(const GMat& x) {
  GMat r = x;
  for (auto& e : r.a) e = e.conj();
  return r;
}

inline GMat gmat_conj_transpose(const GMat& x) {
  GMat r(x.nc, x.nr);
  for (int i = 0; i < x.nr; ++i)
    for (int j = 0; j < x.nc; ++j) r.at(j, i) = x.at(i, j).conj();
  return r;
}

inline QMat to_field(const GMat& x) {
  QMat r(x.nr, x.nc);
  for (size_t j = 0; j < x.a.size(); ++j) r.a[j] = GaussRat(x.a[j]);
  return r;
}

// In-place reduction to row echelon form; returns the pivot columns.
template <class F>
std::vector<int> row_echelon(Mat<F>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.nc && row < m.nr; ++col) {
    int pr = -1;
    for (int r = row; r < m.nr; ++r)
      if (!FieldOps<F>::is_zero(m.at(r, col))) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    for (int c = 0; c < m.nc; ++c) std::swap(m.at(row, c), m.at(pr, c));
    F inv = FieldOps<F>::one() / m.at(row, col);
    for (int c = col; c < m.nc; ++c) m.at(row, c) = m.at(row, c) * inv;
    for (int r = 0; r < m.nr; ++r) {
      if (r == row || FieldOps<F>::is_zero(m.at(r, col))) continue;
      F f = m.at(r, col);
      for (int c = col; c < m.nc; ++c) m.at(r, c) = m.at(r, c) - f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int mat_rank(Mat<F> m) {
  return static_cast<int>(row_echelon(m).size());
}

// Basis of the right kernel {x : m x = 0}, one vector per non-pivot column.
template <class F>
std::vector<std::vector<F>> right_kernel(Mat<F> m) {
  std::vector<int> piv = row_echelon(m);
  std::vector<bool> is_piv(m.nc, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<F>> ker;
  for (int free = 0; free < m.nc; ++free) {
    if (is_piv[free]) continue;
    std::vector<F> v(m.nc, FieldOps<F>::zero());
    v[free] = FieldOps<F>::one();
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = FieldOps<F>::zero() - m.at(static_cast<int>(r), free);
    ker.push_back(std::move(v));
  }
  return ker;
}

// Solve a X = b with square nonsingular a.
template <class F>
Mat<F> solve_right(Mat<F> a, Mat<F> b) {
  check(a.nr == a.nc && a.nr == b.nr, "solve_right: shape mismatch");
  Mat<F> m(a.nr, a.nc + b.nc);
  for (int r = 0; r < a.nr; ++r) {
    for (int c = 0; c < a.nc; ++c) m.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.nc; ++c) m.at(r, a.nc + c) = b.at(r, c);
  }
  std::vector<int> piv = row_echelon(m);
  check(static_cast<int>(piv.size()) == a.nr, "solve_right: singular matrix");
  Mat<F> x(a.nc, b.nc);
  for (int r = 0; r < a.nr; ++r)
    for (int c = 0; c < b.nc; ++c) x.at(r, c) = m.at(r, a.nc + c);
  return x;
}

template <class F>
Mat<F> mat_inverse(const Mat<F>& a) {
  return solve_right(a, Mat<F>::identity(a.nr, FieldOps<F>::one()));
}

template <class F>
F mat_det(Mat<F> m) {
  check(m.nr == m.nc, "mat_det: not square");
  F det = FieldOps<F>::one();
  for (int col = 0; col < m.nc; ++col) {
    int pr = -1;
    for (int r = col; r < m.nr; ++r)
      if (!FieldOps<F>::is_zero(m.at(r, col))) {
        pr = r;
        break;
      }
    if (pr < 0) return FieldOps<F>::zero();
    if (pr != col) {
      for (int c = 0; c < m.nc; ++c) std::swap(m.at(col, c), m.at(pr, c));
      det = FieldOps<F>::zero() - det;
    }
    det = det * m.at(col, col);
    F inv = FieldOps<F>::one() / m.at(col, col);
    for (int r = col + 1; r < m.nr; ++r) {
      if (FieldOps<F>::is_zero(m.at(r, col))) continue;
      F f = m.at(r, col) * inv;
      for (int c = col; c < m.nc; ++c) m.at(r, c) = m.at(r, c) - f * m.at(col, c);
    }
  }
  return det;
}

// ---- Hermite form over Z[i] -------------------------------------------------

// Componentwise floor division: remainder lands in the fundamental square
// [0,1)^2 of the pivot, which makes the fully reduced form canonical.
inline GaussInt div_floor_g(GaussInt a, GaussInt b) {
  GaussInt num = a * b.conj();
  i64 n = gnorm(b);
  auto fl = [&](i64 x) { return x >= 0 ? x / n : -((-x + n - 1) / n); };
  return {fl(num.re), fl(num.im)};
}

// Canonical row Hermite form of the module spanned by the rows (zero rows
// dropped, pivots canonical associates, entries above a pivot reduced into its
// fundamental square). Equal modules give equal forms.
inline GMat hnf_rows(GMat m) {
  int row = 0;
  std::vector<int> pivcol;
  for (int col = 0; col < m.nc && row < m.nr; ++col) {
    for (;;) {
      int best = -1;
      for (int r = row; r < m.nr; ++r)
        if (!m.at(r, col).is_zero() && (best < 0 || gnorm(m.at(r, col)) < gnorm(m.at(best, col))))
          best = r;
      if (best < 0) break;
      for (int c = 0; c < m.nc; ++c) std::swap(m.at(row, c), m.at(best, c));
      bool clean = true;
      for (int r = row + 1; r < m.nr; ++r) {
        if (m.at(r, col).is_zero()) continue;
        GaussInt q = div_round(m.at(r, col), m.at(row, col));
        for (int c = 0; c < m.nc; ++c) m.at(r, c) -= q * m.at(row, c);
        if (!m.at(r, col).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (row < m.nr && !m.at(row, col).is_zero()) {
      int k = 0;
      canon_unit(m.at(row, col), &k);
      GaussInt u = pow_i(k);
      for (int c = 0; c < m.nc; ++c) m.at(row, c) = m.at(row, c) * u;
      pivcol.push_back(col);
      ++row;
    }
  }
  int nr = row;
  // Reduce entries above each pivot into its fundamental square. Ascending
  // order matters: reducing above pivot r only touches columns right of it,
  // which later iterations clean up in turn.
  for (int r = 0; r < nr; ++r) {
    int col = pivcol[r];
    for (int r2 = 0; r2 < r; ++r2) {
      GaussInt q = div_floor_g(m.at(r2, col), m.at(r, col));
      if (q.is_zero()) continue;
      for (int c = 0; c < m.nc; ++c) m.at(r2, c) -= q * m.at(r, c);
    }
  }
  GMat out(nr, m.nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < m.nc; ++c) out.at(r, c) = m.at(r, c);
  return out;
}

// Membership of v in the module with Hermite form h.
inline bool hnf_member(const GMat& h, std::vector<GaussInt> v) {
  check(static_cast<int>(v.size()) == h.nc, "hnf_member: length mismatch");
  int r = 0;
  for (int c = 0; c < h.nc; ++c) {
    GaussInt piv = (r < h.nr) ? h.at(r, c) : G_ZERO;
    if (!piv.is_zero()) {
      if (!divides(piv, v[c])) return false;
      GaussInt q = div_exact(v[c], piv);
      if (!q.is_zero())
        for (int c2 = c; c2 < h.nc; ++c2) v[c2] -= q * h.at(r, c2);
      ++r;
    } else if (!v[c].is_zero()) {
      return false;
    }
  }
  return true;
}

// Modules given as (integer rows)/den; scales both to a common denominator.
struct ScaledModule {
  GMat rows;
  i64 den = 1;
};

inline GMat scale_rows(const GMat& m, i64 f) {
  GMat r = m;
  for (auto& x : r.a) x = x * GaussInt{f, 0};
  return r;
}

inline bool modules_equal(const ScaledModule& x, const ScaledModule& y) {
  i64 g = igcd(x.den, y.den);
  i64 l = cmul(x.den / g, y.den);
  return hnf_rows(scale_rows(x.rows, l / x.den)) == hnf_rows(scale_rows(y.rows, l / y.den));
}

inline bool module_contains(const ScaledModule& x, const ScaledModule& y) {
  i64 g = igcd(x.den, y.den);
  i64 l = cmul(x.den / g, y.den);
  GMat hx = hnf_rows(scale_rows(x.rows, l / x.den));
  GMat ys = scale_rows(y.rows, l / y.den);
  for (int r = 0; r < ys.nr; ++r) {
    std::vector<GaussInt> v(ys.nc);
    for (int c = 0; c < ys.nc; ++c) v[c] = ys.at(r, c);
    if (!hnf_member(hx, v)) return false;
  }
  return true;
}

// ---- exact LLL and Fincke-Pohst over Z --------------------------------------

// Gram-Schmidt data of an integer quadratic form, exact rationals.
struct Gso {
  int n = 0;
  std::vector<Rat> B;            // squared lengths of the GS vectors
  std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
};

inline Gso gso_of_gram(const IMat& g) {
  Gso s;
  s.n = g.nr;
  s.B.assign(s.n, Rat(0));
  s.mu.assign(s.n, std::vector<Rat>(s.n, Rat(0)));
  // d[i][j] = <b_i, b_j*>
  std::vector<std::vector<Rat>> d(s.n, std::vector<Rat>(s.n, Rat(0)));
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j <= i; ++j) {
      Rat v = Rat(g.at(i, j));
      for (int k = 0; k < j; ++k) v -= s.mu[j][k] * d[i][k];
      d[i][j] = v;
      if (j < i) {
        check(!s.B[j].is_zero(), "gso: degenerate form");
        s.mu[i][j] = v / s.B[j];
      }
    }
    s.B[i] = d[i][i];
    check(s.B[i].sign() > 0, "gso: form not positive definite");
  }
  return s;
}

// Exact LLL (delta = 3/4) on a positive definite integer Gram matrix.
// Returns the unimodular transform U; the reduced Gram is U g U^T.
inline IMat lll_reduce(const IMat& g) {
  int n = g.nr;
  IMat u = IMat::identity(n, 1);
  IMat cur = g;
  auto recompute = [&]() { return gso_of_gram(cur); };
  auto row_op = [&](int dst, int src, i64 q) {
    // b_dst -= q b_src
    for (int c = 0; c < n; ++c) u.at(dst, c) = csub(u.at(dst, c), cmul(q, u.at(src, c)));
    for (int c = 0; c < n; ++c) cur.at(dst, c) = csub(cur.at(dst, c), cmul(q, cur.at(src, c)));
    for (int r = 0; r < n; ++r) cur.at(r, dst) = csub(cur.at(r, dst), cmul(q, cur.at(r, src)));
  };
  auto swap_rows = [&](int i, int j) {
    for (int c = 0; c < n; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int c = 0; c < n; ++c) std::swap(cur.at(i, c), cur.at(j, c));
    for (int r = 0; r < n; ++r) std::swap(cur.at(r, i), cur.at(r, j));
  };
  Gso s = recompute();
  int k = 1;
  while (k < n) {
    for (int j = k - 1; j >= 0; --j) {
      Rat m = s.mu[k][j];
      if (rabs(m) * Rat(2) > Rat(1)) {
        i64 q = (2 * m.num + (m.num > 0 ? m.den : -m.den)) / (2 * m.den);
        row_op(k, j, q);
        s = recompute();
      }
    }
    Rat lhs = s.B[k] + s.mu[k][k - 1] * s.mu[k][k - 1] * s.B[k - 1];
    if (lhs * Rat(4) < s.B[k - 1] * Rat(3)) {
      swap_rows(k, k - 1);
      s = recompute();
      k = k > 1 ? k - 1 : 1;
    } else {
      ++k;
    }
  }
  return u;
}

}  // namespace gausslat
