#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gausslat/linalg.hpp"
#include "gausslat/rng.hpp"

using namespace gausslat;

static QMat rnd_qmat(SplitMix64& rng, int n) {
  QMat m(n, n);
  for (auto& e : m.a) e = GaussRat(GaussInt{rng.in_range(-6, 6), rng.in_range(-6, 6)});
  return m;
}

static GMat rnd_gmat(SplitMix64& rng, int r, int c, i64 box) {
  GMat m(r, c);
  for (auto& e : m.a) e = GaussInt{rng.in_range(-box, box), rng.in_range(-box, box)};
  return m;
}

// random elementary row operations: the module spanned by the rows never
// changes
static GMat shuffle_rows(SplitMix64& rng, GMat m, int steps) {
  for (int t = 0; t < steps; ++t) {
    int r1 = static_cast<int>(rng.below(m.nr));
    int r2 = static_cast<int>(rng.below(m.nr));
    switch (rng.below(3)) {
      case 0:
        if (r1 != r2)
          for (int c = 0; c < m.nc; ++c) std::swap(m.at(r1, c), m.at(r2, c));
        break;
      case 1: {
        GaussInt u = pow_i(static_cast<int>(rng.below(4)));
        for (int c = 0; c < m.nc; ++c) m.at(r1, c) = m.at(r1, c) * u;
        break;
      }
      default: {
        if (r1 == r2) break;
        GaussInt q{rng.in_range(-3, 3), rng.in_range(-3, 3)};
        for (int c = 0; c < m.nc; ++c) m.at(r1, c) += q * m.at(r2, c);
        break;
      }
    }
  }
  return m;
}

TEST_CASE("echelon rank and kernel dimensions") {
  QMat m(3, 4);
  // rows 0 and 2 proportional
  GaussInt vals[4] = {{1, 0}, {2, 0}, {0, 1}, {1, 1}};
  for (int c = 0; c < 4; ++c) {
    m.at(0, c) = GaussRat(vals[c]);
    m.at(1, c) = GaussRat(GaussInt{0, c % 2});
    m.at(2, c) = GaussRat(vals[c]) * GaussRat(GaussInt{0, 3});
  }
  CHECK(mat_rank(m) == 2);
  auto ker = right_kernel(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker)
    for (int r = 0; r < m.nr; ++r) {
      GaussRat acc;
      for (int c = 0; c < m.nc; ++c) acc += m.at(r, c) * v[c];
      CHECK(acc.is_zero());
    }
}

TEST_CASE("solve and invert random matrices") {
  SplitMix64 rng(31);
  int solved = 0;
  for (int t = 0; t < 40; ++t) {
    QMat a = rnd_qmat(rng, 4);
    if (mat_rank(a) < 4) continue;
    ++solved;
    QMat inv = mat_inverse(a);
    CHECK(mat_mul(a, inv) == QMat::identity(4, FieldOps<GaussRat>::one()));
    QMat b = rnd_qmat(rng, 4);
    QMat x = solve_right(a, b);
    CHECK(mat_mul(a, x) == b);
  }
  CHECK(solved > 30);  // singular 4x4s should be rare
}

TEST_CASE("determinant is multiplicative") {
  SplitMix64 rng(37);
  for (int t = 0; t < 25; ++t) {
    QMat a = rnd_qmat(rng, 3);
    QMat b = rnd_qmat(rng, 3);
    CHECK(mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b));
  }
}

TEST_CASE("floor division lands in the fundamental square") {
  SplitMix64 rng(41);
  for (int t = 0; t < 1000; ++t) {
    GaussInt a{rng.in_range(-50, 50), rng.in_range(-50, 50)};
    GaussInt b{rng.in_range(-8, 8), rng.in_range(-8, 8)};
    if (b.is_zero()) continue;
    GaussInt q = div_floor_g(a, b);
    GaussInt r = a - q * b;
    // r/b in [0,1)^2 means 0 <= Re(r conj(b)) < |b|^2, same for Im
    GaussInt num = r * b.conj();
    i64 n = gnorm(b);
    CHECK(num.re >= 0);
    CHECK(num.re < n);
    CHECK(num.im >= 0);
    CHECK(num.im < n);
  }
}

TEST_CASE("hermite form is canonical") {
  // the form must depend only on the module, not on the generators handed in
  SplitMix64 rng(43);
  for (int t = 0; t < 60; ++t) {
    GMat m = rnd_gmat(rng, 4, 4, 5);
    GMat h = hnf_rows(m);
    for (int s = 0; s < 4; ++s) {
      GMat m2 = shuffle_rows(rng, m, 12);
      CHECK(hnf_rows(m2) == h);
    }
  }
}

TEST_CASE("hermite form with redundant generators") {
  SplitMix64 rng(47);
  for (int t = 0; t < 40; ++t) {
    GMat m = rnd_gmat(rng, 3, 3, 4);
    GMat h = hnf_rows(m);
    // append sums of rows; the module is unchanged
    GMat big(5, 3);
    for (int c = 0; c < 3; ++c) {
      for (int r = 0; r < 3; ++r) big.at(r, c) = m.at(r, c);
      big.at(3, c) = m.at(0, c) + m.at(1, c);
      big.at(4, c) = m.at(1, c) - m.at(2, c).times_i();
    }
    CHECK(hnf_rows(big) == h);
  }
}

TEST_CASE("hermite membership") {
  GMat m(2, 2);
  m.at(0, 0) = GaussInt{1, 1};
  m.at(0, 1) = G_ZERO;
  m.at(1, 0) = G_ZERO;
  m.at(1, 1) = GaussInt{1, 1};
  GMat h = hnf_rows(m);  // pG + pG
  CHECK(hnf_member(h, {GaussInt{1, 1}, GaussInt{2, 0}}));
  CHECK(hnf_member(h, {GaussInt{0, 0}, GaussInt{0, 0}}));
  CHECK(!hnf_member(h, {GaussInt{1, 0}, GaussInt{0, 0}}));
  CHECK(!hnf_member(h, {GaussInt{1, 1}, GaussInt{0, 1}}));

  SplitMix64 rng(53);
  for (int t = 0; t < 200; ++t) {
    GMat g = rnd_gmat(rng, 3, 3, 4);
    GMat hn = hnf_rows(g);
    if (hn.nr < 3) continue;
    // every generator row is a member
    for (int r = 0; r < 3; ++r) CHECK(hnf_member(hn, {g.at(r, 0), g.at(r, 1), g.at(r, 2)}));
  }
}

TEST_CASE("scaled module comparisons") {
  GMat a(2, 2);
  a.at(0, 0) = GaussInt{2, 0};
  a.at(1, 1) = GaussInt{2, 0};
  GMat b(2, 2);
  b.at(0, 0) = G_ONE;
  b.at(1, 1) = G_ONE;
  // (2G^2)/2 = G^2 = (G^2)/1
  CHECK(modules_equal({a, 2}, {b, 1}));
  CHECK(module_contains({b, 1}, {a, 1}));      // 2G^2 inside G^2
  CHECK(!module_contains({a, 1}, {b, 1}));
  CHECK(module_contains({b, 2}, {b, 1}));      // G^2 inside (1/2)G^2
}

TEST_CASE("gram-schmidt of a known form") {
  IMat g(2, 2);
  g.at(0, 0) = 2;
  g.at(0, 1) = 1;
  g.at(1, 0) = 1;
  g.at(1, 1) = 3;
  Gso s = gso_of_gram(g);
  CHECK(s.B[0] == Rat(2));
  CHECK(s.mu[1][0] == Rat(1, 2));
  CHECK(s.B[1] == Rat(5, 2));  // 3 - 1/2
}

TEST_CASE("lll returns a unimodular transform") {
  SplitMix64 rng(59);
  auto to_q = [](const IMat& m) {
    QMat q(m.nr, m.nc);
    for (size_t j = 0; j < m.a.size(); ++j) q.a[j] = GaussRat(m.a[j]);
    return q;
  };
  for (int t = 0; t < 20; ++t) {
    // build a positive definite gram as b b^T from random integer rows
    IMat b(3, 3);
    for (auto& e : b.a) e = rng.in_range(-4, 4);
    IMat g(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        i64 acc = 0;
        for (int k = 0; k < 3; ++k) acc += b.at(r, k) * b.at(c, k);
        g.at(r, c) = acc;
      }
    bool singular = false;
    for (int r = 0; r < 3; ++r)
      if (g.at(r, r) == 0) singular = true;
    if (singular || mat_rank(to_q(g)) < 3) continue;

    IMat u = lll_reduce(g);
    QMat det = to_q(u);
    GaussRat d = mat_det(det);
    CHECK((d == GaussRat(1) || d == GaussRat(-1)));
    // reduced gram stays positive definite and integral
    QMat red = mat_mul(mat_mul(to_q(u), to_q(g)), conj_transpose(to_q(u)));
    Gso s;
    IMat ri(3, 3);
    for (int j = 0; j < 9; ++j) {
      CHECK(red.a[j].is_integral());
      ri.a[j] = red.a[j].to_gauss().re;
    }
    s = gso_of_gram(ri);  // aborts if not positive definite
    // standard LLL guarantee at delta = 3/4: |b1|^2 <= 2^(n-1) lambda1^2,
    // and lambda1^2 is at most the shortest input row
    i64 shortest = g.at(0, 0);
    for (int r = 1; r < 3; ++r) shortest = std::min(shortest, g.at(r, r));
    CHECK(ri.at(0, 0) <= 4 * shortest);
  }
}
