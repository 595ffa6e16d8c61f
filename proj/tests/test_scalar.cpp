#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gausslat/cyclo.hpp"
#include "gausslat/gauss.hpp"
#include "gausslat/rng.hpp"

using namespace gausslat;

static GaussInt rnd_gauss(SplitMix64& rng, i64 box) {
  return {rng.in_range(-box, box), rng.in_range(-box, box)};
}

TEST_CASE("gaussian integer basics") {
  GaussInt a{3, -2}, b{-1, 4};
  CHECK(a + b == GaussInt{2, 2});
  CHECK(a * b == GaussInt{5, 14});
  CHECK(a.conj() == GaussInt{3, 2});
  CHECK(a.times_i() == GaussInt{2, 3});
  CHECK(gnorm(a) == 13);
  CHECK(G_P * G_PBAR == GaussInt{2, 0});
  CHECK(G_P.conj() == G_PBAR);
  CHECK(gnorm(G_P) == 2);
}

TEST_CASE("divisibility by 1+i") {
  // p | z exactly when re+im is even, i.e. exactly when the norm is even
  SplitMix64 rng(7);
  for (int t = 0; t < 500; ++t) {
    GaussInt z = rnd_gauss(rng, 50);
    CHECK(p_divides(z) == (gnorm(z) % 2 == 0));
    if (p_divides(z)) {
      CHECK(mul_p(div_p(z)) == z);
      CHECK(div_p(z) == div_exact(z, G_P));
    }
  }
  CHECK(div_p(GaussInt{2, 0}) == G_PBAR);
  CHECK(mul_p(G_ONE) == G_P);
}

TEST_CASE("rounded division is a true Euclidean step") {
  SplitMix64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    GaussInt a = rnd_gauss(rng, 1000);
    GaussInt b = rnd_gauss(rng, 40);
    if (b.is_zero()) continue;
    GaussInt q = div_round(a, b);
    GaussInt r = a - q * b;
    // remainder norm at most half the divisor norm; this is what makes
    // gcd terminate
    CHECK(2 * gnorm(r) <= gnorm(b));
  }
}

TEST_CASE("gcd divides both arguments") {
  SplitMix64 rng(13);
  for (int t = 0; t < 500; ++t) {
    GaussInt a = rnd_gauss(rng, 200);
    GaussInt b = rnd_gauss(rng, 200);
    GaussInt g = ggcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    CHECK(divides(g, a));
    CHECK(divides(g, b));
  }
  CHECK(gnorm(ggcd(GaussInt{6, 0}, GaussInt{0, 10})) == 4);  // gcd(6,10i) ~ 2
}

TEST_CASE("canonical unit normalisation") {
  for (GaussInt z : {GaussInt{3, 1}, GaussInt{-3, -1}, GaussInt{-1, 3}, GaussInt{1, -3}}) {
    int k = 0;
    GaussInt c = canon_unit(z, &k);
    CHECK(c == GaussInt{3, 1});
    CHECK(c == z * pow_i(k));
  }
  CHECK(canon_unit(G_ZERO) == G_ZERO);
  // canonical representative has re > 0, im >= 0
  SplitMix64 rng(17);
  for (int t = 0; t < 200; ++t) {
    GaussInt z = rnd_gauss(rng, 30);
    if (z.is_zero()) continue;
    GaussInt c = canon_unit(z);
    CHECK(c.re > 0);
    CHECK(c.im >= 0);
  }
}

TEST_CASE("gauss_ball sizes") {
  CHECK(gauss_ball(0).size() == 1);
  CHECK(gauss_ball(1).size() == 5);
  CHECK(gauss_ball(2).size() == 9);
  // no norm lands strictly between 2 and 4
  CHECK(gauss_ball(3).size() == gauss_ball(2).size());
  CHECK(gauss_ball(4).size() == 13);
  for (GaussInt z : gauss_ball(5)) CHECK(gnorm(z) <= 5);
}

TEST_CASE("rational arithmetic stays reduced") {
  Rat a(3, 6);
  CHECK(a == Rat(1, 2));
  CHECK(a + a == Rat(1));
  CHECK(Rat(1) / Rat(1, 2) == Rat(2));
  CHECK(Rat(-2, 4) == Rat(1, -2));
  CHECK(Rat(2, 3) * Rat(3, 2) == Rat(1));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(rabs(Rat(-5, 7)) == Rat(5, 7));
}

TEST_CASE("gaussian rational division") {
  // regression: dividing by a non-integral value must account for its
  // denominator
  GaussRat half(G_ONE, 2);
  CHECK(GaussRat(1) / half == GaussRat(2));
  CHECK(half / half == GaussRat(1));
  GaussRat z(GaussInt{3, -5}, 7);
  CHECK(z / z == GaussRat(1));
  CHECK(z * z.conj() == GaussRat(GaussInt{34, 0}, 49));
  SplitMix64 rng(19);
  for (int t = 0; t < 300; ++t) {
    GaussRat x(rnd_gauss(rng, 20), rng.in_range(1, 9));
    GaussRat y(rnd_gauss(rng, 20), rng.in_range(1, 9));
    if (y.is_zero()) continue;
    CHECK((x / y) * y == x);
  }
}

TEST_CASE("eighth roots of unity") {
  Cyclo8 z = Cyclo8::zeta(1);
  Cyclo8 pw(Rat(1));
  for (int k = 0; k < 8; ++k) {
    CHECK(pw == Cyclo8::zeta(k));
    pw *= z;
  }
  CHECK(pw == Cyclo8(Rat(1)));             // z^8 = 1
  CHECK(Cyclo8::zeta(2) == Cyclo8::from(GaussRat(G_I)));
  CHECK(Cyclo8::zeta(1) * Cyclo8::zeta(7) == Cyclo8(Rat(1)));
}

TEST_CASE("cyclotomic inverse and conjugation") {
  SplitMix64 rng(23);
  for (int t = 0; t < 200; ++t) {
    Cyclo8 x(Rat(rng.in_range(-5, 5)), Rat(rng.in_range(-5, 5)), Rat(rng.in_range(-5, 5)),
             Rat(rng.in_range(-5, 5)));
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == Cyclo8(Rat(1)));
    CHECK(x.conj().conj() == x);
    // |x|^2 lands in the real subfield and is positive
    RealQuad n = cy_abs2(x);
    CHECK(rq_sign(n) == 1);
  }
  CHECK(cy_abs2(Cyclo8(Rat(1), Rat(1), Rat(0), Rat(0))) == RealQuad(Rat(2), Rat(1)));
}

TEST_CASE("galois twists are field maps") {
  Cyclo8 x(Rat(1), Rat(2), Rat(0), Rat(-1));
  Cyclo8 y(Rat(3), Rat(0), Rat(-2), Rat(1));
  for (int k : {1, 3, 5, 7}) {
    CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
    CHECK((x + y).galois(k) == x.galois(k) + y.galois(k));
  }
  // product over the full orbit is the field norm, a rational
  Cyclo8 n = x * x.galois(3) * x.galois(5) * x.galois(7);
  CHECK(n.c[1].is_zero());
  CHECK(n.c[2].is_zero());
  CHECK(n.c[3].is_zero());
}

TEST_CASE("real quadratic ordering") {
  RealQuad r2(Rat(0), Rat(1));  // sqrt2
  CHECK(r2 > RealQuad(1));
  CHECK(r2 < RealQuad(Rat(3, 2)));
  CHECK(r2 * r2 == RealQuad(2));
  CHECK(rq_sign(RealQuad(Rat(-3), Rat(2))) < 0);   // 2 sqrt2 < 3
  CHECK(rq_sign(RealQuad(Rat(-14, 5), Rat(2))) > 0);  // 2 sqrt2 > 14/5
  RealQuad x(Rat(5, 3), Rat(-1, 2));
  CHECK(x * x.inverse() == RealQuad(1));
  CHECK(x.galois() * x == RealQuad(x.a * x.a - Rat(2) * x.b * x.b));
}

TEST_CASE("cutoff comparison against cosh + sinh") {
  // c = 1: the bound degenerates to x <= e
  CHECK(le_cosh_plus_sinh_times(RealQuad(1), RealQuad(1), RealQuad(1)));
  CHECK(!le_cosh_plus_sinh_times(RealQuad(Rat(11, 10)), RealQuad(1), RealQuad(1)));
  // c = 3/2: cutoff is (3 + sqrt5)/2 = 2.618..., test both sides
  RealQuad c(Rat(3, 2));
  CHECK(le_cosh_plus_sinh_times(RealQuad(Rat(26, 10)), c, RealQuad(1)));
  CHECK(!le_cosh_plus_sinh_times(RealQuad(Rat(27, 10)), c, RealQuad(1)));
  // scales linearly in e
  CHECK(le_cosh_plus_sinh_times(RealQuad(Rat(52, 10)), c, RealQuad(2)));
  CHECK(!le_cosh_plus_sinh_times(RealQuad(Rat(54, 10)), c, RealQuad(2)));
}
