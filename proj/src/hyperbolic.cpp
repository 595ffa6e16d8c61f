#include "gausslat/hyperbolic.hpp"

namespace gausslat {

CyVec to_cyvec(const GVec& v) {
  CyVec r(v.size());
  for (size_t j = 0; j < v.size(); ++j) r[j] = Cyclo8::from(GaussRat(v[j]));
  return r;
}

Cyclo8 inner_cy(const HermLattice& lat, const CyVec& u, const CyVec& v) {
  check(static_cast<int>(u.size()) == lat.rank && static_cast<int>(v.size()) == lat.rank,
        "inner_cy: wrong length");
  Cyclo8 acc;
  for (int j = 0; j < lat.rank; ++j) {
    if (u[j].is_zero()) continue;
    Cyclo8 row;
    for (int k = 0; k < lat.rank; ++k) {
      if (v[k].is_zero()) continue;
      row = row + Cyclo8::from(GaussRat(lat.gram.at(j, k))) * v[k];
    }
    acc = acc + u[j].conj() * row;
  }
  return acc;
}

namespace {

RealQuad real_part(const Cyclo8& x) {
  // the values we take real parts of are Hermitian squares, already real
  check(x.c[2].is_zero() && x.c[1] == -x.c[3], "real_part: not in Q(sqrt2)");
  return {x.c[0], x.c[1]};
}

}  // namespace

RealQuad cosh2_pt_pt(const HermLattice& lat, const CyVec& u, const CyVec& v) {
  RealQuad u2 = real_part(inner_cy(lat, u, u));
  RealQuad v2 = real_part(inner_cy(lat, v, v));
  check(rq_sign(u2) < 0 && rq_sign(v2) < 0, "cosh2_pt_pt: points must have negative norm");
  return cy_abs2(inner_cy(lat, u, v)) / (u2 * v2);
}

RealQuad sinh2_pt_mirror(const HermLattice& lat, const GVec& r, const CyVec& z) {
  GaussInt r2 = norm2(lat, r);
  check(r2.im == 0 && r2.re > 0, "sinh2_pt_mirror: mirror vector must have positive norm");
  RealQuad z2 = real_part(inner_cy(lat, z, z));
  check(rq_sign(z2) < 0, "sinh2_pt_mirror: point must have negative norm");
  return cy_abs2(inner_cy(lat, to_cyvec(r), z)) / (-z2 * RealQuad(Rat(r2.re)));
}

bool mirrors_meet(const HermLattice& lat, const GVec& r, const GVec& s) {
  GaussInt r2 = norm2(lat, r), s2 = norm2(lat, s);
  check(r2.re > 0 && s2.re > 0, "mirrors_meet: need positive-norm vectors");
  // 2x2 Hermitian gram is positive definite iff the determinant is positive.
  i64 det = cmul(r2.re, s2.re) - gnorm(inner(lat, r, s));
  return det > 0;
}

Rat cosh2_mirror_mirror(const HermLattice& lat, const GVec& r, const GVec& s) {
  GaussInt r2 = norm2(lat, r), s2 = norm2(lat, s);
  check(!mirrors_meet(lat, r, s), "cosh2_mirror_mirror: mirrors intersect");
  return Rat(gnorm(inner(lat, r, s)), cmul(r2.re, s2.re));
}

RealQuad horo_exp2(const HermLattice& lat, const GVec& z, const CyVec& v) {
  check(norm2(lat, z).is_zero(), "horo_exp2: first argument must be null");
  RealQuad v2 = real_part(inner_cy(lat, v, v));
  check(rq_sign(v2) < 0, "horo_exp2: point must have negative norm");
  return cy_abs2(inner_cy(lat, to_cyvec(z), v)) / (-v2);
}

i64 height(const HermLattice& lat, const GVec& s, const GVec& rho) {
  i64 num = gnorm(inner(lat, s, rho));
  GaussInt s2 = norm2(lat, s);
  check(s2.im == 0, "height: norm not rational");
  if (s2.re == 0) return num;
  i64 d = iabs(s2.re);
  check(num % d == 0, "height: not integral");
  return num / d;
}

bool ideal_triangle_ok(const HermLattice& lat, const CyVec& z, const CyVec& x, const CyVec& y) {
  std::array<const CyVec*, 3> v = {&z, &x, &y};
  std::array<std::array<Cyclo8, 3>, 3> g;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) g[a][b] = inner_cy(lat, *v[a], *v[b]);
  check(real_part(g[0][0]).a.is_zero() && real_part(g[0][0]).b.is_zero(),
        "ideal_triangle_ok: first vertex must be null");
  // det of the Hermitian 3x3 gram; real by symmetry.
  Cyclo8 det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
               g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
               g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  return rq_sign(real_part(det)) <= 0;
}

}  // namespace gausslat
