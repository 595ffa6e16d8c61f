#include "gausslat/isometry.hpp"

namespace gausslat {

GVec apply_iso_vec(const Isometry& g, const GVec& x) {
  check(static_cast<int>(x.size()) == g.m.nr, "apply_iso_vec: wrong length");
  GVec y(g.m.nc, G_ZERO);
  for (int j = 0; j < g.m.nr; ++j) {
    if (x[j].is_zero()) continue;
    for (int c = 0; c < g.m.nc; ++c) y[c] += x[j] * g.m.at(j, c);
  }
  return y;
}

Isometry iso_compose(const Isometry& first, const Isometry& then) {
  check(first.frame == then.frame, "iso_compose: frame mismatch");
  return {first.frame, gmat_mul(first.m, then.m)};
}

Isometry iso_identity(const HermLattice& lat) {
  return {lat.frame, GMat::identity(lat.rank, G_ONE)};
}

Isometry iso_inverse(const Isometry& g) {
  QMat inv = mat_inverse(to_field(g.m));
  GMat m(inv.nr, inv.nc);
  for (size_t j = 0; j < inv.a.size(); ++j) {
    check(inv.a[j].is_integral(), "iso_inverse: inverse not integral");
    m.a[j] = inv.a[j].to_gauss();
  }
  return {g.frame, std::move(m)};
}

bool preserves_form(const HermLattice& lat, const GMat& m) {
  return gmat_mul(gmat_mul(gmat_conj(m), lat.gram), gmat_transpose(m)) == lat.gram;
}

Isometry reflection(const HermLattice& lat, const GVec& v, int xi_exp) {
  check(xi_exp >= 1 && xi_exp <= 3, "reflection: xi must be i, -1 or -i");
  GaussInt v2 = norm2(lat, v);
  check(!v2.is_zero(), "reflection: isotropic vector");
  GaussInt one_minus_xi = G_ONE - pow_i(xi_exp);
  // w = conj(v) Gram, so <v,x> = w . x
  GVec w(lat.rank, G_ZERO);
  for (int j = 0; j < lat.rank; ++j) {
    Gauss128 acc{0, 0};
    for (int k = 0; k < lat.rank; ++k) acc += widen(v[k]).conj() * widen(lat.gram.at(k, j));
    w[j] = narrow(acc);
  }
  GMat m = GMat::identity(lat.rank, G_ONE);
  for (int j = 0; j < lat.rank; ++j) {
    if (w[j].is_zero()) continue;
    for (int k = 0; k < lat.rank; ++k) {
      if (v[k].is_zero()) continue;
      GaussInt num = one_minus_xi * w[j] * v[k];
      check(divides(v2, num), "reflection: not integral on this lattice");
      m.at(j, k) -= div_exact(num, v2);
    }
  }
  check(preserves_form(lat, m), "reflection: form not preserved");
  return {lat.frame, std::move(m)};
}

GVec reflect_vec(const HermLattice& lat, const GVec& v, int xi_exp, const GVec& x) {
  GaussInt v2 = norm2(lat, v);
  GaussInt num = (G_ONE - pow_i(xi_exp)) * inner(lat, v, x);
  check(divides(v2, num), "reflect_vec: not integral");
  GaussInt c = div_exact(num, v2);
  GVec y = x;
  for (size_t j = 0; j < y.size(); ++j) y[j] -= c * v[j];
  return y;
}

bool reflections_commute(const HermLattice& lat, const GVec& s, const GVec& t) {
  GMat a = reflection(lat, s, 1).m, b = reflection(lat, t, 1).m;
  return gmat_mul(a, b) == gmat_mul(b, a);
}

bool reflections_braid(const HermLattice& lat, const GVec& s, const GVec& t) {
  GMat a = reflection(lat, s, 1).m, b = reflection(lat, t, 1).m;
  return gmat_mul(gmat_mul(a, b), a) == gmat_mul(gmat_mul(b, a), b);
}

bool reflections_dot_braid(const HermLattice& lat, const GVec& s, const GVec& t) {
  GMat a = reflection(lat, s, 1).m, b = reflection(lat, t, 1).m;
  GMat ab = gmat_mul(a, b), ba = gmat_mul(b, a);
  return gmat_mul(ab, ab) == gmat_mul(ba, ba);
}

Isometry lift_to_isometry(const HermLattice& L, const RootConfig& cfg, const VPerm& g) {
  check(L.rank == 10, "lift_to_isometry: rank-10 lattice expected");
  bool swap = side_swapping(g);
  auto image = [&](int v) {
    GVec r = cfg.roots[g[v]];
    if (swap && v < 16)
      for (GaussInt& x : r) x = -x.times_i();  // point roots pick up -i
    return r;
  };

  // ten roots that are independent over Q(i), found greedily
  std::vector<int> chosen;
  for (int v = 0; v < 32 && chosen.size() < 10; ++v) {
    chosen.push_back(v);
    QMat m(static_cast<int>(chosen.size()), 10);
    for (size_t r = 0; r < chosen.size(); ++r)
      for (int j = 0; j < 10; ++j) m.at(static_cast<int>(r), j) = GaussRat(cfg.roots[chosen[r]][j]);
    if (mat_rank(m) < static_cast<int>(chosen.size())) chosen.pop_back();
  }
  check(chosen.size() == 10, "lift_to_isometry: roots failed to span");

  QMat a(10, 10), b(10, 10);
  for (int r = 0; r < 10; ++r) {
    GVec im_r = image(chosen[r]);
    for (int j = 0; j < 10; ++j) {
      a.at(r, j) = GaussRat(cfg.roots[chosen[r]][j]);
      b.at(r, j) = GaussRat(im_r[j]);
    }
  }
  QMat mq = solve_right(a, b);
  Isometry iso{L.frame, GMat(10, 10)};
  for (int r = 0; r < 10; ++r)
    for (int j = 0; j < 10; ++j) {
      check(mq.at(r, j).is_integral(), "lift_to_isometry: lift must be integral");
      iso.m.at(r, j) = mq.at(r, j).to_gauss();
    }

  for (int v = 0; v < 32; ++v)
    check(apply_iso_vec(iso, cfg.roots[v]) == image(v), "lift_to_isometry: root image mismatch");
  check(preserves_form(L, iso.m), "lift_to_isometry: form not preserved");
  return iso;
}

bool cyclic_relation_holds(const std::vector<Isometry>& gens, int m, int offset) {
  int k = static_cast<int>(gens.size());
  check(k > 0 && m >= 1, "cyclic_relation_holds: bad arguments");
  auto prod = [&](int from) {
    GMat acc = GMat::identity(gens[0].m.nr, G_ONE);
    for (int j = 0; j < m; ++j) acc = gmat_mul(acc, gens[(from + j) % k].m);
    return acc;
  };
  return prod(offset) == prod(offset + 1);
}

// ---- translations -------------------------------------------------------------

namespace {

GVec pad10(const GVec& lam) {
  check(lam.size() == 8, "translation: lambda has 8 coordinates");
  GVec full(10, G_ZERO);
  for (int j = 0; j < 8; ++j) full[j] = lam[j];
  return full;
}

}  // namespace

Translation make_translation(const HermLattice& L, const GVec& lam, GaussInt z) {
  check(L.rank == 10, "make_translation: rank-10 lattice expected");
  GVec full = pad10(lam);
  GaussInt lam2 = norm2(L, full);
  check(lam2.im == 0 && lam2.re % 2 == 0, "translation: bad lambda norm");
  i64 half = lam2.re / 2;
  check(z.re == 0, "translation: z must be purely imaginary");
  check((z.im - half) % 2 == 0, "translation: z/i must be lambda^2/2 mod 2");

  GMat m = GMat::identity(10, G_ONE);
  for (int j = 0; j < 8; ++j) {
    GVec ej(10, G_ZERO);
    ej[j] = G_ONE;
    GaussInt ip = inner(L, full, ej);
    check(p_divides(ip), "translation: inner product outside (1+i)G");
    m.at(j, 9) = -div_exact(ip, G_PBAR);  // -<lam, b_j>/conj(p) on the rho coordinate
  }
  for (int j = 0; j < 8; ++j) m.at(8, j) = lam[j];
  GaussInt num = z - GaussInt{half, 0};
  check(p_divides(num), "translation: z - lambda^2/2 not divisible by conj(p)");
  m.at(8, 9) = div_exact(num, G_PBAR);
  check(preserves_form(L, m), "translation: form not preserved");
  return {lam, z, {L.frame, std::move(m)}};
}

Translation trans_mul(const HermLattice& L, const Translation& outer, const Translation& inner) {
  GVec lam(8);
  for (int j = 0; j < 8; ++j) lam[j] = outer.lam[j] + inner.lam[j];
  // Im<lam', lam> with Im(w) = (w - conj w)/2
  GaussInt w = gausslat::inner(L, pad10(inner.lam), pad10(outer.lam));
  GaussInt z = outer.z + inner.z + GaussInt{0, w.im};
  return make_translation(L, lam, z);
}

Translation trans_inverse(const HermLattice& L, const Translation& t) {
  GVec lam(8);
  for (int j = 0; j < 8; ++j) lam[j] = -t.lam[j];
  return make_translation(L, lam, -t.z);
}

Translation trans_commutator(const HermLattice& L, const Translation& t, const Translation& tp) {
  Translation a = trans_mul(L, t, tp);
  Translation b = trans_mul(L, a, trans_inverse(L, t));
  return trans_mul(L, b, trans_inverse(L, tp));
}

std::vector<Translation> tstar_reps(const HermLattice& L) {
  std::vector<Translation> out;
  out.reserve(512);
  for (int mask = 0; mask < 256; ++mask) {
    GVec lam(8, G_ZERO);
    for (int j = 0; j < 8; ++j)
      if (mask & (1 << j)) lam[j] = G_ONE;
    GaussInt lam2 = norm2(L, pad10(lam));
    i64 half = lam2.re / 2;
    out.push_back(make_translation(L, lam, GaussInt{0, half}));
    out.push_back(make_translation(L, lam, GaussInt{0, half + 2}));
  }
  return out;
}

bool r1r2_identity(const HermLattice& L) {
  GVec r1(10, G_ZERO), r2(10, G_ZERO);
  r1[8] = G_ONE;
  r1[9] = G_ONE;
  r2[8] = G_ONE;
  r2[9] = G_I;
  check(norm2(L, r1) == GaussInt{2, 0} && norm2(L, r2) == GaussInt{2, 0},
        "r1r2_identity: expected norm-2 vectors");
  GMat m1 = reflection(L, r1, 1).m, m2 = reflection(L, r2, 1).m;
  GMat lhs = gmat_mul(m2, m1);  // R1 o R2: R2 acts first

  GMat beta = GMat::identity(10, G_ONE);
  beta.at(8, 8) = -G_I;
  beta.at(9, 9) = -G_I;
  GMat mt = make_translation(L, GVec(8, G_ZERO), GaussInt{0, -4}).iso.m;
  return lhs == gmat_mul(mt, beta);
}

}  // namespace gausslat
