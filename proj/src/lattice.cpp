#include "gausslat/lattice.hpp"

#include <array>

#include "gausslat/fingeom.hpp"

namespace gausslat {

namespace {

GaussRat GR(i64 re, i64 im, i64 den = 1) { return GaussRat(GaussInt{re, im}, den); }

// gram = conj(B) F B^T
QMat gram_of(const QMat& basis, const QMat& form) {
  QMat g(basis.nr, basis.nr);
  for (int r = 0; r < basis.nr; ++r)
    for (int s = 0; s < basis.nr; ++s) {
      GaussRat acc;
      for (int j = 0; j < basis.nc; ++j)
        for (int k = 0; k < basis.nc; ++k)
          acc = acc + basis.at(r, j).conj() * form.at(j, k) * basis.at(s, k);
      g.at(r, s) = acc;
    }
  return g;
}

GMat to_gmat(const QMat& q, const char* what) {
  GMat g(q.nr, q.nc);
  for (size_t j = 0; j < q.a.size(); ++j) {
    check(q.a[j].is_integral(), what);
    g.a[j] = q.a[j].to_gauss();
  }
  return g;
}

void finish(HermLattice& lat) {
  lat.rank = lat.basis.nr;
  QMat g = gram_of(lat.basis, lat.ambient_form);
  lat.gram = to_gmat(g, "lattice gram must be Gaussian-integral");
  for (int r = 0; r < lat.rank; ++r)
    for (int s = 0; s < lat.rank; ++s)
      check(lat.gram.at(r, s) == lat.gram.at(s, r).conj(), "gram must be Hermitian");
}

QMat identity_form(int n) { return QMat::identity(n, GR(1, 0)); }

// Scale rational rows to integer rows over a common denominator.
ScaledModule scaled_of(const QMat& rows) {
  i64 den = 1;
  for (const auto& x : rows.a) den = cmul(den / igcd(den, x.den), x.den);
  GMat m(rows.nr, rows.nc);
  for (size_t j = 0; j < rows.a.size(); ++j) m.a[j] = rows.a[j].num * GaussInt{den / rows.a[j].den, 0};
  return {std::move(m), den};
}

QMat rows_over_den(const GMat& rows, i64 den) {
  QMat q(rows.nr, rows.nc);
  for (size_t j = 0; j < rows.a.size(); ++j) q.a[j] = GaussRat(rows.a[j], den);
  return q;
}

bool d_block_member(const QVec& x, size_t lo, size_t n) {
  GaussRat sum;
  for (size_t j = 0; j < n; ++j) {
    if (!x[lo + j].is_integral()) return false;
    sum = sum + x[lo + j];
  }
  return p_divides(sum.to_gauss());
}

}  // namespace

// ---- vector helpers ---------------------------------------------------------

GaussRat inner_q(const HermLattice& lat, const QVec& u, const QVec& v) {
  check(static_cast<int>(u.size()) == lat.rank && static_cast<int>(v.size()) == lat.rank,
        "inner_q: wrong length");
  GaussRat acc;
  for (int j = 0; j < lat.rank; ++j) {
    if (u[j].is_zero()) continue;
    GaussRat row;
    for (int k = 0; k < lat.rank; ++k) {
      if (v[k].is_zero()) continue;
      row = row + GaussRat(lat.gram.at(j, k)) * v[k];
    }
    acc = acc + u[j].conj() * row;
  }
  return acc;
}

GaussInt inner(const HermLattice& lat, const GVec& u, const GVec& v) {
  check(static_cast<int>(u.size()) == lat.rank && static_cast<int>(v.size()) == lat.rank,
        "inner: wrong length");
  Gauss128 acc{0, 0};
  for (int j = 0; j < lat.rank; ++j) {
    if (u[j].is_zero()) continue;
    Gauss128 row{0, 0};
    for (int k = 0; k < lat.rank; ++k) {
      if (v[k].is_zero()) continue;
      row += widen(lat.gram.at(j, k)) * widen(v[k]);
    }
    acc += widen(u[j]).conj() * row;
  }
  return narrow(acc);
}

QVec to_ambient(const HermLattice& lat, const QVec& basis_coords) {
  check(static_cast<int>(basis_coords.size()) == lat.rank, "to_ambient: wrong length");
  QVec amb(lat.adim());
  for (int j = 0; j < lat.rank; ++j) {
    if (basis_coords[j].is_zero()) continue;
    for (int c = 0; c < lat.adim(); ++c) amb[c] = amb[c] + basis_coords[j] * lat.basis.at(j, c);
  }
  return amb;
}

std::optional<QVec> ambient_to_coords(const HermLattice& lat, const QVec& ambient) {
  check(static_cast<int>(ambient.size()) == lat.adim(), "ambient_to_coords: wrong length");
  // Solve x B = ambient by reducing [B^T | ambient^T].
  QMat m(lat.adim(), lat.rank + 1);
  for (int r = 0; r < lat.adim(); ++r) {
    for (int c = 0; c < lat.rank; ++c) m.at(r, c) = lat.basis.at(c, r);
    m.at(r, lat.rank) = ambient[r];
  }
  std::vector<int> piv = row_echelon(m);
  check(!piv.empty(), "ambient_to_coords: zero basis");
  if (piv.back() == lat.rank) return std::nullopt;  // inconsistent: not in the span
  check(static_cast<int>(piv.size()) == lat.rank, "ambient_to_coords: basis not full rank");
  QVec x(lat.rank);
  for (int r = 0; r < lat.rank; ++r) x[piv[r]] = m.at(r, lat.rank);
  return x;
}

GVec lattice_coords(const HermLattice& lat, const QVec& ambient) {
  auto c = ambient_to_coords(lat, ambient);
  check(c.has_value(), "lattice_coords: vector outside the rational span");
  GVec g(lat.rank);
  for (int j = 0; j < lat.rank; ++j) {
    check((*c)[j].is_integral(), "lattice_coords: non-integral coordinate");
    g[j] = (*c)[j].to_gauss();
  }
  return g;
}

bool member(const HermLattice& lat, const QVec& ambient) {
  if (lat.congruence_member) return lat.congruence_member(ambient);
  auto c = ambient_to_coords(lat, ambient);
  if (!c) return false;
  for (const auto& x : *c)
    if (!x.is_integral()) return false;
  return true;
}

bool is_primitive(const GVec& v) {
  GaussInt g = G_ZERO;
  for (const auto& x : v) g = ggcd(g, x);
  return is_unit(g);
}

// ---- constructors -----------------------------------------------------------

HermLattice make_D(int n) {
  check(n >= 2, "make_D: need G-rank at least 2");
  HermLattice lat;
  lat.id = "D" + std::to_string(2 * n);
  lat.ambient_form = identity_form(n);
  lat.basis = QMat(n, n);
  for (int j = 0; j + 1 < n; ++j) {
    lat.basis.at(j, j) = GR(1, 0);
    lat.basis.at(j, j + 1) = GR(1, 0);
  }
  lat.basis.at(n - 1, n - 1) = GR(1, -1);
  size_t un = static_cast<size_t>(n);
  lat.congruence_member = [un](const QVec& x) { return d_block_member(x, 0, un); };
  finish(lat);
  return lat;
}

namespace {

// Generators of the rank-8 lattice: glue vectors (c,c,c,c)/p across the four
// D-blocks, differences between adjacent blocks, and p times each block.
QMat bw_generators(bool with_trace_condition) {
  const std::array<std::array<GaussRat, 2>, 2> c = {{{GR(1, 0), GR(1, 0)}, {GR(0, 0), GR(1, -1)}}};
  std::vector<std::array<GaussRat, 8>> rows;
  for (const auto& cc : c) {
    std::array<GaussRat, 8> r{};
    for (int b = 0; b < 4; ++b)
      for (int t = 0; t < 2; ++t) r[2 * b + t] = cc[t] * GR(1, -1, 2);  // 1/p = conj(p)/2
    rows.push_back(r);
  }
  if (with_trace_condition) {
    for (int b = 0; b < 3; ++b)
      for (const auto& cc : c) {
        std::array<GaussRat, 8> r{};
        for (int t = 0; t < 2; ++t) {
          r[2 * b + t] = cc[t];
          r[2 * (b + 1) + t] = GaussRat() - cc[t];
        }
        rows.push_back(r);
      }
  }
  for (int b = 0; b < 4; ++b)
    for (const auto& cc : c) {
      std::array<GaussRat, 8> r{};
      for (int t = 0; t < 2; ++t) r[2 * b + t] = with_trace_condition ? cc[t] * GR(1, 1) : cc[t];
      rows.push_back(r);
    }
  QMat m(static_cast<int>(rows.size()), 8);
  for (int r = 0; r < m.nr; ++r)
    for (int j = 0; j < 8; ++j) m.at(r, j) = rows[r][j];
  return m;
}

bool bw_congruence(const QVec& x, bool with_trace_condition) {
  // each block in D/p
  for (size_t b = 0; b < 4; ++b) {
    QVec px = {x[2 * b] * GR(1, 1), x[2 * b + 1] * GR(1, 1)};
    if (!d_block_member(px, 0, 2)) return false;
  }
  // blocks congruent mod D
  for (size_t b = 1; b < 4; ++b) {
    QVec d = {x[2 * b] - x[0], x[2 * b + 1] - x[1]};
    if (!d_block_member(d, 0, 2)) return false;
  }
  if (with_trace_condition) {
    QVec s = {(x[0] + x[2] + x[4] + x[6]) / GR(1, 1), (x[1] + x[3] + x[5] + x[7]) / GR(1, 1)};
    if (!d_block_member(s, 0, 2)) return false;
  }
  return true;
}

// Kronecker cube of (1 1; 0 p), scaled by 1/p: the power-of-two frame for the
// same lattice. Row/column index bits are (outer, middle, inner).
ScaledModule bw_tensor_module() {
  GMat a(2, 2);
  a.at(0, 0) = GaussInt{1, 0};
  a.at(0, 1) = GaussInt{1, 0};
  a.at(1, 1) = G_P;
  GMat t = a;
  for (int step = 0; step < 2; ++step) {
    GMat next(t.nr * 2, t.nc * 2);
    for (int r = 0; r < t.nr; ++r)
      for (int c = 0; c < t.nc; ++c)
        for (int r2 = 0; r2 < 2; ++r2)
          for (int c2 = 0; c2 < 2; ++c2)
            next.at(r * 2 + r2, c * 2 + c2) = t.at(r, c) * a.at(r2, c2);
    t = next;
  }
  // rows/p = rows * conj(p) / 2
  for (auto& x : t.a) x = x * G_PBAR;
  return {t, 2};
}

}  // namespace

HermLattice make_BW16() {
  HermLattice lat;
  lat.id = "BW16";
  lat.ambient_form = identity_form(8);
  ScaledModule gen = scaled_of(bw_generators(true));
  GMat h = hnf_rows(gen.rows);
  check(h.nr == 8, "BW16: generators must span rank 8");
  check(modules_equal({h, gen.den}, bw_tensor_module()),
        "BW16: congruence and tensor constructions must agree");
  lat.basis = rows_over_den(h, gen.den);
  lat.congruence_member = [](const QVec& x) { return bw_congruence(x, true); };
  finish(lat);
  return lat;
}

HermLattice make_M16() {
  HermLattice lat;
  lat.id = "M16";
  lat.ambient_form = identity_form(8);
  ScaledModule gen = scaled_of(bw_generators(false));
  GMat h = hnf_rows(gen.rows);
  check(h.nr == 8, "M16: generators must span rank 8");
  lat.basis = rows_over_den(h, gen.den);
  lat.congruence_member = [](const QVec& x) { return bw_congruence(x, false); };
  finish(lat);
  return lat;
}

HermLattice make_hyp_cell() {
  HermLattice lat;
  lat.id = "U";
  lat.ambient_form = QMat(2, 2);
  lat.ambient_form.at(0, 1) = GR(1, -1);
  lat.ambient_form.at(1, 0) = GR(1, 1);
  lat.basis = QMat::identity(2, GR(1, 0));
  lat.congruence_member = [](const QVec& x) {
    return x[0].is_integral() && x[1].is_integral();
  };
  finish(lat);
  return lat;
}

namespace {

QMat hyperbolic_form10() {
  QMat f = identity_form(10);
  f.at(8, 8) = GaussRat();
  f.at(9, 9) = GaussRat();
  f.at(8, 9) = GR(1, -1);
  f.at(9, 8) = GR(1, 1);
  return f;
}

}  // namespace

HermLattice make_L_d4() {
  HermLattice lat;
  lat.id = "Lplain";
  lat.frame = Frame::PlainDef;
  lat.ambient_form = hyperbolic_form10();
  lat.basis = QMat(10, 10);
  for (int b = 0; b < 4; ++b) {
    lat.basis.at(2 * b, 2 * b) = GR(1, 0);
    lat.basis.at(2 * b, 2 * b + 1) = GR(1, 0);
    lat.basis.at(2 * b + 1, 2 * b + 1) = GR(1, -1);
  }
  lat.basis.at(8, 8) = GR(1, 0);
  lat.basis.at(9, 9) = GR(1, 0);
  lat.congruence_member = [](const QVec& x) {
    for (size_t b = 0; b < 4; ++b)
      if (!d_block_member(x, 2 * b, 2)) return false;
    return x[8].is_integral() && x[9].is_integral();
  };
  finish(lat);
  return lat;
}

HermLattice make_L_bw() {
  HermLattice bw = make_BW16();
  HermLattice lat;
  lat.id = "Lbw";
  lat.frame = Frame::BwDef;
  lat.ambient_form = hyperbolic_form10();
  lat.basis = QMat(10, 10);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) lat.basis.at(r, c) = bw.basis.at(r, c);
  lat.basis.at(8, 8) = GR(1, 0);
  lat.basis.at(9, 9) = GR(1, 0);
  auto bwmem = bw.congruence_member;
  lat.congruence_member = [bwmem](const QVec& x) {
    QVec head(x.begin(), x.begin() + 8);
    return bwmem(head) && x[8].is_integral() && x[9].is_integral();
  };
  finish(lat);
  return lat;
}

// ---- structure --------------------------------------------------------------

ScaledModule ambient_rows(const HermLattice& lat) { return scaled_of(lat.basis); }

ScaledModule dual_module(const HermLattice& lat) {
  QMat ginv = mat_inverse(to_field(lat.gram));
  // Dual basis-coordinate rows are conj(G^{-1}); push to ambient coordinates.
  QMat rows(lat.rank, lat.adim());
  for (int r = 0; r < lat.rank; ++r)
    for (int c = 0; c < lat.adim(); ++c) {
      GaussRat acc;
      for (int j = 0; j < lat.rank; ++j) acc = acc + ginv.at(r, j).conj() * lat.basis.at(j, c);
      rows.at(r, c) = acc;
    }
  return scaled_of(rows);
}

bool is_p_modular(const HermLattice& lat) {
  ScaledModule dual = dual_module(lat);
  GMat pd = dual.rows;
  for (auto& x : pd.a) x = x * G_P;
  return modules_equal({pd, dual.den}, ambient_rows(lat));
}

u64 disc_group_order(const HermLattice& lat) {
  GaussRat det = mat_det(to_field(lat.gram));
  check(det.is_integral(), "disc_group_order: non-integral determinant");
  i64 n = gnorm(det.to_gauss());
  check(n > 0, "disc_group_order: singular gram");
  return static_cast<u64>(n);
}

u64 module_index(const ScaledModule& sup, const ScaledModule& sub) {
  check(sup.rows.nr == sub.rows.nr && sup.rows.nc == sub.rows.nc, "module_index: shape mismatch");
  int n = sup.rows.nr;
  // X sup = sub (row convention): transpose both sides.
  QMat st(sup.rows.nc, n), bt(sub.rows.nc, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < sup.rows.nc; ++c) {
      st.at(c, r) = GaussRat(sup.rows.at(r, c), sup.den);
      bt.at(c, r) = GaussRat(sub.rows.at(r, c), sub.den);
    }
  // Reduce the (possibly rectangular) system [st | bt] to read off X^T.
  check(st.nr >= n, "module_index: ambient too small");
  QMat m(st.nr, n + n);
  for (int r = 0; r < st.nr; ++r) {
    for (int c = 0; c < n; ++c) m.at(r, c) = st.at(r, c);
    for (int c = 0; c < n; ++c) m.at(r, n + c) = bt.at(r, c);
  }
  std::vector<int> piv = row_echelon(m);
  check(static_cast<int>(piv.size()) == n, "module_index: sup not full rank or sub outside span");
  for (int c : piv) check(c < n, "module_index: sub outside the span of sup");
  QMat xt(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) xt.at(r, c) = m.at(r, n + c);
  GaussRat det = mat_det(xt);
  for (const auto& e : xt.a) check(e.is_integral(), "module_index: sub not contained in sup");
  check(det.is_integral(), "module_index: non-integral determinant");
  return static_cast<u64>(gnorm(det.to_gauss()));
}

u64 index_in(const HermLattice& sup, const HermLattice& sub) {
  check(sup.adim() == sub.adim(), "index_in: different ambients");
  return module_index(ambient_rows(sup), ambient_rows(sub));
}

// ---- the 32-root configuration ----------------------------------------------

namespace {

using Amb = std::array<GaussInt, 10>;

QVec amb_to_qvec(const Amb& a) {
  QVec q(10);
  for (int j = 0; j < 10; ++j) q[j] = GaussRat(a[j]);
  return q;
}

Amb neg(Amb a) {
  for (auto& x : a) x = -x;
  return a;
}

// Push blocks through a permutation of the four D-blocks, fixing the two
// hyperbolic coordinates.
Amb block_permute(const Amb& a, const std::array<int, 4>& perm) {
  Amb r{};
  for (int b = 0; b < 4; ++b)
    for (int t = 0; t < 2; ++t) r[2 * perm[b] + t] = a[2 * b + t];
  r[8] = a[8];
  r[9] = a[9];
  return r;
}

std::array<int, 4> transposition(int j, int k) {
  std::array<int, 4> p = {0, 1, 2, 3};
  std::swap(p[j], p[k]);
  return p;
}

// perm sending block 0 -> j, block 1 -> k, remaining blocks ascending.
std::array<int, 4> pair_perm(int j, int k) {
  std::array<int, 4> p{};
  p[0] = j;
  p[1] = k;
  int next = 0;
  for (int b = 2; b < 4; ++b) {
    while (next == j || next == k) ++next;
    p[b] = next++;
  }
  return p;
}

constexpr GaussInt GI(i64 re, i64 im = 0) { return GaussInt{re, im}; }

}  // namespace

RootConfig simple_roots_32(const HermLattice& L_d4) {
  check(L_d4.frame == Frame::PlainDef && L_d4.rank == 10, "simple_roots_32: wrong lattice");
  const GaussInt P = G_P;

  const Amb seed_a = {GI(0), GI(0), GI(0), GI(0), GI(0), GI(0), GI(0), GI(0), GI(-1), GI(-1)};
  const Amb seed_z =
      neg({GI(1), GI(1), GI(1), GI(1), GI(1), GI(1), GI(1), GI(1), GI(-1, 2), GI(1)});
  const Amb seed_c1 = {GI(-1), GI(1), GI(0), GI(0), GI(0), GI(0), GI(0), GI(0), GI(0), GI(0)};
  const Amb seed_g1 =
      neg({GI(0), GI(2), GI(1), GI(1), GI(1), GI(1), GI(1), GI(1), GI(0, 2), GI(2)});
  const Amb seed_e12 =
      neg({GI(1), GI(1), GI(1), GI(1), GI(0), GI(0), GI(0), GI(0), GI(0, 1), GI(1)});
  const Amb seed_d1 = {-P, GI(0), GI(0), GI(0), GI(0), GI(0), GI(0), GI(0), GI(0), GI(0)};
  const Amb seed_h1 = {P, P, GI(0), P, GI(0), P, GI(0), P, GI(-2, 1), P};
  const Amb seed_f1 = {GI(0), GI(0), GI(0), P, GI(0), P, GI(0), P, GI(-1, 1), P};
  const Amb seed_b1 = {GI(0), P, GI(0), GI(0), GI(0), GI(0), GI(0), GI(0), GI(-1), GI(0)};

  std::array<Amb, 32> amb{};
  auto put = [&](Vertex v, const Amb& a) { amb[vertex_index(v)] = a; };

  put(point_v(0xf), seed_a);
  put(point_v(0x0), seed_z);
  for (int k = 0; k < 4; ++k) {
    auto tr = transposition(0, k);
    u8 gamma = static_cast<u8>(1 << k);
    put(point_v(static_cast<u8>(0xf ^ gamma)), block_permute(seed_c1, tr));
    put(point_v(gamma), block_permute(seed_g1, tr));
    put(hyper_v(gamma, 0), block_permute(seed_d1, tr));
    put(hyper_v(gamma, 1), block_permute(seed_h1, tr));
    put(hyper_v(static_cast<u8>(0xf ^ gamma), 0), block_permute(seed_f1, tr));
    put(hyper_v(static_cast<u8>(0xf ^ gamma), 1), block_permute(seed_b1, tr));
  }
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k)
      put(point_v(static_cast<u8>(0xf ^ (1 << j) ^ (1 << k))),
          block_permute(seed_e12, pair_perm(j, k)));

  RootConfig cfg;
  cfg.roots.resize(32);
  for (int v = 0; v < 32; ++v) {
    cfg.roots[v] = lattice_coords(L_d4, amb_to_qvec(amb[v]));
    check(norm2(L_d4, cfg.roots[v]) == GI(2), "simple root must have norm 2");
  }

  auto vec_add = [](const GVec& x, const GVec& y) {
    GVec r(x.size());
    for (size_t j = 0; j < x.size(); ++j) r[j] = x[j] + y[j];
    return r;
  };
  cfg.p_inf = vec_add(cfg.roots[vertex_index(point_v(0xf))], cfg.roots[vertex_index(point_v(0))]);
  cfg.l_inf = vec_add(cfg.roots[vertex_index(hyper_v(1, 0))], cfg.roots[vertex_index(hyper_v(1, 1))]);

  // Antipodal pairs sum to the same null vector on each side; this pins the
  // whole seed table down, so check it for all 16 pairs.
  for (int v = 0; v < 32; ++v) {
    Vertex vert = vertex_of_index(v);
    GVec s = vec_add(cfg.roots[v], cfg.roots[vertex_index(t_a(vert))]);
    check(s == (vert.hyper ? cfg.l_inf : cfg.p_inf), "antipodal pair sum mismatch");
  }
  check(norm2(L_d4, cfg.p_inf).is_zero() && norm2(L_d4, cfg.l_inf).is_zero(),
        "pair sums must be null");
  check(is_primitive(cfg.p_inf) && is_primitive(cfg.l_inf), "pair sums must be primitive");
  check(inner(L_d4, cfg.p_inf, cfg.l_inf) == GI(2, 2), "expected <p_inf, l_inf> = 2p");

  cfg.rho = lattice_coords(L_d4, amb_to_qvec({GI(0), GI(0), GI(0), GI(0), GI(0), GI(0), GI(0),
                                              GI(0), GI(0), GI(1)}));
  cfg.rho1 = lattice_coords(L_d4, amb_to_qvec({GI(0), GI(0), GI(0), GI(0), GI(0), GI(0), GI(0),
                                               GI(0), GI(1), GI(0)}));

  cfg.tau_coords.resize(10);
  for (int j = 0; j < 10; ++j)
    cfg.tau_coords[j] = Cyclo8::zeta(7) * Cyclo8::from(GaussRat(cfg.l_inf[j])) -
                        Cyclo8::from(GaussRat(cfg.p_inf[j]));
  return cfg;
}

// ---- change of frame ----------------------------------------------------------

namespace {

// Ten vectors of Lbw whose pairwise inner products match those of the basis
// (s_d1, s_c1, s_d2, s_c2, s_d3, s_c3, s_d4, s_c4, rho1, rho) of Lplain.
// Finding them took a search through the 4320 minimal vectors of the definite
// part; with the list in hand, the Gram comparison below pins the change of
// frame down completely, so the search never has to run again.
QMat bw_frame_vectors() {
  QMat v(10, 10);
  const GaussRat rows[10][10] = {
      {GR(1, 1, 2), GR(1, 1, 2), GR(1, -1, 2), GR(-1, 1, 2), GR(1, -1, 2), GR(-1, 1, 2),
       GR(1, 1, 2), GR(1, 1, 2), GR(1, 0), GR(-1, 0)},
      {GR(-1, 1, 2), GR(-1, -1, 2), GR(-1, -1, 2), GR(-1, 1, 2), GR(-1, -1, 2), GR(1, -1, 2),
       GR(1, -1, 2), GR(-1, -1, 2), GR(-1, 0), GR(1, 0)},
      {GR(0, 0), GR(1, 1), GR(0, 0), GR(0, 0), GR(0, 0), GR(0, 0), GR(0, 0), GR(1, 1), GR(1, 0),
       GR(-1, 0)},
      {GR(-1, 0), GR(0, -1), GR(0, 0), GR(0, 0), GR(-1, 0), GR(0, -1), GR(0, 0), GR(0, 0),
       GR(-1, 0), GR(1, 0)},
      {GR(1, -1, 2), GR(1, 1, 2), GR(1, 1, 2), GR(-1, 1, 2), GR(1, 1, 2), GR(-1, 1, 2),
       GR(1, -1, 2), GR(1, 1, 2), GR(1, 0), GR(-1, 0)},
      {GR(-1, 0), GR(0, -1), GR(0, 0), GR(0, 0), GR(0, 0), GR(0, 0), GR(0, -1), GR(-1, 0),
       GR(-1, 0), GR(1, 0)},
      {GR(1, 1, 2), GR(1, 1, 2), GR(1, 1, 2), GR(1, 1, 2), GR(1, 1, 2), GR(1, 1, 2), GR(1, 1, 2),
       GR(1, 1, 2), GR(1, 0), GR(-1, 0)},
      {GR(-1, 1, 2), GR(-1, -1, 2), GR(1, 1, 2), GR(1, -1, 2), GR(-1, -1, 2), GR(1, -1, 2),
       GR(1, -1, 2), GR(-1, -1, 2), GR(-1, 0), GR(1, 0)},
      {GR(3, -3, 2), GR(5, 1, 2), GR(1, -1, 2), GR(1, 1, 2), GR(3, -1, 2), GR(1, 3, 2),
       GR(1, 1, 2), GR(5, -1, 2), GR(2, -3), GR(-2, 2)},
      {GR(-3, 3, 2), GR(-5, -1, 2), GR(-1, 1, 2), GR(-1, -1, 2), GR(-3, 1, 2), GR(-1, -3, 2),
       GR(-1, -1, 2), GR(-5, 1, 2), GR(-3, 3), GR(2, -3)},
  };
  for (int r = 0; r < 10; ++r)
    for (int c = 0; c < 10; ++c) v.at(r, c) = rows[r][c];
  return v;
}

}  // namespace

IsoMap iso_phi(const HermLattice& L_bw, const HermLattice& L_d4) {
  check(L_bw.frame == Frame::BwDef && L_d4.frame == Frame::PlainDef, "iso_phi: wrong frames");

  // Source frame: coordinates of the ten vectors in the Lbw basis. The
  // coordinate map aborts if any of them falls outside the lattice.
  QMat src = bw_frame_vectors();
  GMat V(10, 10);
  for (int r = 0; r < 10; ++r) {
    QVec a(10);
    for (int c = 0; c < 10; ++c) a[c] = src.at(r, c);
    GVec coords = lattice_coords(L_bw, a);
    for (int c = 0; c < 10; ++c) V.at(r, c) = coords[c];
  }

  // Target frame: the matching basis of Lplain.
  RootConfig cfg = simple_roots_32(L_d4);
  GMat W(10, 10);
  for (int k = 0; k < 4; ++k) {
    u8 gamma = static_cast<u8>(1 << k);
    const GVec& dk = cfg.roots[vertex_index(hyper_v(gamma, 0))];
    const GVec& ck = cfg.roots[vertex_index(point_v(static_cast<u8>(0xf ^ gamma)))];
    for (int c = 0; c < 10; ++c) {
      W.at(2 * k, c) = dk[c];
      W.at(2 * k + 1, c) = ck[c];
    }
  }
  for (int c = 0; c < 10; ++c) {
    W.at(8, c) = cfg.rho1[c];
    W.at(9, c) = cfg.rho[c];
  }

  // Equal pairings on the two sides are what make the transition an isometry.
  auto row_of = [](const GMat& m, int r) {
    GVec x(m.nc);
    for (int c = 0; c < m.nc; ++c) x[c] = m.at(r, c);
    return x;
  };
  for (int r = 0; r < 10; ++r)
    for (int s = 0; s < 10; ++s)
      check(inner(L_bw, row_of(V, r), row_of(V, s)) == inner(L_d4, row_of(W, r), row_of(W, s)),
            "iso_phi: gram mismatch");

  IsoMap iso;
  iso.m = to_gmat(solve_right(to_field(V), to_field(W)), "iso_phi: transition must be integral");
  iso.m_inv = to_gmat(solve_right(to_field(W), to_field(V)),
                      "iso_phi: inverse transition must be integral");
  check(gmat_mul(iso.m, iso.m_inv) == GMat::identity(10, GaussInt{1, 0}),
        "iso_phi: inverse check failed");
  GMat lhs = gmat_mul(gmat_mul(gmat_conj(iso.m), L_d4.gram), gmat_transpose(iso.m));
  check(lhs == L_bw.gram, "iso_phi: form not preserved");
  return iso;
}

}  // namespace gausslat
