#include "gausslat/enumtau.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "gausslat/hyperbolic.hpp"

namespace gausslat {

namespace {

GaussInt GI(i64 re, i64 im = 0) { return GaussInt{re, im}; }

int cls_mod_p(const GaussInt& x) { return static_cast<int>((x.re + x.im) & 1); }

GVec vec_neg(const GVec& x) {
  GVec r(x.size());
  for (size_t j = 0; j < x.size(); ++j) r[j] = -x[j];
  return r;
}

// c1..c4 or c5..c8: two pairs sharing a congruence class.
struct PairHalf {
  std::array<GaussInt, 4> c;
};

struct Tables {
  // halves[cls][n]: both pair sums in class cls, total norm n
  std::array<std::array<std::vector<PairHalf>, 9>, 2> halves;
};

const Tables& tables() {
  static const Tables tab = [] {
    Tables t;
    std::array<std::array<std::vector<std::pair<GaussInt, GaussInt>>, 5>, 2> pairs;
    for (const GaussInt& x : gauss_ball(2))
      for (const GaussInt& y : gauss_ball(2))
        pairs[cls_mod_p(x + y)][gnorm(x) + gnorm(y)].push_back({x, y});
    for (int cl = 0; cl < 2; ++cl)
      for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n2 <= 4; ++n2)
          for (const auto& a : pairs[cl][n1])
            for (const auto& b : pairs[cl][n2])
              t.halves[cl][n1 + n2].push_back({{a.first, a.second, b.first, b.second}});
    return t;
  }();
  return tab;
}

const std::array<GaussInt, 3>& c9_choices() {
  static const std::array<GaussInt, 3> c = {GI(0), GI(1), G_P};
  return c;
}

// (p - 3), the coefficient of c10 in the last hyperbolic coordinate.
const GaussInt PM3 = GaussInt{-2, 1};

std::vector<i64> vec_key(const GVec& v) {
  std::vector<i64> k;
  k.reserve(2 * v.size());
  for (const GaussInt& x : v) {
    k.push_back(x.re);
    k.push_back(x.im);
  }
  return k;
}

// Lexicographically least among the four unit multiples.
GVec unit_canon(const GVec& v) {
  GVec best = v;
  std::vector<i64> bk = vec_key(best);
  GVec cur = v;
  for (int t = 0; t < 3; ++t) {
    for (GaussInt& x : cur) x = x.times_i();
    std::vector<i64> ck = vec_key(cur);
    if (ck < bk) {
      best = cur;
      bk = std::move(ck);
    }
  }
  return best;
}

}  // namespace

TauBasis tau_basis(const HermLattice& L, const RootConfig& cfg) {
  check(L.frame == Frame::PlainDef, "tau_basis: plain frame expected");
  TauBasis tb;
  for (int k = 0; k < 4; ++k) {
    std::string d = "d", b = "b";
    d += static_cast<char>('1' + k);
    b += static_cast<char>('1' + k);
    tb.v[2 * k] = vec_neg(cfg.roots[vertex_index(vertex_named(d))]);
    tb.v[2 * k + 1] = cfg.roots[vertex_index(vertex_named(b))];
  }
  tb.v[8] = cfg.rho1;
  tb.v[9] = cfg.l_inf;

  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k)
      check(inner(L, tb.v[j], tb.v[k]) == GI(j == k ? 2 : 0),
            "tau_basis: definite part must be orthogonal of norm 2");
  check(norm2(L, tb.v[8]).is_zero() && norm2(L, tb.v[9]).is_zero(),
        "tau_basis: v9, v10 must be null");
  check(inner(L, tb.v[8], tb.v[9]) == GI(2), "tau_basis: <v9,v10> = 2");
  for (int j = 0; j < 8; ++j)
    check(inner(L, tb.v[j], tb.v[8]).is_zero() && inner(L, tb.v[j], tb.v[9]).is_zero(),
          "tau_basis: null pair must be orthogonal to the definite part");
  return tb;
}

bool ctuple_ok(const CTuple& t) {
  for (int j = 0; j < 9; ++j)
    if (gnorm(t.c[j]) > 2) return false;
  if (gnorm(t.c[9]) > 9) return false;
  int cl = cls_mod_p(t.c[9]);
  i64 sum = 0;
  for (int j = 0; j < 4; ++j) {
    if (cls_mod_p(t.c[2 * j] + t.c[2 * j + 1]) != cl) return false;
    sum += gnorm(t.c[2 * j]) + gnorm(t.c[2 * j + 1]);
  }
  if (sum != 2 - 2 * (t.c[8].re * t.c[9].re + t.c[8].im * t.c[9].im)) return false;
  if (sum < 2 || sum > 10 || sum % 2 != 0) return false;
  return t.c[8] == GI(0) || t.c[8] == GI(1) || t.c[8] == G_P;
}

CTuple c_of_root(const HermLattice& L, const TauBasis& tb, const GVec& r) {
  CTuple t;
  for (int j = 0; j < 8; ++j) t.c[j] = div_exact(inner(L, tb.v[j], r), G_PBAR);
  t.c[8] = div_exact(inner(L, tb.v[9], r), G_PBAR);  // coefficient of v9
  t.c[9] = div_exact(inner(L, tb.v[8], r), G_PBAR);  // coefficient of v10
  return t;
}

std::optional<GVec> c_to_root(const HermLattice& L, const CTuple& t) {
  GaussInt x = t.c[8] + PM3 * t.c[9] - t.c[1] - t.c[3] - t.c[5] - t.c[7];
  if (!p_divides(x)) return std::nullopt;
  QVec amb(10);
  for (int j = 0; j < 4; ++j) {
    amb[2 * j] = GaussRat(t.c[2 * j]);
    amb[2 * j + 1] = GaussRat(t.c[2 * j + 1] + t.c[9]);
  }
  amb[8] = GaussRat(div_p(x));
  amb[9] = GaussRat(t.c[9]);
  GVec r = lattice_coords(L, amb);
  check(norm2(L, r) == GI(2), "c_to_root: tuple did not close into a root");
  return r;
}

u64 enumerate_candidates(const std::function<bool(const CTuple&)>& fn) {
  const Tables& tab = tables();
  u64 seen = 0;
  for (const GaussInt& c10 : gauss_ball(9)) {
    int cl = cls_mod_p(c10);
    for (const GaussInt& c9 : c9_choices()) {
      i64 budget = 2 - 2 * (c9.re * c10.re + c9.im * c10.im);
      if (budget < 2 || budget > 10) continue;
      for (i64 m = std::max<i64>(0, budget - 8); m <= std::min<i64>(8, budget); ++m) {
        const auto& top = tab.halves[cl][static_cast<size_t>(m)];
        const auto& bot = tab.halves[cl][static_cast<size_t>(budget - m)];
        for (const PairHalf& h1 : top)
          for (const PairHalf& h2 : bot) {
            ++seen;
            CTuple t;
            for (int j = 0; j < 4; ++j) {
              t.c[j] = h1.c[j];
              t.c[4 + j] = h2.c[j];
            }
            t.c[8] = c9;
            t.c[9] = c10;
            if (!fn(t)) return seen;
          }
      }
    }
  }
  return seen;
}

void empty_budget_excluded() {
  for (const GaussInt& c9 : c9_choices())
    for (const GaussInt& c10 : gauss_ball(9)) {
      if (c9.re * c10.re + c9.im * c10.im != 1) continue;
      // with all of c1..c8 zero, the pair congruences need p | c10 and the
      // last coordinate needs p | c9 + (p-3) c10; both cannot be dodged
      bool congruence_fails = cls_mod_p(c10) != 0;
      bool r9_fails = !p_divides(c9 + PM3 * c10);
      check(congruence_fails || r9_fails, "zero-budget tuple slipped through");
    }
}

BoxCertificate box_certificate(const HermLattice& L, const RootConfig& cfg) {
  BoxCertificate bc;
  bc.sinh2_d0 = sinh2_pt_mirror(L, cfg.roots[0], cfg.tau_coords);
  for (int v = 1; v < 32; ++v)
    check(sinh2_pt_mirror(L, cfg.roots[v], cfg.tau_coords) == bc.sinh2_d0,
          "box: simple mirrors not equidistant");
  check(bc.sinh2_d0 == RealQuad(Rat(0), Rat(1, 8)), "box: sinh^2 d0 should be sqrt2/8");

  bc.cosh_2d0 = RealQuad(1) + RealQuad(2) * bc.sinh2_d0;
  bc.two_cosh2_2d0 = RealQuad(2) * bc.cosh_2d0 * bc.cosh_2d0;
  bc.e_v9 = horo_exp2(L, cfg.rho1, cfg.tau_coords);
  bc.e_v10 = horo_exp2(L, cfg.l_inf, cfg.tau_coords);
  check(bc.two_cosh2_2d0 == RealQuad(Rat(9, 4), Rat(1)), "box: 2cosh^2(2d0) should be 9/4+sqrt2");
  check(bc.e_v9 == RealQuad(Rat(2), Rat(3, 2)), "box: exp(2 d_v9(tau)) should be 2+(3/2)sqrt2");
  check(bc.e_v10 == RealQuad(Rat(0), Rat(1)), "box: exp(2 d_v10(tau)) should be sqrt2");

  while (RealQuad(bc.cap_cj + 1) <= bc.two_cosh2_2d0) ++bc.cap_cj;
  while (le_cosh_plus_sinh_times(RealQuad(bc.cap_c9 + 1), bc.cosh_2d0, bc.e_v10)) ++bc.cap_c9;
  while (le_cosh_plus_sinh_times(RealQuad(bc.cap_c10 + 1), bc.cosh_2d0, bc.e_v9)) ++bc.cap_c10;
  check(bc.cap_cj == 3 && bc.cap_c9 == 3 && bc.cap_c10 == 9, "box: unexpected caps");
  check(gauss_ball(3) == gauss_ball(2), "box: no Gaussian integer has norm 3");

  double c2d = bc.cosh_2d0.to_double();
  double e2d0 = c2d + std::sqrt(c2d * c2d - 1.0);
  bc.cut_cj_f = bc.two_cosh2_2d0.to_double();
  bc.cut_c10_f = e2d0 * bc.e_v9.to_double();
  bc.cut_c9_f = e2d0 * bc.e_v10.to_double();
  return bc;
}

namespace {

struct TaskOut {
  u64 tuples = 0;
  u64 roots = 0;
  bool zero_functional = false;
  std::vector<CTuple> kept;
};

// One c10 slice of the enumeration. wl and wp are the form-multiplied
// ambient images of l_inf and p_inf, so <r, l_inf> = sum conj(r_j) wl_j.
void scan_c10(const GaussInt& c10, const GVec& wl, const GVec& wp, TaskOut& out) {
  const Tables& tab = tables();
  int cl = cls_mod_p(c10);
  std::array<GaussInt, 10> amb;
  for (const GaussInt& c9 : c9_choices()) {
    i64 budget = 2 - 2 * (c9.re * c10.re + c9.im * c10.im);
    if (budget < 2 || budget > 10) continue;
    GaussInt base = c9 + PM3 * c10;
    for (i64 m = std::max<i64>(0, budget - 8); m <= std::min<i64>(8, budget); ++m) {
      const auto& top = tab.halves[cl][static_cast<size_t>(m)];
      const auto& bot = tab.halves[cl][static_cast<size_t>(budget - m)];
      for (const PairHalf& h1 : top)
        for (const PairHalf& h2 : bot) {
          ++out.tuples;
          GaussInt x = base - h1.c[1] - h1.c[3] - h2.c[1] - h2.c[3];
          if ((x.re + x.im) & 1) continue;  // last coordinate not integral
          ++out.roots;
          amb[0] = h1.c[0];
          amb[1] = h1.c[1] + c10;
          amb[2] = h1.c[2];
          amb[3] = h1.c[3] + c10;
          amb[4] = h2.c[0];
          amb[5] = h2.c[1] + c10;
          amb[6] = h2.c[2];
          amb[7] = h2.c[3] + c10;
          amb[8] = div_p(x);
          amb[9] = c10;
          GaussInt g1, g2;
          for (int j = 0; j < 10; ++j) {
            g1 = g1 + amb[j].conj() * wl[j];
            g2 = g2 + amb[j].conj() * wp[j];
          }
          GaussInt w = g1 * g2.conj();
          TauVal f{gnorm(g1) + gnorm(g2), -(w.re + w.im)};
          if (f.a == 0 && f.b == 0) out.zero_functional = true;
          if (tau_cmp(f, TauVal{2, 0}) <= 0) {
            CTuple t;
            for (int j = 0; j < 4; ++j) {
              t.c[j] = h1.c[j];
              t.c[4 + j] = h2.c[j];
            }
            t.c[8] = c9;
            t.c[9] = c10;
            out.kept.push_back(t);
          }
        }
    }
  }
}

}  // namespace

MirrorReport mirrors_within_d0(const HermLattice& L, const RootConfig& cfg, int threads) {
  tau_basis(L, cfg);  // validates the coordinate geometry before trusting it
  BoxCertificate cert = box_certificate(L, cfg);
  empty_budget_excluded();

  auto narrowed = [&](const GVec& basis_coords) {
    QVec amb = to_ambient(L, basis_coords);
    GVec r(amb.size());
    for (size_t j = 0; j < amb.size(); ++j) r[j] = amb[j].to_gauss();
    return r;
  };
  GVec l_amb = narrowed(cfg.l_inf);
  GVec p_amb = narrowed(cfg.p_inf);
  GVec wl(10), wp(10);
  for (int j = 0; j < 10; ++j) {
    GaussRat al, ap;
    for (int k = 0; k < 10; ++k) {
      al = al + L.ambient_form.at(j, k) * GaussRat(l_amb[k]);
      ap = ap + L.ambient_form.at(j, k) * GaussRat(p_amb[k]);
    }
    wl[j] = al.to_gauss();
    wp[j] = ap.to_gauss();
  }

  // the c10 ball comes from the certificate rather than a hardcoded box
  std::vector<GaussInt> c10s = gauss_ball(cert.cap_c10);
  std::vector<TaskOut> results(c10s.size());
  if (threads < 1) threads = 1;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= c10s.size()) return;
      scan_c10(c10s[k], wl, wp, results[k]);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  MirrorReport rep;
  std::map<std::vector<i64>, std::pair<GVec, TauVal>> classes;
  bool zero_seen = false;
  for (const TaskOut& out : results) {
    rep.tuples += out.tuples;
    rep.roots += out.roots;
    zero_seen = zero_seen || out.zero_functional;
    for (const CTuple& t : out.kept) {
      std::optional<GVec> r = c_to_root(L, t);
      check(r.has_value(), "mirrors_within_d0: kept tuple lost its root");
      GVec canon = unit_canon(*r);
      GaussInt g1 = inner(L, canon, cfg.l_inf);
      GaussInt g2 = inner(L, canon, cfg.p_inf);
      GaussInt w = g1 * g2.conj();
      TauVal f{gnorm(g1) + gnorm(g2), -(w.re + w.im)};
      auto [it, fresh] = classes.insert({vec_key(canon), {canon, f}});
      if (!fresh)
        check(it->second.second.a == f.a && it->second.second.b == f.b,
              "mirrors_within_d0: unit class with two functional values");
    }
  }

  std::set<std::vector<i64>> simple_keys;
  for (int v = 0; v < 32; ++v) simple_keys.insert(vec_key(unit_canon(cfg.roots[v])));

  rep.all_at_equality = true;
  rep.exactly_simples = classes.size() == simple_keys.size();
  for (const auto& [key, val] : classes) {
    rep.mirrors.push_back(val.first);
    rep.functional.push_back(val.second);
    if (!(val.second.a == 2 && val.second.b == 0)) rep.all_at_equality = false;
    if (!simple_keys.count(key)) rep.exactly_simples = false;
  }
  rep.tau_on_none = !zero_seen;
  return rep;
}

}  // namespace gausslat
