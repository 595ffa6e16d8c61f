#include "gausslat/shortvec.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace gausslat {

namespace {

// Real 2n x 2n Gram of the Z-lattice underlying a Gaussian lattice: the
// coordinate pair (2j, 2j+1) holds (Re c_j, Im c_j).
IMat real_gram(const GMat& g) {
  IMat a(2 * g.nr, 2 * g.nc);
  for (int j = 0; j < g.nr; ++j)
    for (int k = 0; k < g.nc; ++k) {
      GaussInt e = g.at(j, k);
      a.at(2 * j, 2 * k) = e.re;
      a.at(2 * j, 2 * k + 1) = -e.im;
      a.at(2 * j + 1, 2 * k) = e.im;
      a.at(2 * j + 1, 2 * k + 1) = e.re;
    }
  return a;
}

IMat imat_mul(const IMat& x, const IMat& y) {
  check(x.nc == y.nr, "imat_mul: shape mismatch");
  IMat r(x.nr, y.nc);
  for (int i = 0; i < x.nr; ++i)
    for (int k = 0; k < x.nc; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.nc; ++j)
        r.at(i, j) = cadd(r.at(i, j), cmul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

IMat imat_transpose(const IMat& x) {
  IMat r(x.nc, x.nr);
  for (int i = 0; i < x.nr; ++i)
    for (int j = 0; j < x.nc; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

IMat imat_inverse(const IMat& x) {
  QMat q(x.nr, x.nc);
  for (size_t j = 0; j < x.a.size(); ++j) q.a[j] = GaussRat(GaussInt{x.a[j], 0});
  QMat inv = mat_inverse(q);
  IMat r(x.nr, x.nc);
  for (size_t j = 0; j < inv.a.size(); ++j) {
    check(inv.a[j].is_integral() && inv.a[j].num.im == 0, "imat_inverse: not unimodular");
    r.a[j] = inv.a[j].num.re;
  }
  return r;
}

i64 round_rat(Rat x) {
  i128 n = i128(2) * x.num + x.den;
  i128 d = i128(2) * x.den;
  i128 q = n >= 0 ? n / d : -((-n + d - 1) / d);  // floor
  return narrow(q);
}

// Fincke-Pohst walk over the reduced coordinates. The visitor sees the
// reduced integer coordinates and the exact squared distance; returning
// false aborts the whole walk.
struct Walker {
  const Gso* s;
  std::vector<Rat> tp;  // target in reduced coordinates
  Rat budget;
  std::function<bool(const std::vector<i64>&, const Rat&)> visit;
  std::vector<i64> x;

  bool run() {
    x.assign(s->n, 0);
    return descend(s->n - 1, Rat(0));
  }

  bool descend(int j, Rat used) {
    if (j < 0) return visit(x, used);
    Rat S(0);
    for (int i = j + 1; i < s->n; ++i) {
      Rat z = Rat(x[i]) - tp[i];
      if (!z.is_zero()) S += s->mu[i][j] * z;
    }
    Rat center = tp[j] - S;
    i64 k0 = round_rat(center);
    for (i64 d = 0;; ++d) {
      bool any = false;
      for (int sgn = 0; sgn < (d == 0 ? 1 : 2); ++sgn) {
        i64 k = sgn == 0 ? k0 + d : k0 - d;
        Rat off = Rat(k) - center;
        Rat term = s->B[j] * off * off;
        if (used + term > budget) continue;
        any = true;
        x[j] = k;
        if (!descend(j - 1, used + term)) return false;
      }
      if (!any) break;  // both wings only move further away from here on
    }
    return true;
  }
};

std::vector<Rat> to_reduced_target(const ShortVecCtx& ctx, const QVec& target) {
  check(static_cast<int>(target.size()) == ctx.lat->rank, "target: wrong length");
  std::vector<Rat> real(ctx.zn);
  for (int j = 0; j < ctx.lat->rank; ++j) {
    real[2 * j] = target[j].real();
    real[2 * j + 1] = target[j].imag();
  }
  std::vector<Rat> tp(ctx.zn, Rat(0));
  for (int c = 0; c < ctx.zn; ++c) {
    Rat acc(0);
    for (int j = 0; j < ctx.zn; ++j)
      if (!real[j].is_zero()) acc += real[j] * Rat(ctx.u_inv.at(j, c));
    tp[c] = acc;
  }
  return tp;
}

GVec reduced_to_gvec(const ShortVecCtx& ctx, const std::vector<i64>& xred) {
  GVec g(ctx.lat->rank, G_ZERO);
  for (int r = 0; r < ctx.zn; ++r) {
    if (xred[r] == 0) continue;
    for (int c = 0; c < ctx.zn; ++c) {
      i64 v = cmul(xred[r], ctx.u.at(r, c));
      if (c % 2 == 0)
        g[c / 2].re = cadd(g[c / 2].re, v);
      else
        g[c / 2].im = cadd(g[c / 2].im, v);
    }
  }
  return g;
}

bool gvec_less(const GVec& a, const GVec& b) {
  for (size_t j = 0; j < a.size(); ++j)
    if (a[j] != b[j]) return a[j] < b[j];
  return false;
}

}  // namespace

ShortVecCtx make_ctx(const HermLattice& lat) {
  ShortVecCtx ctx;
  ctx.lat = &lat;
  ctx.zn = 2 * lat.rank;
  ctx.rgram = real_gram(lat.gram);
  ctx.u = lll_reduce(ctx.rgram);
  ctx.u_inv = imat_inverse(ctx.u);
  ctx.gso = gso_of_gram(imat_mul(imat_mul(ctx.u, ctx.rgram), imat_transpose(ctx.u)));
  return ctx;
}

std::vector<GVec> enumerate_norm(const ShortVecCtx& ctx, i64 n) {
  check(n >= 0, "enumerate_norm: negative norm");
  if (n == 0) return {};
  std::vector<GVec> out;
  Walker w;
  w.s = &ctx.gso;
  w.tp.assign(ctx.zn, Rat(0));
  w.budget = Rat(n);
  w.visit = [&](const std::vector<i64>& xred, const Rat& d2) {
    if (d2 == Rat(n)) {
      GVec g = reduced_to_gvec(ctx, xred);
      bool zero = true;
      for (const auto& e : g) zero = zero && e.is_zero();
      if (!zero) out.push_back(std::move(g));
    }
    return true;
  };
  check(w.run(), "enumerate_norm: aborted walk");
  std::sort(out.begin(), out.end(), gvec_less);
  return out;
}

std::vector<CvpHit> cvp_within(const ShortVecCtx& ctx, const QVec& target, Rat r2) {
  std::vector<CvpHit> out;
  Walker w;
  w.s = &ctx.gso;
  w.tp = to_reduced_target(ctx, target);
  w.budget = r2;
  w.visit = [&](const std::vector<i64>& xred, const Rat& d2) {
    out.push_back({reduced_to_gvec(ctx, xred), d2});
    return true;
  };
  check(w.run(), "cvp_within: aborted walk");
  std::sort(out.begin(), out.end(), [](const CvpHit& a, const CvpHit& b) {
    if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
    return gvec_less(a.x, b.x);
  });
  return out;
}

bool cvp_exists_within(const ShortVecCtx& ctx, const QVec& target, Rat r2,
                       const std::function<bool(const GVec&)>& accept) {
  Walker w;
  w.s = &ctx.gso;
  w.tp = to_reduced_target(ctx, target);
  w.budget = r2;
  bool found = false;
  w.visit = [&](const std::vector<i64>& xred, const Rat&) {
    GVec g = reduced_to_gvec(ctx, xred);
    if (accept && !accept(g)) return true;
    found = true;
    return false;
  };
  w.run();
  return found;
}

std::vector<GVec> coset_reps_p(const HermLattice& lat) {
  check(lat.rank <= 16, "coset_reps_p: rank too large to list");
  std::vector<GVec> out;
  out.reserve(static_cast<size_t>(1) << lat.rank);
  for (u64 mask = 0; mask < (static_cast<u64>(1) << lat.rank); ++mask) {
    GVec v(lat.rank, G_ZERO);
    for (int j = 0; j < lat.rank; ++j)
      if (mask & (static_cast<u64>(1) << j)) v[j] = G_ONE;
    out.push_back(std::move(v));
  }
  return out;
}

void for_each_coset_2(const HermLattice& lat, const std::function<void(const GVec&)>& fn) {
  check(lat.rank <= 16, "for_each_coset_2: rank too large");
  static constexpr GaussInt digit[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  u64 total = static_cast<u64>(1) << (2 * lat.rank);
  GVec v(lat.rank, G_ZERO);
  for (u64 code = 0; code < total; ++code) {
    u64 c = code;
    for (int j = 0; j < lat.rank; ++j) {
      v[j] = digit[c & 3];
      c >>= 2;
    }
    fn(v);
  }
}

i64 norm_class_mod4(const HermLattice& lat, const GVec& v) {
  GaussInt n = norm2(lat, v);
  check(n.im == 0, "norm_class_mod4: norm not rational");
  return ((n.re % 4) + 4) % 4;
}

CoveringStats covering_sample(const ShortVecCtx& ctx, u64 trials, u64 seed, int threads) {
  check(threads >= 1, "covering_sample: bad thread count");
  const int rank = ctx.lat->rank;
  auto run_range = [&](u64 lo, u64 hi, CoveringStats* st) {
    for (u64 t = lo; t < hi; ++t) {
      SplitMix64 rng;
      rng.state = seed + t * 0x9e3779b97f4a7c15ull * 32;
      QVec target(rank);
      for (int j = 0; j < rank; ++j) {
        i64 re = static_cast<i64>(rng.below(64));
        i64 im = static_cast<i64>(rng.below(64));
        target[j] = GaussRat(GaussInt{re, im}, 64);
      }
      ++st->tested;
      if (cvp_exists_within(ctx, target, Rat(2))) {
        ++st->lattice_hits;
        continue;
      }
      QVec shifted(rank);
      for (int j = 0; j < rank; ++j) shifted[j] = target[j] * GaussRat(G_P);
      auto class2 = [&](const GVec& w) { return norm_class_mod4(*ctx.lat, w) == 2; };
      if (cvp_exists_within(ctx, shifted, Rat(2), class2))
        ++st->shifted_hits;
      else
        ++st->failures;
    }
  };
  std::vector<CoveringStats> parts(static_cast<size_t>(threads));
  std::vector<std::thread> pool;
  u64 chunk = (trials + threads - 1) / threads;
  for (int k = 0; k < threads; ++k) {
    u64 lo = std::min(trials, k * chunk), hi = std::min(trials, (k + 1) * chunk);
    pool.emplace_back(run_range, lo, hi, &parts[k]);
  }
  for (auto& th : pool) th.join();
  CoveringStats total;
  for (const auto& st : parts) {
    total.tested += st.tested;
    total.lattice_hits += st.lattice_hits;
    total.shifted_hits += st.shifted_hits;
    total.failures += st.failures;
  }
  return total;
}

// ---- cache -------------------------------------------------------------------

namespace {

u64 payload_hash(const std::vector<GVec>& vs) {
  Fnv1a h;
  for (const auto& v : vs)
    for (const auto& e : v) {
      h.update(&e.re, sizeof(e.re));
      h.update(&e.im, sizeof(e.im));
    }
  return h.digest();
}

std::string cache_path(const ShortVecCtx& ctx, i64 n, const std::string& dir) {
  return dir + "/" + ctx.lat->id + "_norm" + std::to_string(n) + ".svcache";
}

std::optional<std::vector<GVec>> load_cache(const ShortVecCtx& ctx, i64 n,
                                            const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string tag, id;
  i64 norm = -1;
  u64 count = 0, hash = 0;
  in >> tag >> id >> norm >> count >> std::hex >> hash >> std::dec;
  if (!in || tag != "shortvec1" || id != ctx.lat->id || norm != n) return std::nullopt;
  std::vector<GVec> out;
  out.reserve(count);
  for (u64 r = 0; r < count; ++r) {
    GVec v(ctx.lat->rank);
    for (int j = 0; j < ctx.lat->rank; ++j) {
      if (!(in >> v[j].re >> v[j].im)) return std::nullopt;
    }
    out.push_back(std::move(v));
  }
  if (payload_hash(out) != hash) return std::nullopt;
  return out;
}

void store_cache(const ShortVecCtx& ctx, i64 n, const std::string& path,
                 const std::vector<GVec>& vs) {
  std::ofstream out(path);
  if (!out) return;  // caching is best-effort
  out << "shortvec1 " << ctx.lat->id << " " << n << " " << vs.size() << " " << std::hex
      << payload_hash(vs) << std::dec << "\n";
  for (const auto& v : vs) {
    for (size_t j = 0; j < v.size(); ++j)
      out << v[j].re << " " << v[j].im << (j + 1 < v.size() ? " " : "\n");
  }
}

}  // namespace

std::vector<GVec> enumerate_norm_cached(const ShortVecCtx& ctx, i64 n,
                                        const std::string& cache_dir, bool* corrupt) {
  if (cache_dir.empty()) return enumerate_norm(ctx, n);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  std::string path = cache_path(ctx, n, cache_dir);
  if (auto cached = load_cache(ctx, n, path)) return *cached;
  if (corrupt && std::filesystem::exists(path, ec)) *corrupt = true;
  std::vector<GVec> fresh = enumerate_norm(ctx, n);
  store_cache(ctx, n, path, fresh);
  return fresh;
}

}  // namespace gausslat
