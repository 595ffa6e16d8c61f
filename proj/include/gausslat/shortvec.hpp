#pragma once

// Exact enumeration of short and close lattice vectors. The Gaussian lattice
// of rank n is treated as a Z-lattice of rank 2n; an LLL-reduced basis feeds
// a Fincke-Pohst walk carried out entirely in rational arithmetic.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gausslat/lattice.hpp"
#include "gausslat/rng.hpp"

namespace gausslat {

struct ShortVecCtx {
  const HermLattice* lat = nullptr;
  int zn = 0;   // 2 * rank
  IMat rgram;   // real Gram of the doubled basis
  IMat u;       // LLL transform, rows = reduced basis in doubled coords
  IMat u_inv;
  Gso gso;      // of u rgram u^T
};

ShortVecCtx make_ctx(const HermLattice& lat);

// All lattice vectors of exact norm n (not up to units), deterministic order.
std::vector<GVec> enumerate_norm(const ShortVecCtx& ctx, i64 n);
// Cached variant; cache_dir may be empty (no caching). Corrupt or stale cache
// files are recomputed and rewritten; *corrupt is set when that happened.
std::vector<GVec> enumerate_norm_cached(const ShortVecCtx& ctx, i64 n,
                                        const std::string& cache_dir,
                                        bool* corrupt = nullptr);

struct CvpHit {
  GVec x;
  Rat dist2;
};

// All lattice points within squared distance r2 of the rational target
// (basis coordinates).
std::vector<CvpHit> cvp_within(const ShortVecCtx& ctx, const QVec& target, Rat r2);
// Early-exit variant: true as soon as some point within r2 satisfies accept
// (accept == nullptr accepts everything).
bool cvp_exists_within(const ShortVecCtx& ctx, const QVec& target, Rat r2,
                       const std::function<bool(const GVec&)>& accept = nullptr);

// Digit representatives of lat/p lat: {0,1} in each basis coordinate.
std::vector<GVec> coset_reps_p(const HermLattice& lat);
// Digit representatives of lat/2 lat: {0,1,i,1+i} per coordinate, streamed.
void for_each_coset_2(const HermLattice& lat, const std::function<void(const GVec&)>& fn);

// v^2 mod 4 (vector norms are rational integers here).
i64 norm_class_mod4(const HermLattice& lat, const GVec& v);

struct CoveringStats {
  u64 tested = 0;
  u64 lattice_hits = 0;   // within sqrt(2) of a lattice point
  u64 shifted_hits = 0;   // within 1 of (class-2 vectors)/p
  u64 failures = 0;
};

// Random rational points (denominator 64 per coordinate) tested against the
// two-branch covering of the definite space.
CoveringStats covering_sample(const ShortVecCtx& ctx, u64 trials, u64 seed, int threads = 1);

}  // namespace gausslat
