#pragma once

// Constrained enumeration of the roots whose mirrors come within d0 of the
// point tau, proving that the 32 simple mirrors are precisely the closest
// ones. Everything here is exact; the decimal cutoffs quoted in reports are
// conveniences derived from RealQuad values after the fact.

#include <functional>
#include <optional>

#include "gausslat/lattice.hpp"
#include "gausslat/reduction.hpp"

namespace gausslat {

// v1..v8 are eight pairwise orthogonal norm-2 roots spanning a maximal
// definite subspace; v9, v10 are null with <v9,v10> = 2 and orthogonal to
// the first eight. Stored in basis coordinates of the plain frame.
struct TauBasis {
  std::array<GVec, 10> v;
};

TauBasis tau_basis(const HermLattice& L, const RootConfig& cfg);

// Coefficients of a candidate root r = p^-1 (c1 v1 + ... + c10 v10).
// c[8] and c[9] are the coefficients of the null vectors v9, v10.
struct CTuple {
  std::array<GaussInt, 10> c;
};

// The box every root near tau must live in: c1..c9 in G(<=2), c10 in
// G(<=9), the pair sums c1+c2, c3+c4, c5+c6, c7+c8 all congruent to c10
// mod p, the definite norm sum equal to 2 - 2 Re(conj(c9) c10) and lying in
// {2,4,6,8,10}, and c9 normalized to {0, 1, p}.
bool ctuple_ok(const CTuple& t);

// Solve r = p^-1 sum c_j v_j for the coefficients; r may be any lattice
// vector (inner products against a p-modular lattice keep the c_j integral).
CTuple c_of_root(const HermLattice& L, const TauBasis& tb, const GVec& r);

// Rebuild the lattice vector of a tuple. The definite and null coordinates
// come out integral for free; the remaining hyperbolic coordinate is
// (c9 + (p-3) c10 - c2 - c4 - c6 - c8)/p, and the tuple yields a root
// exactly when that division lands in G. Returned in basis coordinates,
// norm 2 checked.
std::optional<GVec> c_to_root(const HermLattice& L, const CTuple& t);

// Visit every tuple satisfying ctuple_ok, in deterministic order; the
// visitor returns false to stop early. Returns the number of tuples
// visited. Pairs are pre-bucketed by congruence class and norm, and the two
// halves (c1..c4 | c5..c8) meet in the middle on the remaining norm budget.
u64 enumerate_candidates(const std::function<bool(const CTuple&)>& fn);

// The exclusion that empties the zero-budget case: Re(conj(c9) c10) = 1
// would force c1 = ... = c8 = 0, and then the mod-p congruence and the
// integrality of the last coordinate contradict each other. Checked
// exhaustively over c9 in {0,1,p}, c10 in G(<=9).
void empty_budget_excluded();

// Re-derivation of the enumeration box from the distance cutoffs, instead
// of assuming it. cap_cj / cap_c9 / cap_c10 are the largest Gaussian norms
// passing the exact inequalities; the familiar decimals 3.6642, 9.3379,
// 3.2043 are float shadows of the exact values.
struct BoxCertificate {
  RealQuad sinh2_d0;       // common sinh^2 distance of the simple mirrors
  RealQuad cosh_2d0;       // cosh(2 d0) = 1 + 2 sinh^2 d0
  RealQuad two_cosh2_2d0;  // bound on |p^-1 <r, s_v>|^2
  RealQuad e_v9;           // exp(2 d_v9(tau))
  RealQuad e_v10;          // exp(2 d_v10(tau))
  i64 cap_cj = 0;
  i64 cap_c9 = 0;
  i64 cap_c10 = 0;
  double cut_cj_f = 0;   // ~ 3.6642
  double cut_c10_f = 0;  // ~ 9.3379
  double cut_c9_f = 0;   // ~ 3.2043
};

BoxCertificate box_certificate(const HermLattice& L, const RootConfig& cfg);

// Full run: enumerate, keep the roots whose mirrors satisfy
// sinh^2 d(r_perp, tau) <= sinh^2 d0 by exact comparison, canonicalize unit
// multiples, and check the outcome against the 32 simple roots. Work is
// partitioned by c10 value across threads and merged in canonical order, so
// the report does not depend on the thread count.
struct MirrorReport {
  u64 tuples = 0;  // candidate tuples visited
  u64 roots = 0;   // tuples that closed into lattice roots
  std::vector<GVec> mirrors;       // canonical unit-class representatives
  std::vector<TauVal> functional;  // |<r,tau>|^2 per mirror, expect (2,0)
  bool all_at_equality = false;    // every kept mirror exactly at d0
  bool tau_on_none = false;        // no enumerated root has tau on its mirror
  bool exactly_simples = false;    // kept classes == the 32 simple classes
};

MirrorReport mirrors_within_d0(const HermLattice& L, const RootConfig& cfg, int threads);

}  // namespace gausslat
