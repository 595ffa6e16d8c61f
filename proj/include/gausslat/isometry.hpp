#pragma once

#include <optional>
#include <vector>

#include "gausslat/fingeom.hpp"
#include "gausslat/lattice.hpp"

namespace gausslat {

// Lattice isometries as integral matrices acting on basis coordinates from
// the right: x -> x * m. Composition order follows application order.
struct Isometry {
  Frame frame = Frame::PlainDef;
  GMat m;
};

GVec apply_iso_vec(const Isometry& g, const GVec& x);
Isometry iso_compose(const Isometry& first, const Isometry& then);
Isometry iso_identity(const HermLattice& lat);
Isometry iso_inverse(const Isometry& g);
bool preserves_form(const HermLattice& lat, const GMat& m);

// R_v^xi(x) = x - (1-xi) <v,x>/<v,v> v, with xi = i^xi_exp, xi_exp in {1,2,3}.
// Integral whenever v is a norm-2 vector of a lattice whose inner products
// all lie in (1+i)G.
Isometry reflection(const HermLattice& lat, const GVec& v, int xi_exp);
GVec reflect_vec(const HermLattice& lat, const GVec& v, int xi_exp, const GVec& x);

bool reflections_commute(const HermLattice& lat, const GVec& s, const GVec& t);
bool reflections_braid(const HermLattice& lat, const GVec& s, const GVec& t);
// xyxy = yxyx, the relation attached to dotted pairs.
bool reflections_dot_braid(const HermLattice& lat, const GVec& s, const GVec& t);

// C_m for the cyclic tuple g_0..g_{k-1}: g_0 g_1 ... g_{m-1} = g_1 g_2 ... g_m
// (indices mod k), checked as matrices. Products here are in application
// order: the first listed factor acts first.
bool cyclic_relation_holds(const std::vector<Isometry>& gens, int m, int offset = 0);

// The diagram symmetry g, realized on the lattice: s_v maps to s_{g(v)},
// except that a side-swapping g picks up a factor -i on the sixteen point
// roots. Such a map is unique up to one global unit because the diagram is
// connected. Solved from ten independent roots, then checked on all 32 and
// against the form.
Isometry lift_to_isometry(const HermLattice& L, const RootConfig& cfg, const VPerm& g);

// ---- Heisenberg-type translations of the null vector rho ----------------

// T_{lam,z}: sigma -> sigma + a lam on the definite part, fixing the height
// along rho; z is purely imaginary with z/i = lam^2/2 (mod 2).
struct Translation {
  GVec lam;      // basis coordinates in the definite part (length rank-2)
  GaussInt z;    // purely imaginary
  Isometry iso;  // matrix on the full lattice
};

Translation make_translation(const HermLattice& L, const GVec& lam, GaussInt z);
// first o second as operators: second acts first.
Translation trans_mul(const HermLattice& L, const Translation& outer, const Translation& inner);
Translation trans_inverse(const HermLattice& L, const Translation& t);
// T T' T^{-1} T'^{-1}.
Translation trans_commutator(const HermLattice& L, const Translation& t, const Translation& tp);

// The 512 translations T_{sigma, i sigma^2/2} and T_{sigma, i(2 + sigma^2/2)}
// over the standard digit representatives of Lambda/(1+i)Lambda.
std::vector<Translation> tstar_reps(const HermLattice& L);

// Checks R_{(0;1,1)} R_{(0;1,i)} = beta T_{0,-4i} with beta trivial on the
// definite part and multiplication by -i on the hyperbolic coordinates.
bool r1r2_identity(const HermLattice& L);

}  // namespace gausslat
