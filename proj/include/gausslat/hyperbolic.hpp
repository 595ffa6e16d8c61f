#pragma once

// Distance functionals on the negative-norm ball of a signature (9,1)
// lattice, kept exact: every quantity we compare lives in Q or Q(sqrt2).

#include "gausslat/lattice.hpp"

namespace gausslat {

// <u,v> for vectors with entries in Q(zeta8), conjugate-linear on the left.
Cyclo8 inner_cy(const HermLattice& lat, const CyVec& u, const CyVec& v);
CyVec to_cyvec(const GVec& v);

// cosh^2 of the distance between the points of negative norm u, v:
// |<u,v>|^2 / (u^2 v^2).
RealQuad cosh2_pt_pt(const HermLattice& lat, const CyVec& u, const CyVec& v);
// sinh^2 of the distance from a negative-norm point z to the mirror of a
// positive-norm vector r: |<r,z>|^2 / (-r^2 z^2).
RealQuad sinh2_pt_mirror(const HermLattice& lat, const GVec& r, const CyVec& z);
// Mirrors of r, s meet in the ball iff the form is positive definite on
// Cr + Cs.
bool mirrors_meet(const HermLattice& lat, const GVec& r, const GVec& s);
// cosh^2 of the distance between disjoint mirrors: |<r,s>|^2 / (r^2 s^2).
Rat cosh2_mirror_mirror(const HermLattice& lat, const GVec& r, const GVec& s);
// exp(2 d_z(v)) = |<z,v>|^2 / (-v^2) for null z: horoball depth of the point v.
RealQuad horo_exp2(const HermLattice& lat, const GVec& z, const CyVec& v);

// Height of s over the null vector rho: |<s,rho>|^2 / |s^2|, or |<s,rho>|^2
// when s is null.
i64 height(const HermLattice& lat, const GVec& s, const GVec& rho);

// A point of the ball closure together with two mirror points spans an ideal
// triangle iff det gram(z,x,y) <= 0; z null, x,y negative.
bool ideal_triangle_ok(const HermLattice& lat, const CyVec& z, const CyVec& x, const CyVec& y);

}  // namespace gausslat
