#pragma once

// Hermitian lattices over the Gaussian integers. Vectors are ROW vectors of
// basis coordinates; the ambient pairing is <x,y> = conj(x) F y^T, linear in
// the second argument and conjugate-linear in the first. The Gram matrix of a
// basis B is conj(B) F B^T, and all lattices we build have Gaussian-integer
// Gram entries.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gausslat/linalg.hpp"

namespace gausslat {

enum class Frame { PlainDef, BwDef };  // which rank-8 definite block the basis uses

using GVec = std::vector<GaussInt>;
using QVec = std::vector<GaussRat>;
using CyVec = std::vector<Cyclo8>;

struct HermLattice {
  std::string id;
  Frame frame = Frame::PlainDef;
  int rank = 0;
  GMat gram;          // rank x rank Hermitian
  QMat basis;         // rank x adim, rows are basis vectors in ambient coords
  QMat ambient_form;  // adim x adim Hermitian
  // Optional fast membership by the lattice's defining congruences, on
  // ambient coordinates.
  std::function<bool(const QVec&)> congruence_member;

  int adim() const { return basis.nc; }
};

// ---- vector helpers (basis coordinates) -------------------------------------

inline QVec to_qvec(const GVec& v) {
  QVec r(v.size());
  for (size_t j = 0; j < v.size(); ++j) r[j] = GaussRat(v[j]);
  return r;
}

GaussRat inner_q(const HermLattice& lat, const QVec& u, const QVec& v);
GaussInt inner(const HermLattice& lat, const GVec& u, const GVec& v);
inline GaussInt norm2(const HermLattice& lat, const GVec& v) { return inner(lat, v, v); }
inline GaussRat norm2_q(const HermLattice& lat, const QVec& v) { return inner_q(lat, v, v); }

// ambient <-> basis coordinate changes
QVec to_ambient(const HermLattice& lat, const QVec& basis_coords);
inline QVec to_ambient(const HermLattice& lat, const GVec& c) { return to_ambient(lat, to_qvec(c)); }
// Fails (nullopt) if the ambient vector is not in the lattice's rational span.
std::optional<QVec> ambient_to_coords(const HermLattice& lat, const QVec& ambient);
// Aborts unless the result is integral: used for vectors asserted to lie in
// the lattice.
GVec lattice_coords(const HermLattice& lat, const QVec& ambient);

// Membership of an ambient vector: defining congruences if installed, else
// integrality of the coordinate solve.
bool member(const HermLattice& lat, const QVec& ambient);

// ---- constructors -----------------------------------------------------------

// D-lattice of G-rank n (index-p sublattice of G^n, real rank 2n).
HermLattice make_D(int n);
inline HermLattice make_D4G() { return make_D(2); }
// Rank-8 Barnes-Wall Gaussian lattice, by congruences; also constructs the
// tensor-power definition and asserts the two agree.
HermLattice make_BW16();
// The same without the trace condition (integral, minimum 2, not modular).
HermLattice make_M16();
// Hyperbolic cell: e1^2 = e2^2 = 0, <e1,e2> = conj(p).
HermLattice make_hyp_cell();
// The signature (9,1) lattice in its two frames.
HermLattice make_L_bw();
HermLattice make_L_d4();

// ---- structure --------------------------------------------------------------

// The lattice as integer ambient rows over a denominator.
ScaledModule ambient_rows(const HermLattice& lat);
// Dual lattice in ambient coordinates, as integer rows over a denominator.
ScaledModule dual_module(const HermLattice& lat);
// Group index [sup : sub] of one module in another (same ambient space).
u64 module_index(const ScaledModule& sup, const ScaledModule& sub);
bool is_p_modular(const HermLattice& lat);
// |L'/L| = |det Gram|^2 (order of the discriminant group of the underlying
// Z-lattice).
u64 disc_group_order(const HermLattice& lat);
// Group index [sup : sub]; both lattices in the same ambient, sub contained
// in sup.
u64 index_in(const HermLattice& sup, const HermLattice& sub);

// ---- the 32-root configuration in the plain frame ---------------------------

// Vertex naming for the finite incidence geometry: 16 points of F_2^4 and 16
// hyperplane translates. Defined in fingeom.hpp; here we only need the dense
// index 0..31.
struct RootConfig {
  // roots[v] = basis coordinates in L_d4 of the simple root attached to
  // vertex index v (fingeom vertex_index order).
  std::vector<GVec> roots;
  GVec p_inf;  // sum of the two roots of any dotted point pair
  GVec l_inf;  // sum of the two roots of any dotted hyperplane pair
  GVec rho;    // (0;0,1)
  GVec rho1;   // (0;1,0)
  CyVec tau_coords;  // zeta8^{-1} l_inf - p_inf, basis coords over Q(zeta8)
};

RootConfig simple_roots_32(const HermLattice& L_d4);

// Isometric change of frame: y = x * m maps bw-frame coordinates onto
// plain-frame coordinates, Gram-compatibly; both m and its inverse are
// Gaussian-integral.
struct IsoMap {
  GMat m;
  GMat m_inv;
};

IsoMap iso_phi(const HermLattice& L_bw, const HermLattice& L_d4);

inline GVec apply_iso(const IsoMap& iso, const GVec& x) {
  GVec y(iso.m.nc, G_ZERO);
  for (int j = 0; j < iso.m.nr; ++j) {
    if (x[j].is_zero()) continue;
    for (int c = 0; c < iso.m.nc; ++c) y[c] += x[j] * iso.m.at(j, c);
  }
  return y;
}

// gcd of the coordinates is a unit (true also tests v != 0).
bool is_primitive(const GVec& v);

}  // namespace gausslat
