#pragma once

// The 32-vertex incidence configuration: the 16 points of F_2^4 together with
// the 16 affine hyperplanes whose homogeneous part misses the all-ones point.
// Bit j of a point stands for coordinate j+1.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gausslat/intops.hpp"

namespace gausslat {

using u8 = std::uint8_t;

inline int parity4(unsigned v) { return __builtin_popcount(v & 0xf) & 1; }

struct Vertex {
  bool hyper = false;
  u8 x = 0;    // point coordinates, or the hyperplane normal (odd weight)
  u8 eps = 0;  // hyperplane affine part; 0 for points

  friend bool operator==(Vertex a, Vertex b) {
    return a.hyper == b.hyper && a.x == b.x && a.eps == b.eps;
  }
  friend bool operator!=(Vertex a, Vertex b) { return !(a == b); }
};

inline Vertex point_v(u8 x) { return {false, static_cast<u8>(x & 0xf), 0}; }
inline Vertex hyper_v(u8 u, u8 eps) {
  check(parity4(u) == 1, "hyperplane normal must have odd weight");
  return {true, static_cast<u8>(u & 0xf), static_cast<u8>(eps & 1)};
}

// Dense index: points at 0..15 (by coordinate value), hyperplanes at
// 16..31 ordered by (normal, eps).
inline int normal_rank(u8 u) {
  static constexpr u8 odd[8] = {1, 2, 4, 7, 8, 11, 13, 14};
  for (int r = 0; r < 8; ++r)
    if (odd[r] == u) return r;
  die("normal_rank: even-weight normal");
}

inline u8 normal_of_rank(int r) {
  static constexpr u8 odd[8] = {1, 2, 4, 7, 8, 11, 13, 14};
  check(r >= 0 && r < 8, "normal_of_rank: bad rank");
  return odd[r];
}

inline int vertex_index(Vertex v) {
  return v.hyper ? 16 + 2 * normal_rank(v.x) + v.eps : v.x;
}

inline Vertex vertex_of_index(int j) {
  check(j >= 0 && j < 32, "vertex_of_index: out of range");
  if (j < 16) return point_v(static_cast<u8>(j));
  return hyper_v(normal_of_rank((j - 16) / 2), static_cast<u8>((j - 16) & 1));
}

// Names: points z, g_i, e_ij, c_i, a; hyperplanes d_i, h_i, f_i, b_i.
std::string vertex_name(Vertex v);
Vertex vertex_named(const std::string& name);

inline bool incident(Vertex pt, Vertex hy) {
  check(!pt.hyper && hy.hyper, "incident: expects (point, hyperplane)");
  return parity4(pt.x & hy.x) == hy.eps;
}

// Translation by the point u.
inline Vertex t_translate(u8 u, Vertex v) {
  if (!v.hyper) return point_v(v.x ^ (u & 0xf));
  return hyper_v(v.x, static_cast<u8>(v.eps ^ parity4(v.x & u)));
}

inline Vertex t_a(Vertex v) { return t_translate(0xf, v); }

// The duality swapping points and hyperplanes. On a hyperplane (u, eps) it
// gives the point (u_1,u_2,u_3,1) + (u_4+eps)(1,1,1,1); on points, the
// inverse of that map.
Vertex sigma_D(Vertex v);

enum class EdgeKind { None, Solid, Dotted };

// Solid = incident point/hyperplane pair, dotted = antipodal pair under t_a,
// none otherwise. In group terms: solid xyx=yxy, dotted xyxy=yxyx (with the
// extra order-4 twist), none xy=yx.
inline EdgeKind edge_kind(Vertex u, Vertex v) {
  check(!(u == v), "edge_kind: equal vertices");
  if (v == t_a(u)) return EdgeKind::Dotted;
  if (u.hyper != v.hyper) {
    Vertex pt = u.hyper ? v : u, hy = u.hyper ? u : v;
    if (incident(pt, hy)) return EdgeKind::Solid;
  }
  return EdgeKind::None;
}

// ---- the diagram automorphism groups ----------------------------------------

using VPerm = std::array<u8, 32>;  // vertex permutation by dense index

VPerm vperm_identity();
VPerm vperm_compose(const VPerm& first, const VPerm& then);  // apply first, then then
VPerm sigma_perm();
// Coordinate permutation of F_2^4 (perm[j] = image coordinate of j), acting
// on the whole configuration.
VPerm coord_perm(const std::array<int, 4>& perm);
VPerm translation_perm(u8 u);

struct DiagramGroup {
  std::vector<VPerm> elems;  // sorted, uniqued
  bool contains(const VPerm& g) const;
  std::vector<std::vector<int>> orbits() const;
};

// Affine maps preserving the configuration and each side of it (generated by
// translations, coordinate permutations and transvections fixing the all-ones
// point) -- and its extension by the duality.
DiagramGroup group_Qplus();
DiagramGroup group_Q();
std::vector<VPerm> qplus_generators();

// True if the permutation swaps the point and hyperplane sides.
inline bool side_swapping(const VPerm& g) { return g[0] >= 16; }

// Graphviz rendering of the 32-vertex diagram.
std::string diagram_dot();

}  // namespace gausslat
