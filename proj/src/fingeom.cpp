#include "gausslat/fingeom.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace gausslat {

std::string vertex_name(Vertex v) {
  auto bit_list = [](u8 m) {
    std::string s;
    for (int j = 0; j < 4; ++j)
      if (m & (1 << j)) s += static_cast<char>('1' + j);
    return s;
  };
  if (!v.hyper) {
    if (v.x == 0) return "z";
    if (v.x == 0xf) return "a";
    int w = __builtin_popcount(v.x);
    if (w == 1) return "g" + bit_list(v.x);
    // e_jk = a + g_j + g_k, so the displayed digits are the cleared bits.
    if (w == 2) return "e" + bit_list(static_cast<u8>(0xf ^ v.x));
    return "c" + bit_list(static_cast<u8>(0xf ^ v.x));
  }
  int w = __builtin_popcount(v.x);
  if (w == 1) return (v.eps ? "h" : "d") + bit_list(v.x);
  return (v.eps ? "b" : "f") + bit_list(static_cast<u8>(0xf ^ v.x));
}

Vertex vertex_named(const std::string& name) {
  check(!name.empty(), "vertex_named: empty name");
  if (name == "z") return point_v(0);
  if (name == "a") return point_v(0xf);
  u8 m = 0;
  for (size_t j = 1; j < name.size(); ++j) {
    check(name[j] >= '1' && name[j] <= '4', "vertex_named: bad coordinate digit");
    m |= static_cast<u8>(1 << (name[j] - '1'));
  }
  switch (name[0]) {
    case 'g': return point_v(m);
    case 'e': return point_v(static_cast<u8>(0xf ^ m));
    case 'c': return point_v(static_cast<u8>(0xf ^ m));
    case 'd': return hyper_v(m, 0);
    case 'h': return hyper_v(m, 1);
    case 'f': return hyper_v(static_cast<u8>(0xf ^ m), 0);
    case 'b': return hyper_v(static_cast<u8>(0xf ^ m), 1);
    default: die("vertex_named: unknown family");
  }
}

// sigma_K maps the hyperplane (u, eps) to the point (u1,u2,u3,1) + (u4+eps)a.
namespace {

Vertex sigma_K(Vertex h) {
  check(h.hyper, "sigma_K: expects a hyperplane");
  u8 u4 = static_cast<u8>((h.x >> 3) & 1);
  u8 w = static_cast<u8>((h.x & 0x7) | 0x8);
  if ((u4 ^ h.eps) & 1) w ^= 0xf;
  return point_v(w);
}

Vertex sigma_K_inv(Vertex pt) {
  check(!pt.hyper, "sigma_K_inv: expects a point");
  u8 y = pt.x;
  u8 head;  // u1..u3
  u8 delta = static_cast<u8>(((y >> 3) & 1) ^ 1);
  head = delta ? static_cast<u8>((y ^ 0xf) & 0x7) : static_cast<u8>(y & 0x7);
  u8 u4 = static_cast<u8>(1 ^ parity4(head));
  u8 u = static_cast<u8>(head | (u4 << 3));
  u8 eps = static_cast<u8>((u4 ^ delta) & 1);
  Vertex h = hyper_v(u, eps);
  check(sigma_K(h) == pt, "sigma_K_inv: not inverse");
  return h;
}

}  // namespace

Vertex sigma_D(Vertex v) { return v.hyper ? sigma_K(v) : sigma_K_inv(v); }

// ---- permutation machinery ---------------------------------------------------

VPerm vperm_identity() {
  VPerm p{};
  for (int j = 0; j < 32; ++j) p[j] = static_cast<u8>(j);
  return p;
}

VPerm vperm_compose(const VPerm& first, const VPerm& then) {
  VPerm p{};
  for (int j = 0; j < 32; ++j) p[j] = then[first[j]];
  return p;
}

VPerm sigma_perm() {
  VPerm p{};
  for (int j = 0; j < 32; ++j) p[j] = static_cast<u8>(vertex_index(sigma_D(vertex_of_index(j))));
  return p;
}

VPerm translation_perm(u8 u) {
  VPerm p{};
  for (int j = 0; j < 32; ++j)
    p[j] = static_cast<u8>(vertex_index(t_translate(u, vertex_of_index(j))));
  return p;
}

namespace {

u8 apply_bits(const std::array<u8, 4>& rows, u8 x) {
  // y_j = <rows[j], x>
  u8 y = 0;
  for (int j = 0; j < 4; ++j)
    if (parity4(rows[j] & x)) y |= static_cast<u8>(1 << j);
  return y;
}

// Vertex permutation of the linear map with matrix rows M (y_j = <M_j, x>)
// and its transpose rows Mt; hyperplane normals transform by the inverse
// transpose. Only called for involutions or permutation matrices, where the
// needed inverses are immediate.
VPerm linear_vperm(const std::array<u8, 4>& rows, const std::array<u8, 4>& inv_t_rows) {
  VPerm p{};
  for (int j = 0; j < 32; ++j) {
    Vertex v = vertex_of_index(j);
    Vertex w = v.hyper ? hyper_v(apply_bits(inv_t_rows, v.x), v.eps)
                       : point_v(apply_bits(rows, v.x));
    p[j] = static_cast<u8>(vertex_index(w));
  }
  return p;
}

}  // namespace

VPerm coord_perm(const std::array<int, 4>& perm) {
  // point bits move by x'_{perm[j]} = x_j, i.e. row perm[j] of M is e_j
  std::array<u8, 4> rows{};
  for (int j = 0; j < 4; ++j) rows[perm[j]] = static_cast<u8>(1 << j);
  // for a permutation matrix the inverse transpose is the matrix itself
  return linear_vperm(rows, rows);
}

std::vector<VPerm> qplus_generators() {
  std::vector<VPerm> gens;
  for (int j = 0; j < 4; ++j) gens.push_back(translation_perm(static_cast<u8>(1 << j)));
  gens.push_back(coord_perm({1, 0, 2, 3}));
  gens.push_back(coord_perm({1, 2, 3, 0}));
  // Transvections x -> x + <c,x> u with <c,u> = 0 (involutions) and c of even
  // weight, so the marked point a stays fixed. The inverse transpose is the
  // transvection with the roles of c and u swapped.
  auto transvection = [](u8 c, u8 u) {
    check(parity4(c & u) == 0 && parity4(c) == 0, "transvection: needs c.u = 0, c.a = 0");
    std::array<u8, 4> rows{}, t_rows{};
    for (int j = 0; j < 4; ++j) {
      u8 e = static_cast<u8>(1 << j);
      rows[j] = static_cast<u8>(e ^ (parity4(u & e) ? c : 0));
      t_rows[j] = static_cast<u8>(e ^ (parity4(c & e) ? u : 0));
    }
    return linear_vperm(rows, t_rows);
  };
  gens.push_back(transvection(0x3, 0x3));  // c = u = g1+g2
  gens.push_back(transvection(0x3, 0xc));  // c = g1+g2, u = g3+g4
  gens.push_back(transvection(0x5, 0x5));  // c = u = g1+g3
  gens.push_back(transvection(0x5, 0x2));  // c = g1+g3, u = g2
  return gens;
}

namespace {

DiagramGroup bfs_closure(const std::vector<VPerm>& gens) {
  std::set<VPerm> seen;
  std::deque<VPerm> todo;
  seen.insert(vperm_identity());
  todo.push_back(vperm_identity());
  while (!todo.empty()) {
    VPerm g = todo.front();
    todo.pop_front();
    for (const VPerm& h : gens) {
      VPerm gh = vperm_compose(g, h);
      if (seen.insert(gh).second) todo.push_back(gh);
    }
  }
  DiagramGroup grp;
  grp.elems.assign(seen.begin(), seen.end());
  return grp;
}

}  // namespace

bool DiagramGroup::contains(const VPerm& g) const {
  return std::binary_search(elems.begin(), elems.end(), g);
}

std::vector<std::vector<int>> DiagramGroup::orbits() const {
  std::vector<bool> done(32, false);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < 32; ++v) {
    if (done[v]) continue;
    std::set<int> orb;
    for (const VPerm& g : elems) orb.insert(g[v]);
    std::vector<int> o(orb.begin(), orb.end());
    for (int x : o) done[x] = true;
    out.push_back(std::move(o));
  }
  return out;
}

DiagramGroup group_Qplus() { return bfs_closure(qplus_generators()); }

DiagramGroup group_Q() {
  std::vector<VPerm> gens = qplus_generators();
  gens.push_back(sigma_perm());
  return bfs_closure(gens);
}

std::string diagram_dot() {
  std::ostringstream os;
  os << "graph diagram32 {\n  layout=circo;\n  node [shape=circle, fontsize=10];\n";
  for (int j = 0; j < 32; ++j) {
    Vertex v = vertex_of_index(j);
    os << "  " << vertex_name(v) << (v.hyper ? " [style=filled, fillcolor=lightgray];\n" : ";\n");
  }
  for (int j = 0; j < 32; ++j)
    for (int k = j + 1; k < 32; ++k) {
      EdgeKind e = edge_kind(vertex_of_index(j), vertex_of_index(k));
      if (e == EdgeKind::None) continue;
      os << "  " << vertex_name(vertex_of_index(j)) << " -- "
         << vertex_name(vertex_of_index(k));
      if (e == EdgeKind::Dotted) os << " [style=dotted]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace gausslat
