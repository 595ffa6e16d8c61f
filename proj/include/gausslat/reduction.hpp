#pragma once

// Greedy descent of mirrors toward the interior point fixed by the duality,
// plus the cusp-side shells and generation witnesses built from them.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gausslat/isometry.hpp"
#include "gausslat/lattice.hpp"
#include "gausslat/shortvec.hpp"

namespace gausslat {

// Values a + b sqrt2 with integer a, b: the scale the distance functional
// |<x,tau>|^2 lives on.
struct TauVal {
  i64 a = 0;
  i64 b = 0;
};
int tau_cmp(TauVal x, TauVal y);  // exact sign of x - y

struct ReduceCtx {
  const HermLattice* L = nullptr;  // plain frame
  RootConfig cfg;
  std::array<GVec, 32> gram_rows;       // conj(s_v) Gram, so <s_v, x> = row . x
  std::array<GaussInt, 32> ip_l_inf;    // <s_v, l_inf>
  std::array<GaussInt, 32> ip_p_inf;    // <s_v, p_inf>
  std::unordered_set<u64> simple_keys;  // unit-class hashes of the 32 simples

  GaussInt root_inner(int v, const GVec& x) const;
  // index of the simple root x is a unit multiple of, or -1
  int simple_index(const GVec& x, int* unit_exp = nullptr) const;
};

ReduceCtx make_reduce_ctx(const HermLattice& L_d4);

u64 gvec_unit_class_hash(const GVec& x);

TauVal tau_functional(const ReduceCtx& ctx, const GVec& x);

// Letters: k in 1..32 applies R^i of simple root k-1, k+32 applies R^{-i};
// the square R^{-1} is written as a doubled letter. Words apply first letter
// first.
GVec apply_letter(const ReduceCtx& ctx, int letter, const GVec& x);
GVec apply_word(const ReduceCtx& ctx, const std::vector<int>& word, const GVec& x);
std::vector<int> invert_word(const std::vector<int>& word);

struct TauStep {
  int root = -1;
  int xi_exp = 0;
  GVec image;
  TauVal value;
};
// Steepest strictly-decreasing candidate among the 96 reflections, ties
// broken by (root index, xi exponent).
std::optional<TauStep> tau_step(const ReduceCtx& ctx, const GVec& x, TauVal cur);

struct DescentResult {
  bool reduced = false;
  std::vector<int> word;
  int final_simple = -1;
  int unit_exp = 0;
  GVec final_vec;
  int steps = 0;
};

// What to do when the steepest step dead-ends on a non-simple mirror: give up
// and report the terminal root, or hunt for another strictly decreasing route
// through the full step graph before giving up.
enum class Fallback { None, Search };

DescentResult reduce_root(const ReduceCtx& ctx, GVec x, Fallback fb = Fallback::Search);

// ---- cusp-side shells (bw frame) ---------------------------------------------

struct ShellVectors {
  std::vector<GVec> s0;  // 34 generator mirror vectors, as listed (repeats kept)
  std::vector<GVec> s1;  // 512 height-1 roots
  std::vector<GVec> s2;  // 122880 height-2 roots
  size_t total() const { return s0.size() + s1.size() + s2.size(); }
  const GVec& at(size_t i) const;
};

ShellVectors build_shells(const HermLattice& L_bw);

// ---- height reduction for null vectors (cusp descent) -------------------------

// y(s, l) = (m/h) <s, l> for a root s = (sigma; m, .) and primitive null
// l = (lambda; h, .), the quantity steering which reflection lowers the
// height of l.
GaussRat y_of(const HermLattice& L_bw, const GVec& s, const GVec& l);
// The rotation exponent (1 for i, 3 for -i) whose reflection strictly lowers
// the height, if y lands in one of the two open discs of radius sqrt2.
std::optional<int> disc_exponent(const GaussRat& y);

struct NullStep {
  GVec root;    // bw coordinates of the reflecting root
  int xi_exp;   // 1 or 3
  GVec image;   // l after the reflection
};
// One height-lowering step for a primitive null vector not proportional to
// rho; searches the two shells by closest-vector computations.
std::optional<NullStep> null_step(const HermLattice& L_bw, const ShortVecCtx& lam_ctx,
                                  const GVec& l);
// Full descent to a unit multiple of rho; aborts if some step fails.
std::vector<NullStep> reduce_null_to_rho(const HermLattice& L_bw, const ShortVecCtx& lam_ctx,
                                         GVec l);

// ---- generation witnesses ------------------------------------------------------

struct GenerationReport {
  u64 total = 0;
  u64 reduced_direct = 0;
  std::vector<u32> stuck;  // indices into the concatenated list, all rescued
  u64 distinct_vectors = 0;
  u64 max_word_len = 0;
  u64 sum_word_len = 0;
  std::vector<std::vector<int>> words;  // one witness word per list index
};

GenerationReport prove_generation(const HermLattice& L_bw, const HermLattice& L_d4,
                                  const IsoMap& phi, const ReduceCtx& ctx,
                                  const ShellVectors& shells, int threads);

// The height-2 root whose reflection unblocks every stuck vector (plain-frame
// basis coordinates).
GVec perturbation_root(const HermLattice& L_d4);

// Witness path file: one line per list entry, "index letter letter ...".
void write_paths(const std::string& path, const GenerationReport& rep);
u64 file_fnv_hash(const std::string& path);

struct PathVerify {
  u64 lines = 0;
  u64 ok = 0;
  u64 bad = 0;
  u64 hash = 0;
};
PathVerify verify_paths(const std::string& path, const IsoMap& phi, const ReduceCtx& ctx,
                        const ShellVectors& shells, int threads);

// ---- the thirteen-generator certificate ----------------------------------------

struct ThirteenReport {
  bool octagons_solid = false;
  bool deflations_hold = false;
  bool words_verified = false;
  std::map<std::string, std::vector<int>> words;  // derived vertex -> letters
};

ThirteenReport thirteen_generator_check(const ReduceCtx& ctx);

}  // namespace gausslat
