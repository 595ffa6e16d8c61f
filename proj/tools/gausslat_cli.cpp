#include <cstdlib>
#include <fstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "gausslat/enumtau.hpp"
#include "gausslat/fingeom.hpp"
#include "gausslat/hyperbolic.hpp"
#include "gausslat/isometry.hpp"
#include "gausslat/lattice.hpp"
#include "gausslat/reduction.hpp"
#include "gausslat/report.hpp"
#include "gausslat/shortvec.hpp"

using namespace gausslat;
using nlohmann::json;

namespace {

struct Expect {
  bool ok = true;
  // records `got` under `key` and folds the comparison into the exit status
  template <class T, class U>
  void eq(json& rep, const char* key, const T& got, const U& want) {
    rep[key] = got;
    if (!(got == static_cast<T>(want))) ok = false;
  }
};

json run_verify_lattices(const std::string& cache_dir, u64 seed, int threads, Expect& ex) {
  HermLattice d4 = make_D4G(), d6 = make_D(3), bw = make_BW16(), m16 = make_M16(),
              hyp = make_hyp_cell(), L_bw = make_L_bw(), L_d4 = make_L_d4();
  json rep = report_header("verify-lattices", {&d4, &d6, &bw, &m16, &hyp, &L_bw, &L_d4});

  json mod;
  ex.eq(mod, "D4", is_p_modular(d4), true);
  ex.eq(mod, "D6", is_p_modular(d6), false);
  ex.eq(mod, "BW16", is_p_modular(bw), true);
  ex.eq(mod, "M16", is_p_modular(m16), false);
  ex.eq(mod, "G11", is_p_modular(hyp), true);
  ex.eq(mod, "L_bw", is_p_modular(L_bw), true);
  ex.eq(mod, "L_d4", is_p_modular(L_d4), true);
  rep["p_modular"] = mod;

  ex.eq(rep, "disc_D4", disc_group_order(d4), 4u);
  ex.eq(rep, "disc_BW16", disc_group_order(bw), 256u);

  bool corrupt = false;
  ShortVecCtx bwctx = make_ctx(bw);
  ShortVecCtx d4ctx = make_ctx(d4);
  ShortVecCtx m16ctx = make_ctx(m16);
  ex.eq(rep, "d4_norm2", enumerate_norm(d4ctx, 2).size(), 24u);
  ex.eq(rep, "bw16_norm2", enumerate_norm_cached(bwctx, 2, cache_dir, &corrupt).size(), 0u);
  ex.eq(rep, "bw16_kissing", enumerate_norm_cached(bwctx, 4, cache_dir, &corrupt).size(), 4320u);
  rep["m16_norm2"] = enumerate_norm(m16ctx, 2).size();
  if (rep["m16_norm2"] == 0) ex.ok = false;
  rep["cache_warning"] = corrupt;

  iso_phi(L_bw, L_d4);  // aborts loudly if the frames disagree
  rep["iso_phi_ok"] = true;

  CoveringStats cov = covering_sample(bwctx, 20000, seed, threads);
  rep["covering"] = {{"tested", cov.tested},
                     {"lattice_hits", cov.lattice_hits},
                     {"shifted_hits", cov.shifted_hits},
                     {"failures", cov.failures}};
  if (cov.failures != 0) ex.ok = false;
  return rep;
}

json run_diagram(const std::string& dot_path, Expect& ex) {
  HermLattice L = make_L_d4();
  RootConfig cfg = simple_roots_32(L);
  json rep = report_header("diagram", {&L});

  DiagramGroup qp = group_Qplus();
  DiagramGroup q = group_Q();
  ex.eq(rep, "Qplus_order", qp.elems.size(), 21504u);
  ex.eq(rep, "Q_order", q.elems.size(), 43008u);
  ex.eq(rep, "transitive", q.orbits().size(), 1u);

  Isometry us = lift_to_isometry(L, cfg, sigma_perm());
  GMat minus_i = GMat::identity(10, GaussInt{0, -1});
  ex.eq(rep, "sigma_square_is_minus_i", iso_compose(us, us).m == minus_i, true);

  u64 pairs = 0, bad = 0;
  for (int v = 0; v < 32; ++v)
    for (int w = v + 1; w < 32; ++w) {
      ++pairs;
      bool holds = true;
      switch (edge_kind(vertex_of_index(v), vertex_of_index(w))) {
        case EdgeKind::None:
          holds = reflections_commute(L, cfg.roots[v], cfg.roots[w]);
          break;
        case EdgeKind::Solid:
          holds = reflections_braid(L, cfg.roots[v], cfg.roots[w]);
          break;
        case EdgeKind::Dotted:
          holds = reflections_dot_braid(L, cfg.roots[v], cfg.roots[w]);
          break;
      }
      if (!holds) ++bad;
    }
  ex.eq(rep, "pair_relations_checked", pairs, 496u);
  ex.eq(rep, "pair_relations_failed", bad, 0u);

  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    check(static_cast<bool>(f), "cannot open dot output file");
    f << diagram_dot();
    rep["dot_file"] = dot_path;
  }
  return rep;
}

json run_near_tau(int threads, Expect& ex) {
  HermLattice L = make_L_d4();
  RootConfig cfg = simple_roots_32(L);
  json rep = report_header("near-tau", {&L});
  rep["threads"] = threads;

  BoxCertificate cert = box_certificate(L, cfg);
  rep["sinh2_d0"] = rq_to_json(cert.sinh2_d0);
  rep["cutoffs"] = {{"pair", {{"exact", rq_to_json(cert.two_cosh2_2d0)}, {"float", cert.cut_cj_f}}},
                    {"c10_float", cert.cut_c10_f},
                    {"c9_float", cert.cut_c9_f}};
  rep["caps"] = {{"cj", cert.cap_cj}, {"c9", cert.cap_c9}, {"c10", cert.cap_c10}};

  MirrorReport mr = mirrors_within_d0(L, cfg, threads);
  rep["candidates_visited"] = mr.tuples;
  rep["roots_closed"] = mr.roots;
  ex.eq(rep, "mirrors_found", mr.mirrors.size(), 32u);
  ex.eq(rep, "tau_on_mirror", !mr.tau_on_none, false);
  ex.eq(rep, "all_at_equality", mr.all_at_equality, true);
  ex.eq(rep, "exactly_simples", mr.exactly_simples, true);

  json certs = json::array();
  for (size_t k = 0; k < mr.mirrors.size(); ++k) {
    RealQuad f(Rat(mr.functional[k].a), Rat(mr.functional[k].b));
    certs.push_back({{"root", gvec_to_json(mr.mirrors[k])},
                     {"functional", rq_to_json(f)},
                     {"sinh2", rq_to_json(f / RealQuad(Rat(0), Rat(8)))}});
  }
  rep["equality_certificates"] = certs;
  return rep;
}

json run_generate(const std::string& emit_paths, const std::string& verify_file, int threads,
                  Expect& ex) {
  HermLattice L_bw = make_L_bw();
  HermLattice L_d4 = make_L_d4();
  json rep = report_header("generate", {&L_bw, &L_d4});
  rep["threads"] = threads;

  IsoMap phi = iso_phi(L_bw, L_d4);
  ReduceCtx ctx = make_reduce_ctx(L_d4);
  ShellVectors shells = build_shells(L_bw);
  ex.eq(rep, "roots_total", shells.total(), 123426u);

  GenerationReport gen = prove_generation(L_bw, L_d4, phi, ctx, shells, threads);
  rep["reduced_direct"] = gen.reduced_direct;
  rep["stuck_count"] = gen.stuck.size();
  bool stuck_in_s2 = !gen.stuck.empty();
  for (u32 i : gen.stuck)
    if (i < shells.s0.size() + shells.s1.size()) stuck_in_s2 = false;
  ex.eq(rep, "stuck_all_in_S2", stuck_in_s2, true);
  ex.eq(rep, "distinct_vectors", gen.distinct_vectors, 123408u);
  rep["max_word_len"] = gen.max_word_len;
  rep["avg_word_len"] = static_cast<double>(gen.sum_word_len) / static_cast<double>(gen.total);

  if (!emit_paths.empty()) {
    write_paths(emit_paths, gen);
    rep["paths_file"] = emit_paths;
    rep["paths_hash"] = hex_u64(file_fnv_hash(emit_paths));
  }
  if (!verify_file.empty()) {
    PathVerify pv = verify_paths(verify_file, phi, ctx, shells, threads);
    rep["verify"] = {{"lines", pv.lines},
                     {"ok", pv.ok},
                     {"bad", pv.bad},
                     {"hash", hex_u64(pv.hash)}};
    if (pv.bad != 0 || pv.ok != shells.total()) ex.ok = false;
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for a Gaussian signature-(9,1) reflection lattice"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  std::string cache_dir, out;
  u64 seed = 1;
  app.add_option("--threads", threads, "worker threads for the heavy subcommands");
  app.add_option("--cache-dir", cache_dir, "directory for short-vector caches");
  app.add_option("--out", out, "write the JSON report to this file instead of stdout");
  app.add_option("--seed", seed, "seed for the randomized covering sample");

  CLI::App* cmd_verify =
      app.add_subcommand("verify-lattices", "modularity, minima, discriminants, frame match");
  CLI::App* cmd_diagram =
      app.add_subcommand("diagram", "symmetry group orders and the 496 pair relations");
  std::string dot_path;
  cmd_diagram->add_option("--dot", dot_path, "write the 32-vertex diagram in dot format");
  CLI::App* cmd_near = app.add_subcommand("near-tau", "enumerate all mirrors within d0 of tau");
  CLI::App* cmd_gen =
      app.add_subcommand("generate", "witness words reducing every shell root to a simple one");
  std::string emit_paths, verify_file;
  cmd_gen->add_option("--emit-paths", emit_paths, "write witness words to this file");
  cmd_gen->add_option("--verify-paths", verify_file, "replay and re-verify a path file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("GAUSSLAT_CACHE")) cache_dir = env;
  if (threads < 1) threads = 1;

  Expect ex;
  json rep;
  if (cmd_verify->parsed())
    rep = run_verify_lattices(cache_dir, seed, threads, ex);
  else if (cmd_diagram->parsed())
    rep = run_diagram(dot_path, ex);
  else if (cmd_near->parsed())
    rep = run_near_tau(threads, ex);
  else
    rep = run_generate(emit_paths, verify_file, threads, ex);
  rep["pass"] = ex.ok;

  write_report(rep, out);
  return ex.ok ? 0 : 1;
}
