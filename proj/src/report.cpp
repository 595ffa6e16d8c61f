#include "gausslat/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "gausslat/rng.hpp"

namespace gausslat {

nlohmann::json rat_to_json(const Rat& x) { return nlohmann::json::array({x.num, x.den}); }

nlohmann::json rq_to_json(const RealQuad& x) {
  return {{"rational", nlohmann::json::array({rat_to_json(x.a), rat_to_json(x.b)})},
          {"float", x.to_double()}};
}

nlohmann::json gvec_to_json(const GVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const GaussInt& x : v) a.push_back(nlohmann::json::array({x.re, x.im}));
  return a;
}

std::string hex_u64(u64 x) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(x));
  return buf;
}

u64 lattice_hash(const HermLattice& lat) {
  Fnv1a h;
  h.update_str(lat.id.c_str());
  i64 rank = lat.rank;
  h.update(&rank, sizeof rank);
  auto eat_gmat = [&](const GMat& m) {
    for (const GaussInt& x : m.a) {
      h.update(&x.re, sizeof x.re);
      h.update(&x.im, sizeof x.im);
    }
  };
  auto eat_qmat = [&](const QMat& m) {
    for (const GaussRat& x : m.a) {
      h.update(&x.num.re, sizeof x.num.re);
      h.update(&x.num.im, sizeof x.num.im);
      h.update(&x.den, sizeof x.den);
    }
  };
  eat_gmat(lat.gram);
  eat_qmat(lat.basis);
  eat_qmat(lat.ambient_form);
  return h.digest();
}

nlohmann::json report_header(const std::string& experiment,
                             const std::vector<const HermLattice*>& inputs) {
  nlohmann::json in = nlohmann::json::object();
  for (const HermLattice* lat : inputs) in[lat->id] = hex_u64(lattice_hash(*lat));
  return {{"schema", kReportSchema}, {"experiment", experiment}, {"inputs", in}};
}

void write_report(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_path);
  check(static_cast<bool>(f), "cannot open report output file");
  f << j.dump(2) << "\n";
  check(static_cast<bool>(f), "failed writing report output file");
}

}  // namespace gausslat
