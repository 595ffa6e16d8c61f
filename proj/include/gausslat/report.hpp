#pragma once

// JSON report plumbing shared by the CLI subcommands. Exact values are
// serialized as rational pairs with a convenience float alongside; the float
// never feeds back into any computation.

#include <string>

#include "gausslat/lattice.hpp"
#include "json.hpp"

namespace gausslat {

inline constexpr int kReportSchema = 1;

// {"rational": [[a_num, a_den], [b_num, b_den]], "float": a + b sqrt2}
nlohmann::json rq_to_json(const RealQuad& x);
nlohmann::json rat_to_json(const Rat& x);
nlohmann::json gvec_to_json(const GVec& v);  // [[re, im], ...]

std::string hex_u64(u64 x);

// Fingerprint of a lattice's defining data: id, rank, gram, basis, form.
u64 lattice_hash(const HermLattice& lat);

// Common envelope: schema version, experiment name, input fingerprints.
nlohmann::json report_header(const std::string& experiment,
                             const std::vector<const HermLattice*>& inputs);

// Serialize to `out_path`, or stdout when the path is empty.
void write_report(const nlohmann::json& j, const std::string& out_path);

}  // namespace gausslat
