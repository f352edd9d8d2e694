#pragma once

// Log serialization. The CSV column set and order are a stable interface:
//   t,z,z_dot,i,i_ref,u,sigma,v_star,v_tilde,q_z,q_i,r,z_measured
// Values are written with full round-trip precision; reading a written file
// reproduces the records exactly.

#include <iosfwd>
#include <string>
#include <vector>

#include "ambsim/sim.hpp"

namespace ambsim {

extern const char* const kCsvHeader;

void write_csv(const std::vector<SimRecord>& records, std::ostream& out);
void write_csv_file(const std::vector<SimRecord>& records, const std::string& path);

/// Strict reader for files produced by write_csv (used by tooling and the
/// round-trip tests). Throws std::runtime_error on any shape mismatch.
std::vector<SimRecord> read_csv(std::istream& in);
std::vector<SimRecord> read_csv_file(const std::string& path);

/// One JSON object per record, same keys as the CSV columns.
void write_jsonl(const std::vector<SimRecord>& records, std::ostream& out);
void write_jsonl_file(const std::vector<SimRecord>& records, const std::string& path);

/// Metrics as a flat JSON object, one key per metric field.
std::string metrics_to_json(const RunMetrics& metrics);
void write_metrics_file(const RunMetrics& metrics, const std::string& path);

}  // namespace ambsim
