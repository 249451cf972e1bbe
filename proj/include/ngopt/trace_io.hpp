#pragma once

#include <string>
#include <vector>

#include "ngopt/integrator.hpp"

namespace ngopt {

/// Writes a trace as CSV with header iter,t,f,g_max,cos_theta,s_norm,
/// x_0..x_{n-1}. Doubles are printed with 17 significant digits so values
/// round-trip exactly; undefined cos_theta is written as nan.
void write_trace_csv(const std::string& path,
                     const std::vector<TraceRecord>& trace);

/// Reads a trace written by write_trace_csv. A nan in the cos_theta column
/// becomes an empty optional. Throws InputError on malformed files.
std::vector<TraceRecord> read_trace_csv(const std::string& path);

/// Writes a trace as a JSON array of records (cos_theta null when
/// undefined).
void write_trace_json(const std::string& path,
                      const std::vector<TraceRecord>& trace);

}  // namespace ngopt
