#include "ngopt/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <string>

#include "ngopt/errors.hpp"

namespace ngopt {

namespace {

constexpr char kHeaderPrefix[] = "iter,t,f,g_max,cos_theta,s_norm";

// 17 significant digits: enough for exact double round-trips.
std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw InputError("malformed number in trace: '" + token + "'");
  }
  return value;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> tokens;
  std::stringstream stream(line);
  std::string token;
  while (std::getline(stream, token, ',')) tokens.push_back(token);
  if (!line.empty() && line.back() == ',') tokens.emplace_back();
  return tokens;
}

}  // namespace

void write_trace_csv(const std::string& path,
                     const std::vector<TraceRecord>& trace) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot open '" + path + "' for writing");
  }
  const Eigen::Index n = trace.empty() ? 0 : trace.front().x.size();
  out << kHeaderPrefix;
  for (Eigen::Index i = 0; i < n; ++i) out << ",x_" << i;
  out << "\n";

  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const TraceRecord& r : trace) {
    out << r.iter << ',' << fmt17(r.t) << ',' << fmt17(r.f) << ','
        << fmt17(r.g_max) << ','
        << fmt17(r.cos_theta.has_value() ? *r.cos_theta : nan) << ','
        << fmt17(r.s_norm);
    for (Eigen::Index i = 0; i < r.x.size(); ++i) out << ',' << fmt17(r.x(i));
    out << "\n";
  }
}

std::vector<TraceRecord> read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open '" + path + "' for reading");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw InputError("empty trace file '" + path + "'");
  }
  if (line.rfind(kHeaderPrefix, 0) != 0) {
    throw InputError("unexpected trace header in '" + path + "'");
  }
  const auto header = split_csv(line);
  const int n = static_cast<int>(header.size()) - 6;
  if (n < 0) {
    throw InputError("unexpected trace header in '" + path + "'");
  }

  std::vector<TraceRecord> trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tokens = split_csv(line);
    if (static_cast<int>(tokens.size()) != 6 + n) {
      throw InputError("trace row with wrong column count in '" + path + "'");
    }
    TraceRecord r;
    r.iter = std::stol(tokens[0]);
    r.t = parse_double(tokens[1]);
    r.f = parse_double(tokens[2]);
    r.g_max = parse_double(tokens[3]);
    const double cos = parse_double(tokens[4]);
    r.cos_theta = std::isnan(cos) ? std::nullopt : std::optional<double>(cos);
    r.s_norm = parse_double(tokens[5]);
    r.x.resize(n);
    for (int i = 0; i < n; ++i) r.x(i) = parse_double(tokens[6 + i]);
    trace.push_back(std::move(r));
  }
  return trace;
}

void write_trace_json(const std::string& path,
                      const std::vector<TraceRecord>& trace) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TraceRecord& r : trace) {
    nlohmann::json row{{"iter", r.iter}, {"t", r.t},       {"f", r.f},
                       {"g_max", r.g_max}, {"s_norm", r.s_norm}};
    if (r.cos_theta.has_value()) {
      row["cos_theta"] = *r.cos_theta;
    } else {
      row["cos_theta"] = nullptr;
    }
    row["x"] = std::vector<double>(r.x.data(), r.x.data() + r.x.size());
    rows.push_back(std::move(row));
  }
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot open '" + path + "' for writing");
  }
  out << rows.dump(1) << "\n";
}

}  // namespace ngopt
