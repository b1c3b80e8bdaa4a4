#include "netmon/results_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace netmon {
namespace {

std::string node_config_field(const ExperimentConfig& c) {
  return c.two_communities() ? c.node_config.label() : "none";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
}

int parse_int(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void write_summary_csv(std::ostream& out, std::span<const CellResult> cells) {
  out << kCsvHeader << '\n';
  for (const auto& cell : cells) {
    const auto& c = cell.config;
    for (const auto& s : summarize(cell)) {
      out << c.scenario << ',' << c.n << ',' << format_real(c.alpha) << ',' << node_config_field(c)
          << ',' << (c.known_labels ? "true" : "false") << ',' << to_int(s.monitor) << ','
          << monitor_name(s.monitor) << ',' << s.replications << ',' << s.detections << ','
          << format_real(s.detection_rate) << ',' << (s.ced ? format_real(*s.ced) : "") << ','
          << classification_name(s.classification) << '\n';
    }
  }
}

nlohmann::json results_json(const nlohmann::json& config, std::span<const CellResult> cells) {
  nlohmann::json doc;
  doc["config"] = config;
  doc["cells"] = nlohmann::json::array();
  for (const auto& cell : cells) {
    const auto& c = cell.config;
    nlohmann::json j;
    j["scenario"] = c.scenario;
    j["n"] = c.n;
    j["alpha"] = c.alpha;
    j["node_config"] = node_config_field(c);
    j["known_labels"] = c.known_labels;
    j["m"] = c.m;
    j["phase2_len"] = c.phase2_len;
    j["d"] = c.d;
    j["seed"] = c.seed;
    j["first_replication"] = cell.first_replication;
    j["replications"] = cell.runs.size();
    nlohmann::json rl = nlohmann::json::object();
    nlohmann::json errors = nlohmann::json::object();
    for (std::size_t slot = 0; slot < c.monitors.size(); ++slot) {
      nlohmann::json arr = nlohmann::json::array();
      int failed = 0;
      for (const auto& run : cell.runs) {
        const auto& o = run.outcomes[slot];
        arr.push_back(o.run_length ? nlohmann::json(*o.run_length) : nlohmann::json(nullptr));
        failed += o.fit_failed;
      }
      const std::string key = std::to_string(to_int(c.monitors[slot]));
      rl[key] = std::move(arr);
      errors[key] = failed;
    }
    j["run_lengths"] = std::move(rl);
    j["fit_errors"] = std::move(errors);
    doc["cells"].push_back(std::move(j));
  }
  return doc;
}

std::vector<SummaryRow> read_summary_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return {};
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw std::runtime_error("unexpected CSV header");
  std::vector<SummaryRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 12)
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 12 fields");
    SummaryRow r;
    r.scenario = f[0];
    r.n = parse_int(f[1], line_no);
    r.alpha = parse_double(f[2], line_no);
    r.node_config = f[3];
    if (f[4] != "true" && f[4] != "false")
      throw std::runtime_error("line " + std::to_string(line_no) + ": bad known_labels");
    r.known_labels = f[4] == "true";
    r.monitor_id = parse_int(f[5], line_no);
    r.monitor_name = f[6];
    r.replications = parse_int(f[7], line_no);
    r.detections = parse_int(f[8], line_no);
    r.detection_rate = parse_double(f[9], line_no);
    if (!f[10].empty()) r.ced = parse_double(f[10], line_no);
    try {
      r.classification = parse_classification(f[11]);
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace netmon
