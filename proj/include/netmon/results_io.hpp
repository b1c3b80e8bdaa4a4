#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "netmon/harness.hpp"

namespace netmon {

inline constexpr const char* kCsvHeader =
    "scenario,n,alpha,node_config,known_labels,monitor_id,monitor_name,replications,"
    "detections,detection_rate,ced,classification";

/// %.6g rendering used for every floating-point field.
std::string format_real(double x);

void write_summary_csv(std::ostream& out, std::span<const CellResult> cells);

/// Config echo plus the per-replication run-length log (null = no signal).
nlohmann::json results_json(const nlohmann::json& config, std::span<const CellResult> cells);

struct SummaryRow {
  std::string scenario;
  int n = 0;
  double alpha = 0.0;
  std::string node_config;
  bool known_labels = true;
  int monitor_id = 0;
  std::string monitor_name;
  int replications = 0;
  int detections = 0;
  double detection_rate = 0.0;
  std::optional<double> ced;
  Classification classification = Classification::unclassified;
};

/// Throws std::runtime_error on a malformed file.
std::vector<SummaryRow> read_summary_csv(std::istream& in);

}  // namespace netmon
