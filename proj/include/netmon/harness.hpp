#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netmon/generator.hpp"
#include "netmon/monitor.hpp"

namespace netmon {

struct ExperimentConfig {
  std::string scenario = "no_change";
  int n = 40;
  double alpha = 1.0;
  NodeConfiguration node_config{};
  int m = 200;           // Phase I length
  int phase2_len = 50;
  int d = 50;            // detection time limit
  int replications = 200;
  std::vector<MonitorId> monitors{all_monitors().begin(), all_monitors().end()};
  bool known_labels = true;
  std::uint64_t seed = 0;
  MonitorOptions monitor_options{};

  void validate() const;
  bool two_communities() const;
  /// "scenario/n/alpha/node_config"; identifies the cell's random streams.
  std::string cell_key() const;
};

struct MonitorOutcome {
  std::optional<int> run_length;  // 1-based Phase II index of the first signal
  bool fit_failed = false;

  bool operator==(const MonitorOutcome&) const = default;
};

/// Outcomes aligned with ExperimentConfig::monitors.
struct RunResult {
  std::vector<MonitorOutcome> outcomes;
  bool operator==(const RunResult&) const = default;
};

RunResult run_replication(const ExperimentConfig& config, int index);

double detection_rate(std::span<const std::optional<int>> run_lengths, int d);
std::optional<double> conditional_expected_delay(std::span<const std::optional<int>> run_lengths, int d);

enum class Classification { good, moderate, poor, unclassified };

std::string_view classification_name(Classification c);
Classification parse_classification(std::string_view text);
Classification classify(double rate, std::optional<double> ced);

struct CellResult {
  ExperimentConfig config;
  int first_replication = 0;
  std::vector<RunResult> runs;  // runs[i] is replication first_replication + i

  std::vector<std::optional<int>> run_lengths(std::size_t monitor_slot) const;
};

struct MetricsSummary {
  MonitorId monitor = MonitorId::avg_degree;
  int replications = 0;
  int detections = 0;
  int fit_errors = 0;
  double detection_rate = 0.0;
  std::optional<double> ced;
  Classification classification = Classification::unclassified;
};

std::vector<MetricsSummary> summarize(const CellResult& cell);

/// Replications [begin, end) of one cell, spread over `threads` OpenMP
/// threads (0 = runtime default). Output does not depend on the thread count.
CellResult run_cell_range(const ExperimentConfig& config, int begin, int end, int threads = 0);
CellResult run_cell(const ExperimentConfig& config, int threads = 0);

/// Single-threaded reference for run_cell.
CellResult run_cell_serial(const ExperimentConfig& config);

/// Concatenates replication ranges of the same cell.
CellResult merge_cells(const CellResult& first, const CellResult& second);

using ProgressFn = std::function<void(std::size_t done, std::size_t total, const ExperimentConfig&)>;

std::vector<CellResult> run_grid(std::span<const ExperimentConfig> configs, int threads = 0,
                                 const ProgressFn& progress = {});

}  // namespace netmon
