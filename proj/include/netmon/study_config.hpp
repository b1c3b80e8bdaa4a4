#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "netmon/harness.hpp"

namespace netmon {

/// Experiment grid as read from a JSON config file. Grid axes expand into one
/// ExperimentConfig per cell; node configurations and label modes apply only
/// to two-community scenarios.
struct StudyConfig {
  std::vector<std::string> scenarios;
  std::vector<int> sizes{40, 100};
  std::vector<double> alphas{0.5, 1.0};
  std::vector<std::string> node_configs{"50-50", "25-75", "10-90"};
  std::vector<bool> known_labels{true};
  int m = 200;
  int phase2_len = 50;
  int d = 50;
  int replications = 200;
  std::vector<int> monitors;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out = "results";

  /// Every scenario in the catalog, all monitors.
  static StudyConfig defaults();

  /// Rejects unknown keys and invalid values with std::invalid_argument.
  static StudyConfig from_json(const nlohmann::json& doc);
  /// Fields that determine the numbers: everything except threads and out.
  nlohmann::json to_json() const;

  std::vector<ExperimentConfig> expand() const;
};

/// Loads a config file, or the embedded config of a results sidecar.
StudyConfig load_study_config(const std::string& path);

}  // namespace netmon
