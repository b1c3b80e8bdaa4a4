#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netmon/graph.hpp"
#include "netmon/rng.hpp"

namespace netmon {

/// Community label per node, 0-based.
using Labels = std::vector<int>;

std::vector<int> community_sizes(const Labels& labels, int k);

struct DcsbmParams {
  int n = 0;
  int k = 1;
  Labels labels;
  Eigen::MatrixXd propensity;  // k x k, symmetric
  std::vector<double> theta;

  double edge_mean(int i, int j) const {
    return theta[i] * theta[j] * propensity(labels[i], labels[j]);
  }

  /// Throws std::invalid_argument when any invariant of the model fails,
  /// including the per-community degree-parameter constraint.
  void validate() const;

  bool operator==(const DcsbmParams& other) const;
};

enum class ModelType { dcsbm };

struct GenerativeModel {
  ModelType type = ModelType::dcsbm;
  DcsbmParams params;
  double alpha = 1.0;  // continuity: probability a pair is redrawn each step

  bool operator==(const GenerativeModel& other) const {
    return type == other.type && params == other.params && alpha == other.alpha;
  }
};

struct ChangeScenario {
  std::string name;
  GenerativeModel baseline;
  GenerativeModel changed;
  int t_star = 201;
};

/// Community size split of a two-community network, e.g. (0.25, 0.75).
struct NodeConfiguration {
  double first = 0.5;
  double second = 0.5;

  /// "50-50", "25-75" or "10-90".
  static NodeConfiguration parse(std::string_view text);
  std::string label() const;
  int first_size(int n) const;

  bool operator==(const NodeConfiguration&) const = default;
};

std::vector<double> scale_theta(std::span<const double> raw, const Labels& labels);
std::vector<double> sample_theta(const Labels& labels, double lo, double hi, Rng& rng);

Graph sample_graph(const DcsbmParams& params, Rng& rng);

/// Counts pairs that kept their previous value; used to check the continuity mechanism.
struct EvolveTrace {
  long copied = 0;
  long redrawn = 0;
};

Graph evolve(const Graph& prev, const GenerativeModel& model, Rng& rng,
             EvolveTrace* trace = nullptr);

/// T graphs; the changed model governs every step t >= t_star (1-based).
std::vector<Graph> generate_sequence(const ChangeScenario& scenario, int length, Rng& rng);

struct ScenarioInfo {
  std::string_view name;
  int communities;
  std::string_view change;
};

std::span<const ScenarioInfo> scenario_inventory();
const ScenarioInfo& scenario_info(std::string_view name);

/// Builds the named scenario for n nodes. Parameters are those of the n = 40
/// study, with every propensity scaled by 40/n so expected degrees are kept.
/// Degree parameters are drawn from `rng`.
ChangeScenario scenario_catalog(std::string_view name, int n, double alpha,
                                const NodeConfiguration& node_config, Rng& rng);

}  // namespace netmon
