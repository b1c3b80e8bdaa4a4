#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "netmon/graph.hpp"

namespace netmon {

/// The twelve global summaries charted by monitors 1-12, in monitor order.
enum class StatisticKind : int {
  avg_degree = 0,
  avg_eigenvector,
  avg_betweenness,
  max_betweenness,
  avg_closeness,
  max_closeness,
  global_clustering,
  avg_local_clustering,
  diameter,
  avg_shortest_path,
  avg_eccentricity,
  assortativity,
};

inline constexpr int kStatisticCount = 12;

std::string_view statistic_name(StatisticKind kind);

struct SummaryVector {
  std::array<double, kStatisticCount> values{};

  double operator[](StatisticKind kind) const { return values[static_cast<int>(kind)]; }
  double& operator[](StatisticKind kind) { return values[static_cast<int>(kind)]; }
};

// All statistics below operate on the binarized simple graph.

double summary_statistic(const Graph& g, StatisticKind kind);
SummaryVector summary_vector(const Graph& g);

/// Edge count of the subgraph induced by the nodes within distance k of v.
/// k = 0 is the degree of v.
long scan_neighborhood_count(const Graph& g, int v, int k, const DistanceMatrix& dist);

/// scan_neighborhood_count for every node and k = 0, 1, 2, indexed [k][v].
std::array<std::vector<long>, 3> scan_counts(const Graph& g, const DistanceMatrix& dist);

// Node-level building blocks, exposed for tests and the scan monitor.
std::vector<double> betweenness_centrality(const Graph& g);
std::vector<double> closeness_centrality(const DistanceMatrix& dist);
std::vector<double> principal_eigenvector(const Graph& g);
std::vector<double> local_clustering(const Graph& g);
double global_clustering(const Graph& g);
double degree_assortativity(const Graph& g);

/// A graph plus lazily computed derived data, shared by the monitors that
/// consume the same observation. Not thread-safe; holds a reference to the graph.
class Snapshot {
 public:
  Snapshot(const Graph& g) : graph_(&g) {}  // NOLINT(google-explicit-constructor)

  const Graph& graph() const { return *graph_; }
  const Graph& simple() const;
  const DistanceMatrix& distances() const;
  const SummaryVector& summary() const;

 private:
  const Graph* graph_;
  mutable std::optional<Graph> simple_;
  mutable std::optional<DistanceMatrix> dist_;
  mutable std::optional<SummaryVector> summary_;
};

}  // namespace netmon
