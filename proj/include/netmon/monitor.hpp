#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "netmon/charts.hpp"
#include "netmon/generator.hpp"
#include "netmon/statistics.hpp"

namespace netmon {

/// Stable public monitor numbering, 1-15.
enum class MonitorId : int {
  avg_degree = 1,
  avg_eigenvector,
  avg_betweenness,
  max_betweenness,
  avg_closeness,
  max_closeness,
  global_clustering,
  avg_local_clustering,
  diameter,
  avg_shortest_path,
  max_shortest_path,
  assortativity,
  priebe,
  wilson,
  yu,
};

inline constexpr int kMonitorCount = 15;

MonitorId monitor_from_int(int id);
inline int to_int(MonitorId id) { return static_cast<int>(id); }
std::string_view monitor_name(MonitorId id);
std::string_view monitor_description(MonitorId id);
std::span<const MonitorId> all_monitors();
bool needs_labels(MonitorId id);

struct MonitorOptions {
  double ewma_lambda = kEwmaLambda;
  double ewma_width = 3.0;
};

/// Common lifecycle: fit on the Phase I sequence, then one update per Phase II
/// graph. A monitor instance belongs to one replication.
class Monitor {
 public:
  virtual ~Monitor() = default;

  virtual MonitorId id() const = 0;
  virtual void fit(std::span<const Snapshot> phase1) = 0;
  virtual bool update(const Snapshot& g) = 0;
};

/// Monitors 14 and 15 require community labels.
std::unique_ptr<Monitor> make_monitor(MonitorId id, const std::optional<Labels>& labels,
                                      const MonitorOptions& options = {});

}  // namespace netmon
