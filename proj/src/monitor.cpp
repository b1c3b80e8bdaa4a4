#include "netmon/monitor.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace netmon {
namespace {

constexpr std::array<MonitorId, kMonitorCount> kAll = {
    MonitorId::avg_degree,        MonitorId::avg_eigenvector,   MonitorId::avg_betweenness,
    MonitorId::max_betweenness,   MonitorId::avg_closeness,     MonitorId::max_closeness,
    MonitorId::global_clustering, MonitorId::avg_local_clustering, MonitorId::diameter,
    MonitorId::avg_shortest_path, MonitorId::max_shortest_path, MonitorId::assortativity,
    MonitorId::priebe,            MonitorId::wilson,            MonitorId::yu};

struct NameRow {
  std::string_view name;
  std::string_view description;
};

constexpr std::array<NameRow, kMonitorCount> kNames = {{
    {"avg.degree", "EWMA of the average degree"},
    {"avg.eigenvector", "EWMA of the average eigenvector centrality"},
    {"avg.betweenness", "EWMA of the average betweenness"},
    {"max.betweenness", "EWMA of the maximum betweenness"},
    {"avg.closeness", "EWMA of the average closeness"},
    {"max.closeness", "EWMA of the maximum closeness"},
    {"global.cluster.coeff", "EWMA of the global clustering coefficient"},
    {"avg.local.cluster.coeff", "EWMA of the average local clustering coefficient"},
    {"diameter", "EWMA of the diameter"},
    {"avg.shortest.path", "EWMA of the average shortest path length"},
    {"max.shortest.path", "EWMA of the average eccentricity"},
    {"assortativity", "EWMA of the degree assortativity"},
    {"Priebe", "moving-window scan statistics"},
    {"Wilson", "Shewhart charts on the block propensity estimates"},
    {"Yu", "compositional T2 chart on the degree parameter estimates"},
}};

class EwmaMonitor final : public Monitor {
 public:
  EwmaMonitor(MonitorId id, const MonitorOptions& options)
      : id_(id), kind_(static_cast<StatisticKind>(to_int(id) - 1)), options_(options) {}

  MonitorId id() const override { return id_; }

  void fit(std::span<const Snapshot> phase1) override {
    std::vector<double> series;
    series.reserve(phase1.size());
    for (const auto& s : phase1) series.push_back(s.summary()[kind_]);
    state_ = ewma_fit(series, options_.ewma_lambda, options_.ewma_width);
  }

  bool update(const Snapshot& g) override { return ewma_update(state_, g.summary()[kind_]).signal; }

 private:
  MonitorId id_;
  StatisticKind kind_;
  MonitorOptions options_;
  EwmaState state_;
};

class ScanMonitor final : public Monitor {
 public:
  MonitorId id() const override { return MonitorId::priebe; }

  // Phase I only primes the sliding windows; signals raised there are discarded.
  void fit(std::span<const Snapshot> phase1) override {
    state_ = ScanState();
    for (const auto& s : phase1) state_.update(s);
  }

  bool update(const Snapshot& g) override { return state_.update(g); }

 private:
  ScanState state_;
};

class ShewhartMonitor final : public Monitor {
 public:
  explicit ShewhartMonitor(Labels labels) : labels_(std::move(labels)) {}
  MonitorId id() const override { return MonitorId::wilson; }
  void fit(std::span<const Snapshot> phase1) override { state_ = shewhart_p_fit(phase1, labels_); }
  bool update(const Snapshot& g) override { return shewhart_p_update(state_, g.graph()); }

 private:
  Labels labels_;
  ShewhartPState state_;
};

class T2Monitor final : public Monitor {
 public:
  explicit T2Monitor(Labels labels) : labels_(std::move(labels)) {}
  MonitorId id() const override { return MonitorId::yu; }
  void fit(std::span<const Snapshot> phase1) override { state_ = t2_fit(phase1, labels_); }
  bool update(const Snapshot& g) override { return t2_update(state_, g.graph()); }

 private:
  Labels labels_;
  T2State state_;
};

}  // namespace

MonitorId monitor_from_int(int id) {
  if (id < 1 || id > kMonitorCount)
    throw std::invalid_argument("monitor id " + std::to_string(id) + " outside 1-15");
  return static_cast<MonitorId>(id);
}

std::string_view monitor_name(MonitorId id) { return kNames.at(to_int(id) - 1).name; }
std::string_view monitor_description(MonitorId id) { return kNames.at(to_int(id) - 1).description; }
std::span<const MonitorId> all_monitors() { return kAll; }
bool needs_labels(MonitorId id) { return id == MonitorId::wilson || id == MonitorId::yu; }

std::unique_ptr<Monitor> make_monitor(MonitorId id, const std::optional<Labels>& labels,
                                      const MonitorOptions& options) {
  if (needs_labels(id) && !labels)
    throw std::invalid_argument("monitor " + std::string(monitor_name(id)) + " needs community labels");
  switch (id) {
    case MonitorId::priebe:
      return std::make_unique<ScanMonitor>();
    case MonitorId::wilson:
      return std::make_unique<ShewhartMonitor>(*labels);
    case MonitorId::yu:
      return std::make_unique<T2Monitor>(*labels);
    default:
      return std::make_unique<EwmaMonitor>(monitor_from_int(to_int(id)), options);
  }
}

}  // namespace netmon
