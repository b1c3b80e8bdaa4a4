#include "netmon/harness.hpp"

#include <omp.h>

#include <cstdio>
#include <exception>
#include <memory>
#include <stdexcept>

#include "netmon/community.hpp"

namespace netmon {
namespace {

std::uint64_t cell_seed(const ExperimentConfig& config) {
  return splitmix64(config.seed ^ fnv1a64(config.cell_key()));
}

struct ActiveMonitor {
  std::unique_ptr<Monitor> monitor;
  MonitorOutcome outcome;
};

}  // namespace

void ExperimentConfig::validate() const {
  scenario_info(scenario);
  if (n < 5) throw std::invalid_argument("n must be at least 5");
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (m < 2) throw std::invalid_argument("Phase I needs at least two graphs");
  if (phase2_len < 1) throw std::invalid_argument("Phase II needs at least one graph");
  if (d < 1 || d > phase2_len) throw std::invalid_argument("detection limit must lie in 1..phase2_len");
  if (replications < 1) throw std::invalid_argument("replications must be at least 1");
  if (monitors.empty()) throw std::invalid_argument("no monitors selected");
}

bool ExperimentConfig::two_communities() const { return scenario_info(scenario).communities == 2; }

std::string ExperimentConfig::cell_key() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s/%d/%.6g/%s", scenario.c_str(), n, alpha,
                two_communities() ? node_config.label().c_str() : "none");
  return buf;
}

RunResult run_replication(const ExperimentConfig& config, int index) {
  Rng rng = make_rng(cell_seed(config), static_cast<std::uint64_t>(index));
  ChangeScenario scenario =
      scenario_catalog(config.scenario, config.n, config.alpha, config.node_config, rng);
  scenario.t_star = config.m + 1;
  const auto graphs = generate_sequence(scenario, config.m + config.phase2_len, rng);
  const std::span<const Graph> phase1(graphs.data(), static_cast<std::size_t>(config.m));

  Labels labels = scenario.baseline.params.labels;
  if (!config.known_labels)
    labels = regularized_spectral(average_graph(phase1), scenario.baseline.params.k, rng);

  const std::vector<Snapshot> phase1_snaps(phase1.begin(), phase1.end());
  std::vector<ActiveMonitor> active;
  active.reserve(config.monitors.size());
  for (MonitorId id : config.monitors) {
    ActiveMonitor a;
    try {
      a.monitor = make_monitor(id, labels, config.monitor_options);
      a.monitor->fit(phase1_snaps);
    } catch (const std::exception&) {
      a.monitor.reset();
      a.outcome.fit_failed = true;
    }
    active.push_back(std::move(a));
  }

  for (int t = 1; t <= config.phase2_len; ++t) {
    const Snapshot snap(graphs[static_cast<std::size_t>(config.m + t - 1)]);
    bool any_running = false;
    for (auto& a : active) {
      if (!a.monitor) continue;
      try {
        if (a.monitor->update(snap)) {
          a.outcome.run_length = t;
          a.monitor.reset();
        }
      } catch (const std::exception&) {
        a.outcome.fit_failed = true;
        a.monitor.reset();
      }
      any_running = any_running || a.monitor != nullptr;
    }
    if (!any_running) break;
  }

  RunResult result;
  result.outcomes.reserve(active.size());
  for (auto& a : active) result.outcomes.push_back(a.outcome);
  return result;
}

double detection_rate(std::span<const std::optional<int>> run_lengths, int d) {
  if (run_lengths.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& rl : run_lengths) hits += rl && *rl >= 1 && *rl <= d;
  return static_cast<double>(hits) / static_cast<double>(run_lengths.size());
}

std::optional<double> conditional_expected_delay(std::span<const std::optional<int>> run_lengths, int d) {
  double total = 0.0;
  std::size_t hits = 0;
  for (const auto& rl : run_lengths)
    if (rl && *rl >= 1 && *rl <= d) {
      total += *rl;
      ++hits;
    }
  if (hits == 0) return std::nullopt;
  return total / static_cast<double>(hits);
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::good: return "good";
    case Classification::moderate: return "moderate";
    case Classification::poor: return "poor";
    case Classification::unclassified: return "unclassified";
  }
  return "unclassified";
}

Classification parse_classification(std::string_view text) {
  for (auto c : {Classification::good, Classification::moderate, Classification::poor,
                 Classification::unclassified})
    if (classification_name(c) == text) return c;
  throw std::invalid_argument("unknown classification '" + std::string(text) + "'");
}

Classification classify(double rate, std::optional<double> ced) {
  if (!ced) return rate <= 0.25 ? Classification::poor : Classification::unclassified;
  if (rate >= 0.99 && *ced < 10) return Classification::good;
  if (rate >= 0.75 && *ced >= 10 && *ced <= 30) return Classification::moderate;
  if (rate <= 0.25) return Classification::poor;
  return Classification::unclassified;
}

std::vector<std::optional<int>> CellResult::run_lengths(std::size_t monitor_slot) const {
  std::vector<std::optional<int>> out;
  out.reserve(runs.size());
  for (const auto& r : runs) out.push_back(r.outcomes.at(monitor_slot).run_length);
  return out;
}

std::vector<MetricsSummary> summarize(const CellResult& cell) {
  std::vector<MetricsSummary> out;
  const int d = cell.config.d;
  for (std::size_t slot = 0; slot < cell.config.monitors.size(); ++slot) {
    const auto rls = cell.run_lengths(slot);
    MetricsSummary s;
    s.monitor = cell.config.monitors[slot];
    s.replications = static_cast<int>(rls.size());
    for (const auto& rl : rls) s.detections += rl && *rl >= 1 && *rl <= d;
    for (const auto& r : cell.runs) s.fit_errors += r.outcomes[slot].fit_failed;
    s.detection_rate = detection_rate(rls, d);
    s.ced = conditional_expected_delay(rls, d);
    s.classification = classify(s.detection_rate, s.ced);
    out.push_back(s);
  }
  return out;
}

CellResult run_cell_range(const ExperimentConfig& config, int begin, int end, int threads) {
  config.validate();
  if (begin < 0 || end < begin) throw std::invalid_argument("bad replication range");
  CellResult cell;
  cell.config = config;
  cell.first_replication = begin;
  cell.runs.resize(static_cast<std::size_t>(end - begin));
  const int team = threads > 0 ? threads : omp_get_max_threads();
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(team)
  for (int i = begin; i < end; ++i) {
    try {
      cell.runs[static_cast<std::size_t>(i - begin)] = run_replication(config, i);
    } catch (...) {
#pragma omp critical(netmon_harness_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return cell;
}

CellResult run_cell(const ExperimentConfig& config, int threads) {
  return run_cell_range(config, 0, config.replications, threads);
}

CellResult run_cell_serial(const ExperimentConfig& config) {
  config.validate();
  CellResult cell;
  cell.config = config;
  cell.runs.reserve(static_cast<std::size_t>(config.replications));
  for (int i = 0; i < config.replications; ++i) cell.runs.push_back(run_replication(config, i));
  return cell;
}

CellResult merge_cells(const CellResult& first, const CellResult& second) {
  const auto& a = first.config;
  const auto& b = second.config;
  if (a.cell_key() != b.cell_key() || a.seed != b.seed || a.known_labels != b.known_labels ||
      a.monitors != b.monitors || a.m != b.m || a.phase2_len != b.phase2_len || a.d != b.d)
    throw std::invalid_argument("cannot merge results of different cells");
  const CellResult& lo = first.first_replication <= second.first_replication ? first : second;
  const CellResult& hi = &lo == &first ? second : first;
  if (lo.first_replication + static_cast<int>(lo.runs.size()) != hi.first_replication)
    throw std::invalid_argument("replication ranges are not adjacent");
  CellResult out = lo;
  out.runs.insert(out.runs.end(), hi.runs.begin(), hi.runs.end());
  out.config.replications = static_cast<int>(out.runs.size());
  return out;
}

std::vector<CellResult> run_grid(std::span<const ExperimentConfig> configs, int threads,
                                 const ProgressFn& progress) {
  std::vector<CellResult> out;
  out.reserve(configs.size());
  for (const auto& c : configs) {
    out.push_back(run_cell(c, threads));
    if (progress) progress(out.size(), configs.size(), c);
  }
  return out;
}

}  // namespace netmon
