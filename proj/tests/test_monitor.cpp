#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "netmon/monitor.hpp"

using namespace netmon;

namespace {

std::vector<Graph> baseline_sequence(const char* scenario, int length, std::uint64_t seed,
                                     ChangeScenario* out = nullptr) {
  Rng rng = make_rng(seed, 0);
  auto sc = scenario_catalog(scenario, 40, 1.0, NodeConfiguration::parse("50-50"), rng);
  sc.t_star = length + 1;
  auto seq = generate_sequence(sc, length, rng);
  if (out) *out = sc;
  return seq;
}

std::vector<Snapshot> snapshots(const std::vector<Graph>& gs) { return {gs.begin(), gs.end()}; }

}  // namespace

TEST_CASE("monitor numbering and names") {
  CHECK(all_monitors().size() == kMonitorCount);
  for (int i = 1; i <= kMonitorCount; ++i) CHECK(to_int(monitor_from_int(i)) == i);
  CHECK_THROWS(monitor_from_int(0));
  CHECK_THROWS(monitor_from_int(16));
  CHECK(monitor_name(MonitorId::avg_degree) == "avg.degree");
  CHECK(monitor_name(MonitorId::priebe) == "Priebe");
  CHECK(monitor_name(MonitorId::wilson) == "Wilson");
  CHECK(monitor_name(MonitorId::yu) == "Yu");
  CHECK(needs_labels(MonitorId::wilson));
  CHECK(needs_labels(MonitorId::yu));
  CHECK_FALSE(needs_labels(MonitorId::priebe));
}

TEST_CASE("model-based monitors require labels") {
  CHECK_THROWS_AS(make_monitor(MonitorId::wilson, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(make_monitor(MonitorId::yu, std::nullopt), std::invalid_argument);
  for (MonitorId id : all_monitors()) {
    if (needs_labels(id)) continue;
    const auto mon = make_monitor(id, std::nullopt);
    CHECK(mon->id() == id);
  }
}

TEST_CASE("EWMA monitors reproduce the chart on the matching statistic") {
  const auto seq = baseline_sequence("global", 260, 1);
  const auto snaps = snapshots(seq);
  const std::span<const Snapshot> phase1(snaps.data(), 200);
  for (int k = 0; k < kStatisticCount; ++k) {
    const auto id = monitor_from_int(k + 1);
    auto mon = make_monitor(id, std::nullopt);
    mon->fit(phase1);
    std::vector<double> xs;
    for (const auto& s : phase1) xs.push_back(s.summary().values[k]);
    EwmaState chart = ewma_fit(xs);
    for (std::size_t t = 200; t < snaps.size(); ++t) {
      const bool expect = ewma_update(chart, snaps[t].summary().values[k]).signal;
      CHECK(mon->update(snaps[t]) == expect);
    }
  }
}

TEST_CASE("scan monitor is the scan chart fed with Phase I and Phase II") {
  const auto seq = baseline_sequence("no_change", 260, 2);
  const auto snaps = snapshots(seq);
  auto mon = make_monitor(MonitorId::priebe, std::nullopt);
  mon->fit(std::span<const Snapshot>(snaps.data(), 200));
  ScanState direct;
  for (int t = 0; t < 200; ++t) direct.update(snaps[t]);
  for (std::size_t t = 200; t < snaps.size(); ++t) CHECK(mon->update(snaps[t]) == direct.update(snaps[t]));
}

TEST_CASE("model-based monitors agree with their charts") {
  ChangeScenario sc;
  const auto seq = baseline_sequence("merge", 260, 3, &sc);
  const auto snaps = snapshots(seq);
  const auto& labels = sc.baseline.params.labels;
  const std::span<const Snapshot> phase1(snaps.data(), 200);

  auto wilson = make_monitor(MonitorId::wilson, labels);
  wilson->fit(phase1);
  const auto shewhart = shewhart_p_fit(phase1, labels);
  auto yu = make_monitor(MonitorId::yu, labels);
  yu->fit(phase1);
  const auto t2 = t2_fit(phase1, labels);
  for (std::size_t t = 200; t < seq.size(); ++t) {
    CHECK(wilson->update(snaps[t]) == shewhart_p_update(shewhart, seq[t]));
    CHECK(yu->update(snaps[t]) == t2_update(t2, seq[t]));
  }
}

TEST_CASE("a large jump in a block propensity makes the Shewhart monitor signal at once") {
  ChangeScenario sc;
  const auto seq = baseline_sequence("intensified", 200, 4, &sc);
  const auto snaps = snapshots(seq);
  const auto& labels = sc.baseline.params.labels;
  const auto chart = shewhart_p_fit(std::span<const Snapshot>(snaps), labels);
  // Push the expected P-hat_11 up by ten Phase I standard deviations:
  // E[P-hat_11] = P_11 * sum_{i<j in 1} theta_i theta_j / n_1^2.
  auto shifted = sc.baseline;
  const auto& th = sc.baseline.params.theta;
  double pair_weight = 0;
  int n1 = 0;
  for (int i = 0; i < 40; ++i) {
    if (labels[i] != 0) continue;
    ++n1;
    for (int j = i + 1; j < 40; ++j)
      if (labels[j] == 0) pair_weight += th[i] * th[j];
  }
  shifted.params.propensity(0, 0) += 10 * chart.charts[0].sigma_hat * n1 * n1 / pair_weight;
  int first_step_signals = 0;
  for (int rep = 0; rep < 50; ++rep) {
    auto mon = make_monitor(MonitorId::wilson, labels);
    mon->fit(snaps);
    Rng rng = make_rng(5, rep);
    const Graph g = evolve(seq.back(), shifted, rng);
    first_step_signals += mon->update(g);
  }
  CHECK(first_step_signals >= 49);
}

TEST_CASE("identical snapshots never trigger the non-model monitors") {
  const auto seq = baseline_sequence("no_change", 1, 6);
  std::vector<Graph> same(220, seq[0]);
  const auto snaps = snapshots(same);
  for (MonitorId id : all_monitors()) {
    if (needs_labels(id)) continue;
    auto mon = make_monitor(id, std::nullopt);
    mon->fit(std::span<const Snapshot>(snaps.data(), 200));
    for (int t = 200; t < 220; ++t) CHECK_FALSE(mon->update(snaps[t]));
  }
}

TEST_CASE("T2 monitor reports a singular Phase I") {
  const auto seq = baseline_sequence("no_change", 1, 7);
  std::vector<Graph> same(50, seq[0]);
  auto mon = make_monitor(MonitorId::yu, Labels(40, 0));
  CHECK_THROWS(mon->fit(snapshots(same)));
}
