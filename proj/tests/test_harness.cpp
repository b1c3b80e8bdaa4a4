#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "netmon/harness.hpp"

using namespace netmon;

namespace {

using RL = std::optional<int>;

// A small, fast cell.
ExperimentConfig small_config(const char* scenario = "global", int reps = 8) {
  ExperimentConfig c;
  c.scenario = scenario;
  c.n = 20;
  c.m = 60;
  c.phase2_len = 20;
  c.d = 20;
  c.replications = reps;
  c.seed = 99;
  c.node_config = NodeConfiguration::parse("50-50");
  return c;
}

}  // namespace

TEST_CASE("detection rate and conditional delay examples") {
  const std::vector<RL> mixed{3, 60, 10};
  CHECK(detection_rate(mixed, 50) == doctest::Approx(2.0 / 3));
  CHECK(*conditional_expected_delay(mixed, 50) == doctest::Approx(6.5));
  const std::vector<RL> none{std::nullopt, std::nullopt};
  CHECK(detection_rate(none, 50) == 0.0);
  CHECK_FALSE(conditional_expected_delay(none, 50).has_value());
  const std::vector<RL> ones{1, 1, 1};
  CHECK(detection_rate(ones, 50) == 1.0);
  CHECK(*conditional_expected_delay(ones, 50) == 1.0);
}

TEST_CASE("classification bands") {
  CHECK(classify(1.0, 4.2) == Classification::good);
  CHECK(classify(0.80, 22) == Classification::moderate);
  CHECK(classify(0.10, 30) == Classification::poor);
  CHECK(classify(0.50, 15) == Classification::unclassified);
  CHECK(classify(0.99, 9.99) == Classification::good);
  CHECK(classify(0.99, 10) == Classification::moderate);
  CHECK(classify(0.75, 30) == Classification::moderate);
  CHECK(classify(0.74, 20) == Classification::unclassified);
  CHECK(classify(0.25, std::nullopt) == Classification::poor);
  CHECK(classify(0.30, std::nullopt) == Classification::unclassified);
  for (auto c : {Classification::good, Classification::moderate, Classification::poor,
                 Classification::unclassified})
    CHECK(parse_classification(classification_name(c)) == c);
  CHECK_THROWS(parse_classification("great"));
}

TEST_CASE("config validation") {
  auto c = small_config();
  CHECK_NOTHROW(c.validate());
  c.d = 21;
  CHECK_THROWS(c.validate());
  c = small_config();
  c.m = 1;
  CHECK_THROWS(c.validate());
  c = small_config();
  c.scenario = "nope";
  CHECK_THROWS(c.validate());
  c = small_config();
  c.replications = 0;
  CHECK_THROWS(c.validate());
}

TEST_CASE("replications are deterministic and stop at the first signal") {
  const auto c = small_config();
  const auto a = run_replication(c, 3);
  const auto b = run_replication(c, 3);
  CHECK(a == b);
  REQUIRE(a.outcomes.size() == c.monitors.size());
  for (const auto& o : a.outcomes)
    if (o.run_length) {
      CHECK(*o.run_length >= 1);
      CHECK(*o.run_length <= c.phase2_len);
    }
  auto other = c;
  other.seed = 100;
  bool differs = false;
  for (int i = 0; i < 4; ++i) differs |= !(run_replication(other, i) == run_replication(c, i));
  CHECK(differs);
}

TEST_CASE("summaries equal a recomputation from the raw run lengths") {
  const auto cell = run_cell(small_config("merge", 10), 2);
  const auto sums = summarize(cell);
  REQUIRE(sums.size() == cell.config.monitors.size());
  for (std::size_t slot = 0; slot < sums.size(); ++slot) {
    int hits = 0, errors = 0;
    double total = 0;
    for (const auto& run : cell.runs) {
      const auto& o = run.outcomes[slot];
      errors += o.fit_failed;
      if (o.run_length && *o.run_length <= cell.config.d) {
        ++hits;
        total += *o.run_length;
      }
    }
    CHECK(sums[slot].replications == 10);
    CHECK(sums[slot].detections == hits);
    CHECK(sums[slot].fit_errors == errors);
    CHECK(sums[slot].detection_rate == doctest::Approx(hits / 10.0));
    if (hits) {
      CHECK(*sums[slot].ced == doctest::Approx(total / hits));
      CHECK(*sums[slot].ced >= 1);
      CHECK(*sums[slot].ced <= cell.config.d);
    } else {
      CHECK_FALSE(sums[slot].ced.has_value());
    }
    CHECK(sums[slot].classification == classify(sums[slot].detection_rate, sums[slot].ced));
  }
}

TEST_CASE("thread count does not change results") {
  const auto c = small_config("split", 12);
  const auto serial = run_cell_serial(c);
  CHECK(run_cell(c, 1).runs == serial.runs);
  CHECK(run_cell(c, 4).runs == serial.runs);
  CHECK(run_cell(c, 8).runs == serial.runs);
}

TEST_CASE("partial runs merge to the full run in either order") {
  const auto c = small_config("global", 10);
  const auto full = run_cell(c, 2);
  const auto lo = run_cell_range(c, 0, 4, 2);
  const auto hi = run_cell_range(c, 4, 10, 3);
  const auto ab = merge_cells(lo, hi);
  const auto ba = merge_cells(hi, lo);
  CHECK(ab.runs == full.runs);
  CHECK(ba.runs == full.runs);
  CHECK(ab.config.replications == 10);
  const auto three = merge_cells(merge_cells(run_cell_range(c, 0, 3, 1), run_cell_range(c, 3, 7, 1)),
                                 run_cell_range(c, 7, 10, 1));
  CHECK(three.runs == full.runs);

  CHECK_THROWS(merge_cells(lo, run_cell_range(c, 5, 10, 1)));
  auto other = c;
  other.scenario = "local";
  CHECK_THROWS(merge_cells(lo, run_cell_range(other, 4, 10, 1)));
  auto estimated = c;
  estimated.known_labels = false;
  CHECK_THROWS(merge_cells(lo, run_cell_range(estimated, 4, 10, 1)));
}

TEST_CASE("wider EWMA limits never signal earlier") {
  auto narrow = small_config("no_change", 12);
  narrow.monitors.assign(all_monitors().begin(), all_monitors().begin() + 12);
  auto wide = narrow;
  wide.monitor_options.ewma_width = 4.0;
  const auto a = run_cell(narrow, 2), b = run_cell(wide, 2);
  for (std::size_t r = 0; r < a.runs.size(); ++r)
    for (std::size_t slot = 0; slot < 12; ++slot) {
      const auto& rn = a.runs[r].outcomes[slot].run_length;
      const auto& rw = b.runs[r].outcomes[slot].run_length;
      if (rw) CHECK((rn && *rn <= *rw));
    }
  const auto sa = summarize(a), sb = summarize(b);
  for (std::size_t slot = 0; slot < 12; ++slot)
    CHECK(sb[slot].detection_rate <= sa[slot].detection_rate);
}

TEST_CASE("a failing fit is recorded rather than thrown") {
  // 20 nodes in one community need more than 20 Phase I graphs for T^2.
  auto c = small_config("no_change", 3);
  c.m = 15;
  c.monitors = {MonitorId::avg_degree, MonitorId::yu};
  const auto cell = run_cell(c, 1);
  const auto s = summarize(cell);
  CHECK(s[1].fit_errors == 3);
  CHECK(s[1].detections == 0);
  CHECK(s[0].fit_errors == 0);
}

TEST_CASE("estimated labels run the spectral step") {
  auto c = small_config("merge", 4);
  c.known_labels = false;
  c.monitors = {MonitorId::wilson};
  const auto cell = run_cell(c, 1);
  CHECK(cell.runs.size() == 4);
}

TEST_CASE("run_grid reports progress per cell") {
  std::vector<ExperimentConfig> configs{small_config("global", 2), small_config("local", 2)};
  std::vector<std::size_t> seen;
  const auto cells = run_grid(configs, 1, [&](std::size_t done, std::size_t total, const ExperimentConfig&) {
    CHECK(total == 2);
    seen.push_back(done);
  });
  CHECK(cells.size() == 2);
  CHECK(seen == std::vector<std::size_t>{1, 2});
  CHECK(summarize(cells[0]).size() == kMonitorCount);
}
