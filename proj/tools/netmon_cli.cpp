// netmon: run network-monitoring benchmark studies and report their results.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netmon/harness.hpp"
#include "netmon/results_io.hpp"
#include "netmon/study_config.hpp"

namespace fs = std::filesystem;
using namespace netmon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct RunOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
  std::optional<int> threads;
  std::optional<std::string> out;
  std::optional<std::string> scenario;
  std::optional<int> n;
  std::optional<double> alpha;
  std::optional<std::string> node_config;
  std::optional<std::string> known_labels;
  std::optional<std::string> monitors;
};

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    try {
      if (dash != std::string::npos && dash > 0) {
        const int lo = std::stoi(item.substr(0, dash));
        const int hi = std::stoi(item.substr(dash + 1));
        for (int i = lo; i <= hi; ++i) ids.push_back(i);
      } else {
        ids.push_back(std::stoi(item));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad monitor list '" + text + "'");
    }
  }
  if (ids.empty()) throw std::invalid_argument("empty monitor list");
  return ids;
}

StudyConfig effective_config(const RunOptions& o) {
  StudyConfig c = o.config_path.empty() ? StudyConfig::defaults() : load_study_config(o.config_path);
  if (o.seed) c.seed = *o.seed;
  if (o.reps) c.replications = *o.reps;
  if (o.threads) c.threads = *o.threads;
  if (o.out) c.out = *o.out;
  if (o.scenario) c.scenarios = {*o.scenario};
  if (o.n) c.sizes = {*o.n};
  if (o.alpha) c.alphas = {*o.alpha};
  if (o.node_config) c.node_configs = {*o.node_config};
  if (o.known_labels) {
    if (*o.known_labels != "true" && *o.known_labels != "false")
      throw std::invalid_argument("--known-labels expects true or false");
    c.known_labels = {*o.known_labels == "true"};
  }
  if (o.monitors) c.monitors = parse_id_list(*o.monitors);
  return StudyConfig::from_json([&] {
    auto j = c.to_json();
    j["threads"] = c.threads;
    j["out"] = c.out;
    return j;
  }());
}

int cmd_run(const RunOptions& options) {
  StudyConfig study;
  std::vector<ExperimentConfig> cells;
  try {
    study = effective_config(options);
    cells = study.expand();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    std::cerr << "running " << cells.size() << " cell(s), " << study.replications
              << " replications each\n";
    const auto results = run_grid(cells, study.threads, [](std::size_t done, std::size_t total,
                                                           const ExperimentConfig& c) {
      std::cerr << "[" << done << "/" << total << "] " << c.cell_key()
                << (c.known_labels ? "" : " (estimated labels)") << '\n';
    });
    fs::create_directories(study.out);
    const fs::path csv_path = fs::path(study.out) / "summary.csv";
    const fs::path json_path = fs::path(study.out) / "results.json";
    std::ofstream csv(csv_path);
    write_summary_csv(csv, results);
    std::ofstream js(json_path);
    js << results_json(study.to_json(), results).dump(1) << '\n';
    if (!csv || !js) throw std::runtime_error("failed writing results to " + study.out);
    std::cerr << "wrote " << csv_path.string() << " and " << json_path.string() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_list(const std::string& what) {
  if (what == "scenarios") {
    for (const auto& s : scenario_inventory())
      std::cout << std::left << std::setw(14) << s.name << ' ' << s.communities << "c  " << s.change
                << '\n';
    return kExitOk;
  }
  for (MonitorId id : all_monitors())
    std::cout << std::right << std::setw(2) << to_int(id) << "  " << std::left << std::setw(24)
              << monitor_name(id) << ' ' << monitor_description(id) << '\n';
  return kExitOk;
}

std::string_view symbol(Classification c) {
  switch (c) {
    case Classification::good: return "✓✓";
    case Classification::moderate: return "✓";
    case Classification::poor: return "×";
    case Classification::unclassified: return "·";
  }
  return "·";
}

// Pads by display columns; the check marks are multi-byte but one column wide.
std::string pad(std::string_view s, std::size_t width) {
  std::size_t cols = 0;
  for (unsigned char ch : s) cols += (ch & 0xC0) != 0x80;
  std::string out(s);
  if (cols < width) out.append(width - cols, ' ');
  return out;
}

int cmd_report(const std::string& path_arg) {
  fs::path path(path_arg);
  if (fs::is_directory(path)) path /= "summary.csv";
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read results file '" << path.string() << "'\n";
    return kExitRuntime;
  }
  std::vector<SummaryRow> rows;
  try {
    rows = read_summary_csv(in);
    for (const auto& r : rows) {
      const double rate = r.replications > 0 ? static_cast<double>(r.detections) / r.replications : 0.0;
      if (classify(rate, r.ced) != r.classification)
        throw std::runtime_error("classification of " + r.scenario + " monitor " +
                                 std::to_string(r.monitor_id) + " does not match its metrics");
      if (r.monitor_id < 1 || r.monitor_id > kMonitorCount)
        throw std::runtime_error("monitor id out of range");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << path.string() << ": " << e.what() << '\n';
    return kExitRuntime;
  }

  std::vector<std::string> order;
  std::map<std::string, std::map<int, Classification>> grid;
  for (const auto& r : rows) {
    std::string key = r.scenario + " n=" + std::to_string(r.n) + " a=" + format_real(r.alpha);
    if (r.node_config != "none") key += " " + r.node_config;
    if (!r.known_labels) key += " est";
    if (!grid.count(key)) order.push_back(key);
    grid[key][r.monitor_id] = r.classification;
  }
  std::size_t key_width = 28;
  for (const auto& k : order) key_width = std::max(key_width, k.size() + 1);
  std::cout << pad("scenario", key_width);
  for (int id = 1; id <= kMonitorCount; ++id) std::cout << pad(std::to_string(id), 4);
  std::cout << "best\n";
  for (const auto& key : order) {
    std::cout << pad(key, key_width);
    std::string best;
    for (int id = 1; id <= kMonitorCount; ++id) {
      const auto it = grid[key].find(id);
      std::cout << pad(it == grid[key].end() ? "" : symbol(it->second), 4);
      if (it != grid[key].end() && it->second == Classification::good)
        best += (best.empty() ? "" : ",") + std::to_string(id);
    }
    std::cout << (best.empty() ? "-" : best) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark harness for dynamic-network monitoring methods"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run a study grid and write summary.csv + results.json");
  run_cmd->add_option("--config", run.config_path, "JSON study config or results sidecar");
  run_cmd->add_option("--seed", run.seed, "Master seed (default 0)");
  run_cmd->add_option("--reps", run.reps, "Replications per cell");
  run_cmd->add_option("--threads", run.threads, "Worker threads (default: all cores)");
  run_cmd->add_option("--out", run.out, "Output directory");
  run_cmd->add_option("--scenario", run.scenario, "Restrict to one scenario");
  run_cmd->add_option("--n", run.n, "Restrict to one network size (40 or 100)");
  run_cmd->add_option("--alpha", run.alpha, "Restrict to one continuity value (0.5 or 1)");
  run_cmd->add_option("--node-config", run.node_config, "Restrict to 50-50, 25-75 or 10-90");
  run_cmd->add_option("--known-labels", run.known_labels, "true or false");
  run_cmd->add_option("--monitors", run.monitors, "Monitor ids, e.g. 1,3,13-15");

  std::string what;
  auto* list_cmd = app.add_subcommand("list", "List scenarios or monitors");
  list_cmd->add_option("what", what, "scenarios | monitors")
      ->required()
      ->check(CLI::IsMember({"scenarios", "monitors"}));

  std::string report_path;
  auto* report_cmd = app.add_subcommand("report", "Print a classification grid from summary.csv");
  report_cmd->add_option("results", report_path, "summary.csv or its directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitConfig;
  }

  if (*run_cmd) return cmd_run(run);
  if (*list_cmd) return cmd_list(what);
  if (*report_cmd) return cmd_report(report_path);
  return kExitConfig;
}
