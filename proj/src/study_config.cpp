#include "netmon/study_config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace netmon {
namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "scenarios", "sizes", "alphas", "node_configs", "known_labels", "m", "phase2_len",
      "d", "replications", "monitors", "seed", "threads", "out"};
  return keys;
}

template <typename T>
std::vector<T> read_list(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_array()) throw std::invalid_argument(std::string("'") + key + "' must be an array");
  if (v.empty()) throw std::invalid_argument(std::string("'") + key + "' must not be empty");
  return v.get<std::vector<T>>();
}

}  // namespace

StudyConfig StudyConfig::defaults() {
  StudyConfig c;
  for (const auto& s : scenario_inventory()) c.scenarios.emplace_back(s.name);
  for (MonitorId id : all_monitors()) c.monitors.push_back(to_int(id));
  return c;
}

StudyConfig StudyConfig::from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (!known_keys().count(key)) throw std::invalid_argument("unknown config key '" + key + "'");
  StudyConfig c = defaults();
  try {
    if (doc.contains("scenarios")) c.scenarios = read_list<std::string>(doc, "scenarios");
    if (doc.contains("sizes")) c.sizes = read_list<int>(doc, "sizes");
    if (doc.contains("alphas")) c.alphas = read_list<double>(doc, "alphas");
    if (doc.contains("node_configs")) c.node_configs = read_list<std::string>(doc, "node_configs");
    if (doc.contains("known_labels")) {
      if (doc["known_labels"].is_boolean())
        c.known_labels = {doc["known_labels"].get<bool>()};
      else
        c.known_labels = read_list<bool>(doc, "known_labels");
    }
    if (doc.contains("m")) c.m = doc["m"].get<int>();
    if (doc.contains("phase2_len")) c.phase2_len = doc["phase2_len"].get<int>();
    if (doc.contains("d")) c.d = doc["d"].get<int>();
    if (doc.contains("replications")) c.replications = doc["replications"].get<int>();
    if (doc.contains("monitors")) c.monitors = read_list<int>(doc, "monitors");
    if (doc.contains("seed")) c.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("threads")) c.threads = doc["threads"].get<int>();
    if (doc.contains("out")) c.out = doc["out"].get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config type error: ") + e.what());
  }
  c.expand();  // validates every cell
  return c;
}

json StudyConfig::to_json() const {
  json j;
  j["scenarios"] = scenarios;
  j["sizes"] = sizes;
  j["alphas"] = alphas;
  j["node_configs"] = node_configs;
  j["known_labels"] = known_labels;
  j["m"] = m;
  j["phase2_len"] = phase2_len;
  j["d"] = d;
  j["replications"] = replications;
  j["monitors"] = monitors;
  j["seed"] = seed;
  return j;
}

std::vector<ExperimentConfig> StudyConfig::expand() const {
  if (threads < 0) throw std::invalid_argument("threads must be non-negative");
  std::vector<MonitorId> ids;
  for (int id : monitors) ids.push_back(monitor_from_int(id));
  std::vector<NodeConfiguration> configs;
  for (const auto& s : node_configs) configs.push_back(NodeConfiguration::parse(s));

  std::vector<ExperimentConfig> cells;
  for (const auto& name : scenarios) {
    const bool two = scenario_info(name).communities == 2;
    for (int n : sizes)
      for (double alpha : alphas) {
        ExperimentConfig base;
        base.scenario = name;
        base.n = n;
        base.alpha = alpha;
        base.m = m;
        base.phase2_len = phase2_len;
        base.d = d;
        base.replications = replications;
        base.monitors = ids;
        base.seed = seed;
        if (!two) {
          base.validate();
          cells.push_back(base);
          continue;
        }
        for (const auto& nc : configs)
          for (bool known : known_labels) {
            ExperimentConfig c = base;
            c.node_config = nc;
            c.known_labels = known;
            c.validate();
            cells.push_back(c);
          }
      }
  }
  return cells;
}

StudyConfig load_study_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (doc.is_object() && doc.contains("config") && doc.contains("cells"))
    return StudyConfig::from_json(doc["config"]);
  return StudyConfig::from_json(doc);
}

}  // namespace netmon
