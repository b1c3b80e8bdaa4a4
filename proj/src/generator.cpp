#include "netmon/generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace netmon {
namespace {

constexpr int kReferenceSize = 40;
constexpr double kThetaTolerance = 1e-9;

constexpr std::array<ScenarioInfo, 10> kScenarios = {{
    {"no_change", 1, "p = 0.2 (unchanged)"},
    {"global", 1, "p: 0.2 -> 0.25"},
    {"local", 1, "p: 0.2 -> 0.4 for n/5 nodes"},
    {"propensity", 1, "theta: U(0.5, 1.5) -> U(0.5, 3)"},
    {"no_change_2c", 2, "P = [[0.3,0.1],[0.1,0.3]] (unchanged)"},
    {"intensified", 2, "P: [[0.3,0.1],[0.1,0.3]] -> [[0.4,0.1],[0.1,0.3]]"},
    {"split", 2, "P: [[0.2,0.2],[0.2,0.2]] -> [[0.3,0.1],[0.1,0.3]]"},
    {"merge", 2, "P: [[0.3,0.1],[0.1,0.3]] -> [[0.2,0.2],[0.2,0.2]]"},
    {"form", 2, "P: [[0.4,0.2],[0.2,0.1]] -> [[0.3,0.1],[0.1,0.3]]"},
    {"fragment", 2, "P: [[0.3,0.1],[0.1,0.3]] -> [[0.4,0.2],[0.2,0.1]]"},
}};

Eigen::MatrixXd block2(double p11, double p12, double p22) {
  Eigen::MatrixXd p(2, 2);
  p << p11, p12, p12, p22;
  return p;
}

Eigen::MatrixXd scalar(double p) { return Eigen::MatrixXd::Constant(1, 1, p); }

DcsbmParams make_params(Labels labels, int k, Eigen::MatrixXd propensity,
                        std::vector<double> theta) {
  DcsbmParams p;
  p.n = static_cast<int>(labels.size());
  p.k = k;
  p.labels = std::move(labels);
  p.propensity = std::move(propensity);
  p.theta = std::move(theta);
  p.validate();
  return p;
}

}  // namespace

std::vector<int> community_sizes(const Labels& labels, int k) {
  std::vector<int> sizes(static_cast<std::size_t>(k), 0);
  for (int c : labels) {
    if (c < 0 || c >= k) throw std::invalid_argument("community label out of range");
    ++sizes[c];
  }
  return sizes;
}

void DcsbmParams::validate() const {
  if (n <= 0 || k <= 0) throw std::invalid_argument("model needs n > 0 and k > 0");
  if (static_cast<int>(labels.size()) != n || static_cast<int>(theta.size()) != n)
    throw std::invalid_argument("labels and theta must have length n");
  if (propensity.rows() != k || propensity.cols() != k)
    throw std::invalid_argument("propensity matrix must be k x k");
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s) {
      if (propensity(r, s) != propensity(s, r))
        throw std::invalid_argument("propensity matrix must be symmetric");
      if (propensity(r, s) < 0) throw std::invalid_argument("propensities must be non-negative");
    }
  const auto sizes = community_sizes(labels, k);
  std::vector<double> sums(static_cast<std::size_t>(k), 0.0);
  for (int i = 0; i < n; ++i) {
    if (!(theta[i] > 0)) throw std::invalid_argument("degree parameters must be positive");
    sums[labels[i]] += theta[i];
  }
  for (int r = 0; r < k; ++r)
    if (std::abs(sums[r] - sizes[r]) > kThetaTolerance)
      throw std::invalid_argument("degree parameters of community " + std::to_string(r) +
                                  " do not sum to its size");
}

bool DcsbmParams::operator==(const DcsbmParams& other) const {
  return n == other.n && k == other.k && labels == other.labels &&
         propensity == other.propensity && theta == other.theta;
}

NodeConfiguration NodeConfiguration::parse(std::string_view text) {
  if (text == "50-50") return {0.5, 0.5};
  if (text == "25-75") return {0.25, 0.75};
  if (text == "10-90") return {0.1, 0.9};
  throw std::invalid_argument("unknown node configuration '" + std::string(text) +
                              "' (expected 50-50, 25-75 or 10-90)");
}

std::string NodeConfiguration::label() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%d-%d", static_cast<int>(std::lround(first * 100)),
                static_cast<int>(std::lround(second * 100)));
  return buf;
}

int NodeConfiguration::first_size(int n) const {
  return static_cast<int>(std::lround(first * n));
}

std::vector<double> scale_theta(std::span<const double> raw, const Labels& labels) {
  if (raw.size() != labels.size()) throw std::invalid_argument("theta and labels differ in length");
  const int k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  const auto sizes = community_sizes(labels, k);
  std::vector<double> sums(static_cast<std::size_t>(k), 0.0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!(raw[i] > 0)) throw std::invalid_argument("degree parameters must be positive");
    sums[labels[i]] += raw[i];
  }
  std::vector<double> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    out[i] = raw[i] * sizes[labels[i]] / sums[labels[i]];
  return out;
}

std::vector<double> sample_theta(const Labels& labels, double lo, double hi, Rng& rng) {
  if (!(lo > 0 && lo < hi)) throw std::invalid_argument("need 0 < lo < hi");
  std::uniform_real_distribution<double> unif(lo, hi);
  std::vector<double> raw(labels.size());
  for (double& r : raw) r = unif(rng);
  return scale_theta(raw, labels);
}

namespace {

int draw_edge(const DcsbmParams& params, int i, int j, Rng& rng) {
  const double mean = params.edge_mean(i, j);
  if (mean <= 0) return 0;
  return std::poisson_distribution<int>(mean)(rng);
}

}  // namespace

Graph sample_graph(const DcsbmParams& params, Rng& rng) {
  Graph g(params.n);
  for (int i = 0; i < params.n; ++i)
    for (int j = i + 1; j < params.n; ++j) {
      const int a = draw_edge(params, i, j, rng);
      if (a) g.set_edge(i, j, a);
    }
  return g;
}

Graph evolve(const Graph& prev, const GenerativeModel& model, Rng& rng, EvolveTrace* trace) {
  const auto& params = model.params;
  if (prev.size() != params.n) throw std::invalid_argument("graph size does not match the model");
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g(params.n);
  for (int i = 0; i < params.n; ++i)
    for (int j = i + 1; j < params.n; ++j) {
      int a;
      if (coin(rng) < model.alpha) {
        a = draw_edge(params, i, j, rng);
        if (trace) ++trace->redrawn;
      } else {
        a = prev(i, j);
        if (trace) ++trace->copied;
      }
      if (a) g.set_edge(i, j, a);
    }
  return g;
}

std::vector<Graph> generate_sequence(const ChangeScenario& scenario, int length, Rng& rng) {
  if (length < 1) throw std::invalid_argument("sequence length must be at least 1");
  if (scenario.t_star < 1 || scenario.t_star > length + 1)
    throw std::invalid_argument("change time outside 1..T+1");
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(length));
  const auto model_at = [&](int t) -> const GenerativeModel& {
    return t < scenario.t_star ? scenario.baseline : scenario.changed;
  };
  out.push_back(sample_graph(model_at(1).params, rng));
  for (int t = 2; t <= length; ++t) out.push_back(evolve(out.back(), model_at(t), rng));
  return out;
}

std::span<const ScenarioInfo> scenario_inventory() { return kScenarios; }

const ScenarioInfo& scenario_info(std::string_view name) {
  for (const auto& s : kScenarios)
    if (s.name == name) return s;
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

ChangeScenario scenario_catalog(std::string_view name, int n, double alpha,
                                const NodeConfiguration& node_config, Rng& rng) {
  const auto& info = scenario_info(name);
  if (n < 5) throw std::invalid_argument("scenarios need at least 5 nodes");
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must lie in [0, 1]");
  const double scale = static_cast<double>(kReferenceSize) / n;

  Labels labels(static_cast<std::size_t>(n), 0);
  if (info.communities == 2) {
    const int n1 = node_config.first_size(n);
    if (n1 < 1 || n1 >= n) throw std::invalid_argument("node configuration leaves a community empty");
    for (int i = n1; i < n; ++i) labels[i] = 1;
  }
  const auto theta = sample_theta(labels, 0.5, 1.5, rng);
  const int k = info.communities;

  auto model = [&](Labels c, int kk, Eigen::MatrixXd p, std::vector<double> th) {
    GenerativeModel m;
    m.params = make_params(std::move(c), kk, p * scale, std::move(th));
    m.alpha = alpha;
    return m;
  };

  ChangeScenario sc;
  sc.name = std::string(info.name);
  if (name == "no_change") {
    sc.baseline = model(labels, k, scalar(0.2), theta);
    sc.changed = sc.baseline;
  } else if (name == "global") {
    sc.baseline = model(labels, k, scalar(0.2), theta);
    sc.changed = model(labels, k, scalar(0.25), theta);
  } else if (name == "local") {
    // The first n/5 nodes form the anomalous block. The block is carried as a
    // second label so the degree constraint still holds; P* compensates the
    // per-block rescaling of theta so every pair keeps its intended mean.
    sc.baseline = model(labels, k, scalar(0.2), theta);
    Labels block(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n / 5; ++i) block[i] = 0;
    const auto theta_block = scale_theta(theta, block);
    const double s0 = theta_block[0] / theta[0];
    const double s1 = theta_block[n - 1] / theta[n - 1];
    sc.changed = model(block, 2, block2(0.4 / (s0 * s0), 0.2 / (s0 * s1), 0.2 / (s1 * s1)),
                       theta_block);
  } else if (name == "propensity") {
    sc.baseline = model(labels, k, scalar(0.2), theta);
    sc.changed = model(labels, k, scalar(0.2), sample_theta(labels, 0.5, 3.0, rng));
  } else if (name == "no_change_2c") {
    sc.baseline = model(labels, k, block2(0.3, 0.1, 0.3), theta);
    sc.changed = sc.baseline;
  } else if (name == "intensified") {
    sc.baseline = model(labels, k, block2(0.3, 0.1, 0.3), theta);
    sc.changed = model(labels, k, block2(0.4, 0.1, 0.3), theta);
  } else if (name == "split") {
    sc.baseline = model(labels, k, block2(0.2, 0.2, 0.2), theta);
    sc.changed = model(labels, k, block2(0.3, 0.1, 0.3), theta);
  } else if (name == "merge") {
    sc.baseline = model(labels, k, block2(0.3, 0.1, 0.3), theta);
    sc.changed = model(labels, k, block2(0.2, 0.2, 0.2), theta);
  } else if (name == "form") {
    sc.baseline = model(labels, k, block2(0.4, 0.2, 0.1), theta);
    sc.changed = model(labels, k, block2(0.3, 0.1, 0.3), theta);
  } else if (name == "fragment") {
    sc.baseline = model(labels, k, block2(0.3, 0.1, 0.3), theta);
    sc.changed = model(labels, k, block2(0.4, 0.2, 0.1), theta);
  }
  return sc;
}

}  // namespace netmon
