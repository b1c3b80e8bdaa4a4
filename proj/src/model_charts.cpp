#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "netmon/charts.hpp"
#include "netmon/numeric.hpp"

namespace netmon {
namespace {

const Graph& graph_of(const Graph& g) { return g; }
const Graph& graph_of(const Snapshot& s) { return s.graph(); }

std::vector<std::vector<int>> members_by_community(const Labels& labels, int k) {
  std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) members[labels[i]].push_back(i);
  return members;
}

template <typename Observation>
ShewhartPState fit_shewhart(std::span<const Observation> phase1, const Labels& labels) {
  const int m = static_cast<int>(phase1.size());
  if (m < 2) throw std::invalid_argument("Shewhart fit needs at least two Phase I graphs");
  ShewhartPState st;
  st.labels = labels;
  st.k = community_count(labels);
  std::vector<Eigen::MatrixXd> estimates;
  estimates.reserve(static_cast<std::size_t>(m));
  for (const auto& obs : phase1) estimates.push_back(estimate_p_hat(graph_of(obs), labels));
  std::vector<double> series(static_cast<std::size_t>(m));
  for (int r = 0; r < st.k; ++r)
    for (int s = r; s < st.k; ++s) {
      for (int t = 0; t < m; ++t) series[t] = estimates[t](r, s);
      ShewhartChart c;
      c.r = r;
      c.s = s;
      c.mu_hat = sample_mean(series);
      c.sigma_hat = std::max(moving_range_sigma(series), kSigmaFloor);
      c.lower = c.mu_hat - 3.0 * c.sigma_hat;
      c.upper = c.mu_hat + 3.0 * c.sigma_hat;
      st.charts.push_back(c);
    }
  return st;
}

std::vector<double> floored_theta(const Graph& g, const Labels& labels, std::span<const int> members) {
  const auto theta = estimate_theta_hat(g, labels);
  std::vector<double> part;
  part.reserve(members.size());
  double sum = 0.0;
  for (int i : members) {
    part.push_back(std::max(theta[i], kThetaFloor));
    sum += part.back();
  }
  const double scale = static_cast<double>(members.size()) / sum;
  for (double& p : part) p *= scale;
  return part;
}

template <typename Observation>
T2State fit_t2(std::span<const Observation> phase1, const Labels& labels) {
  T2State st;
  st.labels = labels;
  const int k = community_count(labels);
  const auto members = members_by_community(labels, k);
  for (int r = 0; r < k; ++r) {
    if (members[r].size() < 2) continue;
    std::vector<Eigen::VectorXd> coords;
    coords.reserve(phase1.size());
    for (const auto& obs : phase1)
      coords.push_back(community_coordinates(graph_of(obs), labels, members[r]));
    try {
      T2Chart chart = fit_t2_chart(coords);
      chart.community = r;
      chart.members = members[r];
      st.charts.push_back(std::move(chart));
    } catch (const std::exception& e) {
      throw std::runtime_error("T2 fit failed for community " + std::to_string(r) + ": " + e.what());
    }
  }
  return st;
}

}  // namespace

int community_count(const Labels& labels) {
  if (labels.empty()) throw std::invalid_argument("empty label vector");
  const int k = *std::max_element(labels.begin(), labels.end()) + 1;
  const auto sizes = community_sizes(labels, k);
  for (int r = 0; r < k; ++r)
    if (sizes[r] == 0) throw std::invalid_argument("community " + std::to_string(r) + " is empty");
  return k;
}

Eigen::MatrixXd estimate_p_hat(const Graph& g, const Labels& labels) {
  if (static_cast<int>(labels.size()) != g.size())
    throw std::invalid_argument("label vector does not match the graph");
  const int k = community_count(labels);
  const auto sizes = community_sizes(labels, k);
  Eigen::MatrixXd weight = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < g.size(); ++i) {
    const auto row = g.row(i);
    for (int j = i + 1; j < g.size(); ++j) {
      if (row[j] == 0) continue;
      const int r = std::min(labels[i], labels[j]);
      const int s = std::max(labels[i], labels[j]);
      weight(r, s) += row[j];
    }
  }
  Eigen::MatrixXd p(k, k);
  for (int r = 0; r < k; ++r)
    for (int s = r; s < k; ++s) {
      p(r, s) = weight(r, s) / (static_cast<double>(sizes[r]) * sizes[s]);
      p(s, r) = p(r, s);
    }
  return p;
}

double moving_range_sigma(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("moving range needs at least two values");
  double total = 0.0;
  for (std::size_t j = 1; j < xs.size(); ++j) total += std::abs(xs[j] - xs[j - 1]);
  return std::sqrt(std::numbers::pi) / (2.0 * static_cast<double>(xs.size() - 1)) * total;
}

ShewhartPState shewhart_p_fit(std::span<const Graph> phase1, const Labels& labels) {
  return fit_shewhart(phase1, labels);
}

ShewhartPState shewhart_p_fit(std::span<const Snapshot> phase1, const Labels& labels) {
  return fit_shewhart(phase1, labels);
}

bool shewhart_p_update(const ShewhartPState& state, const Graph& g) {
  const auto p = estimate_p_hat(g, state.labels);
  return std::any_of(state.charts.begin(), state.charts.end(), [&](const ShewhartChart& c) {
    const double v = p(c.r, c.s);
    return v < c.lower || v > c.upper;
  });
}

std::vector<double> estimate_theta_hat(const Graph& g, const Labels& labels) {
  if (static_cast<int>(labels.size()) != g.size())
    throw std::invalid_argument("label vector does not match the graph");
  const int k = community_count(labels);
  const auto sizes = community_sizes(labels, k);
  std::vector<double> degree(static_cast<std::size_t>(g.size()), 0.0);
  std::vector<double> total(static_cast<std::size_t>(k), 0.0);
  for (int i = 0; i < g.size(); ++i) {
    for (int a : g.row(i)) degree[i] += a;
    total[labels[i]] += degree[i];
  }
  for (int r = 0; r < k; ++r)
    if (total[r] <= 0)
      throw std::runtime_error("community " + std::to_string(r) + " has zero total degree");
  for (int i = 0; i < g.size(); ++i)
    degree[i] = sizes[labels[i]] * degree[i] / total[labels[i]];
  return degree;
}

Eigen::VectorXd ilr_transform(std::span<const double> parts) {
  if (parts.empty()) throw std::invalid_argument("ilr needs at least one part");
  for (double p : parts)
    if (!(p > 0)) throw std::invalid_argument("ilr parts must be positive");
  const int d = static_cast<int>(parts.size()) - 1;
  Eigen::VectorXd z(d);
  double log_prefix = 0.0;  // sum of log parts[0..i-1]
  for (int i = 1; i <= d; ++i) {
    log_prefix += std::log(parts[i - 1]);
    const double log_gmean = log_prefix / i;
    z[i - 1] = std::sqrt(static_cast<double>(i) / (i + 1)) * (std::log(parts[i]) - log_gmean);
  }
  return z;
}

double t2_upper_limit(int dim, int m, double level) {
  if (dim < 1 || m <= dim + 1) throw std::invalid_argument("T2 limit needs m > dim + 1");
  const double p = dim;
  const double mm = m;
  return p * (mm + 1) * (mm - 1) / (mm * mm - mm * p) * f_quantile(level, p, mm - p);
}

T2Chart fit_t2_chart(std::span<const Eigen::VectorXd> phase1) {
  const int m = static_cast<int>(phase1.size());
  if (m < 2) throw std::invalid_argument("T2 fit needs at least two Phase I points");
  const int dim = static_cast<int>(phase1[0].size());
  if (m <= dim + 1)
    throw std::invalid_argument("Phase I too short: need more observations than community nodes");
  T2Chart chart;
  chart.phase1_size = m;
  chart.mu = Eigen::VectorXd::Zero(dim);
  for (const auto& z : phase1) chart.mu += z;
  chart.mu /= m;
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(dim, dim);
  for (int t = 1; t < m; ++t) {
    const Eigen::VectorXd diff = phase1[t] - phase1[t - 1];
    cov.noalias() += diff * diff.transpose();
  }
  cov /= 2.0 * (m - 1);
  chart.covariance.compute(cov);
  if (chart.covariance.info() != Eigen::Success) {
    const double ridge = 1e-10 * cov.trace() / dim;
    if (ridge > 0) chart.covariance.compute(cov + ridge * Eigen::MatrixXd::Identity(dim, dim));
    if (ridge <= 0 || chart.covariance.info() != Eigen::Success)
      throw std::runtime_error("successive-difference covariance is singular");
  }
  chart.ucl = t2_upper_limit(dim, m);
  return chart;
}

double t2_statistic(const T2Chart& chart, const Eigen::VectorXd& z) {
  const Eigen::VectorXd dev = z - chart.mu;
  return dev.dot(chart.covariance.solve(dev));
}

Eigen::VectorXd community_coordinates(const Graph& g, const Labels& labels,
                                      std::span<const int> members) {
  return ilr_transform(floored_theta(g, labels, members));
}

T2State t2_fit(std::span<const Graph> phase1, const Labels& labels) {
  return fit_t2(phase1, labels);
}

T2State t2_fit(std::span<const Snapshot> phase1, const Labels& labels) {
  return fit_t2(phase1, labels);
}

bool t2_update(const T2State& state, const Graph& g) {
  return std::any_of(state.charts.begin(), state.charts.end(), [&](const T2Chart& c) {
    return t2_statistic(c, community_coordinates(g, state.labels, c.members)) > c.ucl;
  });
}

}  // namespace netmon
