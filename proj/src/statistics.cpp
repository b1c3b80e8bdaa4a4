#include "netmon/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace netmon {
namespace {

constexpr double kPowerTolerance = 1e-10;
constexpr int kPowerMaxIterations = 10000;

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double max_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return *std::max_element(v.begin(), v.end());
}

struct DistanceSummary {
  double diameter = 0.0;
  double avg_path = 0.0;
  double avg_eccentricity = 0.0;
};

DistanceSummary distance_summary(const DistanceMatrix& dist) {
  const int n = dist.size();
  DistanceSummary out;
  long pairs = 0;
  double total = 0.0;
  int diameter = 0;
  double ecc_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    int ecc = 0;
    for (int j = 0; j < n; ++j) {
      const int d = dist.at(i, j);
      if (d == DistanceMatrix::kUnreachable || i == j) continue;
      ecc = std::max(ecc, d);
      if (j > i) {
        total += d;
        ++pairs;
      }
    }
    diameter = std::max(diameter, ecc);
    ecc_sum += ecc;
  }
  out.diameter = diameter;
  out.avg_path = pairs > 0 ? total / static_cast<double>(pairs) : 0.0;
  out.avg_eccentricity = n > 0 ? ecc_sum / n : 0.0;
  return out;
}

double average_degree(const Graph& simple) {
  const int n = simple.size();
  if (n == 0) return 0.0;
  const auto& m = simple.matrix();
  return static_cast<double>(std::accumulate(m.begin(), m.end(), 0L)) / n;
}

// Number of edges among the neighbours of every node.
std::vector<long> closed_wedges(const Graph& simple, const std::vector<std::vector<int>>& nbrs) {
  std::vector<long> out(nbrs.size(), 0);
  for (std::size_t v = 0; v < nbrs.size(); ++v) {
    const auto& nv = nbrs[v];
    for (std::size_t a = 0; a < nv.size(); ++a)
      for (std::size_t b = a + 1; b < nv.size(); ++b)
        if (simple(nv[a], nv[b]) > 0) ++out[v];
  }
  return out;
}

double compute(const Graph& simple, StatisticKind kind, const DistanceMatrix* dist) {
  switch (kind) {
    case StatisticKind::avg_degree:
      return average_degree(simple);
    case StatisticKind::avg_eigenvector:
      return mean_of(principal_eigenvector(simple));
    case StatisticKind::avg_betweenness:
      return mean_of(betweenness_centrality(simple));
    case StatisticKind::max_betweenness:
      return max_of(betweenness_centrality(simple));
    case StatisticKind::avg_closeness:
      return mean_of(closeness_centrality(*dist));
    case StatisticKind::max_closeness:
      return max_of(closeness_centrality(*dist));
    case StatisticKind::global_clustering:
      return global_clustering(simple);
    case StatisticKind::avg_local_clustering:
      return mean_of(local_clustering(simple));
    case StatisticKind::diameter:
      return distance_summary(*dist).diameter;
    case StatisticKind::avg_shortest_path:
      return distance_summary(*dist).avg_path;
    case StatisticKind::avg_eccentricity:
      return distance_summary(*dist).avg_eccentricity;
    case StatisticKind::assortativity:
      return degree_assortativity(simple);
  }
  throw std::invalid_argument("unknown statistic kind");
}

bool needs_distances(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::avg_closeness:
    case StatisticKind::max_closeness:
    case StatisticKind::diameter:
    case StatisticKind::avg_shortest_path:
    case StatisticKind::avg_eccentricity:
      return true;
    default:
      return false;
  }
}

SummaryVector summary_of_simple(const Graph& simple, const DistanceMatrix& dist) {
  SummaryVector s;
  s[StatisticKind::avg_degree] = average_degree(simple);
  s[StatisticKind::avg_eigenvector] = mean_of(principal_eigenvector(simple));
  const auto btw = betweenness_centrality(simple);
  s[StatisticKind::avg_betweenness] = mean_of(btw);
  s[StatisticKind::max_betweenness] = max_of(btw);
  const auto clo = closeness_centrality(dist);
  s[StatisticKind::avg_closeness] = mean_of(clo);
  s[StatisticKind::max_closeness] = max_of(clo);
  s[StatisticKind::global_clustering] = global_clustering(simple);
  s[StatisticKind::avg_local_clustering] = mean_of(local_clustering(simple));
  const auto ds = distance_summary(dist);
  s[StatisticKind::diameter] = ds.diameter;
  s[StatisticKind::avg_shortest_path] = ds.avg_path;
  s[StatisticKind::avg_eccentricity] = ds.avg_eccentricity;
  s[StatisticKind::assortativity] = degree_assortativity(simple);
  return s;
}

}  // namespace

std::string_view statistic_name(StatisticKind kind) {
  static constexpr std::array<std::string_view, kStatisticCount> names = {
      "avg_degree",        "avg_eigenvector",   "avg_betweenness",      "max_betweenness",
      "avg_closeness",     "max_closeness",     "global_clustering",    "avg_local_clustering",
      "diameter",          "avg_shortest_path", "avg_eccentricity",     "assortativity"};
  return names.at(static_cast<std::size_t>(kind));
}

// Brandes accumulation; each unordered pair is visited from both ends, so the
// totals are halved.
std::vector<double> betweenness_centrality(const Graph& g) {
  const int n = g.size();
  const auto nbrs = g.neighbors();
  std::vector<double> cb(static_cast<std::size_t>(n), 0.0);
  std::vector<int> order, dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<std::vector<int>> preds(n);
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    order.clear();
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int v = order[head];
      for (int w : nbrs[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int w = *it;
      for (int v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) cb[w] += delta[w];
    }
  }
  for (double& c : cb) c *= 0.5;
  return cb;
}

// Unreachable nodes count as distance n, so a node cut off from part of the
// graph is penalized instead of silently ignored. Isolated nodes score 0.
std::vector<double> closeness_centrality(const DistanceMatrix& dist) {
  const int n = dist.size();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    long reach = 0, total = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (dist.reachable(i, j)) {
        ++reach;
        total += dist.at(i, j);
      } else {
        total += n;
      }
    }
    if (reach > 0) out[i] = static_cast<double>(n - 1) / static_cast<double>(total);
  }
  return out;
}

// Power iteration on A + I: same eigenvectors as A, but the shift removes the
// +/- lambda tie that makes plain iteration oscillate on bipartite graphs.
std::vector<double> principal_eigenvector(const Graph& g) {
  const int n = g.size();
  if (n == 0) return {};
  const auto nbrs = g.neighbors();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  for (int iter = 0; iter < kPowerMaxIterations; ++iter) {
    for (int i = 0; i < n; ++i) {
      double acc = x[i];
      for (int j : nbrs[i]) acc += x[j];
      y[i] = acc;
    }
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    double diff = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] /= norm;
      diff += (y[i] - x[i]) * (y[i] - x[i]);
    }
    x.swap(y);
    if (std::sqrt(diff) < kPowerTolerance) break;
  }
  if (std::accumulate(x.begin(), x.end(), 0.0) < 0.0)
    for (double& v : x) v = -v;
  return x;
}

std::vector<double> local_clustering(const Graph& g) {
  const auto nbrs = g.neighbors();
  const auto closed = closed_wedges(g, nbrs);
  std::vector<double> out(nbrs.size(), 0.0);
  for (std::size_t v = 0; v < nbrs.size(); ++v) {
    const double d = static_cast<double>(nbrs[v].size());
    if (d >= 2) out[v] = static_cast<double>(closed[v]) / (d * (d - 1) / 2.0);
  }
  return out;
}

double global_clustering(const Graph& g) {
  const auto nbrs = g.neighbors();
  const auto closed = closed_wedges(g, nbrs);
  double wedges = 0.0, closed_total = 0.0;
  for (std::size_t v = 0; v < nbrs.size(); ++v) {
    const double d = static_cast<double>(nbrs[v].size());
    wedges += d * (d - 1) / 2.0;
    closed_total += static_cast<double>(closed[v]);
  }
  return wedges > 0 ? closed_total / wedges : 0.0;
}

double degree_assortativity(const Graph& g) {
  const auto nbrs = g.neighbors();
  double edges = 0, sum_prod = 0, sum_half = 0, sum_sq_half = 0;
  for (std::size_t u = 0; u < nbrs.size(); ++u) {
    for (int v : nbrs[u]) {
      if (static_cast<std::size_t>(v) <= u) continue;
      const double du = static_cast<double>(nbrs[u].size());
      const double dv = static_cast<double>(nbrs[v].size());
      edges += 1;
      sum_prod += du * dv;
      sum_half += 0.5 * (du + dv);
      sum_sq_half += 0.5 * (du * du + dv * dv);
    }
  }
  if (edges == 0) return 0.0;
  const double mean = sum_half / edges;
  const double num = sum_prod / edges - mean * mean;
  const double den = sum_sq_half / edges - mean * mean;
  if (den <= 1e-12 * std::max(1.0, sum_sq_half / edges)) return 0.0;
  return std::clamp(num / den, -1.0, 1.0);
}

double summary_statistic(const Graph& g, StatisticKind kind) {
  const Graph simple = binarize(g);
  if (needs_distances(kind)) {
    const auto dist = geodesic_distances(simple);
    return compute(simple, kind, &dist);
  }
  return compute(simple, kind, nullptr);
}

SummaryVector summary_vector(const Graph& g) {
  const Graph simple = binarize(g);
  return summary_of_simple(simple, geodesic_distances(simple));
}

long scan_neighborhood_count(const Graph& g, int v, int k, const DistanceMatrix& dist) {
  if (k < 0 || k > 2) throw std::invalid_argument("scan order must be 0, 1 or 2");
  const int n = g.size();
  if (k == 0) {
    long deg = 0;
    for (int a : g.row(v)) deg += a > 0;
    return deg;
  }
  std::vector<int> ball;
  for (int u = 0; u < n; ++u)
    if (dist.reachable(v, u) && dist.at(v, u) <= k) ball.push_back(u);
  long edges = 0;
  for (std::size_t a = 0; a < ball.size(); ++a) {
    const auto r = g.row(ball[a]);
    for (std::size_t b = a + 1; b < ball.size(); ++b) edges += r[ball[b]] > 0;
  }
  return edges;
}

std::array<std::vector<long>, 3> scan_counts(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.size();
  const auto nbrs = g.neighbors();
  std::array<std::vector<long>, 3> out;
  for (auto& v : out) v.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> ball;
  for (int v = 0; v < n; ++v) {
    out[0][v] = static_cast<long>(nbrs[v].size());
    for (int k = 1; k <= 2; ++k) {
      ball.clear();
      for (int u = 0; u < n; ++u)
        if (dist.reachable(v, u) && dist.at(v, u) <= k) ball.push_back(u);
      long twice = 0;
      for (int u : ball)
        for (int w : nbrs[u])
          if (dist.reachable(v, w) && dist.at(v, w) <= k) ++twice;
      out[k][v] = twice / 2;
    }
  }
  return out;
}

const Graph& Snapshot::simple() const {
  if (!simple_) simple_ = binarize(*graph_);
  return *simple_;
}

const DistanceMatrix& Snapshot::distances() const {
  if (!dist_) dist_ = geodesic_distances(simple());
  return *dist_;
}

const SummaryVector& Snapshot::summary() const {
  if (!summary_) summary_ = summary_of_simple(simple(), distances());
  return *summary_;
}

}  // namespace netmon
