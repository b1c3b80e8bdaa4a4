#include "netmon/community.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace netmon {
namespace {

constexpr double kZeroRowTolerance = 1e-10;

}  // namespace

Eigen::MatrixXd average_graph(std::span<const Graph> graphs) {
  if (graphs.empty()) throw std::invalid_argument("cannot average an empty graph list");
  const int n = graphs[0].size();
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(n, n);
  for (const auto& g : graphs) {
    if (g.size() != n) throw std::invalid_argument("graphs differ in size");
    for (int i = 0; i < n; ++i) {
      const auto row = g.row(i);
      for (int j = 0; j < n; ++j) avg(i, j) += row[j];
    }
  }
  return avg / static_cast<double>(graphs.size());
}

Eigen::MatrixXd regularized_adjacency(const Eigen::MatrixXd& avg) {
  const Eigen::VectorXd degree = avg.rowwise().sum();
  double tau = degree.size() > 0 ? degree.mean() : 0.0;
  if (!(tau > 0)) tau = 1.0;
  const Eigen::VectorXd inv_sqrt = (degree.array() + tau).rsqrt();
  return inv_sqrt.asDiagonal() * avg * inv_sqrt.asDiagonal();
}

Eigen::MatrixXd spectral_embedding(const Eigen::MatrixXd& avg, int k) {
  const int n = static_cast<int>(avg.rows());
  if (k < 1 || k > n) throw std::invalid_argument("community count must lie in 1..n");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(regularized_adjacency(avg));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const Eigen::VectorXd& values = solver.eigenvalues();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::abs(values[a]) > std::abs(values[b]); });
  Eigen::MatrixXd emb(n, k);
  for (int c = 0; c < k; ++c) emb.col(c) = solver.eigenvectors().col(order[c]);
  // Rows of isolated nodes are zero up to round-off; keep them at zero
  // instead of inflating the noise to unit length.
  for (int i = 0; i < n; ++i) {
    const double norm = emb.row(i).norm();
    if (norm > kZeroRowTolerance)
      emb.row(i) /= norm;
    else
      emb.row(i).setZero();
  }
  return emb;
}

Labels canonical_labels(const Labels& labels) {
  std::vector<int> remap;
  Labels out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int c = labels[i];
    if (c >= static_cast<int>(remap.size())) remap.resize(static_cast<std::size_t>(c) + 1, -1);
    if (remap[c] < 0) remap[c] = *std::max_element(remap.begin(), remap.end()) + 1;
    out[i] = remap[c];
  }
  return out;
}

namespace {

struct Clustering {
  Labels labels;
  double wcss = std::numeric_limits<double>::infinity();
};

Eigen::MatrixXd seed_centers(const Eigen::MatrixXd& pts, int k, Rng& rng) {
  const int n = static_cast<int>(pts.rows());
  Eigen::MatrixXd centers(k, pts.cols());
  std::uniform_int_distribution<int> pick(0, n - 1);
  centers.row(0) = pts.row(pick(rng));
  std::vector<double> d2(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], (pts.row(i) - centers.row(c - 1)).squaredNorm());
      total += d2[i];
    }
    int chosen = pick(rng);
    if (total > 0) {
      double target = unif(rng) * total;
      for (int i = 0; i < n; ++i) {
        target -= d2[i];
        if (target <= 0) {
          chosen = i;
          break;
        }
      }
    }
    centers.row(c) = pts.row(chosen);
  }
  return centers;
}

Clustering lloyd(const Eigen::MatrixXd& pts, Eigen::MatrixXd centers, int iterations) {
  const int n = static_cast<int>(pts.rows());
  const int k = static_cast<int>(centers.rows());
  Clustering out;
  out.labels.assign(static_cast<std::size_t>(n), -1);
  std::vector<double> dist(static_cast<std::size_t>(n));
  for (int iter = 0; iter < iterations; ++iter) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        const double d = (pts.row(i) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      dist[i] = best_d;
      if (out.labels[i] != best) {
        out.labels[i] = best;
        changed = true;
      }
    }
    // An empty cluster takes the point farthest from its centre.
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (int c : out.labels) ++counts[c];
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      int far = 0;
      for (int i = 1; i < n; ++i)
        if (dist[i] > dist[far] && counts[out.labels[i]] > 1) far = i;
      if (counts[out.labels[far]] <= 1) continue;
      --counts[out.labels[far]];
      out.labels[far] = c;
      dist[far] = 0.0;
      counts[c] = 1;
      changed = true;
    }
    centers.setZero();
    for (int i = 0; i < n; ++i) centers.row(out.labels[i]) += pts.row(i);
    for (int c = 0; c < k; ++c)
      if (counts[c] > 0) centers.row(c) /= counts[c];
    if (!changed) break;
  }
  out.wcss = 0.0;
  for (int i = 0; i < n; ++i) out.wcss += (pts.row(i) - centers.row(out.labels[i])).squaredNorm();
  return out;
}

}  // namespace

Labels kmeans(const Eigen::MatrixXd& points, int k, Rng& rng, const KMeansOptions& options) {
  const int n = static_cast<int>(points.rows());
  if (k < 1 || k > n) throw std::invalid_argument("cluster count must lie in 1..n");
  if (k == 1) return Labels(static_cast<std::size_t>(n), 0);
  Clustering best;
  for (int r = 0; r < options.restarts; ++r) {
    Clustering c = lloyd(points, seed_centers(points, k, rng), options.iterations);
    if (c.wcss < best.wcss) best = std::move(c);
  }
  return canonical_labels(best.labels);
}

Labels regularized_spectral(const Eigen::MatrixXd& avg, int k, Rng& rng) {
  const int n = static_cast<int>(avg.rows());
  if (k < 1 || k > n) throw std::invalid_argument("community count must lie in 1..n");
  if (k == 1) return Labels(static_cast<std::size_t>(n), 0);
  return kmeans(spectral_embedding(avg, k), k, rng);
}

double label_accuracy(const Labels& estimated, const Labels& truth) {
  if (estimated.size() != truth.size()) throw std::invalid_argument("label vectors differ in length");
  if (truth.empty()) return 1.0;
  const int k = std::max(*std::max_element(estimated.begin(), estimated.end()),
                         *std::max_element(truth.begin(), truth.end())) + 1;
  if (k > 9) throw std::invalid_argument("label accuracy supports at most 9 communities");
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = 0;
  do {
    std::size_t agree = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) agree += perm[estimated[i]] == truth[i];
    best = std::max(best, agree);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(truth.size());
}

}  // namespace netmon
