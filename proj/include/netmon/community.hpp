#pragma once

#include <Eigen/Dense>

#include <span>

#include "netmon/generator.hpp"
#include "netmon/graph.hpp"
#include "netmon/rng.hpp"

namespace netmon {

/// Entrywise mean of the adjacency matrices.
Eigen::MatrixXd average_graph(std::span<const Graph> graphs);

/// D_tau^{-1/2} A D_tau^{-1/2} with D_tau = D + tau I and tau the mean degree.
Eigen::MatrixXd regularized_adjacency(const Eigen::MatrixXd& avg);

/// Eigenvectors of the k largest-magnitude eigenvalues of the regularized
/// adjacency, one column each, rows scaled to unit length (zero rows kept).
Eigen::MatrixXd spectral_embedding(const Eigen::MatrixXd& avg, int k);

struct KMeansOptions {
  int restarts = 20;
  int iterations = 100;
};

/// Lloyd iterations from k-means++ seeds; the restart with the smallest
/// within-cluster sum of squares wins. Labels are canonical: clusters are
/// numbered in order of their smallest member index.
Labels kmeans(const Eigen::MatrixXd& points, int k, Rng& rng, const KMeansOptions& options = {});

Labels regularized_spectral(const Eigen::MatrixXd& avg, int k, Rng& rng);

/// Renumbers clusters in order of their first occurrence.
Labels canonical_labels(const Labels& labels);

/// Best agreement fraction over all relabelings of `estimated`.
double label_accuracy(const Labels& estimated, const Labels& truth);

}  // namespace netmon
