#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace netmon {

/// One undirected snapshot: a symmetric matrix of non-negative edge counts
/// with an empty diagonal.
class Graph {
 public:
  explicit Graph(int n = 0);

  /// Validates symmetry, zero diagonal and non-negativity of a row-major matrix.
  static Graph from_matrix(int n, std::vector<int> adjacency);

  int size() const { return n_; }
  int operator()(int i, int j) const { return adj_[index(i, j)]; }

  /// Sets A_ij and A_ji. Self-loops are rejected.
  void set_edge(int i, int j, int count);

  std::span<const int> row(int i) const {
    return {adj_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }
  const std::vector<int>& matrix() const { return adj_; }

  /// Neighbour lists of the underlying simple graph (entries > 0).
  std::vector<std::vector<int>> neighbors() const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<int> adj_;
};

Graph binarize(const Graph& g);

class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(int n = 0);

  int size() const { return n_; }
  int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  bool reachable(int i, int j) const { return at(i, j) != kUnreachable; }
  void set(int i, int j, int value) { d_[static_cast<std::size_t>(i) * n_ + j] = value; }

 private:
  int n_;
  std::vector<int> d_;
};

/// Unweighted BFS distances on binarize(g), from every node.
DistanceMatrix geodesic_distances(const Graph& g);

}  // namespace netmon
