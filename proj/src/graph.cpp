#include "netmon/graph.hpp"

#include <stdexcept>
#include <string>

namespace netmon {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw std::invalid_argument("graph size must be non-negative");
}

Graph Graph::from_matrix(int n, std::vector<int> adjacency) {
  if (n < 0 || adjacency.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("adjacency matrix has wrong dimensions");
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int a = adjacency[static_cast<std::size_t>(i) * n + j];
      const int b = adjacency[static_cast<std::size_t>(j) * n + i];
      if (a < 0) throw std::invalid_argument("negative edge count");
      if (a != b) throw std::invalid_argument("adjacency matrix is not symmetric");
      if (i == j && a != 0) throw std::invalid_argument("self-loop at node " + std::to_string(i));
    }
  }
  g.adj_ = std::move(adjacency);
  return g;
}

void Graph::set_edge(int i, int j, int count) {
  if (i == j) throw std::invalid_argument("self-loops are not allowed");
  if (count < 0) throw std::invalid_argument("negative edge count");
  adj_[index(i, j)] = count;
  adj_[index(j, i)] = count;
}

std::vector<std::vector<int>> Graph::neighbors() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const auto r = row(i);
    for (int j = 0; j < n_; ++j)
      if (r[j] > 0) out[i].push_back(j);
  }
  return out;
}

Graph binarize(const Graph& g) {
  const int n = g.size();
  std::vector<int> adj(g.matrix());
  for (int& a : adj) a = a > 0 ? 1 : 0;
  return Graph::from_matrix(n, std::move(adj));
}

DistanceMatrix::DistanceMatrix(int n)
    : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

DistanceMatrix geodesic_distances(const Graph& g) {
  const int n = g.size();
  const auto nbrs = g.neighbors();
  DistanceMatrix dist(n);
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::size_t head = 0, tail = 0;
    dist.set(s, s, 0);
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      const int du = dist.at(s, u);
      for (int v : nbrs[u]) {
        if (!dist.reachable(s, v)) {
          dist.set(s, v, du + 1);
          queue[tail++] = v;
        }
      }
    }
  }
  return dist;
}

}  // namespace netmon
