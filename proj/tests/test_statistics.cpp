#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "netmon/statistics.hpp"
#include "oracle.hpp"

using namespace netmon;

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.set_edge(a, b, 1);
  return g;
}

const Graph kTriangle = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
const Graph kPath3 = from_edges(3, {{0, 1}, {1, 2}});
const Graph kStar5 = from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});

// Full SummaryVector computed from the brute-force oracles.
SummaryVector oracle_summary(const Graph& g) {
  SummaryVector s;
  const auto a = oracle::adjacency(g);
  double deg = 0;
  for (int v = 0; v < g.size(); ++v) deg += oracle::degree(a, v);
  s[StatisticKind::avg_degree] = g.size() ? deg / g.size() : 0;
  s[StatisticKind::avg_eigenvector] = oracle::mean(oracle::principal_eigenvector(g));
  const auto btw = oracle::betweenness(g);
  s[StatisticKind::avg_betweenness] = oracle::mean(btw);
  s[StatisticKind::max_betweenness] = oracle::max(btw);
  const auto clo = oracle::closeness(g);
  s[StatisticKind::avg_closeness] = oracle::mean(clo);
  s[StatisticKind::max_closeness] = oracle::max(clo);
  s[StatisticKind::global_clustering] = oracle::global_clustering(g);
  s[StatisticKind::avg_local_clustering] = oracle::mean(oracle::local_clustering(g));
  const auto ds = oracle::distance_stats(g);
  s[StatisticKind::diameter] = ds.diameter;
  s[StatisticKind::avg_shortest_path] = ds.avg_path;
  s[StatisticKind::avg_eccentricity] = ds.avg_ecc;
  s[StatisticKind::assortativity] = oracle::assortativity(g);
  return s;
}

}  // namespace

TEST_CASE("hand-checked values on tiny graphs") {
  CHECK(summary_statistic(kTriangle, StatisticKind::avg_degree) == doctest::Approx(2.0));
  CHECK(summary_statistic(kPath3, StatisticKind::avg_betweenness) == doctest::Approx(1.0 / 3));
  CHECK(summary_statistic(kPath3, StatisticKind::max_betweenness) == doctest::Approx(1.0));
  CHECK(summary_statistic(kTriangle, StatisticKind::global_clustering) == doctest::Approx(1.0));
  CHECK(summary_statistic(kStar5, StatisticKind::global_clustering) == doctest::Approx(0.0));
  CHECK(summary_statistic(kStar5, StatisticKind::assortativity) == doctest::Approx(-1.0));
  CHECK(summary_statistic(kTriangle, StatisticKind::assortativity) == doctest::Approx(0.0));
  CHECK(summary_statistic(kPath3, StatisticKind::diameter) == doctest::Approx(2.0));
  CHECK(summary_statistic(kPath3, StatisticKind::avg_shortest_path) == doctest::Approx(4.0 / 3));
  CHECK(summary_statistic(kPath3, StatisticKind::avg_eccentricity) == doctest::Approx(5.0 / 3));
  // Center of the path reaches both ends in one step; each end sums 1 + 2.
  CHECK(summary_statistic(kPath3, StatisticKind::max_closeness) == doctest::Approx(1.0));
  CHECK(summary_statistic(kPath3, StatisticKind::avg_closeness) ==
        doctest::Approx((1.0 + 2.0 / 3 + 2.0 / 3) / 3));
}

TEST_CASE("a component cut off from the rest lowers closeness") {
  // Edge 0-1 plus isolated node 2: each endpoint sums 1 + n = 4, so 2/4.
  const Graph g = from_edges(3, {{0, 1}});
  const auto c = closeness_centrality(geodesic_distances(g));
  CHECK(c[0] == doctest::Approx(0.5));
  CHECK(c[1] == doctest::Approx(0.5));
  CHECK(c[2] == doctest::Approx(0.0));
}

TEST_CASE("empty graph gives zero for every statistic") {
  const auto s = summary_vector(Graph(5));
  for (int k = 0; k < kStatisticCount; ++k) {
    const auto kind = static_cast<StatisticKind>(k);
    if (kind == StatisticKind::avg_eigenvector) continue;  // no edges: uniform vector
    CHECK_MESSAGE(s[kind] == 0.0, statistic_name(kind));
  }
}

TEST_CASE("multi-edges are binarized before any statistic") {
  Graph heavy = kTriangle;
  heavy.set_edge(0, 1, 7);
  const auto a = summary_vector(heavy), b = summary_vector(kTriangle);
  for (int k = 0; k < kStatisticCount; ++k) CHECK(a.values[k] == doctest::Approx(b.values[k]));
}

TEST_CASE("all statistics match brute-force oracles on random graphs with n <= 8") {
  std::mt19937_64 rng(2024);
  int eigen_checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + rep % 7;
    const double p = 0.15 + 0.1 * (rep % 6);
    const Graph g = oracle::random_graph(n, p, rng);
    const auto got = summary_vector(g);
    const auto want = oracle_summary(g);
    for (int k = 0; k < kStatisticCount; ++k) {
      const auto kind = static_cast<StatisticKind>(k);
      if (kind == StatisticKind::avg_eigenvector) continue;
      INFO("rep " << rep << " " << statistic_name(kind));
      CHECK(got[kind] == doctest::Approx(want[kind]).epsilon(1e-9));
      CHECK(summary_statistic(g, kind) == doctest::Approx(got[kind]).epsilon(1e-12));
    }
    // Power iteration converges slowly when the top two eigenvalues nearly tie.
    if (oracle::spectral_gap(g) > 1e-3 || oracle::spectral_gap(g) < 1e-12) {
      ++eigen_checked;
      const auto x = principal_eigenvector(g);
      const auto ref = oracle::principal_eigenvector(g);
      for (int i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(ref[i]).epsilon(1e-6));
    }
  }
  CHECK(eigen_checked > 150);
}

TEST_CASE("betweenness totals equal interior vertex counts of all geodesics") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 6;
    const Graph g = oracle::random_graph(n, 0.35, rng);
    const auto btw = betweenness_centrality(binarize(g));
    const double total = std::accumulate(btw.begin(), btw.end(), 0.0);
    // Each geodesic of length L has L - 1 interior vertices; averaging over
    // the geodesics of a pair gives d - 1 per reachable pair.
    const auto d = oracle::floyd(g);
    double expected = 0;
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t)
        if (d[s][t] < oracle::kInf) expected += d[s][t] - 1;
    CHECK(total == doctest::Approx(expected));
  }
}

TEST_CASE("statistics are invariant under node relabeling") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 4 + rep % 10;
    const Graph g = oracle::random_graph(n, 0.3, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = summary_vector(g), b = summary_vector(oracle::permuted(g, perm));
    for (int k = 0; k < kStatisticCount; ++k)
      CHECK(a.values[k] == doctest::Approx(b.values[k]).epsilon(1e-8));
  }
}

TEST_CASE("summary invariants hold on random graphs") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    const Graph g = oracle::random_graph(12, 0.05 + 0.01 * rep, rng);
    const auto s = summary_vector(g);
    CHECK(s[StatisticKind::global_clustering] >= 0.0);
    CHECK(s[StatisticKind::global_clustering] <= 1.0);
    CHECK(s[StatisticKind::avg_local_clustering] >= 0.0);
    CHECK(s[StatisticKind::avg_local_clustering] <= 1.0);
    CHECK(s[StatisticKind::assortativity] >= -1.0);
    CHECK(s[StatisticKind::assortativity] <= 1.0);
    if (s[StatisticKind::avg_degree] > 0) CHECK(s[StatisticKind::diameter] >= 1.0);
  }
}

TEST_CASE("scan neighborhood counts") {
  const auto dk = geodesic_distances(kTriangle);
  for (int v = 0; v < 3; ++v) {
    CHECK(scan_neighborhood_count(kTriangle, v, 0, dk) == 2);
    CHECK(scan_neighborhood_count(kTriangle, v, 1, dk) == 3);
  }
  const auto ds = geodesic_distances(kStar5);
  CHECK(scan_neighborhood_count(kStar5, 0, 1, ds) == 5);
  CHECK(scan_neighborhood_count(kStar5, 1, 1, ds) == 1);
  CHECK(scan_neighborhood_count(kStar5, 1, 2, ds) == 5);
  CHECK_THROWS(scan_neighborhood_count(kStar5, 0, 3, ds));
}

TEST_CASE("scan counts match the oracle, agree between code paths and grow with k") {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + rep % 9;
    const Graph g = binarize(oracle::random_graph(n, 0.3, rng));
    const auto d = geodesic_distances(g);
    const auto all = scan_counts(g, d);
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k <= 2; ++k) {
        CHECK(all[k][v] == oracle::scan_count(g, v, k));
        CHECK(scan_neighborhood_count(g, v, k, d) == all[k][v]);
      }
      CHECK(all[0][v] <= all[1][v]);
      CHECK(all[1][v] <= all[2][v]);
    }
  }
}

TEST_CASE("Snapshot caches agree with direct computation") {
  std::mt19937_64 rng(8);
  const Graph g = oracle::random_graph(15, 0.2, rng);
  const Snapshot snap(g);
  const auto direct = summary_vector(g);
  for (int k = 0; k < kStatisticCount; ++k) CHECK(snap.summary().values[k] == direct.values[k]);
  CHECK(snap.simple() == binarize(g));
  CHECK(&snap.distances() == &snap.distances());
}
