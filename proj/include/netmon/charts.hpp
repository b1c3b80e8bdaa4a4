#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "netmon/generator.hpp"
#include "netmon/graph.hpp"
#include "netmon/statistics.hpp"

namespace netmon {

// ---------------------------------------------------------------------------
// EWMA chart on a scalar summary
// ---------------------------------------------------------------------------

inline constexpr double kEwmaLambda = 0.5;
inline constexpr double kSigmaFloor = 1e-12;

struct EwmaState {
  double lambda = kEwmaLambda;
  double mu_hat = 0.0;
  double sigma_hat = 0.0;
  double e_prev = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct EwmaStep {
  double value;
  bool signal;
};

/// Steady-state limits mu +/- width * sigma * sqrt(lambda / (2 - lambda)),
/// with the smoothed value started at mu. `width` is 3 for the study.
EwmaState ewma_fit(std::span<const double> phase1, double lambda = kEwmaLambda,
                   double width = 3.0);
EwmaStep ewma_update(EwmaState& state, double s);

// ---------------------------------------------------------------------------
// Moving-window scan statistics
// ---------------------------------------------------------------------------

/// (x - mean(window)) / max(sd(window), 1).
double scan_standardize(double x, std::span<const double> window);

class ScanState {
 public:
  static constexpr int kWindow = 20;
  static constexpr double kThreshold = 5.0;

  explicit ScanState(int window = kWindow, double threshold = kThreshold);

  bool update(const Snapshot& g);
  /// One observation given as neighbourhood counts indexed [k][v].
  bool update_counts(const std::array<std::vector<long>, 3>& counts);

  /// Second-stage scores of the latest observation, when past warm-up.
  const std::array<std::optional<double>, 3>& last_scores() const { return last_scores_; }
  long observations() const { return observations_; }

 private:
  class Window {
   public:
    explicit Window(int depth = 0) : buf_(static_cast<std::size_t>(depth)) {}
    void push(double x);
    bool full() const { return count_ == buf_.size(); }
    std::span<const double> values() const { return {buf_.data(), count_}; }

   private:
    std::vector<double> buf_;
    std::size_t next_ = 0;
    std::size_t count_ = 0;
  };

  int window_;
  double threshold_;
  int nodes_ = -1;
  long observations_ = 0;
  std::array<std::vector<Window>, 3> raw_;
  std::array<Window, 3> maxima_;
  std::array<std::optional<double>, 3> last_scores_;
};

// ---------------------------------------------------------------------------
// Shewhart charts on the block propensity estimates
// ---------------------------------------------------------------------------

/// Number of communities implied by the labels; throws if one is empty.
int community_count(const Labels& labels);

/// P_rs = m_rs / (n_r n_s) with m_rs the total edge weight between r and s.
Eigen::MatrixXd estimate_p_hat(const Graph& g, const Labels& labels);

/// Moving-range standard deviation: sqrt(pi) / (2 (m - 1)) * sum |x_j - x_{j-1}|.
double moving_range_sigma(std::span<const double> xs);

struct ShewhartChart {
  int r = 0;
  int s = 0;
  double mu_hat = 0.0;
  double sigma_hat = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct ShewhartPState {
  Labels labels;
  int k = 0;
  std::vector<ShewhartChart> charts;  // every r <= s
};

ShewhartPState shewhart_p_fit(std::span<const Graph> phase1, const Labels& labels);
ShewhartPState shewhart_p_fit(std::span<const Snapshot> phase1, const Labels& labels);
bool shewhart_p_update(const ShewhartPState& state, const Graph& g);

// ---------------------------------------------------------------------------
// Compositional T^2 chart on the degree-parameter estimates
// ---------------------------------------------------------------------------

inline constexpr double kThetaFloor = 1e-6;
inline constexpr double kT2Level = 0.9;

/// theta_i = n_r d_i / sum_{j in r} d_j over weighted degrees.
std::vector<double> estimate_theta_hat(const Graph& g, const Labels& labels);

/// Isometric log-ratio coordinates of a positive composition (length - 1 values).
Eigen::VectorXd ilr_transform(std::span<const double> parts);

struct T2Chart {
  int community = 0;
  std::vector<int> members;
  int phase1_size = 0;
  Eigen::VectorXd mu;
  Eigen::LLT<Eigen::MatrixXd> covariance;
  double ucl = 0.0;
};

/// Upper limit for a Phase II T^2 with `dim` coordinates and m Phase I points.
double t2_upper_limit(int dim, int m, double level = kT2Level);

/// Mean and successive-difference covariance of the Phase I coordinates.
/// Throws when m <= dim + 1 or the covariance cannot be factorized.
T2Chart fit_t2_chart(std::span<const Eigen::VectorXd> phase1);
double t2_statistic(const T2Chart& chart, const Eigen::VectorXd& z);

struct T2State {
  Labels labels;
  std::vector<T2Chart> charts;  // communities with at least two nodes
};

/// ilr coordinates of one community's floored, renormalized theta estimate.
Eigen::VectorXd community_coordinates(const Graph& g, const Labels& labels,
                                      std::span<const int> members);

T2State t2_fit(std::span<const Graph> phase1, const Labels& labels);
T2State t2_fit(std::span<const Snapshot> phase1, const Labels& labels);
bool t2_update(const T2State& state, const Graph& g);

}  // namespace netmon
