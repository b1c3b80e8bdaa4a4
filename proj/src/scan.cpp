#include <algorithm>
#include <limits>
#include <stdexcept>

#include "netmon/charts.hpp"
#include "netmon/numeric.hpp"

namespace netmon {

double scan_standardize(double x, std::span<const double> window) {
  return (x - sample_mean(window)) / std::max(sample_sd(window), 1.0);
}

void ScanState::Window::push(double x) {
  buf_[next_] = x;
  next_ = (next_ + 1) % buf_.size();
  count_ = std::min(count_ + 1, buf_.size());
}

ScanState::ScanState(int window, double threshold) : window_(window), threshold_(threshold) {
  if (window < 2) throw std::invalid_argument("scan window must hold at least two values");
  for (auto& w : maxima_) w = Window(window);
}

bool ScanState::update(const Snapshot& g) {
  return update_counts(scan_counts(g.simple(), g.distances()));
}

// The first stage standardizes each node's count against its own previous
// `window` counts; the second standardizes the per-k maximum against the
// previous `window` maxima. Both windows slide and absorb every observation.
bool ScanState::update_counts(const std::array<std::vector<long>, 3>& counts) {
  const int n = static_cast<int>(counts[0].size());
  if (nodes_ < 0) {
    nodes_ = n;
    for (auto& per_k : raw_) per_k.assign(static_cast<std::size_t>(n), Window(window_));
  } else if (n != nodes_) {
    throw std::invalid_argument("scan monitor fed graphs of different sizes");
  }
  ++observations_;
  bool signal = false;
  for (int k = 0; k < 3; ++k) {
    last_scores_[k].reset();
    auto& windows = raw_[k];
    std::optional<double> maximum;
    if (windows.empty() || windows[0].full()) {
      double best = -std::numeric_limits<double>::infinity();
      for (int v = 0; v < n; ++v)
        best = std::max(best, scan_standardize(static_cast<double>(counts[k][v]), windows[v].values()));
      if (n > 0) maximum = best;
    }
    for (int v = 0; v < n; ++v) windows[v].push(static_cast<double>(counts[k][v]));
    if (!maximum) continue;
    if (maxima_[k].full()) {
      last_scores_[k] = scan_standardize(*maximum, maxima_[k].values());
      signal = signal || *last_scores_[k] > threshold_;
    }
    maxima_[k].push(*maximum);
  }
  return signal;
}

}  // namespace netmon
