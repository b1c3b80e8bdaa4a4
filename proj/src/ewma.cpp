#include <cmath>
#include <stdexcept>

#include "netmon/charts.hpp"
#include "netmon/numeric.hpp"

namespace netmon {

EwmaState ewma_fit(std::span<const double> phase1, double lambda, double width) {
  if (phase1.size() < 2) throw std::invalid_argument("EWMA fit needs at least two Phase I values");
  if (!(lambda > 0 && lambda <= 1)) throw std::invalid_argument("EWMA lambda must lie in (0, 1]");
  EwmaState st;
  st.lambda = lambda;
  st.mu_hat = sample_mean(phase1);
  st.sigma_hat = std::max(sample_sd(phase1), kSigmaFloor);
  const double half = width * st.sigma_hat * std::sqrt(lambda / (2.0 - lambda));
  st.lower = st.mu_hat - half;
  st.upper = st.mu_hat + half;
  st.e_prev = st.mu_hat;
  return st;
}

EwmaStep ewma_update(EwmaState& state, double s) {
  const double e = state.lambda * s + (1.0 - state.lambda) * state.e_prev;
  state.e_prev = e;
  return {e, e < state.lower || e > state.upper};
}

}  // namespace netmon
