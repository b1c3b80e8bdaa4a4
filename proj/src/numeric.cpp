#include "netmon/numeric.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace netmon {
namespace {

double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxTerms = 10000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxTerms; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  return h;
}

}  // namespace

double sample_mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_sd(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = sample_mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0 && b > 0)) throw std::invalid_argument("beta parameters must be positive");
  if (x < 0 || x > 1) throw std::invalid_argument("incomplete beta argument outside [0, 1]");
  if (x == 0) return 0.0;
  if (x == 1) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

// Bisection brackets the root; Newton steps on the beta density accelerate it
// and fall back to bisection whenever they leave the bracket.
double inverse_regularized_incomplete_beta(double a, double b, double p) {
  if (!(a > 0 && b > 0)) throw std::invalid_argument("beta parameters must be positive");
  if (p < 0 || p > 1) throw std::invalid_argument("probability outside [0, 1]");
  if (p == 0) return 0.0;
  if (p == 1) return 1.0;
  const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  double lo = 0.0, hi = 1.0, x = a / (a + b);
  for (int iter = 0; iter < 300; ++iter) {
    const double f = regularized_incomplete_beta(a, b, x) - p;
    if (f == 0) return x;
    if (f < 0)
      lo = x;
    else
      hi = x;
    const double log_density = (a - 1) * std::log(x) + (b - 1) * std::log1p(-x) - log_beta;
    double next = x - f / std::exp(log_density);
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * std::max(x, 1e-300) || hi - lo < 1e-300) return next;
    x = next;
  }
  return x;
}

double f_quantile(double p, double d1, double d2) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("quantile level must lie in (0, 1)");
  if (!(d1 > 0 && d2 > 0)) throw std::invalid_argument("F degrees of freedom must be positive");
  const double y = inverse_regularized_incomplete_beta(d1 / 2.0, d2 / 2.0, p);
  return d2 * y / (d1 * (1.0 - y));
}

}  // namespace netmon
