#pragma once

#include <span>

namespace netmon {

double sample_mean(std::span<const double> xs);
/// Divisor n - 1; zero for fewer than two values.
double sample_sd(std::span<const double> xs);

/// I_x(a, b), evaluated by Lentz's continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

/// The x in [0, 1] with I_x(a, b) = p.
double inverse_regularized_incomplete_beta(double a, double b, double p);

/// p-quantile of the F(d1, d2) distribution.
double f_quantile(double p, double d1, double d2);

}  // namespace netmon
