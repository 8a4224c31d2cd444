#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace leoaoi::stats {

/// Moment estimates of a sample, with a batch-means standard error of the
/// mean (20 fixed batches; plain sd/sqrt(n) below 40 samples).
struct Summary {
  double mean = 0.0;
  double variance = 0.0;       // sample variance (n-1 denominator)
  double second_moment = 0.0;  // mean of squares
  std::size_t count = 0;
  double std_error = 0.0;
  double min = 0.0;
  double max = 0.0;
};

Summary summarize(std::span<const double> samples);

/// Batch-means standard error of the sample mean, robust to serial
/// correlation. Requires at least 2 * n_batches samples.
double batch_means_std_error(std::span<const double> samples,
                             std::size_t n_batches = 20);

/// One-sample two-sided Kolmogorov-Smirnov statistic against a continuous
/// CDF, with the asymptotic critical value at the requested significance.
struct KsResult {
  double statistic = 0.0;
  double critical_value = 0.0;
  std::size_t n = 0;
  bool rejected() const { return statistic > critical_value; }
};

KsResult ks_statistic(std::span<const double> samples,
                      const std::function<double(double)>& cdf,
                      double alpha = 0.01);

/// Fixed-order Gauss-Legendre integration of f over [lo, hi]. The value is
/// computed at twice the requested order; the error estimate is the absolute
/// difference between the order-n and order-2n results. Supported orders:
/// 8, 16, 32, 64, 128.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

QuadratureResult quadrature(const std::function<double(double)>& f, double lo,
                            double hi, unsigned order);

}  // namespace leoaoi::stats
