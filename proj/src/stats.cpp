#include "leoaoi/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace leoaoi::stats {

Summary summarize(std::span<const double> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("summarize: empty sample");
  }
  const std::size_t n = samples.size();
  long double sum = 0.0L;
  long double sum_sq = 0.0L;
  double lo = samples[0];
  double hi = samples[0];
  for (double x : samples) {
    sum += x;
    sum_sq += static_cast<long double>(x) * x;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  Summary s;
  s.count = n;
  s.mean = static_cast<double>(sum / n);
  s.second_moment = static_cast<double>(sum_sq / n);
  s.min = lo;
  s.max = hi;
  if (n > 1) {
    long double centered = 0.0L;
    for (double x : samples) {
      const long double d = x - s.mean;
      centered += d * d;
    }
    s.variance = static_cast<double>(centered / (n - 1));
  }
  if (n >= 40) {
    s.std_error = batch_means_std_error(samples);
  } else if (n > 1) {
    s.std_error = std::sqrt(s.variance / n);
  }
  return s;
}

double batch_means_std_error(std::span<const double> samples,
                             std::size_t n_batches) {
  if (n_batches < 2) {
    throw std::invalid_argument("batch_means_std_error: need >= 2 batches");
  }
  const std::size_t n = samples.size();
  if (n < 2 * n_batches) {
    throw std::invalid_argument("batch_means_std_error: too few samples");
  }
  const std::size_t m = n / n_batches;  // trailing remainder is dropped
  std::vector<double> means(n_batches);
  for (std::size_t b = 0; b < n_batches; ++b) {
    long double sum = 0.0L;
    for (std::size_t i = b * m; i < (b + 1) * m; ++i) {
      sum += samples[i];
    }
    means[b] = static_cast<double>(sum / m);
  }
  long double grand = 0.0L;
  for (double v : means) grand += v;
  grand /= n_batches;
  long double var = 0.0L;
  for (double v : means) {
    const long double d = v - grand;
    var += d * d;
  }
  var /= (n_batches - 1);
  return static_cast<double>(std::sqrt(var / n_batches));
}

KsResult ks_statistic(std::span<const double> samples,
                      const std::function<double(double)>& cdf, double alpha) {
  if (samples.size() < 100) {
    throw std::invalid_argument("ks_statistic: need >= 100 samples");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("ks_statistic: alpha must be in (0, 1)");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d_max = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double below = f - static_cast<double>(i) / n;
    const double above = static_cast<double>(i + 1) / n - f;
    d_max = std::max({d_max, below, above});
  }
  KsResult r;
  r.statistic = d_max;
  r.critical_value = std::sqrt(-0.5 * std::log(alpha / 2.0) / n);
  r.n = sorted.size();
  return r;
}

namespace {

template <unsigned Order>
double gauss_checked(const std::function<double(double)>& f, double lo,
                     double hi) {
  auto checked = [&](double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
      throw std::domain_error("quadrature: integrand not finite at node");
    }
    return y;
  };
  return boost::math::quadrature::gauss<double, Order>::integrate(checked, lo,
                                                                  hi);
}

}  // namespace

QuadratureResult quadrature(const std::function<double(double)>& f, double lo,
                            double hi, unsigned order) {
  if (!(lo <= hi)) {
    throw std::invalid_argument("quadrature: need lo <= hi");
  }
  double coarse = 0.0;
  double fine = 0.0;
  switch (order) {
    case 8:
      coarse = gauss_checked<8>(f, lo, hi);
      fine = gauss_checked<16>(f, lo, hi);
      break;
    case 16:
      coarse = gauss_checked<16>(f, lo, hi);
      fine = gauss_checked<32>(f, lo, hi);
      break;
    case 32:
      coarse = gauss_checked<32>(f, lo, hi);
      fine = gauss_checked<64>(f, lo, hi);
      break;
    case 64:
      coarse = gauss_checked<64>(f, lo, hi);
      fine = gauss_checked<128>(f, lo, hi);
      break;
    case 128:
      coarse = gauss_checked<128>(f, lo, hi);
      fine = gauss_checked<256>(f, lo, hi);
      break;
    default:
      throw std::invalid_argument(
          "quadrature: order must be one of 8, 16, 32, 64, 128");
  }
  return QuadratureResult{fine, std::fabs(fine - coarse)};
}

}  // namespace leoaoi::stats
