#include "leoaoi/onoff.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "leoaoi/errors.hpp"
#include "leoaoi/stats.hpp"

namespace leoaoi::onoff {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr unsigned kQuadratureOrder = 64;

// Expectation of g(W) over the uniform entry angle. The substitution
// theta = phi_e (1 - v^2) removes the square-root behaviour of W at the
// support edge, so the fixed-order rule converges to machine precision:
//   E[g(W)] = (1/phi_e) int_0^phi_e g(W(theta)) dtheta
//           = 2 int_0^1 g(W(phi_e (1 - v^2))) v dv.
template <class G>
double entry_expectation(const OnOffParams& params, G&& g) {
  const double phi_e = params.earth_zenith_rad;
  auto integrand = [&](double v) {
    const double theta = phi_e * (1.0 - v * v);
    return g(service_time_from_entry(params, EntryAngle{theta})) * 2.0 * v;
  };
  return stats::quadrature(integrand, 0.0, 1.0, kQuadratureOrder).value;
}

}  // namespace

OnOffParams OnOffParams::from_geometry(const geometry::GeometryConfig& cfg,
                                       const geometry::DomeSpec& dome) {
  OnOffParams p;
  p.earth_zenith_rad = dome.earth_zenith_rad;
  p.angular_rate_rad_s = cfg.angular_rate_rad_s;
  p.off_rate_per_s = cfg.density_per_km2 * dome.sweep_rate_km2_s;
  p.validate();
  return p;
}

void OnOffParams::validate() const {
  if (!(off_rate_per_s >= 0.0)) {
    throw std::invalid_argument("onoff: off_rate must be >= 0");
  }
  if (!(earth_zenith_rad > 0.0 && earth_zenith_rad < kPi / 2.0)) {
    throw std::invalid_argument("onoff: earth_zenith must be in (0, pi/2)");
  }
  if (!(angular_rate_rad_s > 0.0)) {
    throw std::invalid_argument("onoff: angular_rate must be > 0");
  }
}

double service_time_from_entry(const OnOffParams& params, EntryAngle entry) {
  const double phi_e = params.earth_zenith_rad;
  if (!(std::fabs(entry.theta_rad) <= phi_e)) {
    throw std::invalid_argument("service_time_from_entry: |theta| > phi_e");
  }
  const double sin_e = std::sin(phi_e);
  const double sin_t = std::sin(entry.theta_rad);
  const double radicand = std::max(0.0, sin_e * sin_e - sin_t * sin_t);
  const double ratio =
      std::min(1.0, std::sqrt(radicand) / std::cos(entry.theta_rad));
  return 2.0 / params.angular_rate_rad_s * std::asin(ratio);
}

double service_pdf(const OnOffParams& params, double s) {
  params.validate();
  const double support = params.max_service_time_s();
  if (s < 0.0 || s > support) {
    return 0.0;
  }
  const double phi_e = params.earth_zenith_rad;
  const double omega = params.angular_rate_rad_s;
  const double half = 0.5 * omega * s;
  const double sin_e = std::sin(phi_e);
  const double sin_h = std::sin(half);
  const double radicand = sin_e * sin_e - sin_h * sin_h;
  if (radicand <= 0.0) {
    // Integrable singularity at the right end of the support.
    return std::numeric_limits<double>::infinity();
  }
  return omega * std::cos(phi_e) * std::tan(half) /
         (2.0 * phi_e * std::sqrt(radicand));
}

double service_cdf(const OnOffParams& params, double s) {
  params.validate();
  if (s <= 0.0) return 0.0;
  if (s >= params.max_service_time_s()) return 1.0;
  const double phi_e = params.earth_zenith_rad;
  // P(W <= s) = 1 - theta*(s)/phi_e where theta* is the entry offset whose
  // pass lasts exactly s.
  const double ratio = std::cos(phi_e) / std::cos(0.5 * params.angular_rate_rad_s * s);
  const double theta_star = std::acos(std::min(1.0, ratio));
  return 1.0 - theta_star / phi_e;
}

double sample_service_time(const OnOffParams& params, Rng& rng) {
  const double phi_e = params.earth_zenith_rad;
  std::uniform_real_distribution<double> entry(-phi_e, phi_e);
  return service_time_from_entry(params, EntryAngle{entry(rng)});
}

double sample_off_time(const OnOffParams& params, Rng& rng) {
  if (!(params.off_rate_per_s > 0.0)) {
    throw permanent_disconnection_error(
        "sample_off_time: off rate is zero, the link never comes up");
  }
  std::exponential_distribution<double> off(params.off_rate_per_s);
  return off(rng);
}

double mean_service_time(const OnOffParams& params) {
  params.validate();
  return entry_expectation(params, [](double w) { return w; });
}

double service_laplace(const OnOffParams& params, double mu) {
  params.validate();
  if (mu < 0.0) {
    throw std::invalid_argument("service_laplace: mu must be >= 0");
  }
  if (mu == 0.0) {
    return 1.0;
  }
  return entry_expectation(params, [mu](double w) { return std::exp(-mu * w); });
}

}  // namespace leoaoi::onoff
