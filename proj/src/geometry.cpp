#include "leoaoi/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leoaoi::geometry {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

void check_base(double earth_radius_km, double altitude_km,
                double angular_rate_rad_s, double density_per_km2) {
  if (!(earth_radius_km > 0.0)) {
    throw std::invalid_argument("geometry: earth_radius must be > 0");
  }
  if (!(altitude_km > 0.0)) {
    throw std::invalid_argument("geometry: altitude must be > 0");
  }
  if (!(angular_rate_rad_s > 0.0)) {
    throw std::invalid_argument("geometry: angular_rate must be > 0");
  }
  if (!(density_per_km2 >= 0.0)) {
    throw std::invalid_argument("geometry: density must be >= 0");
  }
}

}  // namespace

void LinkBudget::validate() const {
  if (!(tx_power_w > 0.0) || !(noise_power_w > 0.0) || !(snr_threshold > 0.0)) {
    throw std::invalid_argument("link budget: powers and threshold must be > 0");
  }
  if (!(pathloss_exponent >= 2.0)) {
    throw std::invalid_argument("link budget: pathloss exponent must be >= 2");
  }
}

GeometryConfig GeometryConfig::from_node_zenith(double earth_radius_km,
                                                double altitude_km,
                                                double angular_rate_rad_s,
                                                double node_zenith_rad,
                                                double density_per_km2) {
  GeometryConfig cfg;
  cfg.earth_radius_km = earth_radius_km;
  cfg.altitude_km = altitude_km;
  cfg.angular_rate_rad_s = angular_rate_rad_s;
  cfg.node_zenith_rad = node_zenith_rad;
  cfg.density_per_km2 = density_per_km2;
  cfg.validate();
  return cfg;
}

GeometryConfig GeometryConfig::from_max_range(double earth_radius_km,
                                              double altitude_km,
                                              double angular_rate_rad_s,
                                              double max_range_km,
                                              double density_per_km2) {
  check_base(earth_radius_km, altitude_km, angular_rate_rad_s, density_per_km2);
  const double phi_s =
      node_zenith_from_max_range(earth_radius_km, altitude_km, max_range_km);
  return from_node_zenith(earth_radius_km, altitude_km, angular_rate_rad_s,
                          phi_s, density_per_km2);
}

GeometryConfig GeometryConfig::from_link_budget(double earth_radius_km,
                                                double altitude_km,
                                                double angular_rate_rad_s,
                                                const LinkBudget& budget,
                                                double density_per_km2) {
  return from_max_range(earth_radius_km, altitude_km, angular_rate_rad_s,
                        max_range_from_budget(budget), density_per_km2);
}

void GeometryConfig::validate() const {
  check_base(earth_radius_km, altitude_km, angular_rate_rad_s, density_per_km2);
  if (!(node_zenith_rad > 0.0 && node_zenith_rad <= kPi / 2.0)) {
    throw std::invalid_argument("geometry: node_zenith must be in (0, pi/2]");
  }
  const double r = rho();
  if (!(r > 0.0 && r < 1.0)) {
    throw std::invalid_argument("geometry: radius ratio must be in (0, 1)");
  }
}

double max_range_from_budget(const LinkBudget& budget) {
  budget.validate();
  const double ratio =
      budget.tx_power_w / (budget.noise_power_w * budget.snr_threshold);
  return std::pow(ratio, 1.0 / budget.pathloss_exponent);
}

double earth_zenith_from_node_zenith(double node_zenith_rad, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw std::invalid_argument("earth_zenith: rho must be in (0, 1)");
  }
  if (node_zenith_rad == 0.0) {
    return 0.0;  // overhead limit
  }
  if (!(node_zenith_rad > 0.0 && node_zenith_rad <= kPi / 2.0)) {
    throw std::invalid_argument("earth_zenith: node_zenith must be in [0, pi/2]");
  }
  // Inverse cotangent evaluated as atan of the reciprocal; the argument is
  // strictly positive here, so the result always lands in (0, pi/2).
  const double c = std::cos(node_zenith_rad) / std::sin(node_zenith_rad);
  const double z =
      (c + rho * std::sqrt(c * c + 1.0 - rho * rho)) / (1.0 - rho * rho);
  return std::atan(1.0 / z);
}

double max_range_from_angles(const GeometryConfig& cfg,
                             double earth_zenith_rad) {
  check_base(cfg.earth_radius_km, cfg.altitude_km, cfg.angular_rate_rad_s,
             cfg.density_per_km2);
  // The overhead limit phi_s = phi_e = 0 is admitted here (range = altitude)
  // even though constructed configs require phi_s > 0.
  if (!(cfg.node_zenith_rad >= 0.0 && cfg.node_zenith_rad <= kPi / 2.0) ||
      !(earth_zenith_rad >= 0.0 && earth_zenith_rad <= cfg.node_zenith_rad)) {
    throw std::invalid_argument(
        "max_range_from_angles: inconsistent zenith pair");
  }
  const double r = cfg.earth_radius_km;
  const double rh = cfg.orbit_radius_km();
  // Near the horizon both numerator and denominator vanish; switch to the
  // equivalent law-of-cosines form which stays well conditioned.
  if (cfg.node_zenith_rad > kPi / 2.0 - 1e-8) {
    return std::sqrt(rh * rh - r * r);
  }
  return (rh * std::cos(earth_zenith_rad) - r) / std::cos(cfg.node_zenith_rad);
}

double node_zenith_from_max_range(double earth_radius_km, double altitude_km,
                                  double max_range_km) {
  const double r = earth_radius_km;
  const double rh = earth_radius_km + altitude_km;
  const double horizon = std::sqrt(rh * rh - r * r);
  if (!(max_range_km >= altitude_km && max_range_km <= horizon)) {
    throw std::invalid_argument(
        "node_zenith_from_max_range: range must be within [altitude, horizon]");
  }
  const double cos_e =
      clamp_unit((r * r + rh * rh - max_range_km * max_range_km) /
                 (2.0 * r * rh));
  const double phi_e = std::acos(cos_e);
  const double cos_s = clamp_unit((rh * cos_e - r) / max_range_km);
  return std::acos(cos_s);
}

DomeSpec make_dome(const GeometryConfig& cfg) {
  cfg.validate();
  DomeSpec dome;
  dome.node_zenith_rad = cfg.node_zenith_rad;
  dome.earth_zenith_rad =
      earth_zenith_from_node_zenith(cfg.node_zenith_rad, cfg.rho());
  dome.max_range_km = max_range_from_angles(cfg, dome.earth_zenith_rad);
  const double rh = cfg.orbit_radius_km();
  dome.sweep_rate_km2_s =
      2.0 * rh * rh * cfg.angular_rate_rad_s * std::sin(dome.earth_zenith_rad);
  return dome;
}

double off_rate(const GeometryConfig& cfg, double earth_zenith_rad) {
  cfg.validate();
  if (!(earth_zenith_rad > 0.0 && earth_zenith_rad < kPi / 2.0)) {
    throw std::invalid_argument("off_rate: earth_zenith must be in (0, pi/2)");
  }
  const double rh = cfg.orbit_radius_km();
  return 2.0 * cfg.angular_rate_rad_s * cfg.density_per_km2 *
         std::sin(earth_zenith_rad) * rh * rh;
}

double satellite_count(double density_per_km2, const GeometryConfig& cfg) {
  if (!(density_per_km2 >= 0.0)) {
    throw std::invalid_argument("satellite_count: density must be >= 0");
  }
  const double rh = cfg.orbit_radius_km();
  return density_per_km2 * 4.0 * kPi * rh * rh;
}

double density_from_count(double count, const GeometryConfig& cfg) {
  if (!(count >= 0.0)) {
    throw std::invalid_argument("density_from_count: count must be >= 0");
  }
  const double rh = cfg.orbit_radius_km();
  return count / (4.0 * kPi * rh * rh);
}

}  // namespace leoaoi::geometry
