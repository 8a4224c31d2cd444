#pragma once

namespace leoaoi::geometry {

/// Uplink budget deciding the maximum slant range at which a satellite can
/// still decode the source node's signal.
struct LinkBudget {
  double tx_power_w = 0.0;          // P_tx
  double noise_power_w = 0.0;       // sigma^2
  double snr_threshold = 0.0;       // theta, linear
  double pathloss_exponent = 0.0;   // alpha, >= 2

  void validate() const;
};

/// Physical constants and constellation parameters of one scenario. Internal
/// units are km, seconds and radians throughout; degree conversion happens at
/// the CLI boundary only.
///
/// Exactly one of the node zenith angle and the maximum range is supplied;
/// the other is derived. Use the factory functions.
struct GeometryConfig {
  double earth_radius_km = 6371.0;
  double altitude_km = 0.0;        // h
  double angular_rate_rad_s = 0.0; // omega = v / earth_radius
  double node_zenith_rad = 0.0;    // phi_s, in (0, pi/2]
  double density_per_km2 = 0.0;    // satellites per km^2 of the orbital sphere

  static GeometryConfig from_node_zenith(double earth_radius_km,
                                         double altitude_km,
                                         double angular_rate_rad_s,
                                         double node_zenith_rad,
                                         double density_per_km2);
  static GeometryConfig from_max_range(double earth_radius_km,
                                       double altitude_km,
                                       double angular_rate_rad_s,
                                       double max_range_km,
                                       double density_per_km2);
  static GeometryConfig from_link_budget(double earth_radius_km,
                                         double altitude_km,
                                         double angular_rate_rad_s,
                                         const LinkBudget& budget,
                                         double density_per_km2);

  double orbit_radius_km() const { return earth_radius_km + altitude_km; }
  double rho() const { return earth_radius_km / orbit_radius_km(); }

  void validate() const;
};

/// Derived description of the coverage dome.
struct DomeSpec {
  double earth_zenith_rad = 0.0;   // phi_e, Earth-centered half-width
  double node_zenith_rad = 0.0;    // phi_s
  double max_range_km = 0.0;       // r_max
  double sweep_rate_km2_s = 0.0;   // fresh dome area swept per second
};

/// Maximum slant range for successful decoding,
/// r_max = (P_tx / (sigma^2 theta))^(1/alpha), in the budget's length unit.
double max_range_from_budget(const LinkBudget& budget);

/// Earth-centered dome half-width phi_e for a node zenith angle phi_s and
/// radius ratio rho = R / (R + h). Strictly smaller than phi_s for h > 0.
/// Returns 0 in the overhead limit phi_s = 0.
double earth_zenith_from_node_zenith(double node_zenith_rad, double rho);

/// Slant range to a satellite seen at the node zenith angle of the config,
/// r_max = ((R+h) cos(phi_e) - R) / cos(phi_s). At phi_s = pi/2 the quotient
/// degenerates to 0/0 and the equivalent law-of-cosines form
/// sqrt((R+h)^2 - R^2) is used instead.
double max_range_from_angles(const GeometryConfig& cfg,
                             double earth_zenith_rad);

/// Inverse of the range mapping: the node zenith angle at which the slant
/// range to the dome edge equals max_range_km. Valid for
/// max_range_km in [h, sqrt((R+h)^2 - R^2)].
double node_zenith_from_max_range(double earth_radius_km, double altitude_km,
                                  double max_range_km);

DomeSpec make_dome(const GeometryConfig& cfg);

/// Exponential rate of the off-service periods,
/// lambda_os = 2 omega lambda sin(phi_e) (R+h)^2. Equals density times the
/// dome sweep rate.
double off_rate(const GeometryConfig& cfg, double earth_zenith_rad);

/// Expected number of satellites of a PPP of the given density on the
/// orbital sphere: density * 4 pi (R+h)^2. Reported as the mean, not a
/// sampled integer.
double satellite_count(double density_per_km2, const GeometryConfig& cfg);

/// Density whose PPP mean equals the given satellite count.
double density_from_count(double count, const GeometryConfig& cfg);

}  // namespace leoaoi::geometry
