#pragma once

#include "leoaoi/geometry.hpp"
#include "leoaoi/rng.hpp"

namespace leoaoi::onoff {

/// Parameters of the alternating service process: off periods are
/// exponential with rate off_rate_per_s, on periods follow the bounded
/// pass-duration law with support [0, 2 phi_e / omega].
///
/// off_rate_per_s == 0 encodes the degenerate never-on process; sampling and
/// the downstream probability chain reject it with
/// permanent_disconnection_error.
struct OnOffParams {
  double off_rate_per_s = 0.0;     // lambda_os
  double earth_zenith_rad = 0.0;   // phi_e
  double angular_rate_rad_s = 0.0; // omega

  static OnOffParams from_geometry(const geometry::GeometryConfig& cfg,
                                   const geometry::DomeSpec& dome);

  /// Upper end of the on-period support, 2 phi_e / omega.
  double max_service_time_s() const {
    return 2.0 * earth_zenith_rad / angular_rate_rad_s;
  }

  void validate() const;
};

/// Angular offset between a satellite's track and the node's path,
/// uniform on [-phi_e, phi_e].
struct EntryAngle {
  double theta_rad = 0.0;
};

/// Pass duration of a satellite entering the dome at the given offset:
/// W = (2/omega) asin(sqrt(sin^2 phi_e - sin^2 theta) / cos theta).
/// Even in theta; 0 at the grazing offsets +-phi_e; maximal at theta = 0.
double service_time_from_entry(const OnOffParams& params, EntryAngle entry);

/// Density of the on-period duration on [0, 2 phi_e / omega). The density
/// diverges at the right end of the support; that point returns +infinity.
/// Outside the support the density is 0.
double service_pdf(const OnOffParams& params, double s);

/// Distribution function of the on-period duration, in closed form from the
/// entry-angle construction.
double service_cdf(const OnOffParams& params, double s);

/// Exact sampling of an on period: draw the entry angle uniformly and map it
/// through service_time_from_entry.
double sample_service_time(const OnOffParams& params, Rng& rng);

/// Exponential off-period sample with rate off_rate_per_s.
double sample_off_time(const OnOffParams& params, Rng& rng);

/// E[W], evaluated as the entry-angle expectation by Gauss-Legendre
/// quadrature (relative error <= 1e-9 against the doubled order).
double mean_service_time(const OnOffParams& params);

/// E[exp(-mu W)] for mu >= 0; equals 1 at mu = 0, strictly decreasing and
/// convex in mu. Values below double precision underflow to 0.
double service_laplace(const OnOffParams& params, double mu);

}  // namespace leoaoi::onoff
