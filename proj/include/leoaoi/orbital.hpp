#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leoaoi/analysis.hpp"
#include "leoaoi/geometry.hpp"
#include "leoaoi/rng.hpp"
#include "leoaoi/trace.hpp"

namespace leoaoi::orbital {

/// One realization of the satellite point process on the orbital sphere.
struct Constellation {
  double radius_km = 0.0;
  std::vector<std::array<double, 3>> unit_positions;

  /// Homogeneous PPP on the whole sphere: count ~ Poisson(density * area),
  /// positions i.i.d. uniform.
  static Constellation sample_sphere(double density_per_km2, double radius_km,
                                     Rng& rng);

  /// PPP restricted to the band |latitude| <= band_half_width_rad around the
  /// node's path. Exact thinning: only satellites in this band can ever
  /// enter the dome, so connectivity statistics are unchanged.
  static Constellation sample_band(double density_per_km2, double radius_km,
                                   double band_half_width_rad, Rng& rng);
};

/// The node's circular path in the rotating frame: one revolution takes
/// 2 pi / omega seconds, after which the constellation is regenerated.
struct CycleConfig {
  double angular_rate_rad_s = 0.0;
  bool regenerate_each_cycle = true;

  double cycle_duration_s() const;
};

/// Half-width (in path longitude, radians) of the arc over which a satellite
/// at angular offset theta from the node's path stays within the dome of
/// half-width phi_e. Empty when the satellite never enters the dome.
std::optional<double> pass_half_width(double earth_zenith_rad,
                                      double theta_rad);

/// Metadata of one on interval of the connectivity trace.
struct OnIntervalMeta {
  std::uint32_t satellite_count = 0;  // how many passes merged into it
  bool boundary_clipped = false;      // touches a regeneration boundary
};

struct ConnectivityTrace {
  sim::PeriodTrace trace;
  std::vector<OnIntervalMeta> on_meta;  // parallel to trace on periods
  std::uint64_t n_cycles = 0;
  std::uint64_t total_satellites = 0;
  double skipped_leading_on_s = 0.0;  // coverage at t = 0 trimmed off
  bool ends_in_off = false;           // final off period is censored
  bool starved = false;               // no satellite ever covered the node

  /// Complete off durations (the censored trailing one excluded).
  std::vector<double> off_samples() const;
  /// Durations of on intervals formed by exactly one satellite and not
  /// touching a regeneration boundary; these follow the pass-duration law.
  std::vector<double> single_satellite_on_samples() const;
};

/// Sweeps the node under freshly regenerated constellations for n_cycles
/// revolutions and emits the alternating connectivity trace. Interval
/// endpoints are computed analytically per satellite and overlapping
/// coverage is merged, so period boundaries are exact.
ConnectivityTrace simulate_connectivity(const geometry::GeometryConfig& cfg,
                                        const geometry::DomeSpec& dome,
                                        std::uint64_t n_cycles,
                                        std::uint64_t seed);

/// End-to-end geometric AoI estimate: Poisson arrivals classified against
/// the streamed connectivity intervals, deliveries fed into the same exact
/// sawtooth accumulator as the renewal simulator.
sim::AoiEstimate run_geo_aoi(const geometry::GeometryConfig& cfg,
                             const geometry::DomeSpec& dome,
                             const analysis::UpdateModel& model,
                             std::uint64_t n_arrivals, std::uint64_t seed);

/// Lag-1 Pearson correlation of consecutive values; diagnostic for the
/// independence approximation of successive periods.
double lag1_correlation(std::span<const double> values);

}  // namespace leoaoi::orbital
