#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leoaoi/geometry.hpp"

namespace leoaoi::cli {

enum class Engine { analytic, renewal, orbital, all };
enum class SweepVariable { update_rate, density, node_zenith };

std::string to_string(Engine e);
std::string to_string(SweepVariable v);
Engine engine_from_string(const std::string& s);
SweepVariable sweep_variable_from_string(const std::string& s);

/// Log-spaced grid specification, inclusive of both ends.
struct LogRange {
  double from = 0.0;
  double to = 0.0;
  std::uint32_t points = 0;

  std::vector<double> expand() const;
  bool operator==(const LogRange&) const = default;
};

/// One experiment: a scenario, a sweep over exactly one variable, and the
/// simulation budget. Serialized as JSON; CLI flags override single fields.
/// Angles cross this boundary in degrees and are converted to radians
/// internally.
struct ExperimentConfig {
  // geometry
  double earth_radius_km = 6371.0;
  double altitude_km = 800.0;
  double angular_rate_rad_s = 0.0;  // default pi/3600, set in constructor
  std::optional<double> node_zenith_deg;  // mutually exclusive with budget
  std::optional<geometry::LinkBudget> link_budget;
  double density_per_km2 = 2e-5;

  // traffic model
  double update_rate_per_s = 1.0;
  double propagation_delay_s = 1.0;

  // sweep
  SweepVariable sweep_variable = SweepVariable::update_rate;
  std::vector<double> grid;             // explicit grid, ascending
  std::optional<LogRange> log_range;    // alternative to an explicit grid
  std::vector<double> densities;        // one row set per density

  // simulation
  std::uint64_t n_arrivals = 1'000'000;
  std::uint64_t n_cycles = 10'000;
  std::uint64_t seed = 1;
  Engine engine = Engine::all;

  std::string output_path = "sweep.csv";

  ExperimentConfig();

  /// Effective node zenith angle in degrees (resolving the budget when one
  /// is configured).
  double resolved_node_zenith_deg() const;

  /// Scenario at an explicit (density, node zenith) point.
  geometry::GeometryConfig geometry_at(double density_per_km2_value,
                                       double node_zenith_deg_value) const;

  /// Sweep grid (explicit grid or expanded log range).
  std::vector<double> sweep_grid() const;

  void validate() const;

  std::string to_json_string() const;
  static ExperimentConfig from_json_string(const std::string& text);
  static ExperimentConfig load(const std::string& path);
  void save(const std::string& path) const;

  bool operator==(const ExperimentConfig&) const;
};

}  // namespace leoaoi::cli
