#include "leoaoi/orbital.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "leoaoi/errors.hpp"
#include "leoaoi/stats.hpp"

namespace leoaoi::orbital {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t poisson_count(double mean, Rng& rng) {
  if (!(mean > 0.0)) return 0;
  std::poisson_distribution<std::uint64_t> dist(mean);
  return dist(rng);
}

}  // namespace

double CycleConfig::cycle_duration_s() const {
  if (!(angular_rate_rad_s > 0.0)) {
    throw std::invalid_argument("cycle: angular_rate must be > 0");
  }
  return kTwoPi / angular_rate_rad_s;
}

Constellation Constellation::sample_sphere(double density_per_km2,
                                           double radius_km, Rng& rng) {
  if (!(radius_km > 0.0) || !(density_per_km2 >= 0.0)) {
    throw std::invalid_argument("constellation: bad density or radius");
  }
  const double area = 4.0 * kPi * radius_km * radius_km;
  const std::uint64_t n = poisson_count(density_per_km2 * area, rng);
  Constellation c;
  c.radius_km = radius_km;
  c.unit_positions.reserve(n);
  std::uniform_real_distribution<double> z_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> lon_dist(0.0, kTwoPi);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double z = z_dist(rng);
    const double lon = lon_dist(rng);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    c.unit_positions.push_back({s * std::cos(lon), s * std::sin(lon), z});
  }
  return c;
}

Constellation Constellation::sample_band(double density_per_km2,
                                         double radius_km,
                                         double band_half_width_rad,
                                         Rng& rng) {
  if (!(radius_km > 0.0) || !(density_per_km2 >= 0.0)) {
    throw std::invalid_argument("constellation: bad density or radius");
  }
  if (!(band_half_width_rad > 0.0 && band_half_width_rad <= kPi / 2.0)) {
    throw std::invalid_argument("constellation: band half-width out of range");
  }
  const double sin_b = std::sin(band_half_width_rad);
  // Spherical zone between latitudes +-band: area = 4 pi r^2 sin(band).
  const double area = 4.0 * kPi * radius_km * radius_km * sin_b;
  const std::uint64_t n = poisson_count(density_per_km2 * area, rng);
  Constellation c;
  c.radius_km = radius_km;
  c.unit_positions.reserve(n);
  std::uniform_real_distribution<double> z_dist(-sin_b, sin_b);
  std::uniform_real_distribution<double> lon_dist(0.0, kTwoPi);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double z = z_dist(rng);
    const double lon = lon_dist(rng);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    c.unit_positions.push_back({s * std::cos(lon), s * std::sin(lon), z});
  }
  return c;
}

std::optional<double> pass_half_width(double earth_zenith_rad,
                                      double theta_rad) {
  if (!(earth_zenith_rad > 0.0 && earth_zenith_rad < kPi / 2.0)) {
    throw std::invalid_argument("pass_half_width: earth_zenith out of range");
  }
  const double abs_theta = std::fabs(theta_rad);
  if (abs_theta > earth_zenith_rad) {
    return std::nullopt;
  }
  // The node (longitude psi_n) sees the satellite (offset theta, longitude
  // psi) inside the dome iff cos(theta) cos(psi_n - psi) >= cos(phi_e).
  const double ratio = std::cos(earth_zenith_rad) / std::cos(abs_theta);
  return std::acos(std::min(1.0, ratio));
}

namespace {

struct MergedInterval {
  double start = 0.0;
  double end = 0.0;
  std::uint32_t satellite_count = 0;
  bool boundary_clipped = false;
};

// Streams merged coverage intervals in global time, regenerating the
// constellation every revolution. Entry and exit times are closed-form per
// satellite; wrap-around passes are split at the revolution boundaries and
// re-merged, so endpoints are exact.
class IntervalStream {
 public:
  IntervalStream(const geometry::GeometryConfig& cfg,
                 const geometry::DomeSpec& dome, const CycleConfig& cycle,
                 std::uint64_t seed)
      : cfg_(cfg),
        dome_(dome),
        cycle_(cycle),
        cycle_len_(cycle.cycle_duration_s()),
        rng_(make_rng(seed)) {
    if (!cycle_.regenerate_each_cycle) {
      frozen_ = Constellation::sample_band(cfg_.density_per_km2,
                                           cfg_.orbit_radius_km(),
                                           dome_.earth_zenith_rad, rng_);
    }
  }

  std::uint64_t cycles_generated() const { return next_cycle_; }
  std::uint64_t total_satellites() const { return total_satellites_; }

  // Generates cycles until global time t is interior to the generated span,
  // so every interval with end <= t is final and coverage at t is decided.
  void ensure_generated(double t) {
    while (generated_up_to_ <= t) {
      generate_next_cycle();
    }
  }

  // Final merged intervals in order; pop_front once consumed.
  std::deque<MergedInterval>& finalized() { return finalized_; }

  // Whether the node is covered at time t. Generates cycles as needed and
  // discards intervals that end at or before t, so queries must be issued
  // with non-decreasing t.
  bool covered(double t) {
    ensure_generated(t);
    while (!finalized_.empty() && finalized_.front().end <= t) {
      finalized_.pop_front();
    }
    if (!finalized_.empty()) {
      const MergedInterval& f = finalized_.front();
      return f.start <= t && t < f.end;
    }
    // The newest interval may still be merging forward, but its start is
    // final and its end can only grow, so the answer at t is already decided.
    return have_pending_ && pending_.start <= t && t < pending_.end;
  }

  // Flushes the trailing pending interval; only valid once no further
  // cycles will be generated.
  void flush() {
    if (have_pending_) {
      finalized_.push_back(pending_);
      have_pending_ = false;
    }
  }

 private:
  void push_interval(const MergedInterval& iv) {
    if (have_pending_ && iv.start <= pending_.end) {
      pending_.end = std::max(pending_.end, iv.end);
      pending_.satellite_count += iv.satellite_count;
      pending_.boundary_clipped |= iv.boundary_clipped;
      return;
    }
    if (have_pending_) {
      finalized_.push_back(pending_);
    }
    pending_ = iv;
    have_pending_ = true;
  }

  void generate_next_cycle() {
    const double base = static_cast<double>(next_cycle_) * cycle_len_;
    const double next_base = static_cast<double>(next_cycle_ + 1) * cycle_len_;
    ++next_cycle_;
    generated_up_to_ = next_base;

    const Constellation sats =
        cycle_.regenerate_each_cycle
            ? Constellation::sample_band(cfg_.density_per_km2,
                                         cfg_.orbit_radius_km(),
                                         dome_.earth_zenith_rad, rng_)
            : frozen_;
    total_satellites_ += sats.unit_positions.size();

    std::vector<MergedInterval> local;
    local.reserve(2 * sats.unit_positions.size());
    const double omega = cfg_.angular_rate_rad_s;
    const double cycle_end_local = cycle_len_;
    for (const auto& p : sats.unit_positions) {
      const double theta = std::asin(std::clamp(p[2], -1.0, 1.0));
      const auto w = pass_half_width(dome_.earth_zenith_rad, theta);
      if (!w || *w <= 0.0) continue;
      double lon = std::atan2(p[1], p[0]);
      if (lon < 0.0) lon += kTwoPi;
      const double lo = (lon - *w) / omega;
      const double hi = (lon + *w) / omega;
      if (lo < 0.0) {
        // The node is inside this pass both at the start and at the end of
        // the revolution.
        local.push_back({base, base + hi, 1, true});
        local.push_back({base + lo + cycle_len_, next_base, 1, true});
      } else if (hi > cycle_end_local) {
        local.push_back({base + lo, next_base, 1, true});
        local.push_back({base, base + hi - cycle_len_, 1, true});
      } else {
        local.push_back({base + lo, base + hi, 1, false});
      }
    }
    std::sort(local.begin(), local.end(),
              [](const MergedInterval& a, const MergedInterval& b) {
                return a.start < b.start;
              });
    for (const MergedInterval& iv : local) {
      push_interval(iv);
    }
  }

  geometry::GeometryConfig cfg_;
  geometry::DomeSpec dome_;
  CycleConfig cycle_;
  double cycle_len_ = 0.0;
  Rng rng_;
  Constellation frozen_;
  std::uint64_t next_cycle_ = 0;
  double generated_up_to_ = 0.0;
  std::uint64_t total_satellites_ = 0;
  std::deque<MergedInterval> finalized_;
  MergedInterval pending_;
  bool have_pending_ = false;
};

}  // namespace

ConnectivityTrace simulate_connectivity(const geometry::GeometryConfig& cfg,
                                        const geometry::DomeSpec& dome,
                                        std::uint64_t n_cycles,
                                        std::uint64_t seed) {
  cfg.validate();
  if (n_cycles < 1) {
    throw std::invalid_argument("simulate_connectivity: need >= 1 cycle");
  }
  CycleConfig cycle{cfg.angular_rate_rad_s, true};
  IntervalStream stream(cfg, dome, cycle, seed);
  const double total = static_cast<double>(n_cycles) * cycle.cycle_duration_s();
  // nextafter: generate exactly n_cycles revolutions, no more.
  stream.ensure_generated(std::nexttoward(total, 0.0L));
  stream.flush();

  ConnectivityTrace out;
  out.n_cycles = n_cycles;
  out.total_satellites = stream.total_satellites();

  double cursor = 0.0;
  for (const MergedInterval& iv : stream.finalized()) {
    if (iv.start >= total) break;
    const double end = std::min(iv.end, total);
    const bool clipped = iv.boundary_clipped || iv.end > total;
    if (iv.start > cursor) {
      out.trace.append(sim::PeriodKind::off, iv.start - cursor);
    } else if (cursor == 0.0) {
      // Covered at t = 0: trim so the trace starts with an off period.
      out.skipped_leading_on_s = end - iv.start;
      cursor = end;
      continue;
    }
    out.trace.append(sim::PeriodKind::on, end - iv.start);
    out.on_meta.push_back(OnIntervalMeta{iv.satellite_count, clipped});
    cursor = end;
  }
  if (cursor < total) {
    out.trace.append(sim::PeriodKind::off, total - cursor);
    out.ends_in_off = true;
  }
  out.starved = out.on_meta.empty();
  return out;
}

std::vector<double> ConnectivityTrace::off_samples() const {
  std::vector<double> out = trace.off_durations();
  if (ends_in_off && !out.empty()) {
    out.pop_back();  // censored by the end of the simulation
  }
  return out;
}

std::vector<double> ConnectivityTrace::single_satellite_on_samples() const {
  std::vector<double> durations = trace.on_durations();
  std::vector<double> out;
  for (std::size_t i = 0; i < durations.size(); ++i) {
    if (on_meta[i].satellite_count == 1 && !on_meta[i].boundary_clipped) {
      out.push_back(durations[i]);
    }
  }
  return out;
}

sim::AoiEstimate run_geo_aoi(const geometry::GeometryConfig& cfg,
                             const geometry::DomeSpec& dome,
                             const analysis::UpdateModel& model,
                             std::uint64_t n_arrivals, std::uint64_t seed) {
  cfg.validate();
  model.validate();
  if (n_arrivals < 1000) {
    throw std::invalid_argument("run_geo_aoi: need >= 1000 arrivals");
  }
  CycleConfig cycle{cfg.angular_rate_rad_s, true};
  IntervalStream stream(cfg, dome, cycle, seed);

  Rng arrival_rng = make_rng(derive_seed(seed, 0x0a0a));
  std::exponential_distribution<double> interarrival(model.update_rate_per_s);

  sim::SawtoothAccumulator acc(model.propagation_delay_s);
  std::vector<bool> arrival_in_off;
  arrival_in_off.reserve(n_arrivals);

  double t = 0.0;
  for (std::uint64_t k = 0; k < n_arrivals; ++k) {
    t += interarrival(arrival_rng);
    const bool covered = stream.covered(t);
    arrival_in_off.push_back(!covered);
    if (covered) {
      acc.add_delivery(t);
    }
  }

  if (acc.n_delivered() == 0) {
    throw starvation_error("run_geo_aoi: no delivery within the arrival budget");
  }

  sim::AoiEstimate est;
  est.n_arrivals = n_arrivals;
  est.n_delivered = acc.n_delivered();
  est.time_avg_aoi_s = acc.time_average_s();
  est.std_error_s = acc.std_error_s();
  const sim::ConditionalEstimates cond = empirical_conditionals(arrival_in_off);
  est.empirical_p_off = cond.p_off;
  est.empirical_p_f_given_f = cond.p_f_given_f;
  est.empirical_p_o_given_o = cond.p_o_given_o;
  if (!acc.inter_delivery_s().empty()) {
    const stats::Summary s = stats::summarize(acc.inter_delivery_s());
    est.empirical_mean_y_s = s.mean;
    est.empirical_second_moment_y_s2 = s.second_moment;
  }
  return est;
}

double lag1_correlation(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 3) {
    throw std::invalid_argument("lag1_correlation: need >= 3 values");
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = values[i] - mean;
    den += d * d;
    if (i + 1 < n) {
      num += d * (values[i + 1] - mean);
    }
  }
  if (den == 0.0) return 0.0;
  return num / den;
}

}  // namespace leoaoi::orbital
